// End-to-end tests driving the installed binary. HARDY_CERT_BIN is injected
// by the build so the tests exercise exactly what ships.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "hardycert/norms.hpp"
#include "hardycert/report.hpp"
#include "hardycert/weights.hpp"

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
    std::string cmd = std::string(HARDY_CERT_BIN) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -2;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch() {
    fs::path dir = fs::temp_directory_path() / "hardy-cert-cli-tests";
    fs::create_directories(dir);
    return dir;
}

// value of `col` in the first csv data row
std::string csv_field(const std::string& csv, const std::string& col) {
    std::istringstream is(csv);
    std::string line, header;
    while (std::getline(is, line))
        if (!line.empty() && line[0] != '#') {
            header = line;
            break;
        }
    REQUIRE_FALSE(header.empty());
    std::vector<std::string> names;
    std::istringstream hs(header);
    std::string tok;
    while (std::getline(hs, tok, ',')) names.push_back(tok);
    REQUIRE(std::getline(is, line));
    std::vector<std::string> cells;
    std::istringstream ls(line);
    while (std::getline(ls, tok, ',')) cells.push_back(tok);
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == col) return cells.at(i);
    FAIL("column not found: " << col);
    return "";
}

}  // namespace

TEST_CASE("norm command writes the eigensolver value verbatim") {
    fs::path out = scratch() / "norm.csv";
    int rc = run("norm --weights constant --p 2 --N 100 --method eigen --format csv --out " +
                 out.string());
    CHECK(rc == 0);
    std::string csv = slurp(out);
    CHECK(csv.find("# command = norm") == 0);

    hardy::WeightSequence w(hardy::WeightSpec::constant(), 100);
    double want = hardy::exact_l2_norm(w, 100).norm;
    CHECK(csv_field(csv, "norm") == hardy::format_double(want));
}

TEST_CASE("repeated runs are byte-identical") {
    fs::path a = scratch() / "sweep_a.jsonl", b = scratch() / "sweep_b.jsonl";
    std::string args = "sweep --condition cor14 --alpha 0:0.2:1 --p 2,3 --N 200 "
                       "--seed 7 --format jsonl --out ";
    CHECK(run(args + a.string()) == 0);
    CHECK(run(args + b.string()) == 0);
    std::string sa = slurp(a), sb = slurp(b);
    CHECK_FALSE(sa.empty());
    CHECK(sa == sb);
}

TEST_CASE("certify exit codes distinguish failure kinds") {
    // holds: uniform weights satisfy the second-order condition at L = 1
    CHECK(run("certify --weights constant --p 2 --L 1 --condition cor14 --N 50") == 0);
    // violated: L far below the actual ratio growth
    CHECK(run("certify --weights constant --p 2 --L 0.5 --condition thm13 --N 50") == 1);
    // usage: unknown format never reaches the math
    CHECK(run("norm --format yaml") == 2);
    CHECK(run("norm --no-such-flag") == 2);
    CHECK(run("certify --weights constant --p 2 --L 1 --condition bennett_E --N 50") == 2);
}

TEST_CASE("config file drives the run, flags override it") {
    fs::path cfg = scratch() / "run.cfg";
    {
        std::ofstream out(cfg);
        out << "command = conditions\n"  // overridden by the subcommand
            << "p = 3\n"
            << "N = 20\n"
            << "method = eigen\n"
            << "format = csv\n";
    }
    fs::path out = scratch() / "cfg_run.csv";
    int rc = run("norm --config " + cfg.string() + " --p 2 --out " + out.string());
    CHECK(rc == 0);
    std::string csv = slurp(out);
    CHECK(csv_field(csv, "p") == "2");       // flag wins over config
    CHECK(csv.find("# N = 20") != std::string::npos);  // config still drives N

    CHECK(run("norm --config /no/such/file.cfg") == 2);
}

TEST_CASE("weight lists load from one-column files") {
    fs::path wf = scratch() / "weights.txt";
    {
        std::ofstream out(wf);
        out << "# comment line\n";
        for (int i = 1; i <= 12; ++i) out << hardy::format_double(1.0 / i) << "\n";
    }
    fs::path out = scratch() / "file_norm.csv";
    int rc = run("norm --weights file:" + wf.string() +
                 " --p 2 --N 12 --method eigen --format csv --out " + out.string());
    CHECK(rc == 0);

    std::vector<double> entries;
    for (int i = 1; i <= 12; ++i) entries.push_back(1.0 / i);
    hardy::WeightSequence w(hardy::WeightSpec::explicit_list(entries), 12);
    CHECK(csv_field(slurp(out), "norm") == hardy::format_double(hardy::exact_l2_norm(w, 12).norm));

    fs::path bad = scratch() / "bad_weights.txt";
    {
        std::ofstream outf(bad);
        outf << "1.0\npotato\n";
    }
    CHECK(run("norm --weights file:" + bad.string() + " --p 2 --N 2") == 2);
}

TEST_CASE("table output reaches stdout") {
    fs::path cap = scratch() / "stdout.txt";
    std::string cmd = std::string(HARDY_CERT_BIN) +
                      " wirtinger --N 4 --a 1 --b 1 --samples 10 > " + cap.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    CHECK(WEXITSTATUS(status) == 0);
    std::string text = slurp(cap);
    CHECK(text.find("command: wirtinger") != std::string::npos);
}
