#include "hardycert/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hardycert/report.hpp"

namespace hardy {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& s, const std::string& where) {
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(where + ": bad number '" + s + "'");
    }
    if (pos != s.size()) throw std::invalid_argument(where + ": bad number '" + s + "'");
    return v;
}

std::uint64_t parse_uint(const std::string& s, const std::string& where) {
    std::size_t pos = 0;
    unsigned long long v;
    try {
        // stoull would happily wrap "-3" around; refuse the sign outright
        if (s.find('-') != std::string::npos) throw std::invalid_argument(s);
        v = std::stoull(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(where + ": bad nonnegative integer '" + s + "'");
    }
    if (pos != s.size())
        throw std::invalid_argument(where + ": bad nonnegative integer '" + s + "'");
    return v;
}

std::string join_numbers(const std::vector<double>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += format_double(xs[i]);
    }
    return out;
}

const std::set<std::string> kCommands = {"norm",      "conditions", "certify",
                                         "carleman",  "wirtinger",  "sweep",
                                         "counterexample"};
const std::set<std::string> kConditions = {"cartlidge", "thm13",  "cor14",      "carleman_M",
                                           "bennett_E", "thm61",  "reversed_LS"};
const std::set<std::string> kMethods = {"power", "eigen", "eta", "all"};
const std::set<std::string> kFormats = {"csv", "jsonl", "table"};

}  // namespace

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
        std::size_t c1 = item.find(':');
        if (c1 == std::string::npos) {
            out.push_back(parse_double(item, "list"));
            continue;
        }
        std::size_t c2 = item.find(':', c1 + 1);
        if (c2 == std::string::npos)
            throw std::invalid_argument("range needs start:step:stop, got '" + item + "'");
        double start = parse_double(item.substr(0, c1), "range start");
        double step = parse_double(item.substr(c1 + 1, c2 - c1 - 1), "range step");
        double stop = parse_double(item.substr(c2 + 1), "range stop");
        if (!(step > 0.0)) throw std::invalid_argument("range step must be positive");
        if (stop < start) throw std::invalid_argument("range stop below start");
        // count-based expansion keeps the grid exact at both ends
        std::size_t count = static_cast<std::size_t>(std::floor((stop - start) / step + 0.5));
        for (std::size_t i = 0; i <= count; ++i) {
            double v = start + static_cast<double>(i) * step;
            if (v > stop + 1e-12 * std::max(1.0, std::abs(stop))) break;
            out.push_back(std::min(v, stop));
        }
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

RunConfig parse_config_text(const std::string& text, const RunConfig& base) {
    RunConfig c = base;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::set<std::string> seen;
    while (std::getline(in, line)) {
        ++lineno;
        std::string where = "config line " + std::to_string(lineno);
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(where + ": expected 'key = value', got '" + line + "'");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty()) throw std::invalid_argument(where + ": empty key");
        if (val.empty()) throw std::invalid_argument(where + ": empty value for '" + key + "'");
        if (!seen.insert(key).second)
            throw std::invalid_argument(where + ": duplicate key '" + key + "'");

        if (key == "command") c.command = val;
        else if (key == "weights") c.weights = val;
        else if (key == "p") c.p_grid = parse_number_list(val);
        else if (key == "L") {
            if (val == "auto") c.L.reset();
            else c.L = parse_double(val, where);
        }
        else if (key == "alpha") c.alpha_grid = parse_number_list(val);
        else if (key == "N") c.n = static_cast<std::size_t>(parse_uint(val, where));
        else if (key == "tol") c.tol = parse_double(val, where);
        else if (key == "max_iter") c.max_iter = static_cast<std::size_t>(parse_uint(val, where));
        else if (key == "seed") c.seed = parse_uint(val, where);
        else if (key == "restarts") c.restarts = static_cast<std::size_t>(parse_uint(val, where));
        else if (key == "method") c.method = val;
        else if (key == "condition") c.condition = val;
        else if (key == "out") c.out = val;
        else if (key == "format") c.format = val;
        else if (key == "a") c.a = parse_double(val, where);
        else if (key == "b") c.b = parse_double(val, where);
        else if (key == "sign") c.sign = val;
        else if (key == "samples") c.samples = static_cast<std::size_t>(parse_uint(val, where));
        else
            throw std::invalid_argument(where + ": unknown key '" + key + "'");
    }
    return c;
}

RunConfig load_config_file(const std::string& path, const RunConfig& base) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), base);
}

std::string print_config(const RunConfig& c) {
    std::ostringstream os;
    os << "command = " << c.command << "\n";
    os << "weights = " << c.weights << "\n";
    os << "p = " << join_numbers(c.p_grid) << "\n";
    os << "L = " << (c.L ? format_double(*c.L) : "auto") << "\n";
    if (!c.alpha_grid.empty()) os << "alpha = " << join_numbers(c.alpha_grid) << "\n";
    os << "N = " << c.n << "\n";
    os << "tol = " << format_double(c.tol) << "\n";
    os << "max_iter = " << c.max_iter << "\n";
    os << "seed = " << c.seed << "\n";
    os << "restarts = " << c.restarts << "\n";
    os << "method = " << c.method << "\n";
    os << "condition = " << c.condition << "\n";
    if (!c.out.empty()) os << "out = " << c.out << "\n";
    os << "format = " << c.format << "\n";
    os << "a = " << format_double(c.a) << "\n";
    os << "b = " << format_double(c.b) << "\n";
    os << "sign = " << c.sign << "\n";
    os << "samples = " << c.samples << "\n";
    return os.str();
}

void validate_config(const RunConfig& c) {
    if (!kCommands.count(c.command))
        throw std::invalid_argument("unknown command '" + c.command + "'");
    if (!kFormats.count(c.format))
        throw std::invalid_argument("unknown format '" + c.format +
                                    "' (expected csv, jsonl, table)");
    if (!kMethods.count(c.method))
        throw std::invalid_argument("unknown method '" + c.method +
                                    "' (expected power, eigen, eta, all)");
    if (!kConditions.count(c.condition))
        throw std::invalid_argument("unknown condition '" + c.condition + "'");
    if (c.sign != "plus" && c.sign != "minus")
        throw std::invalid_argument("sign must be plus or minus");
    if (c.n < 1) throw std::invalid_argument("N must be >= 1");
    if (!(c.tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (c.p_grid.empty()) throw std::invalid_argument("p grid is empty");
}

}  // namespace hardy
