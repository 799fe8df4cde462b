#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hardy {

// One flat key = value document drives every run; the CLI flags are sugar
// that overrides individual keys. parse_config(print_config(c)) == c.
struct RunConfig {
    std::string command = "norm";
    std::string weights = "constant";
    std::vector<double> p_grid = {2.0};
    std::optional<double> L;               // empty = auto (1/(alpha+1) on power weights)
    std::vector<double> alpha_grid;        // sweep cells; empty elsewhere
    std::size_t n = 100;
    double tol = 1e-12;
    std::size_t max_iter = 1000;
    std::uint64_t seed = 12345;
    std::size_t restarts = 8;
    std::string method = "power";          // norm: power | eigen | eta | all
    std::string condition = "cor14";       // conditions/sweep/certify target
    std::string out;                       // empty = stdout
    std::string format = "table";          // csv | jsonl | table
    double a = 1.0;                        // wirtinger form coefficients
    double b = 1.0;
    std::string sign = "plus";             // redheffer split
    std::size_t samples = 100;             // wirtinger random vectors

    bool operator==(const RunConfig&) const = default;
};

// Grammar: one "key = value" per line; '#' starts a comment; blank lines
// ignored. Lists are comma-separated, ranges are start:step:stop
// (inclusive). Unknown keys and malformed values raise with the line
// number.
RunConfig parse_config_text(const std::string& text, const RunConfig& base = RunConfig());
RunConfig load_config_file(const std::string& path, const RunConfig& base = RunConfig());

// canonical form: every key, fixed order, 17 significant digits
std::string print_config(const RunConfig& c);

// expands "2,3" and "0:0.25:1"; bare numbers give singletons
std::vector<double> parse_number_list(const std::string& text);

void validate_config(const RunConfig& c);  // cross-field checks, throws

}  // namespace hardy
