#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hardy {

// One report = ordered metadata + uniform-schema rows. Everything that
// reaches an output file goes through here so the byte-level guarantees
// (17 significant digits, fixed column order, no timestamps) live in one
// place.
struct Cell {
    std::variant<double, std::int64_t, std::string, bool> v;
    Cell(double d) : v(d) {}
    Cell(std::int64_t i) : v(i) {}
    Cell(std::size_t i) : v(static_cast<std::int64_t>(i)) {}
    Cell(int i) : v(static_cast<std::int64_t>(i)) {}
    Cell(std::string s) : v(std::move(s)) {}
    Cell(const char* s) : v(std::string(s)) {}
    Cell(bool b) : v(b) {}
};

using Row = std::vector<std::pair<std::string, Cell>>;

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;  // ordered
    std::vector<Row> rows;
    std::vector<std::string> notes;
    bool assertion_failed = false;  // certify-style hard failures
};

std::string format_double(double v);  // %.17g

std::string to_csv(const Report& r);
std::string to_jsonl(const Report& r);
std::string to_table(const Report& r);
std::string serialize(const Report& r, const std::string& format);

}  // namespace hardy
