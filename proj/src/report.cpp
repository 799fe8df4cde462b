#include "hardycert/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hardy {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string cell_text(const Cell& c) {
    if (auto* d = std::get_if<double>(&c.v)) return format_double(*d);
    if (auto* i = std::get_if<std::int64_t>(&c.v)) return std::to_string(*i);
    if (auto* b = std::get_if<bool>(&c.v)) return *b ? "true" : "false";
    return std::get<std::string>(c.v);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

// every row must share the first row's column names, in order
void check_uniform(const Report& r) {
    if (r.rows.empty()) return;
    for (const Row& row : r.rows) {
        if (row.size() != r.rows.front().size())
            throw std::logic_error("report rows have mixed schemas");
        for (std::size_t i = 0; i < row.size(); ++i)
            if (row[i].first != r.rows.front()[i].first)
                throw std::logic_error("report rows have mixed schemas");
    }
}

}  // namespace

std::string to_csv(const Report& r) {
    check_uniform(r);
    std::ostringstream os;
    os << "# command = " << r.command << "\n";
    for (const auto& [k, v] : r.params) os << "# " << k << " = " << v << "\n";
    for (const auto& n : r.notes) os << "# note: " << n << "\n";
    if (r.rows.empty()) return os.str();
    const Row& head = r.rows.front();
    for (std::size_t i = 0; i < head.size(); ++i)
        os << (i ? "," : "") << csv_escape(head[i].first);
    os << "\n";
    for (const Row& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << csv_escape(cell_text(row[i].second));
        os << "\n";
    }
    return os.str();
}

std::string to_jsonl(const Report& r) {
    std::ostringstream os;
    nlohmann::ordered_json meta;
    meta["record"] = "meta";
    meta["command"] = r.command;
    for (const auto& [k, v] : r.params) meta[k] = v;
    if (!r.notes.empty()) meta["notes"] = r.notes;
    os << meta.dump() << "\n";
    for (const Row& row : r.rows) {
        nlohmann::ordered_json j;
        j["record"] = "row";
        for (const auto& [k, c] : row) {
            if (auto* d = std::get_if<double>(&c.v)) {
                // emit through the fixed 17-digit formatter so jsonl and csv
                // agree byte-for-byte on every float; json has no inf/nan
                if (std::isfinite(*d))
                    j[k] = nlohmann::json::parse(format_double(*d), nullptr, true);
                else
                    j[k] = format_double(*d);
            } else if (auto* i = std::get_if<std::int64_t>(&c.v))
                j[k] = *i;
            else if (auto* b = std::get_if<bool>(&c.v))
                j[k] = *b;
            else
                j[k] = std::get<std::string>(c.v);
        }
        os << j.dump() << "\n";
    }
    return os.str();
}

std::string to_table(const Report& r) {
    check_uniform(r);
    std::ostringstream os;
    os << "command: " << r.command << "\n";
    for (const auto& [k, v] : r.params) os << k << ": " << v << "\n";
    if (!r.rows.empty()) {
        const Row& head = r.rows.front();
        std::vector<std::size_t> width(head.size());
        for (std::size_t i = 0; i < head.size(); ++i) width[i] = head[i].first.size();
        std::vector<std::vector<std::string>> texts;
        for (const Row& row : r.rows) {
            std::vector<std::string> t;
            for (std::size_t i = 0; i < row.size(); ++i) {
                t.push_back(cell_text(row[i].second));
                width[i] = std::max(width[i], t.back().size());
            }
            texts.push_back(std::move(t));
        }
        os << "\n";
        for (std::size_t i = 0; i < head.size(); ++i)
            os << (i ? "  " : "") << head[i].first
               << std::string(width[i] - head[i].first.size(), ' ');
        os << "\n";
        for (const auto& t : texts) {
            for (std::size_t i = 0; i < t.size(); ++i)
                os << (i ? "  " : "") << t[i] << std::string(width[i] - t[i].size(), ' ');
            os << "\n";
        }
    }
    for (const auto& n : r.notes) os << "note: " << n << "\n";
    return os.str();
}

std::string serialize(const Report& r, const std::string& format) {
    if (format == "csv") return to_csv(r);
    if (format == "jsonl") return to_jsonl(r);
    if (format == "table") return to_table(r);
    throw std::invalid_argument("unknown format '" + format + "' (expected csv, jsonl, table)");
}

}  // namespace hardy
