#include "qosc/sim/series.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qosc/errors.hpp"

namespace qosc::sim {
namespace {

std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
}

double parse_number(const std::string& cell) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc() || ptr != cell.data() + cell.size())
        throw Error("invalid number in CSV: '" + cell + "'");
    return v;
}

} // namespace

std::vector<double>& Table::add_column(const std::string& name) {
    if (has_column(name)) throw Error("duplicate column " + name);
    columns.emplace_back(name, std::vector<double>(key.size(), 0.0));
    return columns.back().second;
}

const std::vector<double>& Table::column(const std::string& name) const {
    for (const auto& [n, values] : columns)
        if (n == name) return values;
    throw Error("missing column " + name);
}

bool Table::has_column(const std::string& name) const {
    for (const auto& c : columns)
        if (c.first == name) return true;
    return false;
}

void Table::check() const {
    for (double x : key)
        if (!std::isfinite(x)) throw Error("non-finite value in column " + key_name);
    for (const auto& [name, values] : columns) {
        if (values.size() != key.size()) throw Error("column " + name + " has the wrong length");
        for (double x : values)
            if (!std::isfinite(x)) throw Error("non-finite value in column " + name);
    }
}

void write_csv(std::ostream& os, const Table& table) {
    table.check();
    os << table.key_name;
    for (const auto& c : table.columns) os << ',' << c.first;
    os << '\n';
    for (std::size_t i = 0; i < table.key.size(); ++i) {
        os << format_number(table.key[i]);
        for (const auto& c : table.columns) os << ',' << format_number(c.second[i]);
        os << '\n';
    }
}

std::string to_csv(const Table& table) {
    std::ostringstream os;
    write_csv(os, table);
    return os.str();
}

Table parse_csv(std::istream& is) {
    Table table;
    std::string line;
    if (!std::getline(is, line)) throw Error("empty CSV");
    const std::vector<std::string> header = split(line);
    if (header.empty()) throw Error("CSV header is empty");
    table.key_name = header[0];
    for (std::size_t c = 1; c < header.size(); ++c) table.columns.emplace_back(header[c], std::vector<double>{});
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> cells = split(line);
        if (cells.size() != header.size()) throw Error("CSV row has " + std::to_string(cells.size()) + " cells");
        table.key.push_back(parse_number(cells[0]));
        for (std::size_t c = 1; c < cells.size(); ++c) table.columns[c - 1].second.push_back(parse_number(cells[c]));
    }
    return table;
}

Table parse_csv_string(const std::string& text) {
    std::istringstream is(text);
    return parse_csv(is);
}

void write_table_files(const Table& table, const std::string& dir, const std::string& stem) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    const fs::path base = fs::path(dir) / stem;
    {
        std::ofstream csv(base.string() + ".csv");
        if (!csv) throw Error("cannot write " + base.string() + ".csv");
        write_csv(csv, table);
    }
    std::ofstream meta(base.string() + ".meta.json");
    if (!meta) throw Error("cannot write " + base.string() + ".meta.json");
    meta << table.metadata.dump(2) << '\n';
}

} // namespace qosc::sim
