// series.hpp — column tables (time series, parameter tables) and their CSV form.

#pragma once

#include <deque>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qosc::sim {

struct Table {
    std::string key_name{"t"};
    std::vector<double> key;
    std::deque<std::pair<std::string, std::vector<double>>> columns;  // references stay valid on add
    nlohmann::json metadata = nlohmann::json::object();

    // Appends a zero column of the key's length.
    std::vector<double>& add_column(const std::string& name);
    const std::vector<double>& column(const std::string& name) const;
    bool has_column(const std::string& name) const;

    // Throws Error when a column length differs from the key length or a
    // value is NaN/Inf.
    void check() const;
};

using TimeSeries = Table;

// Header row, then one row per key value; numbers use 17 significant digits
// so that parse_csv(emit) reproduces them exactly.
void write_csv(std::ostream& os, const Table& table);
std::string to_csv(const Table& table);
Table parse_csv(std::istream& is);
Table parse_csv_string(const std::string& text);

// Writes <dir>/<stem>.csv and <dir>/<stem>.meta.json.
void write_table_files(const Table& table, const std::string& dir, const std::string& stem);

} // namespace qosc::sim
