#include "tempodisc/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include "tempodisc/types.hpp"

namespace tempodisc {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

namespace {

void check_label(const std::string& s) {
    if (s.find_first_of(",\"\n\r") != std::string::npos)
        throw DomainError("table strings must not contain commas, quotes, or newlines");
}

std::string cell_text(const Table::Cell& cell) {
    if (const auto* d = std::get_if<double>(&cell))
        return format_double(*d);
    if (const auto* i = std::get_if<long long>(&cell))
        return std::to_string(*i);
    const auto& s = std::get<std::string>(cell);
    check_label(s);
    return s;
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size())
        throw DomainError("row width must match the column count");
    rows.push_back(std::move(row));
}

void write_csv(const Table& table, std::ostream& out) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        check_label(table.columns[i]);
        out << (i ? "," : "") << table.columns[i];
    }
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << cell_text(row[i]);
        out << "\n";
    }
}

nlohmann::json to_json(const Table& table, nlohmann::json meta) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            const auto& cell = row[i];
            if (const auto* d = std::get_if<double>(&cell)) {
                // Round through the 10-digit text form so JSON and CSV
                // consumers see the same value.
                obj[table.columns[i]] = std::strtod(format_double(*d).c_str(), nullptr);
            } else if (const auto* n = std::get_if<long long>(&cell)) {
                obj[table.columns[i]] = *n;
            } else {
                obj[table.columns[i]] = std::get<std::string>(cell);
            }
        }
        rows.push_back(std::move(obj));
    }
    return nlohmann::json{{"meta", std::move(meta)}, {"rows", std::move(rows)}};
}

CsvFile read_csv(std::istream& in) {
    auto split = [](const std::string& line) {
        std::vector<std::string> cells;
        std::string cell;
        std::stringstream ss(line);
        while (std::getline(ss, cell, ','))
            cells.push_back(cell);
        if (!line.empty() && line.back() == ',')
            cells.emplace_back();
        return cells;
    };

    CsvFile file;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (!have_header) {
            file.columns = split(line);
            have_header = true;
            continue;
        }
        auto cells = split(line);
        if (cells.size() != file.columns.size())
            throw DataError("CSV row width does not match the header");
        file.rows.push_back(std::move(cells));
    }
    if (!have_header)
        throw DataError("CSV input is empty (header row is mandatory)");
    return file;
}

}  // namespace tempodisc
