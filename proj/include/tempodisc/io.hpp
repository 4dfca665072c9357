#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace tempodisc {

// All floating output is printed with 10 significant digits.
std::string format_double(double v);

// Flat result table shared by the CLI subcommands and the experiment
// emitters. Cells are doubles, integers, or plain strings; strings must
// not contain commas, quotes, or newlines (labels only).
struct Table {
    using Cell = std::variant<double, long long, std::string>;

    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

// UTF-8, comma-separated, '.' decimal separator, mandatory header row.
void write_csv(const Table& table, std::ostream& out);

// {"meta": {...}, "rows": [{column: value}, ...]}. Doubles are rounded to
// the same 10 significant digits the CSV writer prints.
nlohmann::json to_json(const Table& table, nlohmann::json meta);

struct CsvFile {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;  // raw cells
};

// Strict reader for the plain CSV dialect written above. Throws DataError
// on a missing header or ragged rows.
CsvFile read_csv(std::istream& in);

}  // namespace tempodisc
