// io.hpp — deterministic CSV/JSON row emission. One row schema, two
// encodings: numbers are rendered with 17 significant digits through
// std::to_chars, so output is locale-independent and byte-stable across
// runs.

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace landauer::io {

enum class OutputFormat { Csv, Json };

OutputFormat parse_format(const std::string& s); // "csv" | "json"

using Cell = std::variant<double, std::int64_t, std::string>;

std::string format_double(double v);
std::string format_cell(const Cell& c);

// Rows share one header; emit() writes the whole table in the chosen
// encoding ('\n' line endings, trailing newline).
class Table {
public:
    explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_row(std::vector<Cell> row);
    void emit(std::ostream& os, OutputFormat fmt) const;

    std::size_t row_count() const { return rows_.size(); }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<Cell>> rows_;
};

} // namespace landauer::io
