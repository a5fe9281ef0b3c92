#include "landauer/io.hpp"

#include <charconv>
#include <stdexcept>

namespace landauer::io {

OutputFormat parse_format(const std::string& s) {
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    throw std::invalid_argument("format must be 'csv' or 'json'");
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string format_cell(const Cell& c) {
    if (std::holds_alternative<double>(c)) return format_double(std::get<double>(c));
    if (std::holds_alternative<std::int64_t>(c)) return std::to_string(std::get<std::int64_t>(c));
    return std::get<std::string>(c);
}

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != header_.size())
        throw std::invalid_argument("Table: row width does not match header");
    rows_.push_back(std::move(row));
}

void Table::emit(std::ostream& os, OutputFormat fmt) const {
    if (fmt == OutputFormat::Csv) {
        for (std::size_t i = 0; i < header_.size(); ++i) {
            if (i) os << ',';
            os << header_[i];
        }
        os << '\n';
        for (const auto& row : rows_) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) os << ',';
                os << format_cell(row[i]);
            }
            os << '\n';
        }
        return;
    }

    // JSON mirror: an array of flat objects with the same field names.
    os << "[\n";
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        os << "  {";
        for (std::size_t i = 0; i < rows_[r].size(); ++i) {
            if (i) os << ", ";
            os << '"' << header_[i] << "\": ";
            if (std::holds_alternative<std::string>(rows_[r][i]))
                os << '"' << std::get<std::string>(rows_[r][i]) << '"';
            else
                os << format_cell(rows_[r][i]);
        }
        os << (r + 1 < rows_.size() ? "},\n" : "}\n");
    }
    os << "]\n";
}

} // namespace landauer::io
