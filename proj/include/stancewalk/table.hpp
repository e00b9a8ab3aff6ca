#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <ostream>
#include <string>
#include <type_traits>
#include <string_view>
#include <vector>

namespace stancewalk {

/// Shortest round-trip decimal form of `value`; identical bytes for identical doubles.
std::string format_double(double value);

/// Quotes a field when it contains a comma, quote, or line break.
std::string csv_escape(std::string_view field);

/// Splits one comma-separated line, honouring double-quoted fields.
std::vector<std::string> csv_split(std::string_view line);

/// Comma-separated table with a header row.
class TableWriter {
public:
    TableWriter(std::ostream& out, std::vector<std::string> header);

    template <typename... Cells>
    void row(const Cells&... cells) {
        bool first = true;
        (write_cell(cells, first), ...);
        out_ << '\n';
    }

    void row(const std::vector<std::string>& cells);

private:
    void separator(bool& first) {
        if (!first)
            out_ << ',';
        first = false;
    }
    void write_cell(std::string_view s, bool& first) {
        separator(first);
        out_ << csv_escape(s);
    }
    void write_cell(const std::string& s, bool& first) { write_cell(std::string_view(s), first); }
    void write_cell(const char* s, bool& first) { write_cell(std::string_view(s), first); }
    void write_cell(double v, bool& first) {
        separator(first);
        out_ << format_double(v);
    }
    template <typename Int>
        requires std::is_integral_v<Int>
    void write_cell(Int v, bool& first) {
        separator(first);
        out_ << v;
    }

    std::ostream& out_;
};

/// Comma-separated table read into memory, with column lookup by header name.
class Table {
public:
    /// Reads all rows; throws DomainError when a row's width differs from the header.
    static Table read(std::istream& in, std::string_view source_name);

    const std::vector<std::string>& header() const { return header_; }
    const std::vector<std::vector<std::string>>& rows() const { return rows_; }
    std::optional<std::size_t> column(std::string_view name) const;
    /// Like column(), but DomainError when absent.
    std::size_t require_column(std::string_view name) const;

private:
    std::string source_;
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

} // namespace stancewalk
