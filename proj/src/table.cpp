#include "stancewalk/table.hpp"

#include "stancewalk/error.hpp"

#include <array>
#include <istream>

namespace stancewalk {

std::string format_double(double value) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{})
        return "nan";
    return std::string(buf.data(), ptr);
}

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos)
        return std::string(field);
    std::string out = "\"";
    for (const char ch : field) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::vector<std::string> csv_split(std::string_view line) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                fields.back() += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.emplace_back();
        } else if (ch != '\r') {
            fields.back() += ch;
        }
    }
    return fields;
}

TableWriter::TableWriter(std::ostream& out, std::vector<std::string> header) : out_(out) {
    row(header);
}

void TableWriter::row(const std::vector<std::string>& cells) {
    bool first = true;
    for (const auto& c : cells)
        write_cell(c, first);
    out_ << '\n';
}

Table Table::read(std::istream& in, std::string_view source_name) {
    if (!in)
        throw IoError("cannot read " + std::string(source_name));
    Table t;
    t.source_ = source_name;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty() || line == "\r")
            continue;
        auto fields = csv_split(line);
        if (t.header_.empty()) {
            t.header_ = std::move(fields);
            continue;
        }
        if (fields.size() != t.header_.size())
            throw DomainError(t.source_ + " line " + std::to_string(number) + ": expected " +
                              std::to_string(t.header_.size()) + " fields, got " +
                              std::to_string(fields.size()));
        t.rows_.push_back(std::move(fields));
    }
    if (in.bad())
        throw IoError("error while reading " + std::string(source_name));
    if (t.header_.empty())
        throw DomainError(std::string(source_name) + " has no header row");
    return t;
}

std::optional<std::size_t> Table::column(std::string_view name) const {
    for (std::size_t c = 0; c < header_.size(); ++c)
        if (header_[c] == name)
            return c;
    return std::nullopt;
}

std::size_t Table::require_column(std::string_view name) const {
    if (const auto c = column(name))
        return *c;
    throw DomainError(source_ + " has no '" + std::string(name) + "' column");
}

} // namespace stancewalk
