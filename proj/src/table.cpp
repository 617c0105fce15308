#include "basel/table.hpp"

#include <algorithm>
#include <cstdio>
#include <type_traits>

#include "json.hpp"

#include "basel/error.hpp"

namespace basel::report {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string pi_power_text(unsigned k)
{
    if (k == 1)
        return "π";
    return "π^" + std::to_string(k);
}

nlohmann::ordered_json to_json(const Cell& cell)
{
    return std::visit(Overloaded{
                          [](std::int64_t v) { return nlohmann::ordered_json(v); },
                          [](double v) { return nlohmann::ordered_json(v); },
                          [](const ExactValue& v) { return nlohmann::ordered_json(format_exact(v, Format::json)); },
                          [](const std::string& v) { return nlohmann::ordered_json(v); },
                      },
                      cell);
}

nlohmann::ordered_json to_json(const ParamValue& value)
{
    return std::visit([](const auto& v) { return nlohmann::ordered_json(v); }, value);
}

std::string render_csv(const Table& table)
{
    std::string out;
    for (std::size_t i = 0; i < table.columns().size(); ++i) {
        if (i)
            out += ',';
        out += table.columns()[i];
    }
    out += '\n';
    for (const auto& row : table.rows()) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                out += ',';
            out += format_cell(row[i], Format::csv);
        }
        out += '\n';
    }
    return out;
}

std::string render_json(const Table& table)
{
    nlohmann::ordered_json doc;
    doc["command"] = table.command();
    auto& params = doc["params"] = nlohmann::ordered_json::object();
    for (const auto& [name, value] : table.params())
        params[name] = to_json(value);
    doc["columns"] = table.columns();
    auto& rows = doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows()) {
        auto r = nlohmann::ordered_json::array();
        for (const auto& cell : row)
            r.push_back(to_json(cell));
        rows.push_back(std::move(r));
    }
    return doc.dump() + "\n";
}

// Display width in code points; the pi glyph is two bytes of UTF-8.
std::size_t display_width(const std::string& s)
{
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string render_text(const Table& table)
{
    std::vector<std::vector<std::string>> cells;
    cells.push_back(table.columns());
    for (const auto& row : table.rows()) {
        std::vector<std::string> r;
        r.reserve(row.size());
        for (const auto& cell : row)
            r.push_back(format_cell(cell, Format::text));
        cells.push_back(std::move(r));
    }
    std::vector<std::size_t> width(table.columns().size(), 0);
    for (const auto& r : cells)
        for (std::size_t i = 0; i < r.size(); ++i)
            width[i] = std::max(width[i], display_width(r[i]));

    std::string out;
    for (const auto& r : cells) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i)
                out += "  ";
            out.append(width[i] - display_width(r[i]), ' ');
            out += r[i];
        }
        out += '\n';
    }
    return out;
}

} // namespace

std::optional<Format> parse_format(std::string_view name)
{
    if (name == "csv")
        return Format::csv;
    if (name == "json")
        return Format::json;
    if (name == "text")
        return Format::text;
    return std::nullopt;
}

std::string_view format_name(Format format)
{
    switch (format) {
    case Format::csv:
        return "csv";
    case Format::json:
        return "json";
    case Format::text:
        return "text";
    }
    return "unknown";
}

Table::Table(std::string command, std::vector<std::string> columns)
    : command_(std::move(command)), columns_(std::move(columns))
{
    if (columns_.empty())
        throw DomainError("table needs at least one column");
}

void Table::set_param(std::string name, ParamValue value)
{
    for (auto& [n, v] : params_) {
        if (n == name) {
            v = std::move(value);
            return;
        }
    }
    params_.emplace_back(std::move(name), std::move(value));
}

void Table::add_row(std::vector<Cell> row)
{
    if (row.size() != columns_.size())
        throw DomainError("table row has " + std::to_string(row.size()) + " cells, expected " +
                          std::to_string(columns_.size()));
    rows_.push_back(std::move(row));
}

Table from_samples(std::string command, const SampleTable& samples)
{
    Table t(std::move(command), samples.column_names());
    for (const auto& row : samples.rows()) {
        std::vector<Cell> cells;
        cells.reserve(row.values.size() + 1);
        cells.emplace_back(row.x);
        for (double v : row.values)
            cells.emplace_back(v);
        t.add_row(std::move(cells));
    }
    return t;
}

std::string format_double(double v)
{
    char buf[32];
    const int n = std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf, static_cast<std::size_t>(n));
}

std::string format_exact(const ExactValue& v, Format format)
{
    const std::string q = v.coefficient.to_string();
    if (v.pi_power == 0 || v.coefficient.is_zero())
        return q;
    if (format == Format::text)
        return pi_power_text(v.pi_power) + " × " + q;
    return q + " " + pi_power_text(v.pi_power);
}

std::string format_cell(const Cell& cell, Format format)
{
    return std::visit(Overloaded{
                          [](std::int64_t v) { return std::to_string(v); },
                          [](double v) { return format_double(v); },
                          [format](const ExactValue& v) { return format_exact(v, format); },
                          [](const std::string& v) { return v; },
                      },
                      cell);
}

std::string render(const Table& table, Format format)
{
    switch (format) {
    case Format::csv:
        return render_csv(table);
    case Format::json:
        return render_json(table);
    case Format::text:
        return render_text(table);
    }
    throw DomainError("unknown output format");
}

} // namespace basel::report
