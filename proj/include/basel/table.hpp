#pragma once

// Typed result tables and their CSV / JSON / text renderings.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "basel/exactalg.hpp"
#include "basel/sample_table.hpp"

namespace basel::report {

/// coefficient * pi^pi_power
struct ExactValue {
    exact::Rational coefficient;
    unsigned pi_power = 0;

    friend bool operator==(const ExactValue&, const ExactValue&) = default;
};

using Cell = std::variant<std::int64_t, double, ExactValue, std::string>;
using ParamValue = std::variant<std::int64_t, double, bool, std::string, std::vector<std::int64_t>>;

enum class Format { csv, json, text };

std::optional<Format> parse_format(std::string_view name);
std::string_view format_name(Format format);

class Table {
public:
    Table(std::string command, std::vector<std::string> columns);

    void set_param(std::string name, ParamValue value);

    /// Throws DomainError on wrong arity.
    void add_row(std::vector<Cell> row);

    const std::string& command() const noexcept { return command_; }
    const std::vector<std::pair<std::string, ParamValue>>& params() const noexcept { return params_; }
    const std::vector<std::string>& columns() const noexcept { return columns_; }
    const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }

private:
    std::string command_;
    std::vector<std::pair<std::string, ParamValue>> params_;
    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
};

Table from_samples(std::string command, const SampleTable& samples);

/// 17 significant digits.
std::string format_double(double v);

/// "num/den π^k" (csv, json) or "π^k × num/den" (text).
std::string format_exact(const ExactValue& v, Format format);

std::string format_cell(const Cell& cell, Format format);

/// CSV: header plus LF-terminated rows. JSON: one object with command,
/// params, columns and rows (rows are arrays). Text: aligned columns.
std::string render(const Table& table, Format format);

} // namespace basel::report
