#pragma once

#include <span>
#include <string>
#include <vector>

namespace basel {

/// Rows of (x, v1, v2, ...) with strictly increasing x.
class SampleTable {
public:
    struct Row {
        double x;
        std::vector<double> values;
    };

    /// `column_names` includes the x column; at least two names are required.
    explicit SampleTable(std::vector<std::string> column_names);

    /// Throws DomainError on a non-increasing x or wrong arity.
    void append(double x, std::vector<double> values);

    const std::vector<std::string>& column_names() const noexcept { return columns_; }
    const std::vector<Row>& rows() const noexcept { return rows_; }
    std::size_t size() const noexcept { return rows_.size(); }

private:
    std::vector<std::string> columns_;
    std::vector<Row> rows_;
};

} // namespace basel
