#include "basel/sample_table.hpp"

#include <string>
#include <utility>

#include "basel/error.hpp"

namespace basel {

SampleTable::SampleTable(std::vector<std::string> column_names) : columns_(std::move(column_names))
{
    if (columns_.size() < 2)
        throw DomainError("SampleTable needs an x column and at least one value column");
}

void SampleTable::append(double x, std::vector<double> values)
{
    if (values.size() + 1 != columns_.size())
        throw DomainError("SampleTable row has " + std::to_string(values.size()) + " values, expected " +
                          std::to_string(columns_.size() - 1));
    if (!rows_.empty() && !(x > rows_.back().x))
        throw DomainError("SampleTable x values must be strictly increasing");
    rows_.push_back(Row{x, std::move(values)});
}

} // namespace basel
