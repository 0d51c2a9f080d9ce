#include "lpocode/critical_grid.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "lpocode/errors.hpp"

namespace lpocode {

CriticalGrid::CriticalGrid(int max_ones, int max_zeros) : max_ones_(max_ones), max_zeros_(max_zeros)
{
    if (max_ones < 1 || max_zeros < 1)
        throw ParameterError("critical grid needs at least one row and column");
    cells_.resize(static_cast<std::size_t>(max_ones) * static_cast<std::size_t>(max_zeros));
}

bool CriticalGrid::contains(int ones, int zeros) const noexcept
{
    return ones >= 1 && ones <= max_ones_ && zeros >= 1 && zeros <= max_zeros_;
}

std::size_t CriticalGrid::index(int ones, int zeros) const
{
    if (!contains(ones, zeros))
        throw ParameterError("cell (" + std::to_string(ones) + ", " + std::to_string(zeros) +
                             ") is outside the critical grid");
    return static_cast<std::size_t>(ones - 1) * static_cast<std::size_t>(max_zeros_) +
           static_cast<std::size_t>(zeros - 1);
}

std::optional<int> CriticalGrid::at(int ones, int zeros) const
{
    return cells_[index(ones, zeros)];
}

void CriticalGrid::set(int ones, int zeros, std::optional<int> value)
{
    cells_[index(ones, zeros)] = value;
}

CriticalGrid CriticalGrid::build(int max_ones, int max_zeros,
                                 const std::function<std::optional<int>(int, int)>& f)
{
    CriticalGrid grid(max_ones, max_zeros);
    for (int ones = 1; ones <= max_ones; ++ones)
        for (int zeros = 1; zeros <= max_zeros; ++zeros)
            grid.set(ones, zeros, f(ones, zeros));
    return grid;
}

void CriticalGrid::merge_min(const CriticalGrid& other)
{
    if (other.max_ones_ != max_ones_ || other.max_zeros_ != max_zeros_)
        throw ParameterError("cannot merge critical grids of different shapes");
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (!cells_[i] || !other.cells_[i])
            cells_[i].reset();
        else
            cells_[i] = std::min(*cells_[i], *other.cells_[i]);
    }
}

void write_grid_csv(std::ostream& out, const CriticalGrid& grid)
{
    out << "ones\\zeros";
    for (int zeros = 1; zeros <= grid.max_zeros(); ++zeros)
        out << ',' << zeros;
    out << '\n';
    for (int ones = 1; ones <= grid.max_ones(); ++ones) {
        out << ones;
        for (int zeros = 1; zeros <= grid.max_zeros(); ++zeros) {
            out << ',';
            if (auto cell = grid.at(ones, zeros))
                out << *cell;
        }
        out << '\n';
    }
}

namespace {

std::vector<std::string> split_fields(const std::string& line)
{
    std::vector<std::string> fields;
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, ','))
        fields.push_back(field);
    if (!line.empty() && line.back() == ',')
        fields.emplace_back();
    return fields;
}

int parse_int(const std::string& text, int line)
{
    int value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end)
        throw InputError("line " + std::to_string(line) + ": expected an integer, got '" + text + "'");
    return value;
}

} // namespace

CriticalGrid read_grid_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line))
        throw InputError("empty critical grid file");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    const auto header = split_fields(line);
    if (header.size() < 2)
        throw InputError("critical grid header has no columns");
    for (std::size_t c = 1; c < header.size(); ++c)
        if (parse_int(header[c], 1) != static_cast<int>(c))
            throw InputError("critical grid columns must be 1, 2, ... in order");
    const int max_zeros = static_cast<int>(header.size() - 1);

    std::vector<std::vector<std::optional<int>>> rows;
    int line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        const auto fields = split_fields(line);
        if (fields.size() != header.size())
            throw InputError("line " + std::to_string(line_number) + ": wrong number of fields");
        if (parse_int(fields[0], line_number) != static_cast<int>(rows.size() + 1))
            throw InputError("line " + std::to_string(line_number) + ": rows must be 1, 2, ... in order");
        std::vector<std::optional<int>> row;
        for (std::size_t c = 1; c < fields.size(); ++c) {
            if (fields[c].empty()) {
                row.emplace_back();
            } else {
                const int value = parse_int(fields[c], line_number);
                if (value < 0)
                    throw InputError("line " + std::to_string(line_number) + ": negative critical value");
                row.emplace_back(value);
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw InputError("critical grid has no rows");
    CriticalGrid grid(static_cast<int>(rows.size()), max_zeros);
    for (int ones = 1; ones <= grid.max_ones(); ++ones)
        for (int zeros = 1; zeros <= max_zeros; ++zeros)
            grid.set(ones, zeros, rows[static_cast<std::size_t>(ones - 1)][static_cast<std::size_t>(zeros - 1)]);
    return grid;
}

} // namespace lpocode
