#pragma once

// Critical values indexed by class sizes: row = number labeled one,
// column = number labeled zero, cell = critical error count or empty.

#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

namespace lpocode {

class CriticalGrid {
public:
    CriticalGrid(int max_ones, int max_zeros);

    int max_ones() const noexcept { return max_ones_; }
    int max_zeros() const noexcept { return max_zeros_; }

    /// 1-based class sizes. Throws ParameterError outside the grid.
    std::optional<int> at(int ones, int zeros) const;
    void set(int ones, int zeros, std::optional<int> value);
    bool contains(int ones, int zeros) const noexcept;

    /// Fills every cell from f(ones, zeros).
    static CriticalGrid build(int max_ones, int max_zeros,
                              const std::function<std::optional<int>(int, int)>& f);

    /// Cellwise minimum; an empty cell wins because it means no error count
    /// was rare enough. Grids must have the same shape.
    void merge_min(const CriticalGrid& other);

    friend bool operator==(const CriticalGrid&, const CriticalGrid&) = default;

private:
    std::size_t index(int ones, int zeros) const;

    int max_ones_;
    int max_zeros_;
    std::vector<std::optional<int>> cells_;
};

/// CSV: header `ones\zeros,1,2,...`, then one row per ones count.
void write_grid_csv(std::ostream& out, const CriticalGrid& grid);

/// Inverse of write_grid_csv. Throws InputError on malformed input.
CriticalGrid read_grid_csv(std::istream& in);

} // namespace lpocode
