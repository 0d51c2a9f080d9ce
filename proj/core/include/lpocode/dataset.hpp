#pragma once

// Feature matrices, labelings and the synthetic scenarios used by the
// simulations.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lpocode/cwords.hpp"

namespace lpocode {

/// Row-major matrix of finite reals, one row per observation.
class Dataset {
public:
    Dataset(std::size_t rows, std::size_t cols, std::vector<double> values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    double at(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }
    std::span<const double> row(std::size_t r) const { return {values_.data() + r * cols_, cols_}; }

    /// Rows picked in the given order.
    Dataset select(std::span<const std::size_t> rows) const;

    friend bool operator==(const Dataset&, const Dataset&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> values_;
};

struct LabeledDataset {
    Dataset data;
    Word labels;
};

/// Uniform draw from S(n, w): a shuffled word with w leading ones.
Word random_word(int n, int w, std::mt19937_64& rng);

/// Scenario names accepted by generate_data, excluding the csv:<path> form.
std::vector<std::string> builtin_scenarios();

/// Draws a labeling uniformly from S(n, w), then features conditional on it.
/// `csv:<path>` samples rows of a file instead (stratified by its label
/// column when present). Throws InputError on unknown scenarios or bad files.
LabeledDataset generate_data(std::string_view scenario, int n, int w, std::uint64_t seed);

struct CsvDataset {
    Dataset data;
    std::optional<std::vector<int>> labels;  // from a final `label` column
};

/// Header row, numeric feature columns, optional final `label` column of 0/1.
CsvDataset read_dataset_csv(std::istream& in);

void write_dataset_csv(std::ostream& out, const Dataset& data, const Word* labels = nullptr);

} // namespace lpocode
