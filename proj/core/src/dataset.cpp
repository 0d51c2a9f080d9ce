#include "lpocode/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "lpocode/errors.hpp"

namespace lpocode {

Dataset::Dataset(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values))
{
    if (rows == 0 || cols == 0)
        throw InputError("dataset must have at least one row and one column");
    if (values_.size() != rows * cols)
        throw InputError("dataset values do not match its shape");
    for (double v : values_)
        if (!std::isfinite(v))
            throw InputError("dataset contains a non-finite value");
}

Dataset Dataset::select(std::span<const std::size_t> picked) const
{
    std::vector<double> values;
    values.reserve(picked.size() * cols_);
    for (std::size_t r : picked) {
        if (r >= rows_)
            throw ParameterError("row index out of range");
        const auto source = row(r);
        values.insert(values.end(), source.begin(), source.end());
    }
    return Dataset(picked.size(), cols_, std::move(values));
}

Word random_word(int n, int w, std::mt19937_64& rng)
{
    std::vector<int> slots(static_cast<std::size_t>(n), 0);
    std::fill_n(slots.begin(), w, 1);
    std::shuffle(slots.begin(), slots.end(), rng);
    std::uint64_t bits = 0;
    for (int p = 0; p < n; ++p)
        if (slots[static_cast<std::size_t>(p)])
            bits |= std::uint64_t{1} << p;
    return Word(n, bits);
}

std::vector<std::string> builtin_scenarios()
{
    return {"null-gauss-1d", "null-gauss-10d", "null-mix-1d",     "null-mix-10d",
            "linear-1sig",   "linear-4sig",    "nonlinear-3mode", "parity-leak"};
}

namespace {

constexpr double kMixtureCenter = 2.0;
constexpr double kLinearShift = 0.5;
constexpr std::size_t kSignalDims = 10;

using Sampler = double (*)(std::mt19937_64&, bool one, std::size_t column);

double null_gauss(std::mt19937_64& rng, bool, std::size_t)
{
    return std::normal_distribution<double>(0.0, 1.0)(rng);
}

double null_mix(std::mt19937_64& rng, bool, std::size_t)
{
    const bool upper = std::bernoulli_distribution(0.5)(rng);
    return std::normal_distribution<double>(upper ? kMixtureCenter : -kMixtureCenter, 1.0)(rng);
}

template <std::size_t SignalColumns>
double linear(std::mt19937_64& rng, bool one, std::size_t column)
{
    const double mean = column < SignalColumns ? (one ? kLinearShift : -kLinearShift) : 0.0;
    return std::normal_distribution<double>(mean, 1.0)(rng);
}

double nonlinear(std::mt19937_64& rng, bool one, std::size_t column)
{
    if (column > 0 || one)
        return std::normal_distribution<double>(column == 0 ? 0.5 : 0.0, 1.0)(rng);
    const bool upper = std::bernoulli_distribution(0.5)(rng);
    return std::normal_distribution<double>(upper ? 5.5 : -4.5, 1.0)(rng);
}

LabeledDataset synthetic(Sampler sampler, std::size_t cols, int n, int w, std::mt19937_64& rng)
{
    const Word labels = random_word(n, w, rng);
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(n) * cols);
    for (int r = 0; r < n; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            values.push_back(sampler(rng, labels.test(r), c));
    return {Dataset(static_cast<std::size_t>(n), cols, std::move(values)), labels};
}

// Column 0 copies the label, column 1 is a fair coin.
LabeledDataset parity_leak(int n, int w, std::mt19937_64& rng)
{
    const Word labels = random_word(n, w, rng);
    std::bernoulli_distribution coin(0.5);
    std::vector<double> values;
    for (int r = 0; r < n; ++r) {
        values.push_back(labels.test(r) ? 1.0 : 0.0);
        values.push_back(coin(rng) ? 1.0 : 0.0);
    }
    return {Dataset(static_cast<std::size_t>(n), 2, std::move(values)), labels};
}

LabeledDataset from_csv(const std::string& path, int n, int w, std::mt19937_64& rng)
{
    std::ifstream file(path);
    if (!file)
        throw InputError("cannot open dataset file '" + path + "'");
    const CsvDataset csv = read_dataset_csv(file);
    const std::size_t available = csv.data.rows();
    if (static_cast<std::size_t>(n) > available)
        throw InputError("dataset file has " + std::to_string(available) + " rows, fewer than n = " +
                         std::to_string(n));

    std::vector<std::size_t> picked;
    std::uint64_t bits = 0;
    if (csv.labels) {
        std::vector<std::size_t> ones, zeros;
        for (std::size_t r = 0; r < available; ++r)
            ((*csv.labels)[r] ? ones : zeros).push_back(r);
        if (ones.size() < static_cast<std::size_t>(w) || zeros.size() < static_cast<std::size_t>(n - w))
            throw InputError("dataset file lacks enough rows of each label for w = " + std::to_string(w));
        std::shuffle(ones.begin(), ones.end(), rng);
        std::shuffle(zeros.begin(), zeros.end(), rng);
        picked.assign(ones.begin(), ones.begin() + w);
        picked.insert(picked.end(), zeros.begin(), zeros.begin() + (n - w));
        std::sort(picked.begin(), picked.end());
        for (std::size_t p = 0; p < picked.size(); ++p)
            if ((*csv.labels)[picked[p]])
                bits |= std::uint64_t{1} << p;
        return {csv.data.select(picked), Word(n, bits)};
    }
    picked.resize(available);
    std::iota(picked.begin(), picked.end(), std::size_t{0});
    std::shuffle(picked.begin(), picked.end(), rng);
    picked.resize(static_cast<std::size_t>(n));
    std::sort(picked.begin(), picked.end());
    const Word labels = random_word(n, w, rng);
    return {csv.data.select(picked), labels};
}

} // namespace

LabeledDataset generate_data(std::string_view scenario, int n, int w, std::uint64_t seed)
{
    if (n < 2 || n > kMaxWordLength || w < 1 || w >= n)
        throw ParameterError("generate_data needs 1 <= w < n <= 64");
    std::mt19937_64 rng(seed);
    if (scenario == "null-gauss-1d")
        return synthetic(null_gauss, 1, n, w, rng);
    if (scenario == "null-gauss-10d")
        return synthetic(null_gauss, kSignalDims, n, w, rng);
    if (scenario == "null-mix-1d")
        return synthetic(null_mix, 1, n, w, rng);
    if (scenario == "null-mix-10d")
        return synthetic(null_mix, kSignalDims, n, w, rng);
    if (scenario == "linear-1sig")
        return synthetic(linear<1>, kSignalDims, n, w, rng);
    if (scenario == "linear-4sig")
        return synthetic(linear<4>, kSignalDims, n, w, rng);
    if (scenario == "nonlinear-3mode")
        return synthetic(nonlinear, kSignalDims, n, w, rng);
    if (scenario == "parity-leak")
        return parity_leak(n, w, rng);
    if (scenario.starts_with("csv:"))
        return from_csv(std::string(scenario.substr(4)), n, w, rng);
    throw InputError("unknown scenario '" + std::string(scenario) + "'");
}

namespace {

std::vector<std::string> split_csv_line(std::string line)
{
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    std::vector<std::string> fields;
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, ','))
        fields.push_back(field);
    if (!line.empty() && line.back() == ',')
        fields.emplace_back();
    return fields;
}

double parse_double(const std::string& text, std::size_t line)
{
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    while (begin < end && *begin == ' ')
        ++begin;
    while (end > begin && end[-1] == ' ')
        --end;
    if (begin < end && *begin == '+')
        ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (begin == end || ec != std::errc() || ptr != end)
        throw InputError("line " + std::to_string(line) + ": '" + text + "' is not a number");
    return value;
}

} // namespace

CsvDataset read_dataset_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line))
        throw InputError("dataset file is empty");
    const auto header = split_csv_line(line);
    if (header.empty() || (header.size() == 1 && header[0].empty()))
        throw InputError("dataset header is empty");
    const bool has_labels = header.back() == "label";
    const std::size_t cols = header.size() - (has_labels ? 1 : 0);
    if (cols == 0)
        throw InputError("dataset has no feature columns");

    std::vector<double> values;
    std::vector<int> labels;
    std::size_t rows = 0;
    std::size_t line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty() || line == "\r")
            continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != header.size())
            throw InputError("line " + std::to_string(line_number) + ": expected " +
                             std::to_string(header.size()) + " fields");
        for (std::size_t c = 0; c < cols; ++c)
            values.push_back(parse_double(fields[c], line_number));
        if (has_labels) {
            const double label = parse_double(fields.back(), line_number);
            if (label != 0.0 && label != 1.0)
                throw InputError("line " + std::to_string(line_number) + ": label must be 0 or 1");
            labels.push_back(static_cast<int>(label));
        }
        ++rows;
    }
    if (rows == 0)
        throw InputError("dataset has no rows");
    CsvDataset out{Dataset(rows, cols, std::move(values)), std::nullopt};
    if (has_labels)
        out.labels = std::move(labels);
    return out;
}

void write_dataset_csv(std::ostream& out, const Dataset& data, const Word* labels)
{
    for (std::size_t c = 0; c < data.cols(); ++c)
        out << (c ? "," : "") << 'x' << c;
    if (labels)
        out << ",label";
    out << '\n';
    const auto old_precision = out.precision(17);
    for (std::size_t r = 0; r < data.rows(); ++r) {
        for (std::size_t c = 0; c < data.cols(); ++c)
            out << (c ? "," : "") << data.at(r, c);
        if (labels)
            out << ',' << (labels->test(static_cast<int>(r)) ? 1 : 0);
        out << '\n';
    }
    out.precision(old_precision);
}

} // namespace lpocode
