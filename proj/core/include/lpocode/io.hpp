#pragma once

// Text formats: word files, orientation files and CSV tables.

#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "lpocode/bounds.hpp"
#include "lpocode/cwords.hpp"
#include "lpocode/johnson.hpp"
#include "lpocode/lpocv.hpp"
#include "lpocode/simulation.hpp"
#include "lpocode/wilcoxon.hpp"

namespace lpocode {

/// One bit-string per line; blank lines and text after '#' are ignored. All
/// words must share length and weight. Throws InputError otherwise or when
/// the file holds no words.
std::vector<Word> read_words(std::istream& in);
void write_words(std::ostream& out, std::span<const Word> words);

struct OrientationFile {
    int n = 0;
    int w = 0;
    std::vector<std::pair<Word, Word>> arcs;
};

/// Header `n w`, then one `FROM -> TO` line per arc.
OrientationFile read_orientation(std::istream& in);
void write_orientation(std::ostream& out, const Orientation& orientation);

/// `errors,count` rows.
void write_histogram_csv(std::ostream& out, const ErrorHistogram& histogram);
void write_histogram_csv(std::ostream& out, const NullDistribution& distribution);

/// `n,w,W,lower,upper,exact` rows; exact is empty when unknown.
void write_bounds_csv(std::ostream& out, std::span<const BoundRecord> rows);

/// `size,failure_proportion` rows.
void write_type2_csv(std::ostream& out, std::span<const Type2Point> points);

} // namespace lpocode
