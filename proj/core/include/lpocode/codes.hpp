#pragma once

// W-light constant-weight codes.
//
// A set C of words in S(n, w) is W-light when some orientation of J(n, w)
// gives every word of C outdegree at most W. Arcs between a code word and a
// non-code word can always point into the code, so lightness is decided on
// the subgraph induced by C alone. L(W, n, w) is the largest size of such a
// code; L(0, n, w) = A(n, 4, w).

#include <cstdint>
#include <optional>
#include <vector>

#include "lpocode/cwords.hpp"
#include "lpocode/johnson.hpp"

namespace lpocode {

struct LightCode {
    int n = 0;
    int w = 0;
    int max_outdegree = 0;  // the lightness parameter W
    std::vector<Word> words;
    /// Orientation of the subgraph induced by `words`, when known.
    std::optional<Orientation> witness;

    std::size_t size() const noexcept { return words.size(); }
    JohnsonGraph graph() const noexcept { return {n, w}; }
};

struct LightnessCheck {
    bool light = false;
    std::optional<Orientation> witness;
};

/// Decides W-lightness by max-flow on the induced subgraph; the stored
/// witness is ignored. Throws ParameterError on duplicate or foreign words.
LightnessCheck verify_light(const LightCode& code);

/// Checks a stored witness without solving anything: it must orient exactly
/// the subgraph induced by the code and keep every outdegree within W.
bool audit_witness(const LightCode& code);

/// w = 1: the first min(2W + 1, n) unit vectors.
LightCode construct_tournament(int n, int max_outdegree);

/// w = 2: min(floor((W + 1) n / 2), C(n, 2)) words stacked from cyclic-shift
/// orbits so that no column holds more than W + 1 ones.
LightCode construct_orbit(int n, int max_outdegree);

/// Position-weighted sum of the word (1-based positions) modulo n - 2W.
int tau(const Word& word, int max_outdegree);

/// Number of words of S(n, w) in each tau class.
std::vector<std::uint64_t> tau_class_sizes(int n, int w, int max_outdegree);

/// Largest tau class (smallest class index on ties); requires n >= 4W.
LightCode construct_graham_sloane(int n, int w, int max_outdegree);

/// Maps a code of S(n, w) onto S(n, n - w) by complementing every word.
LightCode complement_code(const LightCode& code);

/// Lifts the witness to an orientation of all of J(n, w) that keeps the code
/// words' outdegrees unchanged. Requires a witness.
Orientation extend_to_full(const LightCode& code);

/// Exhaustive search is limited to C(n, w) <= this.
inline constexpr std::uint64_t kExactSearchLimit = 24;

struct ExactResult {
    std::uint64_t size = 0;
    LightCode code;
    std::uint64_t nodes = 0;  // search nodes visited
};

/// L(W, n, w) by branch and bound; the returned code carries a witness.
/// Throws ResourceError when C(n, w) > kExactSearchLimit.
ExactResult exact_L(int n, int w, int max_outdegree);

} // namespace lpocode
