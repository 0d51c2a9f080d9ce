#pragma once

// Constant-weight binary words: the labelings S(n, w) of a sample of size n
// with exactly w entries labeled one.
//
// Positions are 0-based in this API. Bit k of the packed representation is
// position k, and the textual form lists position 0 first, so "1100" has its
// ones at positions 0 and 1.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lpocode {

/// Longest supported word.
inline constexpr int kMaxWordLength = 64;

class Word {
public:
    /// Throws ParameterError unless 0 < popcount(bits) < n <= 64 and no bit at or beyond n is set.
    Word(int n, std::uint64_t bits);

    /// Parses an ASCII bit-string such as "01101".
    static Word from_string(std::string_view text);

    /// Word of length n with ones exactly at the given positions.
    static Word from_positions(int n, std::span<const int> positions);

    int length() const noexcept { return n_; }
    int weight() const noexcept;
    std::uint64_t bits() const noexcept { return bits_; }
    bool test(int position) const noexcept { return (bits_ >> position) & 1U; }

    /// Positions holding a one, ascending.
    std::vector<int> ones() const;
    /// Positions holding a zero, ascending.
    std::vector<int> zeros() const;

    std::string to_string() const;

    /// Within one S(n, w) this is colexicographic order of the one-positions.
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    int n_;
    std::uint64_t bits_;
};

/// Mask with the low n bits set.
constexpr std::uint64_t full_mask(int n) noexcept
{
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

/// All C(n, w) words in colexicographic order.
std::vector<Word> enumerate_words(int n, int w);

/// Position of the word in enumerate_words order (combinatorial number system).
std::uint64_t rank(const Word& word);

/// Inverse of rank. Throws ParameterError when r >= C(n, w).
Word unrank(int n, int w, std::uint64_t r);

/// Number of positions at which the words differ.
int hamming(const Word& a, const Word& b);

/// Swaps positions i and j. Requires word.test(i) and !word.test(j).
Word transpose(const Word& word, int i, int j);

/// The w(n - w) words reachable by one transposition, i.e. at Hamming distance 2.
std::vector<Word> neighbors(const Word& word);

/// Bitwise complement, mapping S(n, w) onto S(n, n - w).
Word complement(const Word& word);

} // namespace lpocode
