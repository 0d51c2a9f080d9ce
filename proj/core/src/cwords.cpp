#include "lpocode/cwords.hpp"

#include <bit>

#include "lpocode/errors.hpp"
#include "lpocode/numeric.hpp"

namespace lpocode {

namespace {

void check_shape(int n, int w)
{
    if (n < 2 || n > kMaxWordLength)
        throw ParameterError("word length must be in [2, 64], got " + std::to_string(n));
    if (w <= 0 || w >= n)
        throw ParameterError("weight must satisfy 0 < w < n, got n=" + std::to_string(n) +
                             " w=" + std::to_string(w));
}

} // namespace

Word::Word(int n, std::uint64_t bits) : n_(n), bits_(bits)
{
    if (n < 2 || n > kMaxWordLength)
        throw ParameterError("word length must be in [2, 64], got " + std::to_string(n));
    if ((bits & ~full_mask(n)) != 0)
        throw ParameterError("word has bits set beyond its length");
    check_shape(n, weight());
}

Word Word::from_string(std::string_view text)
{
    if (text.empty() || text.size() > static_cast<std::size_t>(kMaxWordLength))
        throw ParameterError("bit-string length must be in [2, 64]");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1')
            bits |= std::uint64_t{1} << i;
        else if (text[i] != '0')
            throw ParameterError("invalid character in bit-string '" + std::string(text) + "'");
    }
    return Word(static_cast<int>(text.size()), bits);
}

Word Word::from_positions(int n, std::span<const int> positions)
{
    std::uint64_t bits = 0;
    for (int p : positions) {
        if (p < 0 || p >= n)
            throw ParameterError("position out of range");
        if ((bits >> p) & 1U)
            throw ParameterError("position listed twice");
        bits |= std::uint64_t{1} << p;
    }
    return Word(n, bits);
}

int Word::weight() const noexcept
{
    return std::popcount(bits_);
}

std::vector<int> Word::ones() const
{
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
        out.push_back(std::countr_zero(b));
    return out;
}

std::vector<int> Word::zeros() const
{
    std::vector<int> out;
    for (std::uint64_t b = ~bits_ & full_mask(n_); b != 0; b &= b - 1)
        out.push_back(std::countr_zero(b));
    return out;
}

std::string Word::to_string() const
{
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int i = 0; i < n_; ++i)
        if (test(i))
            s[static_cast<std::size_t>(i)] = '1';
    return s;
}

std::vector<Word> enumerate_words(int n, int w)
{
    check_shape(n, w);
    const std::uint64_t count = binomial(n, w);
    if (count > (std::uint64_t{1} << 32))
        throw ResourceError("C(" + std::to_string(n) + ", " + std::to_string(w) +
                            ") words is too many to enumerate");
    std::vector<Word> out;
    out.reserve(count);
    // Gosper's hack visits masks in increasing numeric order, which is colex order.
    std::uint64_t v = full_mask(w);
    for (std::uint64_t i = 0; i < count; ++i) {
        out.emplace_back(n, v);
        if (i + 1 == count)
            break;
        const std::uint64_t t = v | (v - 1);
        v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    }
    return out;
}

std::uint64_t rank(const Word& word)
{
    std::uint64_t r = 0;
    int k = 1;
    for (std::uint64_t b = word.bits(); b != 0; b &= b - 1, ++k)
        r += binomial(std::countr_zero(b), k);
    return r;
}

Word unrank(int n, int w, std::uint64_t r)
{
    check_shape(n, w);
    if (r >= binomial(n, w))
        throw ParameterError("rank " + std::to_string(r) + " out of range for S(" +
                             std::to_string(n) + ", " + std::to_string(w) + ")");
    std::uint64_t bits = 0;
    int c = n - 1;
    for (int k = w; k >= 1; --k) {
        while (binomial(c, k) > r)
            --c;
        bits |= std::uint64_t{1} << c;
        r -= binomial(c, k);
        --c;
    }
    return Word(n, bits);
}

int hamming(const Word& a, const Word& b)
{
    if (a.length() != b.length())
        throw ParameterError("hamming distance of words with different lengths");
    return std::popcount(a.bits() ^ b.bits());
}

Word transpose(const Word& word, int i, int j)
{
    if (i < 0 || j < 0 || i >= word.length() || j >= word.length())
        throw ParameterError("transposition position out of range");
    if (!word.test(i) || word.test(j))
        throw ParameterError("transpose(i, j) needs a one at i and a zero at j");
    const std::uint64_t flip = (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
    return Word(word.length(), word.bits() ^ flip);
}

std::vector<Word> neighbors(const Word& word)
{
    std::vector<Word> out;
    const auto ones = word.ones();
    const auto zeros = word.zeros();
    out.reserve(ones.size() * zeros.size());
    for (int i : ones)
        for (int j : zeros)
            out.push_back(Word(word.length(),
                               word.bits() ^ (std::uint64_t{1} << i) ^ (std::uint64_t{1} << j)));
    return out;
}

Word complement(const Word& word)
{
    return Word(word.length(), ~word.bits() & full_mask(word.length()));
}

} // namespace lpocode
