#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace lpocode {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient; throws ResourceError when the value does not fit in 64 bits.
std::uint64_t binomial(int n, int k);

/// Exact binomial coefficient of arbitrary size.
BigInt binomial_big(int n, int k);

/// Parses a probability written as a decimal ("0.05") or a fraction ("1/20")
/// into an exact rational. Accepts values in (0, 1].
Rational parse_probability(std::string_view text);

/// "num/den", or just "num" when the denominator is one.
std::string to_string(const Rational& value);

/// Nearest double, for presentation only.
double to_double(const Rational& value);

/// splitmix64 finalizer. Stable across platforms and releases.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed of an independent stream identified by (master, index...).
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept
{
    return mix64(mix64(master) ^ (index + 0x632be59bd9b4e019ULL));
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) noexcept
{
    return derive_seed(derive_seed(master, a), b);
}

} // namespace lpocode
