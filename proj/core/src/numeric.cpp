#include "lpocode/numeric.hpp"

#include <limits>

#include "lpocode/errors.hpp"
#include "wide_int.hpp"

namespace lpocode {

std::uint64_t binomial(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    detail::uint128 value = 1;
    for (int i = 1; i <= k; ++i) {
        // value * (n - k + i) / i stays integral at every step.
        value = value * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (value > std::numeric_limits<std::uint64_t>::max())
            throw ResourceError("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                                ") does not fit in 64 bits");
    }
    return static_cast<std::uint64_t>(value);
}

BigInt binomial_big(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt value = 1;
    for (int i = 1; i <= k; ++i)
        value = value * (n - k + i) / i;
    return value;
}

Rational parse_probability(std::string_view text)
{
    auto fail = [&] {
        return ParameterError("invalid probability '" + std::string(text) + "'");
    };
    if (text.empty())
        throw fail();

    Rational value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto digits = [&](std::string_view s) {
            if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos)
                throw fail();
            return BigInt(std::string(s));
        };
        BigInt num = digits(text.substr(0, slash));
        BigInt den = digits(text.substr(slash + 1));
        if (den == 0)
            throw fail();
        value = Rational(num, den);
    } else {
        BigInt num = 0;
        BigInt den = 1;
        bool seen_dot = false;
        bool seen_digit = false;
        for (char c : text) {
            if (c == '.') {
                if (seen_dot)
                    throw fail();
                seen_dot = true;
            } else if (c >= '0' && c <= '9') {
                num = num * 10 + (c - '0');
                if (seen_dot)
                    den *= 10;
                seen_digit = true;
            } else {
                throw fail();
            }
        }
        if (!seen_digit)
            throw fail();
        value = Rational(num, den);
    }
    if (value <= 0 || value > 1)
        throw ParameterError("probability must lie in (0, 1], got '" + std::string(text) + "'");
    return value;
}

std::string to_string(const Rational& value)
{
    const auto num = boost::multiprecision::numerator(value);
    const auto den = boost::multiprecision::denominator(value);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

double to_double(const Rational& value)
{
    return value.convert_to<double>();
}

} // namespace lpocode
