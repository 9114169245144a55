#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "errors.hpp"

namespace alphadet {

using Integer = mpz_class;

/// Exact fraction. GMP keeps results of arithmetic in lowest terms with a
/// positive denominator, so equality is structural.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0)
        throw error(errc::invalid_argument, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

namespace detail {

inline bool parse_integer(std::string_view text, Integer& out)
{
    if (text.empty())
        return false;
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size())
        return false;
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            return false;
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return out.set_str(digits, 10) == 0;
}

} // namespace detail

/// Accepts "p", "p/q", with an optional sign on p. The result is canonical.
inline Rational parse_rational(std::string_view text)
{
    // U+2212 minus sign is accepted as a synonym for '-'
    std::string s(text);
    if (s.rfind("\xE2\x88\x92", 0) == 0)
        s = "-" + s.substr(3);
    auto slash = s.find('/');
    Integer num, den = 1;
    bool ok = detail::parse_integer(std::string_view(s).substr(0, slash), num);
    if (ok && slash != std::string::npos) {
        std::string_view tail = std::string_view(s).substr(slash + 1);
        ok = !tail.empty() && tail[0] != '-' && tail[0] != '+' && detail::parse_integer(tail, den);
    }
    if (!ok)
        throw error(errc::parse_error, "malformed rational '" + std::string(text) + "'");
    if (den == 0)
        throw error(errc::parse_error, "zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational pow(const Rational& base, unsigned exponent)
{
    Rational result = 1;
    mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    return result;
}

inline Integer factorial(unsigned n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

} // namespace alphadet
