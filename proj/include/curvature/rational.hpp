#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "curvature/errors.hpp"

namespace curvature {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Floor division for integers; `den` must be positive.
inline BigInt floor_div(const BigInt& num, const BigInt& den)
{
    BigInt q = num / den;
    if (num < 0 && q * den != num)
        q -= 1;
    return q;
}

/// Reduces an angle (units of pi) into [0, 2).
inline Rational mod2(const Rational& r)
{
    const BigInt& num = boost::multiprecision::numerator(r);
    const BigInt& den = boost::multiprecision::denominator(r);
    if (num >= 0 && num < 2 * den)
        return r;
    BigInt turns = floor_div(num, 2 * den);
    return r - Rational(2 * turns);
}

namespace detail {

inline BigInt parse_integer(std::string_view text, std::string_view whole)
{
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size())
        fail(ErrorKind::ParseError, "malformed rational '" + std::string(whole) + "'");
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            fail(ErrorKind::ParseError, "malformed rational '" + std::string(whole) + "'");
    }
    BigInt value(std::string(text.substr(pos)));
    return negative ? BigInt(-value) : value;
}

} // namespace detail

/// Parses `p/q` or an integer into a canonical (lowest terms) rational.
inline Rational parse_rational(std::string_view text)
{
    if (text.empty())
        fail(ErrorKind::ParseError, "empty rational");
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(detail::parse_integer(text, text));
    BigInt num = detail::parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '+' || den_text.front() == '-'))
        fail(ErrorKind::ParseError, "signed denominator in '" + std::string(text) + "'");
    BigInt den = detail::parse_integer(den_text, text);
    if (den == 0)
        fail(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

/// `p/q` in lowest terms, or just `p` when the denominator is 1.
inline std::string format_rational(const Rational& r)
{
    const BigInt& den = boost::multiprecision::denominator(r);
    if (den == 1)
        return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

} // namespace curvature
