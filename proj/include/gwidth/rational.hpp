#ifndef GWIDTH_RATIONAL_HPP
#define GWIDTH_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

#include "gwidth/errors.hpp"

namespace gwidth {

// All geometry runs on exact arbitrary-precision rationals.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Canonical rendering: reduced form, "p" when the denominator is 1, else "p/q"
// with a positive denominator. mpq keeps values canonical, so this is stable.
inline std::string to_string(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Accepts "p", "-p", "p/q"; no whitespace, no decimals.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] {
        throw InputError("invalid rational '" + std::string(text) +
                         "' (expected p or p/q)");
    };
    if (text.empty()) fail();
    std::size_t pos = 0;
    auto scan_integer = [&]() -> std::string {
        std::string out;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            out.push_back(text[pos]);
            ++pos;
        }
        std::size_t digits = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            out.push_back(text[pos]);
            ++pos;
            ++digits;
        }
        if (digits == 0) fail();
        return out;
    };
    std::string num = scan_integer();
    std::string den = "1";
    if (pos < text.size()) {
        if (text[pos] != '/') fail();
        ++pos;
        den = scan_integer();
        if (pos != text.size()) fail();
    }
    BigInt d(den);
    if (d == 0) throw InputError("invalid rational '" + std::string(text) + "': zero denominator");
    Rational r(BigInt(num), d);
    return r;
}

// True when the value is an integer (reduced denominator 1).
inline bool is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

} // namespace gwidth

#endif // GWIDTH_RATIONAL_HPP
