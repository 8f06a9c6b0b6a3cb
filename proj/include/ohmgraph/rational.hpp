#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "ohmgraph/errors.hpp"

namespace ohmgraph {

/// Exact rational scalar. All arithmetic in the library is exact; no value is
/// ever rounded. mpq_class keeps values canonical (reduced, positive denominator).
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline int sign(const Rational& q) { return sgn(q); }

/// "p/q" with q omitted when the value is an integer.
inline std::string to_string(const Rational& q) { return q.get_str(); }

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace detail

/// Accepts "p/q", integers ("-3"), and decimal strings ("0.25" -> 1/4), all exact.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    // strip surrounding whitespace
    const auto b = s.find_first_not_of(" \t\r\n");
    const auto e = s.find_last_not_of(" \t\r\n");
    if (b == std::string::npos) throw ParseError("empty rational literal");
    s = s.substr(b, e - b + 1);

    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = (s[0] == '-');
        s.erase(0, 1);
    }
    if (s.empty()) throw ParseError("bare sign is not a rational literal");

    Rational value;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        const std::string p = s.substr(0, slash);
        const std::string q = s.substr(slash + 1);
        if (!detail::all_digits(p) || !detail::all_digits(q))
            throw ParseError("malformed fraction: '" + std::string(text) + "'");
        mpz_class num(p), den(q);
        if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
        value = Rational(num, den);
        value.canonicalize();
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        const std::string ip = s.substr(0, dot);
        const std::string fp = s.substr(dot + 1);
        if ((!ip.empty() && !detail::all_digits(ip)) || (!fp.empty() && !detail::all_digits(fp)) ||
            (ip.empty() && fp.empty()))
            throw ParseError("malformed decimal: '" + std::string(text) + "'");
        mpz_class num(ip.empty() ? std::string("0") : ip);
        mpz_class den(1);
        for (char c : fp) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
        value = Rational(num, den);
        value.canonicalize();
    } else {
        if (!detail::all_digits(s)) throw ParseError("malformed integer: '" + std::string(text) + "'");
        value = Rational(mpz_class(s));
    }
    return neg ? Rational(-value) : value;
}

}  // namespace ohmgraph
