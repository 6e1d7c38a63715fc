#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace projinv {

/// Exact arbitrary-precision rational, the backbone of every exact check.
using Rational = mpq_class;

/// Builds a canonical rational from a numerator/denominator pair.
inline Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "num", "num/den" or a plain decimal integer string.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    mpq_class r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("parse_rational: bad literal '" + s + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }
inline double to_double(double x) { return x; }

template <class S>
struct scalar_traits {
    static constexpr bool is_exact = false;
};

template <>
struct scalar_traits<Rational> {
    static constexpr bool is_exact = true;
};

}  // namespace projinv
