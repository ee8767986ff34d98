#pragma once

#include <gmpxx.h>

#include <string>

#include "wittkit/errors.hpp"

namespace wittkit {

// Arbitrary-precision rational. GMP keeps every fraction canonical
// (reduced, positive denominator), which the Scalar layer relies on.
using Rational = mpq_class;

inline Rational rat(long n, long d = 1) {
    if (d == 0) throw DivisionByZero();
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline Rational rat_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw Error("malformed rational: " + s);
    if (q.get_den() == 0) throw DivisionByZero();
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace wittkit
