#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wittkit/poly.hpp"

namespace wittkit {

// Element of the rational-function field Q(g_1, ..., g_r) over the
// generator symbols. Canonical form: fraction reduced by the polynomial
// gcd, denominator monic under the lex monomial order. Two Scalars are
// equal iff their representations are identical; all arithmetic is exact.
// Numerator and denominator are shared immutable values, so copies are
// reference bumps.
class Scalar {
  public:
    Scalar();
    Scalar(int nvars, const Rational& c);
    explicit Scalar(const Poly& p);
    Scalar(const Poly& num, const Poly& den);

    static Scalar generator(int nvars, int index) {
        return Scalar(Poly::variable(nvars, index));
    }

    int nvars() const { return num().nvars(); }
    bool is_zero() const { return num().is_zero(); }
    bool is_one() const;
    bool is_rational() const { return num().is_constant() && den().is_constant(); }
    Rational rational_value() const;  // requires is_rational()

    const Poly& num() const { return *num_; }
    const Poly& den() const { return *den_; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const {
        if (num_ == o.num_ && den_ == o.den_) return true;  // shared representation
        return num() == o.num() && den() == o.den();
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Total order usable as a container key (lexicographic on the
    // canonical representation; no numeric meaning for symbolic values).
    bool operator<(const Scalar& o) const;

    Scalar inverse() const;
    Scalar pow(long e) const;  // negative e requires a nonzero base

    Rational evaluate(const std::vector<Rational>& values) const;

    std::string to_string(const std::vector<std::string>& names) const;
    // True when to_string needs parentheses as a multiplicative prefix.
    bool needs_parens() const;

  private:
    std::shared_ptr<const Poly> num_, den_;
    Scalar(std::shared_ptr<const Poly> num, std::shared_ptr<const Poly> den)
        : num_(std::move(num)), den_(std::move(den)) {}
    static Scalar reduced(Poly num, Poly den);
    static std::shared_ptr<const Poly> shared_one(int nvars);
};

inline Scalar operator*(const Rational& c, const Scalar& s) {
    return Scalar(s.nvars(), c) * s;
}

}  // namespace wittkit
