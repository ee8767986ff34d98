#pragma once

#include <string>
#include <vector>

#include "wittkit/rational.hpp"

namespace wittkit {

// Exponent vector; one entry per generator symbol.
using Monomial = std::vector<int>;

// Lexicographic order on exponent vectors of equal length.
int monomial_cmp(const Monomial& a, const Monomial& b);

// Sparse multivariate polynomial over Q, terms sorted descending under the
// fixed lex monomial order. The representation is canonical: no zero
// coefficients, no duplicate monomials.
class Poly {
  public:
    struct Term {
        Monomial mono;
        Rational coeff;
    };

    Poly() = default;
    Poly(int nvars, const Rational& c);             // constant
    static Poly variable(int nvars, int index);     // the generator x_index
    static Poly from_terms(int nvars, std::vector<Term> terms);
    // Terms already strictly descending with nonzero coefficients.
    static Poly from_presorted(int nvars, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term value (the whole value when is_constant()).
    Rational constant_value() const;

    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const;
    int degree_in(int var) const;
    int total_degree() const;
    bool uses_var(int var) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const;

    // Exact quotient; throws Error when o does not divide *this.
    Poly divided_by(const Poly& o) const;

    // Substitute rational values for all variables.
    Rational evaluate(const std::vector<Rational>& values) const;

    // Pretty form such as "2*g1^2*g2 - g2 + 1/2" using the given names.
    std::string to_string(const std::vector<std::string>& names) const;

  private:
    int nvars_ = 0;
    std::vector<Term> terms_;

    friend Poly poly_gcd(const Poly& a, const Poly& b);
};

// Monic gcd under the lex order; gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace wittkit
