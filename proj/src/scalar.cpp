#include "wittkit/scalar.hpp"

#include <array>
#include <cassert>

#include "wittkit/errors.hpp"

namespace wittkit {

std::shared_ptr<const Poly> Scalar::shared_one(int nvars) {
    // Per-thread constants: copies bump a thread-local refcount only, so
    // parallel sweeps do not contend on a shared cache line.
    static thread_local std::array<std::shared_ptr<const Poly>, 8> ones;
    if (nvars < 8) {
        if (!ones[nvars]) ones[nvars] = std::make_shared<Poly>(nvars, Rational(1));
        return ones[nvars];
    }
    return std::make_shared<Poly>(nvars, Rational(1));
}

Scalar::Scalar() : Scalar(0, Rational(0)) {}

Scalar::Scalar(int nvars, const Rational& c)
    : num_(std::make_shared<Poly>(nvars, c)), den_(shared_one(nvars)) {}

Scalar::Scalar(const Poly& p)
    : num_(std::make_shared<Poly>(p)), den_(shared_one(p.nvars())) {}

Scalar::Scalar(const Poly& num, const Poly& den) : num_(), den_() {
    if (den.is_zero()) throw DivisionByZero();
    *this = reduced(num, den);
}

// Canonical form: gcd-reduced, monic denominator.
Scalar Scalar::reduced(Poly num, Poly den) {
    assert(!den.is_zero());
    if (num.is_zero())
        return Scalar(std::make_shared<Poly>(std::move(num)), shared_one(den.nvars()));
    if (den.is_constant()) {
        Rational lead = den.constant_value();
        if (lead != 1) num = num * (Rational(1) / lead);
        return Scalar(std::make_shared<Poly>(std::move(num)), shared_one(den.nvars()));
    }
    Poly g = poly_gcd(num, den);
    if (!g.is_constant()) {
        num = num.divided_by(g);
        den = den.divided_by(g);
    }
    Rational lead = den.leading().coeff;
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num = num * inv;
        den = den * inv;
    }
    if (den.is_constant())
        return Scalar(std::make_shared<Poly>(std::move(num)), shared_one(den.nvars()));
    return Scalar(std::make_shared<Poly>(std::move(num)),
                  std::make_shared<Poly>(std::move(den)));
}

bool Scalar::is_one() const {
    return den().is_constant() && num().is_constant() && !num().is_zero() &&
           num().constant_value() == 1;
}

Rational Scalar::rational_value() const {
    assert(is_rational());
    if (num().is_zero()) return Rational(0);
    return num().constant_value() / den().constant_value();
}

Scalar Scalar::operator-() const {
    return Scalar(std::make_shared<Poly>(-num()), den_);
}

Scalar Scalar::operator+(const Scalar& o) const {
    assert(nvars() == o.nvars());
    // Monic constant denominators are exactly 1: no reduction needed.
    if (den().is_constant() && o.den().is_constant())
        return Scalar(std::make_shared<Poly>(num() + o.num()), den_);
    return reduced(num() * o.den() + o.num() * den(), den() * o.den());
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    assert(nvars() == o.nvars());
    if (den().is_constant() && o.den().is_constant())
        return Scalar(std::make_shared<Poly>(num() * o.num()), den_);
    return reduced(num() * o.num(), den() * o.den());
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return reduced(num() * o.den(), den() * o.num());
}

bool Scalar::operator<(const Scalar& o) const {
    auto poly_cmp = [](const Poly& a, const Poly& b) -> int {
        if (a.terms().size() != b.terms().size())
            return a.terms().size() < b.terms().size() ? -1 : 1;
        for (size_t i = 0; i < a.terms().size(); ++i) {
            int c = monomial_cmp(a.terms()[i].mono, b.terms()[i].mono);
            if (c != 0) return c;
            if (a.terms()[i].coeff != b.terms()[i].coeff)
                return a.terms()[i].coeff < b.terms()[i].coeff ? -1 : 1;
        }
        return 0;
    };
    int c = poly_cmp(num(), o.num());
    if (c != 0) return c < 0;
    return poly_cmp(den(), o.den()) < 0;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return reduced(den(), num());
}

Scalar Scalar::pow(long e) const {
    if (e == 0) return Scalar(nvars(), Rational(1));
    if (is_zero()) {
        if (e < 0) throw DivisionByZero();
        return *this;
    }
    Scalar base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? -(unsigned long)e : (unsigned long)e;
    Scalar acc(nvars(), Rational(1));
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

Rational Scalar::evaluate(const std::vector<Rational>& values) const {
    Rational d = den().evaluate(values);
    if (d == 0) throw DivisionByZero();
    return num().evaluate(values) / d;
}

std::string Scalar::to_string(const std::vector<std::string>& names) const {
    if (den().is_constant()) return num().to_string(names);
    std::string n = num().to_string(names);
    std::string d = den().to_string(names);
    if (num().terms().size() > 1 || (num().terms().size() == 1 && num().leading().coeff < 0))
        n = "(" + n + ")";
    d = "(" + d + ")";
    return n + "/" + d;
}

bool Scalar::needs_parens() const {
    // The denominator is monic, so a constant denominator is 1 and plain
    // rationals like 5/6 live entirely in the numerator coefficient.
    return !den().is_constant() || num().terms().size() > 1;
}

}  // namespace wittkit
