#include "wittkit/poly.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace wittkit {

int monomial_cmp(const Monomial& a, const Monomial& b) {
    assert(a.size() == b.size());
    for (size_t k = 0; k < a.size(); ++k) {
        if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
    }
    return 0;
}

namespace {
bool term_before(const Poly::Term& a, const Poly::Term& b) {
    return monomial_cmp(a.mono, b.mono) > 0;  // descending
}
}  // namespace

Poly::Poly(int nvars, const Rational& c) : nvars_(nvars) {
    if (c != 0) terms_.push_back({Monomial(nvars, 0), c});
}

Poly Poly::variable(int nvars, int index) {
    assert(index >= 0 && index < nvars);
    Poly p;
    p.nvars_ = nvars;
    Monomial m(nvars, 0);
    m[index] = 1;
    p.terms_.push_back({m, Rational(1)});
    return p;
}

Poly Poly::from_presorted(int nvars, std::vector<Term> terms) {
    Poly p;
    p.nvars_ = nvars;
    p.terms_ = std::move(terms);
#ifndef NDEBUG
    for (size_t i = 0; i + 1 < p.terms_.size(); ++i)
        assert(monomial_cmp(p.terms_[i].mono, p.terms_[i + 1].mono) > 0);
#endif
    return p;
}

Poly Poly::from_terms(int nvars, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_before);
    Poly p;
    p.nvars_ = nvars;
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        if (!p.terms_.empty() && monomial_cmp(p.terms_.back().mono, t.mono) == 0) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (int e : terms_[0].mono)
        if (e != 0) return false;
    return true;
}

Rational Poly::constant_value() const {
    assert(is_constant());
    return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

const Poly::Term& Poly::leading() const {
    assert(!terms_.empty());
    return terms_.front();
}

int Poly::degree_in(int var) const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[var]);
    return d;
}

int Poly::total_degree() const {
    int d = 0;
    for (const auto& t : terms_) {
        int s = 0;
        for (int e : t.mono) s += e;
        d = std::max(d, s);
    }
    return d;
}

bool Poly::uses_var(int var) const {
    for (const auto& t : terms_)
        if (t.mono[var] != 0) return true;
    return false;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    assert(nvars_ == o.nvars_);
    Poly r;
    r.nvars_ = nvars_;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = monomial_cmp(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Rational s = terms_[i].coeff + o.terms_[j].coeff;
            if (s != 0) r.terms_.push_back({terms_[i].mono, s});
            ++i, ++j;
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    assert(nvars_ == o.nvars_);
    if (is_zero() || o.is_zero()) {
        Poly z;
        z.nvars_ = nvars_;
        return z;
    }
    if (terms_.size() * o.terms_.size() <= 16) {
        // Small products: build and merge, cheaper than a map.
        std::vector<Term> prods;
        prods.reserve(terms_.size() * o.terms_.size());
        for (const auto& a : terms_) {
            for (const auto& b : o.terms_) {
                Monomial m(nvars_);
                for (int k = 0; k < nvars_; ++k) m[k] = a.mono[k] + b.mono[k];
                prods.push_back({std::move(m), a.coeff * b.coeff});
            }
        }
        return from_terms(nvars_, std::move(prods));
    }
    std::map<Monomial, Rational, std::greater<Monomial>> acc;
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Monomial m(nvars_);
            for (int k = 0; k < nvars_; ++k) m[k] = a.mono[k] + b.mono[k];
            Rational prod = a.coeff * b.coeff;
            auto [it, inserted] = acc.emplace(std::move(m), std::move(prod));
            if (!inserted) it->second += a.coeff * b.coeff;
        }
    }
    Poly r;
    r.nvars_ = nvars_;
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.push_back({m, c});
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    if (c == 0) {
        Poly z;
        z.nvars_ = nvars_;
        return z;
    }
    Poly p = *this;
    for (auto& t : p.terms_) t.coeff *= c;
    return p;
}

bool Poly::operator==(const Poly& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coeff != o.terms_[i].coeff) return false;
        if (monomial_cmp(terms_[i].mono, o.terms_[i].mono) != 0) return false;
    }
    return true;
}

Poly Poly::divided_by(const Poly& o) const {
    if (o.is_zero()) throw DivisionByZero();
    Poly rem = *this;
    std::vector<Term> qterms;
    while (!rem.is_zero()) {
        const Term& lr = rem.leading();
        const Term& lo = o.leading();
        Monomial q(nvars_);
        for (int k = 0; k < nvars_; ++k) {
            q[k] = lr.mono[k] - lo.mono[k];
            if (q[k] < 0) throw Error("inexact polynomial division");
        }
        Term qt{q, lr.coeff / lo.coeff};
        Poly qp;
        qp.nvars_ = nvars_;
        qp.terms_.push_back(qt);
        rem = rem - qp * o;
        qterms.push_back(std::move(qt));
    }
    return from_terms(nvars_, std::move(qterms));
}

Rational Poly::evaluate(const std::vector<Rational>& values) const {
    assert((int)values.size() == nvars_);
    Rational total(0);
    for (const auto& t : terms_) {
        Rational v = t.coeff;
        for (int k = 0; k < nvars_; ++k) {
            for (int e = 0; e < t.mono[k]; ++e) v *= values[k];
            if (t.mono[k] < 0) {
                Rational d(1);
                for (int e = 0; e < -t.mono[k]; ++e) d *= values[k];
                if (d == 0) throw DivisionByZero();
                v /= d;
            }
        }
        total += v;
    }
    return total;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool has_vars = false;
        for (int e : t.mono) has_vars = has_vars || e != 0;
        if (!has_vars) {
            os << rat_to_string(c);
        } else {
            bool printed = false;
            if (c != 1) {
                os << rat_to_string(c);
                printed = true;
            }
            for (int k = 0; k < nvars_; ++k) {
                if (t.mono[k] == 0) continue;
                if (printed) os << "*";
                os << names[k];
                if (t.mono[k] != 1) os << "^" << t.mono[k];
                printed = true;
            }
        }
    }
    return os.str();
}

namespace {

// Univariate view in variable `var` with Poly coefficients.
using UniPoly = std::map<int, Poly>;

UniPoly to_uni(const Poly& p, int var) {
    UniPoly u;
    for (const auto& t : p.terms()) {
        Monomial rest = t.mono;
        int d = rest[var];
        rest[var] = 0;
        Poly piece = Poly::from_terms(p.nvars(), {{rest, t.coeff}});
        auto [it, inserted] = u.emplace(d, piece);
        if (!inserted) it->second += piece;
    }
    for (auto it = u.begin(); it != u.end();) {
        if (it->second.is_zero())
            it = u.erase(it);
        else
            ++it;
    }
    return u;
}

Poly from_uni(const UniPoly& u, int var, int nvars) {
    Poly r(nvars, Rational(0));
    for (const auto& [d, coeff] : u) {
        Poly xd(nvars, Rational(1));
        if (d > 0) {
            Monomial m(nvars, 0);
            m[var] = d;
            xd = Poly::from_terms(nvars, {{m, Rational(1)}});
        }
        r += coeff * xd;
    }
    return r;
}

int uni_deg(const UniPoly& u) { return u.empty() ? -1 : u.rbegin()->first; }

Poly uni_lc(const UniPoly& u) { return u.rbegin()->second; }

UniPoly uni_mul_poly(const UniPoly& u, const Poly& c) {
    UniPoly r;
    for (const auto& [d, p] : u) {
        Poly q = p * c;
        if (!q.is_zero()) r.emplace(d, q);
    }
    return r;
}

UniPoly uni_sub(const UniPoly& a, const UniPoly& b) {
    UniPoly r = a;
    for (const auto& [d, p] : b) {
        auto it = r.find(d);
        if (it == r.end()) {
            r.emplace(d, -p);
        } else {
            it->second -= p;
            if (it->second.is_zero()) r.erase(it);
        }
    }
    return r;
}

UniPoly uni_shift(const UniPoly& u, int k) {
    UniPoly r;
    for (const auto& [d, p] : u) r.emplace(d + k, p);
    return r;
}

// Pseudo-remainder of a by b in the main variable: lc(b)^(da-db+1) * a mod b.
UniPoly pseudo_rem(UniPoly a, const UniPoly& b) {
    int db = uni_deg(b);
    Poly lcb = uni_lc(b);
    while (uni_deg(a) >= db) {
        int da = uni_deg(a);
        Poly lca = uni_lc(a);
        // a := lcb * a - lca * x^(da-db) * b
        a = uni_sub(uni_mul_poly(a, lcb), uni_shift(uni_mul_poly(b, lca), da - db));
        if (uni_deg(a) == da) throw Error("pseudo-division failed to reduce degree");
    }
    return a;
}

Poly make_monic(const Poly& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.leading().coeff);
}

Poly content_of_uni(const UniPoly& u) {
    Poly c;
    bool started = false;
    for (const auto& [d, p] : u) {
        (void)d;
        c = started ? poly_gcd(c, p) : p;
        started = true;
        if (started && c.is_constant() && !c.is_zero()) break;
    }
    if (!started) return c;
    return make_monic(c);
}

UniPoly uni_div_exact(const UniPoly& u, const Poly& c) {
    UniPoly r;
    for (const auto& [d, p] : u) r.emplace(d, p.divided_by(c));
    return r;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    if (a.is_constant() || b.is_constant()) return Poly(a.nvars(), Rational(1));

    // Main variable: the highest-index variable appearing in either operand.
    int var = -1;
    for (int k = a.nvars() - 1; k >= 0; --k) {
        if (a.uses_var(k) || b.uses_var(k)) {
            var = k;
            break;
        }
    }
    assert(var >= 0);
    if (!a.uses_var(var) || !b.uses_var(var)) {
        // One operand is free of the main variable: gcd divides that
        // operand, hence reduces to a gcd with the other's content.
        const Poly& flat = a.uses_var(var) ? b : a;
        const Poly& tall = a.uses_var(var) ? a : b;
        return poly_gcd(flat, content_of_uni(to_uni(tall, var)));
    }

    UniPoly ua = to_uni(a, var), ub = to_uni(b, var);
    Poly ca = content_of_uni(ua), cb = content_of_uni(ub);
    ua = uni_div_exact(ua, ca);
    ub = uni_div_exact(ub, cb);

    // Primitive PRS.
    if (uni_deg(ua) < uni_deg(ub)) std::swap(ua, ub);
    while (!ub.empty()) {
        UniPoly r = pseudo_rem(ua, ub);
        ua = std::move(ub);
        if (r.empty()) {
            ub.clear();
        } else {
            Poly cr = content_of_uni(r);
            ub = uni_div_exact(r, cr);
        }
    }

    // ua is primitive in the main variable by construction.
    Poly result = from_uni(ua, var, a.nvars());
    return make_monic(result * poly_gcd(ca, cb));
}

}  // namespace wittkit
