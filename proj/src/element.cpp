#include "wittkit/element.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "wittkit/errors.hpp"

namespace wittkit {

std::string BasisIndex::to_string() const {
    std::ostringstream os;
    os << "L(";
    for (size_t k = 0; k < degree.n.size(); ++k) {
        if (k) os << ",";
        os << degree.n[k];
    }
    os << ";" << level << ")";
    return os.str();
}

int index_cmp(const GammaConfig& config, const BasisIndex& a, const BasisIndex& b) {
    int c = config.compare(a.degree, b.degree);
    if (c != 0) return c;
    if (a.level != b.level) return a.level < b.level ? -1 : 1;
    return 0;
}

BracketRule BracketRule::subquotient(int m, int n) {
    if (m < 0 || n < m) throw Error("subquotient requires 0 <= m <= n");
    return {BracketKind::Subquotient, m, n};
}

std::string BracketRule::name() const {
    switch (kind) {
        case BracketKind::WGamma: return "wgamma";
        case BracketKind::WGammaHat: return "wgammahat";
        case BracketKind::WittType: return "witt";
        case BracketKind::Subquotient:
            return "subquotient(" + std::to_string(m) + "," + std::to_string(n) + ")";
    }
    return "?";
}

BracketRule BracketRule::from_name(const std::string& name) {
    if (name == "wgamma") return wgamma();
    if (name == "wgammahat" || name == "hat") return wgamma_hat();
    if (name == "witt" || name == "witttype") return witt_type();
    if (name.rfind("subquotient(", 0) == 0 && name.back() == ')') {
        std::string body = name.substr(12, name.size() - 13);
        auto comma = body.find(',');
        if (comma != std::string::npos) {
            return subquotient(std::stoi(body.substr(0, comma)),
                               std::stoi(body.substr(comma + 1)));
        }
    }
    throw Error("unknown bracket rule: " + name);
}

Element Element::basis(const GammaConfig& config, GroupElement degree, int level) {
    if (level < 0) throw Error("basis level must be nonnegative");
    Element e;
    e.terms_.emplace(BasisIndex{std::move(degree), level}, config.one());
    return e;
}

Element Element::central(const GammaConfig& config) {
    Element e;
    e.central_ = config.one();
    return e;
}

Scalar Element::central_coeff(const GammaConfig& config) const {
    return central_ ? *central_ : config.zero();
}

Scalar Element::coeff(const GammaConfig& config, const BasisIndex& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? config.zero() : it->second;
}

void Element::set_term(const BasisIndex& idx, Scalar c) {
    if (c.is_zero())
        terms_.erase(idx);
    else
        terms_.insert_or_assign(idx, std::move(c));
}

void Element::set_central(Scalar c) {
    if (c.is_zero())
        central_.reset();
    else
        central_ = std::move(c);
}

void Element::add_term(const BasisIndex& idx, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
        terms_.emplace(idx, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Element::add_central(const Scalar& c) {
    if (c.is_zero()) return;
    if (!central_) {
        central_ = c;
    } else {
        *central_ += c;
        if (central_->is_zero()) central_.reset();
    }
}

Element Element::operator+(const Element& o) const {
    Element r = *this;
    for (const auto& [idx, c] : o.terms_) r.add_term(idx, c);
    if (o.central_) r.add_central(*o.central_);
    return r;
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::operator-() const {
    Element r = *this;
    for (auto& [idx, c] : r.terms_) c = -c;
    if (r.central_) *r.central_ = -*r.central_;
    return r;
}

Element Element::scaled(const Scalar& c) const {
    if (c.is_zero()) return Element();
    Element r = *this;
    for (auto& [idx, v] : r.terms_) v *= c;
    if (r.central_) *r.central_ *= c;
    return r;
}

Element Element::without_central() const {
    Element r = *this;
    r.central_.reset();
    return r;
}

std::string Element::to_string(const GammaConfig& config) const {
    if (is_zero()) return "0";
    std::vector<const std::pair<const BasisIndex, Scalar>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [&](const auto* a, const auto* b) {
        return index_cmp(config, a->first, b->first) < 0;
    });
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Scalar& coeff, const std::string& atom) {
        Scalar c = coeff;
        bool neg = !c.num().is_zero() && c.num().leading().coeff < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (!c.is_one()) {
            std::string s = c.to_string(config.generator_names());
            if (c.needs_parens()) s = "(" + s + ")";
            os << s << "*";
        }
        os << atom;
    };
    for (const auto* t : order) {
        std::ostringstream atom;
        atom << "L(";
        const GroupElement& d = t->first.degree;
        if (config.rank() == 1) {
            atom << d.n[0];
        } else if (d.is_zero()) {
            atom << "0";
        } else {
            bool firstc = true;
            for (int k = 0; k < config.rank(); ++k) {
                int v = d.n[k];
                if (v == 0) continue;
                if (!firstc) atom << (v > 0 ? "+" : "");
                if (v == 1) {
                    ;
                } else if (v == -1) {
                    atom << "-";
                } else {
                    atom << v << "*";
                }
                atom << config.generator_names()[k];
                firstc = false;
            }
        }
        atom << "," << t->first.level << ")";
        emit(t->second, atom.str());
    }
    if (central_) emit(*central_, "C");
    return os.str();
}

namespace {

// Bracket of two basis vectors, accumulated into out.
void basis_bracket(const GammaConfig& config, const BasisIndex& a, const Scalar& ca,
                   const BasisIndex& b, const Scalar& cb, const BracketRule& rule,
                   Element& out) {
    const GroupElement sum = a.degree + b.degree;
    const Scalar coeff = ca * cb;
    switch (rule.kind) {
        case BracketKind::WGamma:
        case BracketKind::WGammaHat:
        case BracketKind::Subquotient: {
            // (beta-alpha) L(a+b, i+j) + (j-i) L(a+b, i+j+1)
            Scalar c1 = config.embed(b.degree - a.degree);
            int lvl = a.level + b.level;
            bool drop_high = rule.kind == BracketKind::Subquotient;
            if (!c1.is_zero() && !(drop_high && lvl > rule.n))
                out.add_term({sum, lvl}, coeff * c1);
            int c2 = b.level - a.level;
            if (c2 != 0 && !(drop_high && lvl + 1 > rule.n))
                out.add_term({sum, lvl + 1}, coeff * config.scalar(c2));
            if (rule.kind == BracketKind::WGammaHat && sum.is_zero() && lvl == 0) {
                Scalar av = config.embed(a.degree);
                Scalar central = (av * av * av - av) / config.scalar(12);
                out.add_central(coeff * central);
            }
            break;
        }
        case BracketKind::WittType: {
            // (alpha-beta) L(a+b, i+j) + (j-i) L(a+b, i+j-1)
            Scalar c1 = config.embed(a.degree - b.degree);
            int lvl = a.level + b.level;
            if (!c1.is_zero()) out.add_term({sum, lvl}, coeff * c1);
            int c2 = b.level - a.level;
            if (c2 != 0) {
                assert(lvl >= 1);
                out.add_term({sum, lvl - 1}, coeff * config.scalar(c2));
            }
            break;
        }
    }
}

}  // namespace

Element bracket(const GammaConfig& config, const Element& x, const Element& y,
                const BracketRule& rule) {
    Element out;
    bracket_add(config, x, y, rule, out);
    return out;
}

void bracket_add(const GammaConfig& config, const Element& x, const Element& y,
                 const BracketRule& rule, Element& out) {
    if (!rule.allows_central() && (x.has_central() || y.has_central()))
        throw CentralTermPresent();
    if (rule.kind == BracketKind::Subquotient) {
        for (const Element* e : {&x, &y}) {
            for (const auto& [idx, c] : e->terms()) {
                if (idx.level < rule.m || idx.level > rule.n)
                    throw LevelOutOfRange("level " + std::to_string(idx.level) +
                                          " outside subquotient range [" +
                                          std::to_string(rule.m) + "," + std::to_string(rule.n) +
                                          "]");
            }
        }
    }
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) basis_bracket(config, a, ca, b, cb, rule, out);
    // C is central: pairs involving it contribute nothing.
}

Element jacobi_residual(const GammaConfig& config, const Element& x, const Element& y,
                        const Element& z, const BracketRule& rule) {
    Element r;
    bracket_add(config, x, bracket(config, y, z, rule), rule, r);
    bracket_add(config, y, bracket(config, z, x, rule), rule, r);
    bracket_add(config, z, bracket(config, x, y, rule), rule, r);
    return r;
}

std::vector<GroupElement> support(const GammaConfig& config, const Element& x) {
    std::vector<GroupElement> degs;
    for (const auto& [idx, c] : x.terms()) {
        if (degs.empty() || !(degs.back() == idx.degree)) degs.push_back(idx.degree);
    }
    std::sort(degs.begin(), degs.end(), [&](const GroupElement& a, const GroupElement& b) {
        return config.compare(a, b) < 0;
    });
    return degs;
}

int depth(const Element& x) {
    int d = 0;
    const GroupElement* prev = nullptr;
    for (const auto& [idx, c] : x.terms()) {
        if (!prev || !(*prev == idx.degree)) ++d;
        prev = &idx.degree;
    }
    return d;
}

Element homogeneous_component(const Element& x, const GroupElement& degree) {
    Element r;
    for (const auto& [idx, c] : x.terms())
        if (idx.degree == degree) r.set_term(idx, c);
    return r;
}

int component_length(const Element& x, const GroupElement& degree) {
    auto f = first_term(x, degree);
    auto l = last_term(x, degree);
    return l.first.level - f.first.level + 1;
}

std::pair<BasisIndex, Scalar> first_term(const Element& x, const GroupElement& degree) {
    const std::pair<const BasisIndex, Scalar>* best = nullptr;
    for (const auto& t : x.terms()) {
        if (!(t.first.degree == degree)) continue;
        if (!best || t.first.level < best->first.level) best = &t;
    }
    if (!best) throw EmptyComponent();
    return {best->first, best->second};
}

std::pair<BasisIndex, Scalar> last_term(const Element& x, const GroupElement& degree) {
    const std::pair<const BasisIndex, Scalar>* best = nullptr;
    for (const auto& t : x.terms()) {
        if (!(t.first.degree == degree)) continue;
        if (!best || t.first.level > best->first.level) best = &t;
    }
    if (!best) throw EmptyComponent();
    return {best->first, best->second};
}

std::pair<BasisIndex, Scalar> max_term(const GammaConfig& config, const Element& x) {
    const std::pair<const BasisIndex, Scalar>* best = nullptr;
    for (const auto& t : x.terms()) {
        if (!best || index_cmp(config, best->first, t.first) < 0) best = &t;
    }
    if (!best) throw ZeroElement();
    return {best->first, best->second};
}

std::vector<BasisIndex> window_basis(const GammaConfig& config, const Window& window) {
    std::vector<BasisIndex> out;
    for (const auto& d : window.degrees(config))
        for (int i = 0; i <= window.level_bound; ++i) out.push_back({d, i});
    return out;
}

}  // namespace wittkit
