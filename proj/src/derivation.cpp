#include "wittkit/derivation.hpp"

#include <algorithm>
#include <cassert>

#include "wittkit/errors.hpp"

namespace wittkit {

namespace {
const BracketRule kW = BracketRule::wgamma();
}

AdditiveMap::AdditiveMap(const GammaConfig& config, std::vector<Scalar> values)
    : values_(std::move(values)) {
    if ((int)values_.size() != config.rank())
        throw Error("additive map needs one value per generator");
}

Scalar AdditiveMap::apply(const GammaConfig& config, const GroupElement& alpha) const {
    Scalar out = config.zero();
    for (size_t k = 0; k < values_.size(); ++k) {
        if (alpha.n[k] == 0) continue;
        out += values_[k] * config.scalar(alpha.n[k]);
    }
    return out;
}

bool AdditiveMap::is_zero() const {
    for (const auto& v : values_)
        if (!v.is_zero()) return false;
    return true;
}

AdditiveMap AdditiveMap::plus(const AdditiveMap& o) const {
    AdditiveMap r = *this;
    for (size_t k = 0; k < values_.size(); ++k) r.values_[k] += o.values_[k];
    return r;
}

AdditiveMap AdditiveMap::scaled(const Scalar& c) const {
    AdditiveMap r = *this;
    for (auto& v : r.values_) v *= c;
    return r;
}

AdditiveMap AdditiveMap::embedding(const GammaConfig& config) {
    AdditiveMap m(config);
    for (int k = 0; k < config.rank(); ++k) m.set_value(k, config.embed(config.unit_vector(k)));
    return m;
}

Element apply_D_phi(const GammaConfig& config, const AdditiveMap& phi, const Element& x) {
    if (x.has_central()) throw CentralTermPresent();
    Element out;
    for (const auto& [idx, c] : x.terms())
        out.add_term(idx, c * phi.apply(config, idx.degree));
    return out;
}

CompletionElement apply_D_phi(const GammaConfig& config, const AdditiveMap& phi,
                              const CompletionElement& x) {
    // Degree-preserving, so validity bookkeeping is untouched.
    CompletionElement out;
    for (const auto& [d, rec] : x.records()) {
        DegreeSeries s = rec;
        Scalar f = phi.apply(config, d);
        for (auto& c : s.coeffs) c *= f;
        out.set_record(d, std::move(s));
    }
    return out;
}

CompletionElement apply_ad(const GammaConfig& config, const CompletionElement& y,
                           const Element& x) {
    return completion_bracket(config, y, CompletionElement::from_element(config, x));
}

DerivationSpec DerivationSpec::symbolic(CompletionElement y, AdditiveMap phi) {
    DerivationSpec d;
    d.kind_ = Kind::Symbolic;
    d.y_ = std::move(y);
    d.phi_ = std::move(phi);
    return d;
}

DerivationSpec DerivationSpec::table(
    std::map<std::pair<GroupElement, int>, CompletionElement> images) {
    DerivationSpec d;
    d.kind_ = Kind::Table;
    for (const auto& [key, img] : images)
        if (key.second != 0 && key.second != 1)
            throw Error("table images are given on levels 0 and 1 only");
    d.images_ = std::move(images);
    return d;
}

CompletionElement DerivationSpec::image(const GammaConfig& config, const BasisIndex& idx) const {
    if (kind_ == Kind::Symbolic) {
        Element x = Element::basis(config, idx.degree, idx.level);
        CompletionElement out = apply_ad(config, y_, x);
        Scalar f = phi_->apply(config, idx.degree);
        if (!f.is_zero())
            out = out.plus(config, CompletionElement::from_element(config, x.scaled(f)));
        return out;
    }
    if (idx.level <= 1) {
        auto it = images_.find({idx.degree, idx.level});
        if (it == images_.end()) throw MissingImage("no image for " + idx.to_string());
        return it->second;
    }
    auto cached = extension_cache_.find(idx);
    if (cached != extension_cache_.end()) return cached->second;
    // D L(a,i+1) = (1/i) ([D L(0,0), L(a,i)] + [L(0,0), D L(a,i)]
    //                     - embed(a) D L(a,i)),  i >= 1
    int i = idx.level - 1;
    BasisIndex below{idx.degree, i};
    CompletionElement d_below = image(config, below);
    CompletionElement d_l00 = image(config, BasisIndex{config.zero_degree(), 0});
    CompletionElement lhs = completion_bracket(
        config, d_l00,
        CompletionElement::from_element(config, Element::basis(config, idx.degree, i)));
    lhs = lhs.plus(config, completion_bracket(
                               config,
                               CompletionElement::from_element(
                                   config, Element::basis(config, config.zero_degree(), 0)),
                               d_below));
    lhs = lhs.minus(config, d_below.scaled(config.embed(idx.degree)));
    CompletionElement out = lhs.scaled(config.scalar(rat(1, i)));
    extension_cache_.emplace(idx, out);
    return out;
}

CompletionElement DerivationSpec::apply(const GammaConfig& config, const Element& x) const {
    if (x.has_central()) throw CentralTermPresent();
    CompletionElement out;
    for (const auto& [idx, c] : x.terms())
        out = out.plus(config, image(config, idx).scaled(c));
    return out;
}

LeibnizReport leibniz_check(const GammaConfig& config, const DerivationSpec& D,
                            const Window& window) {
    LeibnizReport report;
    std::vector<BasisIndex> gens;
    for (const auto& d : window.degrees(config))
        for (int i = 0; i <= 1; ++i) gens.push_back({d, i});
    for (size_t a = 0; a < gens.size(); ++a) {
        for (size_t b = a + 1; b < gens.size(); ++b) {
            Element ea = Element::basis(config, gens[a].degree, gens[a].level);
            Element eb = Element::basis(config, gens[b].degree, gens[b].level);
            Element br = bracket(config, ea, eb, kW);
            CompletionElement lhs = D.apply(config, br);
            CompletionElement rhs = completion_bracket(
                config, D.image(config, gens[a]), CompletionElement::from_element(config, eb));
            rhs = rhs.plus(config, completion_bracket(
                                       config, CompletionElement::from_element(config, ea),
                                       D.image(config, gens[b])));
            CompletionElement residual = lhs.minus(config, rhs);
            ++report.pairs_checked;
            Element known = residual.known_part();
            if (!known.is_zero()) {
                ++report.failing_pairs;
                report.failures.push_back({gens[a], gens[b]});
                if (known.term_count() > report.max_residual.term_count())
                    report.max_residual = known;
            }
        }
    }
    return report;
}

namespace {

// The inductive b-coefficients: from the series of D(L(0,0)) at one
// degree to the series of y1 there, detecting exact tails.
DegreeSeries build_b_series(const GammaConfig& config, const GroupElement& alpha,
                            const DegreeSeries& a, long order) {
    DegreeSeries b;
    if (!alpha.is_zero()) {
        Scalar ea = config.embed(alpha);
        long cap = a.exact ? (long)a.coeffs.size() : std::min<long>(order, a.valid_order);
        std::vector<Scalar> out;
        Scalar prev = config.zero();
        for (long j = 0; j <= cap; ++j) {
            Scalar aj = j < (long)a.coeffs.size() ? a.coeffs[j] : config.zero();
            Scalar bj = (-aj - prev * config.scalar(j - 1)) / ea;
            out.push_back(bj);
            prev = bj;
        }
        b.coeffs = std::move(out);
        // With exact data the tail recursion b_j = -(j-1) b_{j-1} / a is
        // zero forever once it hits zero past the data.
        if (a.exact && (b.coeffs.empty() || b.coeffs.back().is_zero())) {
            b.exact = true;
        } else {
            b.exact = false;
            b.valid_order = cap;
        }
    } else {
        // b_{0,0} = 0; b_{0,j} = -(1/j) a_{0,j+1}
        long cap = a.exact ? std::max<long>((long)a.coeffs.size() - 1, 0)
                           : std::min<long>(order, a.valid_order - 1);
        if (cap < 0) throw TruncationTooShallow("degree-0 image needs one more order");
        std::vector<Scalar> out;
        out.push_back(config.zero());
        for (long j = 1; j <= cap; ++j) {
            Scalar aj1 = j + 1 < (long)a.coeffs.size() ? a.coeffs[j + 1] : config.zero();
            out.push_back(-aj1 * config.scalar(rat(1, j)));
        }
        b.coeffs = std::move(out);
        b.exact = a.exact;
        if (!b.exact) b.valid_order = cap;
    }
    return b;
}

}  // namespace

DecompositionResult decompose_derivation(const GammaConfig& config, const DerivationSpec& D,
                                         const Window& window, long order) {
    if (order < 2) throw TruncationTooShallow("order must be at least 2");
    LeibnizReport leibniz = leibniz_check(config, D, window);
    if (!leibniz.ok())
        throw NotADerivation("Leibniz residual is nonzero on " +
                             std::to_string(leibniz.failing_pairs) + " generator pairs");

    DecompositionResult result(config);
    BasisIndex l00{config.zero_degree(), 0};
    BasisIndex l01{config.zero_degree(), 1};

    // Step 1: y1 from the inductive coefficients of D(L(0,0)).
    CompletionElement d_l00 = D.image(config, l00);
    for (const auto& [alpha, rec] : d_l00.records()) {
        if (!rec.exact && rec.valid_order < order)
            throw TruncationTooShallow("D(L(0,0)) valid to order " +
                                       std::to_string(rec.valid_order) + " < " +
                                       std::to_string(order));
    }
    CompletionElement y1;
    for (const auto& [alpha, rec] : d_l00.records()) {
        DegreeSeries b = build_b_series(config, alpha, rec, order);
        if (!(b.exact && b.known_zero())) y1.set_record(alpha, std::move(b));
    }

    // Step 2: D' = D - ad_{y1} must send L(0,0) to a_0 L(0,0) + a_1 L(0,1),
    // and those coefficients must vanish for an honest derivation.
    auto d_prime = [&](const BasisIndex& idx) {
        Element x = Element::basis(config, idx.degree, idx.level);
        return D.image(config, idx).minus(config, apply_ad(config, y1, x));
    };
    {
        Element known = d_prime(l00).known_part();
        for (const auto& [idx, c] : known.terms())
            if (!idx.degree.is_zero() || idx.level > 1)
                throw NotADerivation("D - ad_y1 does not fix L(0,0) up to levels {0,1}");
        if (!known.is_zero())
            throw NotADerivation("claim-1 coefficients of D(L(0,0)) do not vanish");
    }

    // Step 3: eigenvalues on L(a,0) assemble the additive map.
    std::map<GroupElement, Scalar> b_of;
    auto degrees = window.degrees(config);
    for (const auto& alpha : degrees) {
        Element known = d_prime(BasisIndex{alpha, 0}).known_part();
        Scalar ba = config.zero();
        for (const auto& [idx, c] : known.terms()) {
            if (idx.degree == alpha && idx.level == 0)
                ba = c;
            else
                throw NotADerivation("D'(L(a,0)) is not a multiple of L(a,0) at a = " +
                                     alpha.to_string());
        }
        b_of[alpha] = ba;
    }
    GroupElement zero = config.zero_degree();
    if (!b_of[zero].is_zero()) throw NotADerivation("b_0 must vanish");
    AdditiveMap phi(config);
    for (int k = 0; k < config.rank(); ++k) {
        auto it = b_of.find(config.unit_vector(k));
        if (it == b_of.end()) throw Error("window must contain the unit vectors");
        phi.set_value(k, it->second);
    }
    for (const auto& alpha : degrees)
        if (!(b_of[alpha] == phi.apply(config, alpha)))
            throw InconsistentAdditivity("b_a is not additive at a = " + alpha.to_string());

    // Step 4: the scalar c from the L(0,2)-coefficient of D''(L(0,1)).
    // phi(0) = 0, so D'' and D' agree on L(0,1).
    auto c_at = d_prime(l01).coeff(config, zero, 2);
    if (!c_at) throw TruncationTooShallow("D(L(0,1)) is not known to order 2 at degree 0");
    result.c = *c_at;

    // Step 5: final replacement; signs fixed by the residual contract.
    result.y = y1;
    if (!result.c.is_zero())
        result.y = result.y.plus(
            config, CompletionElement::from_element(
                        config, Element::basis(config, zero, 0).scaled(result.c)));
    result.phi = phi.plus(AdditiveMap::embedding(config).scaled(-result.c));

    // Step 6: residual on every window generator.
    for (const auto& alpha : degrees) {
        for (int i = 0; i <= 1; ++i) {
            Element x = Element::basis(config, alpha, i);
            CompletionElement r = D.image(config, BasisIndex{alpha, i});
            r = r.minus(config, apply_ad(config, result.y, x));
            Scalar f = result.phi.apply(config, alpha);
            if (!f.is_zero())
                r = r.minus(config, CompletionElement::from_element(config, x.scaled(f)));
            Element known = r.known_part();
            if (!known.is_zero()) {
                ++result.failing_generators;
                if (known.term_count() > result.max_residual.term_count())
                    result.max_residual = known;
            }
        }
    }
    result.y_in_W = result.y.is_exact();
    return result;
}

}  // namespace wittkit
