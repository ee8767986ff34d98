#include "wittkit/automorphism.hpp"

#include "wittkit/errors.hpp"

namespace wittkit {

namespace {
const BracketRule kW = BracketRule::wgamma();
}

Character::Character(const GammaConfig& config, std::vector<Scalar> values)
    : values_(std::move(values)) {
    if ((int)values_.size() != config.rank())
        throw Error("character needs one value per generator");
    for (const auto& v : values_)
        if (v.is_zero()) throw Error("character values must be nonzero");
}

Character Character::identity(const GammaConfig& config) {
    return Character(config, std::vector<Scalar>(config.rank(), config.one()));
}

Scalar Character::apply(const GammaConfig& config, const GroupElement& alpha) const {
    Scalar out = config.one();
    for (size_t k = 0; k < values_.size(); ++k) {
        if (alpha.n[k] == 0) continue;
        out *= values_[k].pow(alpha.n[k]);
    }
    return out;
}

Character Character::pointwise_times(const Character& o) const {
    Character r = *this;
    for (size_t k = 0; k < values_.size(); ++k) r.values_[k] *= o.values_[k];
    return r;
}

AutElement aut_identity(const GammaConfig& config) {
    return {Character::identity(config), ScaleMap::identity(config)};
}

Element aut_apply(const GammaConfig& config, const AutElement& a, const Element& x) {
    if (x.has_central()) throw CentralTermPresent();
    Element out;
    for (const auto& [idx, coeff] : x.terms()) {
        Scalar factor = a.tau.apply(config, idx.degree) * a.c.value().pow(-idx.level - 1);
        out.add_term({a.c.apply(idx.degree), idx.level}, coeff * factor);
    }
    return out;
}

AutElement aut_compose(const GammaConfig& config, const AutElement& a1, const AutElement& a2) {
    std::vector<Scalar> tau;
    for (int k = 0; k < config.rank(); ++k) {
        GroupElement moved = a2.c.apply(config.unit_vector(k));
        tau.push_back(a1.tau.apply(config, moved) * a2.tau.values()[k]);
    }
    return {Character(config, std::move(tau)), a1.c.compose(a2.c)};
}

AutElement aut_invert(const GammaConfig& config, const AutElement& a) {
    ScaleMap cinv = a.c.inverse();
    std::vector<Scalar> tau;
    for (int k = 0; k < config.rank(); ++k) {
        GroupElement back = cinv.apply(config.unit_vector(k));
        tau.push_back(a.tau.apply(config, back).inverse());
    }
    return {Character(config, std::move(tau)), std::move(cinv)};
}

AutVerifyReport aut_verify(const GammaConfig& config, const AutElement& a, const Window& window) {
    AutVerifyReport report;
    auto basis = window_basis(config, window);
    // Character and power values repeat heavily across the sweep.
    std::map<GroupElement, Scalar> tau_cache;
    std::map<int, Scalar> pow_cache;
    auto tau_of = [&](const GroupElement& d) {
        auto it = tau_cache.find(d);
        if (it == tau_cache.end()) it = tau_cache.emplace(d, a.tau.apply(config, d)).first;
        return it->second;
    };
    auto cpow = [&](int e) {
        auto it = pow_cache.find(e);
        if (it == pow_cache.end()) it = pow_cache.emplace(e, a.c.value().pow(e)).first;
        return it->second;
    };
    auto apply_cached = [&](const Element& x) {
        Element out;
        for (const auto& [idx, coeff] : x.terms())
            out.add_term({a.c.apply(idx.degree), idx.level},
                         coeff * tau_of(idx.degree) * cpow(-idx.level - 1));
        return out;
    };
    std::vector<Element> elems, images;
    for (const auto& b : basis) {
        elems.push_back(Element::basis(config, b.degree, b.level));
        images.push_back(apply_cached(elems.back()));
    }
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = i + 1; j < basis.size(); ++j) {
            Element lhs = apply_cached(bracket(config, elems[i], elems[j], kW));
            Element rhs = bracket(config, images[i], images[j], kW);
            Element residual = lhs - rhs;
            ++report.pairs_checked;
            if (!residual.is_zero()) {
                ++report.failing_pairs;
                if (residual.term_count() > report.max_residual.term_count())
                    report.max_residual = residual;
            }
        }
    }
    return report;
}

Element endo_extension_image(const GammaConfig& config,
                             const std::function<Element(const BasisIndex&)>& gen_images,
                             const BasisIndex& idx) {
    if (idx.level <= 1) return gen_images(idx);
    int i = idx.level - 1;
    Element below = endo_extension_image(config, gen_images, {idx.degree, i});
    Element s_l00 = gen_images({config.zero_degree(), 0});
    Element out = bracket(config, s_l00, below, kW) - below.scaled(config.embed(idx.degree));
    return out.scaled(config.scalar(rat(1, i)));
}

}  // namespace wittkit
