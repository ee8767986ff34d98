#include "wittkit/cocycle.hpp"

#include <algorithm>

#include "wittkit/errors.hpp"

namespace wittkit {

namespace {
const BracketRule kW = BracketRule::wgamma();
}

void LinearFunctional::set_value(const BasisIndex& idx, Scalar v) {
    if (v.is_zero())
        values_.erase(idx);
    else
        values_.insert_or_assign(idx, std::move(v));
}

Scalar LinearFunctional::value_at(const GammaConfig& config, const BasisIndex& idx) const {
    auto it = values_.find(idx);
    return it == values_.end() ? config.zero() : it->second;
}

Scalar LinearFunctional::apply(const GammaConfig& config, const Element& x) const {
    if (x.has_central()) throw CentralTermPresent();
    Scalar out = config.zero();
    for (const auto& [idx, c] : x.terms()) out += c * value_at(config, idx);
    return out;
}

Scalar phi0_value(const GammaConfig& config, const BasisIndex& a, const BasisIndex& b) {
    if (!(a.degree + b.degree).is_zero() || a.level + b.level != 0) return config.zero();
    Scalar av = config.embed(a.degree);
    return (av * av * av - av) * config.scalar(rat(1, 12));
}

Cocycle Cocycle::canonical() { return Cocycle(); }

Cocycle Cocycle::coboundary(LinearFunctional f) {
    Cocycle c;
    c.kind_ = Kind::Coboundary;
    c.f_ = std::move(f);
    return c;
}

Cocycle Cocycle::table(Window window,
                       std::map<std::pair<BasisIndex, BasisIndex>, Scalar> entries) {
    Cocycle c;
    c.kind_ = Kind::Table;
    c.window_ = window;
    for (auto& [key, v] : entries) {
        if (!window.contains(key.first.degree, key.first.level) ||
            !window.contains(key.second.degree, key.second.level))
            throw OutOfWindow("table entry outside the declared window");
        if (!(key.first < key.second))
            throw Error("table entries are stored on strictly ordered pairs");
    }
    c.entries_ = std::move(entries);
    return c;
}

Cocycle Cocycle::combo(std::vector<std::pair<Scalar, Cocycle>> terms) {
    Cocycle c;
    c.kind_ = Kind::Combo;
    for (auto& [coeff, psi] : terms)
        c.terms_.push_back({coeff, std::make_shared<Cocycle>(std::move(psi))});
    return c;
}

Scalar Cocycle::eval_basis(const GammaConfig& config, const BasisIndex& a,
                           const BasisIndex& b) const {
    switch (kind_) {
        case Kind::Canonical:
            return phi0_value(config, a, b);
        case Kind::Coboundary: {
            Element br = bracket(config, Element::basis(config, a.degree, a.level),
                                 Element::basis(config, b.degree, b.level), kW);
            return f_.apply(config, br);
        }
        case Kind::Table: {
            if (!window_.contains(a.degree, a.level) || !window_.contains(b.degree, b.level))
                throw OutOfWindow("table cocycle evaluated outside its window at (" +
                                  a.to_string() + ", " + b.to_string() + ")");
            if (a == b) return config.zero();
            bool flip = b < a;
            auto key = flip ? std::make_pair(b, a) : std::make_pair(a, b);
            auto it = entries_.find(key);
            Scalar v = it == entries_.end() ? config.zero() : it->second;
            return flip ? -v : v;
        }
        case Kind::Combo: {
            Scalar out = config.zero();
            for (const auto& [coeff, psi] : terms_)
                out += coeff * psi->eval_basis(config, a, b);
            return out;
        }
    }
    return config.zero();
}

Scalar Cocycle::eval(const GammaConfig& config, const Element& x, const Element& y) const {
    if (x.has_central() || y.has_central()) throw CentralTermPresent();
    // Kind dispatch: coboundaries need one element-level bracket instead
    // of one per term pair, and combos stay linear at the element level.
    if (kind_ == Kind::Coboundary)
        return f_.apply(config, bracket(config, x, y, kW));
    if (kind_ == Kind::Combo) {
        Scalar out = config.zero();
        for (const auto& [coeff, psi] : terms_) out += coeff * psi->eval(config, x, y);
        return out;
    }
    Scalar out = config.zero();
    for (const auto& [ia, ca] : x.terms())
        for (const auto& [ib, cb] : y.terms()) out += ca * cb * eval_basis(config, ia, ib);
    return out;
}

CocycleCheckReport cocycle_condition_check(const GammaConfig& config, const Cocycle& psi,
                                           const Window& window) {
    CocycleCheckReport report;
    report.max_residual = config.zero();
    auto basis = window_basis(config, window);
    std::vector<Element> elems;
    elems.reserve(basis.size());
    for (const auto& b : basis) elems.push_back(Element::basis(config, b.degree, b.level));
    // Repeated arguments vanish identically by bilinearity and
    // antisymmetry, so distinct sorted triples suffice. Pair brackets are
    // shared across the sweep.
    const size_t n = basis.size();
    std::vector<std::vector<Element>> pair_bracket(n);
    for (size_t i = 0; i < n; ++i) {
        pair_bracket[i].resize(n);
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            pair_bracket[i][j] =
                j < i ? -pair_bracket[j][i] : bracket(config, elems[i], elems[j], kW);
        }
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            for (size_t k = j + 1; k < n; ++k) {
                Scalar r = psi.eval(config, elems[i], pair_bracket[j][k]);
                r += psi.eval(config, elems[j], pair_bracket[k][i]);
                r += psi.eval(config, elems[k], pair_bracket[i][j]);
                ++report.triples_checked;
                if (!r.is_zero()) {
                    ++report.failing_triples;
                    report.max_residual = r;
                }
            }
        }
    }
    return report;
}

Window required_table_window(const GammaConfig& config, const Window& window) {
    int umax = 1;
    if (config.unit()) {
        for (int v : config.unit()->n) umax = std::max(umax, std::abs(v));
    }
    // Bracket images of window pairs reach degree 2A and level 2I+1; the
    // f construction additionally touches degrees up to 3 units.
    return Window{std::max(2 * window.degree_bound, 3 * umax), 2 * window.level_bound + 1};
}

LinearFunctional build_f(const GammaConfig& config, const Cocycle& psi, const Window& domain) {
    if (!config.unit()) throw MissingUnit();
    const GroupElement u = *config.unit();
    const GroupElement zero = config.zero_degree();
    auto L = [&](const GroupElement& d, int i) { return BasisIndex{d, i}; };
    auto ev = [&](const BasisIndex& a, const BasisIndex& b) {
        return psi.eval_basis(config, a, b);
    };
    Scalar half = config.scalar(rat(1, 2));

    LinearFunctional f;
    for (const auto& alpha : domain.degrees(config)) {
        Scalar ea = config.embed(alpha);
        for (int i = 0; i <= domain.level_bound; ++i) {
            Scalar v = config.zero();
            if (i == 0 && alpha.is_zero()) {
                v = half * ev(L(-u, 0), L(u, 0));
            } else if (i == 0) {
                v = ev(L(zero, 0), L(alpha, 0)) / ea;
            } else if (i == 1 && alpha.is_zero()) {
                v = half * (ev(L(zero, 0), L(zero, 1)) + ev(L(-u, 1), L(u, 0)));
            } else if (i == 1) {
                v = (ev(L(zero, 0), L(alpha, 1)) + ev(L(zero, 1), L(alpha, 0))) /
                    (config.scalar(2) * ea);
            } else if (i == 2) {
                v = half * (ev(L(zero, 0), L(alpha, 1)) - ev(L(zero, 1), L(alpha, 0)));
            } else {
                Scalar prev = f.value_at(config, L(alpha, i - 1));
                v = (ev(L(zero, 0), L(alpha, i - 1)) - ea * prev) / config.scalar(i - 1);
            }
            f.set_value(L(alpha, i), v);
        }
    }
    return f;
}

Scalar extract_c(const GammaConfig& config, const Cocycle& psi, const LinearFunctional& f,
                 const Window& window) {
    if (!config.unit()) throw MissingUnit();
    const GroupElement u = *config.unit();
    auto value_at_pair = [&](int mult) {
        GroupElement d = u * mult;
        BasisIndex a{d, 0}, b{-d, 0};
        Element br = bracket(config, Element::basis(config, d, 0),
                             Element::basis(config, -d, 0), kW);
        return psi.eval_basis(config, a, b) - f.apply(config, br);
    };
    GroupElement d2 = u * 2;
    if (!window.contains_degree(d2))
        throw OutOfWindow("the (2,-2) degree pair does not fit in the window");
    // phi_0 on the (2u,-2u) pair is (8-2)/12 = 1/2.
    Scalar c = config.scalar(2) * value_at_pair(2);
    if (window.contains_degree(u * 3)) {
        // Cross-check: phi_0 on (3u,-3u) is (27-3)/12 = 2.
        Scalar c2 = value_at_pair(3) * config.scalar(rat(1, 2));
        if (!(c == c2))
            throw InconsistentC("the (2,-2) and (3,-3) estimates disagree: " +
                                c.to_string(config.generator_names()) + " vs " +
                                c2.to_string(config.generator_names()));
    }
    return c;
}

NormalizationResult normalize_cocycle(const GammaConfig& config, const Cocycle& psi,
                                      const Window& window) {
    CocycleCheckReport check = cocycle_condition_check(config, psi, window);
    if (!check.ok())
        throw NotACocycle("the cocycle identity fails on " +
                          std::to_string(check.failing_triples) + " window triples");
    NormalizationResult result(config);
    Window domain = required_table_window(config, window);
    result.f = build_f(config, psi, domain);
    result.c = extract_c(config, psi, result.f, window);

    auto basis = window_basis(config, window);
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = i + 1; j < basis.size(); ++j) {
            Element br = bracket(config, Element::basis(config, basis[i].degree, basis[i].level),
                                 Element::basis(config, basis[j].degree, basis[j].level), kW);
            Scalar r = psi.eval_basis(config, basis[i], basis[j]) -
                       result.c * phi0_value(config, basis[i], basis[j]) -
                       result.f.apply(config, br);
            if (!r.is_zero()) result.failures.push_back({basis[i], basis[j]});
        }
    }
    if (result.failures.empty()) {
        result.residual_max_window = window;
    } else {
        // Largest sub-window free of failing pairs.
        result.residual_max_window = Window{0, 0};
        for (int a = window.degree_bound; a >= 0; --a) {
            for (int l = window.level_bound; l >= 0; --l) {
                Window sub{a, l};
                bool clean = true;
                for (const auto& [p, q] : result.failures)
                    if (sub.contains(p.degree, p.level) && sub.contains(q.degree, q.level)) {
                        clean = false;
                        break;
                    }
                if (clean) {
                    result.residual_max_window = sub;
                    a = -1;
                    break;
                }
            }
        }
    }
    return result;
}

CoboundaryFitResult coboundary_fit(const GammaConfig& config, const Cocycle& psi,
                                   const Window& window) {
    // Unknowns: f(L(a,i)) over the closure window (bracket images of
    // window pairs land there).
    Window domain = required_table_window(config, window);
    std::map<BasisIndex, int> unknown_id;
    std::vector<BasisIndex> unknown_of;
    auto id_of = [&](const BasisIndex& idx) {
        auto it = unknown_id.find(idx);
        if (it != unknown_id.end()) return it->second;
        int id = (int)unknown_of.size();
        unknown_id.emplace(idx, id);
        unknown_of.push_back(idx);
        return id;
    };

    // Equations enumerated smallest pairs first so certificates come out
    // in the canonical order.
    auto basis = window_basis(config, window);
    std::sort(basis.begin(), basis.end(), [&](const BasisIndex& x, const BasisIndex& y) {
        int mx = 0, my = 0;
        for (int v : x.degree.n) mx = std::max(mx, std::abs(v));
        for (int v : y.degree.n) my = std::max(my, std::abs(v));
        if (x.level != y.level) return x.level < y.level;
        if (mx != my) return mx < my;
        return x < y;
    });

    std::vector<LinearEquation> equations;
    std::vector<std::pair<BasisIndex, BasisIndex>> pair_of_eq;
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = i + 1; j < basis.size(); ++j) {
            Element br = bracket(config, Element::basis(config, basis[i].degree, basis[i].level),
                                 Element::basis(config, basis[j].degree, basis[j].level), kW);
            LinearEquation eq;
            eq.rhs = psi.eval_basis(config, basis[i], basis[j]);
            for (const auto& [idx, c] : br.terms()) {
                if (!domain.contains(idx.degree, idx.level))
                    throw OutOfWindow("bracket image escapes the fit domain");
                eq.lhs[id_of(idx)] = c;
            }
            if (eq.lhs.empty() && eq.rhs.is_zero()) continue;
            eq.id = (int)pair_of_eq.size();
            pair_of_eq.push_back({basis[i], basis[j]});
            equations.push_back(std::move(eq));
        }
    }

    LinearSolveResult solved = solve_linear_system(config, equations, true);
    CoboundaryFitResult result;
    result.feasible = solved.feasible;
    if (solved.feasible) {
        for (const auto& [id, v] : solved.solution)
            result.f.set_value(unknown_of[id], v);
        return result;
    }
    result.contradiction_value = solved.contradiction_value;
    for (int eq_id : solved.certificate_ids) {
        CoboundaryFitResult::CertificateEquation cert;
        cert.a = pair_of_eq[eq_id].first;
        cert.b = pair_of_eq[eq_id].second;
        cert.rhs = equations[eq_id].rhs;
        for (const auto& [col, c] : equations[eq_id].lhs) cert.lhs[unknown_of[col]] = c;
        result.certificate.push_back(std::move(cert));
    }
    return result;
}

}  // namespace wittkit
