#include "wittkit/json_io.hpp"

#include <algorithm>

#include "wittkit/errors.hpp"
#include "wittkit/parser.hpp"

namespace wittkit {

namespace {

Json index_to_json(const BasisIndex& idx) {
    return Json{{"degree", idx.degree.n}, {"level", idx.level}};
}

BasisIndex index_from_json(const GammaConfig& config, const Json& j) {
    BasisIndex idx;
    idx.degree = GroupElement{j.at("degree").get<std::vector<int>>()};
    if ((int)idx.degree.rank() != config.rank())
        throw Error("degree rank mismatch in JSON");
    idx.level = j.at("level").get<int>();
    if (idx.level < 0) throw Error("negative level in JSON");
    return idx;
}

}  // namespace

Json scalar_to_json(const GammaConfig& config, const Scalar& s) {
    return s.to_string(config.generator_names());
}

Scalar scalar_from_json(const GammaConfig& config, const Json& j) {
    return parse_scalar(config, j.get<std::string>());
}

Json window_to_json(const Window& w) {
    return Json{{"degree", w.degree_bound}, {"level", w.level_bound}};
}

Window window_from_json(const Json& j) {
    return Window{j.at("degree").get<int>(), j.at("level").get<int>()};
}

Json element_to_json(const GammaConfig& config, const Element& x) {
    Json terms = Json::array();
    for (const auto& [idx, c] : x.terms()) {
        Json t = index_to_json(idx);
        t["coeff"] = scalar_to_json(config, c);
        terms.push_back(std::move(t));
    }
    Json out{{"terms", std::move(terms)}};
    if (x.has_central()) out["central"] = scalar_to_json(config, *x.central_opt());
    return out;
}

Element element_from_json(const GammaConfig& config, const Json& j) {
    Element x;
    for (const auto& t : j.at("terms")) {
        BasisIndex idx = index_from_json(config, t);
        x.add_term(idx, scalar_from_json(config, t.at("coeff")));
    }
    if (j.contains("central")) x.set_central(scalar_from_json(config, j.at("central")));
    return x;
}

Json completion_to_json(const GammaConfig& config, const CompletionElement& x) {
    Json degrees = Json::array();
    for (const auto& [d, rec] : x.records()) {
        Json coeffs = Json::array();
        for (const auto& c : rec.coeffs) coeffs.push_back(scalar_to_json(config, c));
        degrees.push_back(Json{{"degree", d.n},
                               {"coeffs", std::move(coeffs)},
                               {"valid_order", rec.valid_order},
                               {"exact", rec.exact}});
    }
    return Json{{"degrees", std::move(degrees)}};
}

CompletionElement completion_from_json(const GammaConfig& config, const Json& j) {
    CompletionElement x;
    for (const auto& d : j.at("degrees")) {
        GroupElement deg{d.at("degree").get<std::vector<int>>()};
        if ((int)deg.rank() != config.rank()) throw Error("degree rank mismatch in JSON");
        DegreeSeries rec;
        rec.exact = d.at("exact").get<bool>();
        rec.valid_order = d.at("valid_order").get<long>();
        for (const auto& c : d.at("coeffs")) rec.coeffs.push_back(scalar_from_json(config, c));
        if (!rec.exact && rec.coeffs.empty()) rec.coeffs.push_back(config.zero());
        x.set_record(deg, std::move(rec));
    }
    return x;
}

Json additive_map_to_json(const GammaConfig& config, const AdditiveMap& m) {
    Json out = Json::object();
    for (int k = 0; k < config.rank(); ++k)
        out[config.generator_names()[k]] = scalar_to_json(config, m.values()[k]);
    return out;
}

AdditiveMap additive_map_from_json(const GammaConfig& config, const Json& j) {
    AdditiveMap m(config);
    for (const auto& [key, val] : j.items()) {
        const auto& names = config.generator_names();
        auto it = std::find(names.begin(), names.end(), key);
        if (it == names.end()) throw UnknownGenerator(key);
        m.set_value((int)(it - names.begin()), scalar_from_json(config, val));
    }
    return m;
}

Json derivation_to_json(const GammaConfig& config, const DerivationSpec& d) {
    if (d.is_symbolic()) {
        return Json{{"kind", "symbolic"},
                    {"y", completion_to_json(config, d.y())},
                    {"phi", additive_map_to_json(config, d.phi())}};
    }
    Json images = Json::array();
    for (const auto& [key, img] : d.images()) {
        images.push_back(Json{{"alpha", key.first.n},
                              {"i", key.second},
                              {"image", completion_to_json(config, img)}});
    }
    return Json{{"kind", "table"}, {"images", std::move(images)}};
}

DerivationSpec derivation_from_json(const GammaConfig& config, const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "symbolic") {
        CompletionElement y;
        if (j.contains("y")) y = completion_from_json(config, j.at("y"));
        AdditiveMap phi(config);
        if (j.contains("phi")) phi = additive_map_from_json(config, j.at("phi"));
        return DerivationSpec::symbolic(std::move(y), std::move(phi));
    }
    if (kind == "table") {
        std::map<std::pair<GroupElement, int>, CompletionElement> images;
        for (const auto& img : j.at("images")) {
            GroupElement alpha{img.at("alpha").get<std::vector<int>>()};
            int i = img.at("i").get<int>();
            images[{alpha, i}] = completion_from_json(config, img.at("image"));
        }
        return DerivationSpec::table(std::move(images));
    }
    throw Error("unknown derivation kind: " + kind);
}

Json aut_to_json(const GammaConfig& config, const AutElement& a) {
    Json tau = Json::object();
    for (int k = 0; k < config.rank(); ++k)
        tau[config.generator_names()[k]] = scalar_to_json(config, a.tau.values()[k]);
    return Json{{"tau", std::move(tau)},
                {"c", Json{{"value", scalar_to_json(config, a.c.value())},
                           {"matrix", a.c.matrix()}}}};
}

AutElement aut_from_json(const GammaConfig& config, const Json& j) {
    std::vector<Scalar> tau(config.rank(), config.one());
    for (const auto& [key, val] : j.at("tau").items()) {
        const auto& names = config.generator_names();
        auto it = std::find(names.begin(), names.end(), key);
        if (it == names.end()) throw UnknownGenerator(key);
        tau[it - names.begin()] = scalar_from_json(config, val);
    }
    const Json& cj = j.at("c");
    ScaleMap c(config, scalar_from_json(config, cj.at("value")),
               cj.at("matrix").get<std::vector<std::vector<int>>>());
    return AutElement{Character(config, std::move(tau)), std::move(c)};
}

Json functional_to_json(const GammaConfig& config, const LinearFunctional& f) {
    Json out = Json::array();
    for (const auto& [idx, v] : f.values())
        out.push_back(Json{{"alpha", idx.degree.n},
                           {"i", idx.level},
                           {"value", scalar_to_json(config, v)}});
    return out;
}

LinearFunctional functional_from_json(const GammaConfig& config, const Json& j) {
    LinearFunctional f;
    for (const auto& e : j) {
        GroupElement alpha{e.at("alpha").get<std::vector<int>>()};
        if ((int)alpha.rank() != config.rank()) throw Error("degree rank mismatch in JSON");
        f.set_value({alpha, e.at("i").get<int>()}, scalar_from_json(config, e.at("value")));
    }
    return f;
}

Json cocycle_to_json(const GammaConfig& config, const Cocycle& psi) {
    switch (psi.kind()) {
        case Cocycle::Kind::Canonical:
            return Json{{"kind", "canonical"}};
        case Cocycle::Kind::Coboundary:
            return Json{{"kind", "coboundary"}, {"f", functional_to_json(config, psi.f())}};
        case Cocycle::Kind::Table: {
            Json entries = Json::array();
            for (const auto& [key, v] : psi.entries())
                entries.push_back(Json{{"a", index_to_json(key.first)},
                                       {"b", index_to_json(key.second)},
                                       {"value", scalar_to_json(config, v)}});
            return Json{{"kind", "table"},
                        {"window", window_to_json(psi.table_window())},
                        {"entries", std::move(entries)}};
        }
        case Cocycle::Kind::Combo: {
            Json terms = Json::array();
            for (const auto& [coeff, sub] : psi.terms())
                terms.push_back(Json::array(
                    {scalar_to_json(config, coeff), cocycle_to_json(config, *sub)}));
            return Json{{"kind", "combo"}, {"terms", std::move(terms)}};
        }
    }
    throw Error("unreachable cocycle kind");
}

Cocycle cocycle_from_json(const GammaConfig& config, const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "canonical") return Cocycle::canonical();
    if (kind == "coboundary")
        return Cocycle::coboundary(functional_from_json(config, j.at("f")));
    if (kind == "table") {
        Window w = window_from_json(j.at("window"));
        std::map<std::pair<BasisIndex, BasisIndex>, Scalar> entries;
        for (const auto& e : j.at("entries")) {
            BasisIndex a = index_from_json(config, e.at("a"));
            BasisIndex b = index_from_json(config, e.at("b"));
            Scalar v = scalar_from_json(config, e.at("value"));
            if (b < a) {
                std::swap(a, b);
                v = -v;
            } else if (a == b) {
                if (!v.is_zero()) throw Error("diagonal table entry must vanish");
                continue;
            }
            entries[{a, b}] = std::move(v);
        }
        return Cocycle::table(w, std::move(entries));
    }
    if (kind == "combo") {
        std::vector<std::pair<Scalar, Cocycle>> terms;
        for (const auto& t : j.at("terms"))
            terms.push_back({scalar_from_json(config, t.at(0)),
                             cocycle_from_json(config, t.at(1))});
        return Cocycle::combo(std::move(terms));
    }
    throw Error("unknown cocycle kind: " + kind);
}

namespace {

Json witness_step_to_json(const GammaConfig& config, const WitnessStep& s) {
    Json out;
    switch (s.kind) {
        case WitnessStep::Kind::BracketWith:
            out["kind"] = "bracket";
            out["operand"] = element_to_json(config, s.operand);
            out["source"] = s.source;
            break;
        case WitnessStep::Kind::Theta:
            out["kind"] = "theta";
            out["beta"] = s.theta_beta.n;
            out["gamma"] = s.theta_gamma.n;
            out["source"] = s.source;
            break;
        case WitnessStep::Kind::Combine: {
            out["kind"] = "combine";
            Json combo = Json::array();
            for (const auto& [c, idx] : s.combination)
                combo.push_back(Json::array({scalar_to_json(config, c), idx}));
            out["combination"] = std::move(combo);
            break;
        }
    }
    out["result"] = element_to_json(config, s.result);
    return out;
}

}  // namespace

Json ideal_report_to_json(const GammaConfig& config, const IdealReport& r) {
    Json chain = Json::array();
    for (const auto& s : r.witness_chain) chain.push_back(witness_step_to_json(config, s));
    return Json{{"minimal_level", r.minimal_level},
                {"classified_as", r.classified_as},
                {"coverage_verified", r.coverage_verified},
                {"escaped_elements", r.escaped_elements},
                {"witness_chain", std::move(chain)}};
}

Json decomposition_to_json(const GammaConfig& config, const DecompositionResult& r) {
    return Json{{"y", completion_to_json(config, r.y)},
                {"phi", additive_map_to_json(config, r.phi)},
                {"c", scalar_to_json(config, r.c)},
                {"residual_max", element_to_json(config, r.max_residual)},
                {"failing_generators", r.failing_generators},
                {"y_in_W", r.y_in_W}};
}

Json normalization_to_json(const GammaConfig& config, const NormalizationResult& r) {
    Json failures = Json::array();
    for (const auto& [a, b] : r.failures)
        failures.push_back(Json{{"a", index_to_json(a)}, {"b", index_to_json(b)}});
    return Json{{"c", scalar_to_json(config, r.c)},
                {"f", functional_to_json(config, r.f)},
                {"residual_max_window", window_to_json(r.residual_max_window)},
                {"failures", std::move(failures)}};
}

Json coboundary_fit_to_json(const GammaConfig& config, const CoboundaryFitResult& r) {
    Json out{{"feasible", r.feasible}};
    if (r.feasible) {
        out["f"] = functional_to_json(config, r.f);
        return out;
    }
    Json cert = Json::array();
    for (const auto& eq : r.certificate) {
        Json lhs = Json::array();
        for (const auto& [idx, c] : eq.lhs)
            lhs.push_back(Json{{"alpha", idx.degree.n},
                               {"i", idx.level},
                               {"coeff", scalar_to_json(config, c)}});
        cert.push_back(Json{{"a", index_to_json(eq.a)},
                            {"b", index_to_json(eq.b)},
                            {"lhs", std::move(lhs)},
                            {"rhs", scalar_to_json(config, eq.rhs)}});
    }
    out["certificate"] = std::move(cert);
    out["contradiction"] = "0 = " + r.contradiction_value.to_string(config.generator_names());
    return out;
}

Json leibniz_report_to_json(const GammaConfig& config, const LeibnizReport& r) {
    Json failures = Json::array();
    for (const auto& [a, b] : r.failures)
        failures.push_back(Json{{"a", index_to_json(a)}, {"b", index_to_json(b)}});
    return Json{{"pairs_checked", r.pairs_checked},
                {"failing_pairs", r.failing_pairs},
                {"max_residual", element_to_json(config, r.max_residual)},
                {"failures", std::move(failures)}};
}

Json aut_verify_report_to_json(const GammaConfig& config, const AutVerifyReport& r) {
    return Json{{"pairs_checked", r.pairs_checked},
                {"failing_pairs", r.failing_pairs},
                {"max_residual", element_to_json(config, r.max_residual)}};
}

Json cocycle_check_report_to_json(const GammaConfig& config, const CocycleCheckReport& r) {
    return Json{{"triples_checked", r.triples_checked},
                {"failing_triples", r.failing_triples},
                {"max_residual", scalar_to_json(config, r.max_residual)}};
}

Json ad_probe_to_json(const GammaConfig& config, const AdProbeResult& r) {
    Json terms = Json::array();
    for (const auto& ht : r.highest_terms)
        terms.push_back(Json{{"k", ht.k},
                             {"degree", ht.index.degree.n},
                             {"level", ht.index.level},
                             {"coeff", scalar_to_json(config, ht.coeff)},
                             {"matches", ht.matches}});
    return Json{{"ranks", r.ranks}, {"highest_terms", std::move(terms)}};
}

}  // namespace wittkit
