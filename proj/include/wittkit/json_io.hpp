#pragma once

#include <json.hpp>

#include "wittkit/automorphism.hpp"
#include "wittkit/cocycle.hpp"
#include "wittkit/completion.hpp"
#include "wittkit/derivation.hpp"
#include "wittkit/structure.hpp"

namespace wittkit {

using Json = nlohmann::json;

Json scalar_to_json(const GammaConfig& config, const Scalar& s);
Scalar scalar_from_json(const GammaConfig& config, const Json& j);

Json window_to_json(const Window& w);
Window window_from_json(const Json& j);

Json element_to_json(const GammaConfig& config, const Element& x);
Element element_from_json(const GammaConfig& config, const Json& j);

Json completion_to_json(const GammaConfig& config, const CompletionElement& x);
CompletionElement completion_from_json(const GammaConfig& config, const Json& j);

Json derivation_to_json(const GammaConfig& config, const DerivationSpec& d);
DerivationSpec derivation_from_json(const GammaConfig& config, const Json& j);

Json additive_map_to_json(const GammaConfig& config, const AdditiveMap& m);
AdditiveMap additive_map_from_json(const GammaConfig& config, const Json& j);

Json aut_to_json(const GammaConfig& config, const AutElement& a);
AutElement aut_from_json(const GammaConfig& config, const Json& j);

Json functional_to_json(const GammaConfig& config, const LinearFunctional& f);
LinearFunctional functional_from_json(const GammaConfig& config, const Json& j);

Json cocycle_to_json(const GammaConfig& config, const Cocycle& psi);
Cocycle cocycle_from_json(const GammaConfig& config, const Json& j);

Json ideal_report_to_json(const GammaConfig& config, const IdealReport& r);
Json decomposition_to_json(const GammaConfig& config, const DecompositionResult& r);
Json normalization_to_json(const GammaConfig& config, const NormalizationResult& r);
Json coboundary_fit_to_json(const GammaConfig& config, const CoboundaryFitResult& r);
Json leibniz_report_to_json(const GammaConfig& config, const LeibnizReport& r);
Json aut_verify_report_to_json(const GammaConfig& config, const AutVerifyReport& r);
Json cocycle_check_report_to_json(const GammaConfig& config, const CocycleCheckReport& r);
Json ad_probe_to_json(const GammaConfig& config, const AdProbeResult& r);

}  // namespace wittkit
