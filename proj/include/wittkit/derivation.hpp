#pragma once

#include <map>
#include <vector>

#include "wittkit/completion.hpp"

namespace wittkit {

// Z-linear map Gamma -> scalars, given by its values on the generators.
class AdditiveMap {
  public:
    explicit AdditiveMap(const GammaConfig& config)
        : values_(config.rank(), config.zero()) {}
    AdditiveMap(const GammaConfig& config, std::vector<Scalar> values);

    const std::vector<Scalar>& values() const { return values_; }
    void set_value(int k, Scalar v) { values_[k] = std::move(v); }

    Scalar apply(const GammaConfig& config, const GroupElement& alpha) const;
    bool is_zero() const;

    AdditiveMap plus(const AdditiveMap& o) const;
    AdditiveMap scaled(const Scalar& c) const;
    bool operator==(const AdditiveMap& o) const { return values_ == o.values_; }

    // phi_0: alpha -> embed(alpha).
    static AdditiveMap embedding(const GammaConfig& config);

  private:
    std::vector<Scalar> values_;
};

// D_phi(L(a,i)) = phi(a) L(a,i), extended linearly.
Element apply_D_phi(const GammaConfig& config, const AdditiveMap& phi, const Element& x);
CompletionElement apply_D_phi(const GammaConfig& config, const AdditiveMap& phi,
                              const CompletionElement& x);

// ad_y as a map into the completion.
CompletionElement apply_ad(const GammaConfig& config, const CompletionElement& y,
                           const Element& x);

// A derivation, either symbolically as ad_y + D_phi or as a table of
// images on the generating set {L(a,0), L(a,1)} over a window. Images of
// higher levels are derived through the bracket relations
//   L(a,i+1) = (1/i) ([L(0,0), L(a,i)] - embed(a) L(a,i)),   i >= 1.
class DerivationSpec {
  public:
    static DerivationSpec symbolic(CompletionElement y, AdditiveMap phi);
    static DerivationSpec table(
        std::map<std::pair<GroupElement, int>, CompletionElement> images);

    bool is_symbolic() const { return kind_ == Kind::Symbolic; }
    const CompletionElement& y() const { return y_; }
    const AdditiveMap& phi() const { return *phi_; }
    const std::map<std::pair<GroupElement, int>, CompletionElement>& images() const {
        return images_;
    }

    // Image of a basis element; tables extend through the relations.
    CompletionElement image(const GammaConfig& config, const BasisIndex& idx) const;
    // Linear extension to central-free elements.
    CompletionElement apply(const GammaConfig& config, const Element& x) const;

  private:
    enum class Kind { Symbolic, Table } kind_ = Kind::Symbolic;
    CompletionElement y_;
    std::optional<AdditiveMap> phi_;
    std::map<std::pair<GroupElement, int>, CompletionElement> images_;
    mutable std::map<BasisIndex, CompletionElement> extension_cache_;
};

struct LeibnizReport {
    int pairs_checked = 0;
    int failing_pairs = 0;
    Element max_residual;  // known part of the largest-support residual
    std::vector<std::pair<BasisIndex, BasisIndex>> failures;
    bool ok() const { return failing_pairs == 0; }
};

// D([a,b]) - [Da, b] - [a, Db] over all generator pairs in the window.
LeibnizReport leibniz_check(const GammaConfig& config, const DerivationSpec& D,
                            const Window& window);

struct DecompositionResult {
    CompletionElement y;
    AdditiveMap phi;
    Scalar c;  // the correction extracted from D''(L(0,1))
    Element max_residual;
    int failing_generators = 0;
    bool y_in_W = false;
    bool ok() const { return failing_generators == 0; }

    DecompositionResult(const GammaConfig& config)
        : phi(config), c(config.zero()) {}
};

// Executes the decomposition Der W = ad W + Hom_Z(Gamma, C) as an
// algorithm: (1) the inductive b-coefficients from D(L(0,0)) build y1;
// (2) D - ad_{y1} fixes L(0,0) up to levels {0,1}, whose coefficients
// must vanish; (3) the eigenvalues on L(a,0) assemble an additive map;
// (4) the remaining scalar c comes from the L(0,2)-coefficient of
// D''(L(0,1)); (5) y += c L(0,0), phi -= c phi_0, fixed by requiring the
// final residual to vanish on all window generators.
DecompositionResult decompose_derivation(const GammaConfig& config, const DerivationSpec& D,
                                         const Window& window, long order);

}  // namespace wittkit
