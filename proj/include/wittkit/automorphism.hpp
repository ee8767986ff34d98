#pragma once

#include <functional>

#include "wittkit/element.hpp"

namespace wittkit {

// Group homomorphism Gamma -> nonzero scalars, stored on the generators:
// tau(alpha) = prod tau(g_k)^{n_k}.
class Character {
  public:
    Character(const GammaConfig& config, std::vector<Scalar> values);
    static Character identity(const GammaConfig& config);

    const std::vector<Scalar>& values() const { return values_; }
    Scalar apply(const GammaConfig& config, const GroupElement& alpha) const;

    Character pointwise_times(const Character& o) const;
    bool operator==(const Character& o) const { return values_ == o.values_; }

  private:
    std::vector<Scalar> values_;
};

// (tau, c) acting by L(a,i) -> tau(a) c^{-i-1} L(ca, i).
struct AutElement {
    Character tau;
    ScaleMap c;

    bool operator==(const AutElement& o) const { return tau == o.tau && c == o.c; }
};

AutElement aut_identity(const GammaConfig& config);

Element aut_apply(const GammaConfig& config, const AutElement& a, const Element& x);

// Semidirect law: (tau1,c1)(tau2,c2) = (a -> tau1(c2 a) tau2(a), c1 c2),
// so that applying the composite equals applying a1 after a2.
AutElement aut_compose(const GammaConfig& config, const AutElement& a1, const AutElement& a2);

AutElement aut_invert(const GammaConfig& config, const AutElement& a);

struct AutVerifyReport {
    int pairs_checked = 0;
    int failing_pairs = 0;
    Element max_residual;
    bool ok() const { return failing_pairs == 0; }
};

// Bracket preservation on all window basis pairs.
AutVerifyReport aut_verify(const GammaConfig& config, const AutElement& a, const Window& window);

// Image of L(a,i) under the endomorphism determined by generator images,
// extended through L(a,i+1) = (1/i)([L(0,0), L(a,i)] - embed(a) L(a,i)).
// The generated-by-{L(a,0), L(a,1)} rigidity argument runs on this.
Element endo_extension_image(const GammaConfig& config,
                             const std::function<Element(const BasisIndex&)>& gen_images,
                             const BasisIndex& idx);

}  // namespace wittkit
