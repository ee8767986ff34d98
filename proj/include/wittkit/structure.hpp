#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wittkit/element.hpp"
#include "wittkit/linalg.hpp"

namespace wittkit {

// Largest n with x in W^n, i.e. the minimum level occurring in x.
// Throws ZeroElement / CentralTermPresent.
int filtration_level(const Element& x);

// One step of an ideal-membership witness. Every step produces an element
// of the ideal generated by the chain's source: a bracket with an algebra
// element, a theta-operator application, or a linear combination of
// earlier entries. source / combination indices refer to previous chain
// entries, with -1 denoting the generator x itself.
struct WitnessStep {
    enum class Kind { BracketWith, Theta, Combine };
    Kind kind = Kind::BracketWith;
    Element operand;                                // BracketWith: [operand, src]
    GroupElement theta_beta, theta_gamma;           // Theta parameters
    int source = -1;                                // BracketWith / Theta input
    std::vector<std::pair<Scalar, int>> combination;  // Combine inputs
    Element result;
};

struct IdealReport {
    int minimal_level = 0;
    std::string classified_as;  // "W^j"
    std::vector<WitnessStep> witness_chain;
    // ideal_generated only: the window coverage assertion and how many
    // closure elements were discarded at the window boundary.
    bool coverage_verified = false;
    int escaped_elements = 0;
};

// Re-executes every chain step through the bracket engine, checking each
// recorded intermediate, and returns the final element.
Element replay_witness(const GammaConfig& config, const Element& x,
                       const std::vector<WitnessStep>& chain);

// The double induction from the ideal classification: depth reduction by
// bracketing against a homogeneous component, then length reduction by
// bracketing against L(alpha, last index), down to a single basis element.
IdealReport reduce_to_basis(const GammaConfig& config, const Element& x, const Window& window);

// theta_beta = ad_{L(b-g,0)} ad_{L(g,0)} - 2 ad_{L(b,0)} ad_{L(0,0)}
//            + ad_{L(b+g,0)} ad_{L(-g,0)};
// on a basis element: theta(L(b0,j0)) = -4 embed(g)^2 L(b+b0, j0).
Element theta_apply(const GammaConfig& config, const GroupElement& beta,
                    const GroupElement& gamma, const Element& x);

// Classifies the ideal generated by x as W^{filtration_level(x)} and
// verifies the classification on the window: a minimal-level basis element
// is extracted (witnessed by the chain), theta propagates it across all
// window degrees, and level-raising identities climb to the level bound.
IdealReport ideal_generated(const GammaConfig& config, const Element& x, const Window& window);

// Exact-rank check of W^n = ad^m_{W^1}(W^{n-m}) on the window: the span of
// m-fold nested brackets of W^1-window elements against W^{n-m}-window
// elements must contain every L(beta, j) with n <= j <= coverage_top.
// Nested bracket results keep coordinates outside the window, so the span
// is exact and the coverage target is the full level range.
bool nested_bracket_span_check(const GammaConfig& config, int n, int m, const Window& window);
int nested_span_coverage_top(int n, int m, const Window& window);

struct AdProbeResult {
    std::vector<int> ranks;  // rank of span{ad^0 y, ..., ad^k y}, k = 0..K
    struct HighestTerm {
        int k = 0;
        BasisIndex index;
        Scalar coeff;
        bool matches = false;
    };
    // Product-formula predictions, present when x is homogeneous with a
    // single last term and no factor degenerates.
    std::vector<HighestTerm> highest_terms;
};

AdProbeResult ad_probe(const GammaConfig& config, const Element& x, const Element& y, int steps,
                       const BracketRule& rule);

// True iff ad_x^k(L(beta,1)), k = 0..K, are linearly independent.
bool grading_independence_witness(const GammaConfig& config, const Element& x,
                                  const GroupElement& beta, int K);

}  // namespace wittkit
