#pragma once

#include <map>
#include <memory>
#include <vector>

#include "wittkit/element.hpp"
#include "wittkit/linalg.hpp"

namespace wittkit {

// Linear functional on W, stored on finitely many basis indices and zero
// outside.
class LinearFunctional {
  public:
    LinearFunctional() = default;

    const std::map<BasisIndex, Scalar>& values() const { return values_; }
    void set_value(const BasisIndex& idx, Scalar v);
    Scalar value_at(const GammaConfig& config, const BasisIndex& idx) const;
    Scalar apply(const GammaConfig& config, const Element& x) const;
    bool operator==(const LinearFunctional& o) const { return values_ == o.values_; }

  private:
    std::map<BasisIndex, Scalar> values_;
};

// The canonical 2-cocycle value: delta_{a+b,0} delta_{i+j,0} (a^3-a)/12.
Scalar phi0_value(const GammaConfig& config, const BasisIndex& a, const BasisIndex& b);

// A 2-cocycle: canonical phi_0, a coboundary psi_f, a table over a window
// (stored antisymmetrically on ordered pairs), or an exact linear
// combination of cocycles.
class Cocycle {
  public:
    static Cocycle canonical();
    static Cocycle coboundary(LinearFunctional f);
    static Cocycle table(Window window,
                         std::map<std::pair<BasisIndex, BasisIndex>, Scalar> entries);
    static Cocycle combo(std::vector<std::pair<Scalar, Cocycle>> terms);

    enum class Kind { Canonical, Coboundary, Table, Combo };
    Kind kind() const { return kind_; }
    const LinearFunctional& f() const { return f_; }
    const Window& table_window() const { return window_; }
    const std::map<std::pair<BasisIndex, BasisIndex>, Scalar>& entries() const {
        return entries_;
    }
    const std::vector<std::pair<Scalar, std::shared_ptr<Cocycle>>>& terms() const {
        return terms_;
    }

    Scalar eval_basis(const GammaConfig& config, const BasisIndex& a,
                      const BasisIndex& b) const;
    // Bilinear extension; arguments must be central-free.
    Scalar eval(const GammaConfig& config, const Element& x, const Element& y) const;

  private:
    Kind kind_ = Kind::Canonical;
    LinearFunctional f_;
    Window window_{0, 0};
    std::map<std::pair<BasisIndex, BasisIndex>, Scalar> entries_;
    std::vector<std::pair<Scalar, std::shared_ptr<Cocycle>>> terms_;
};

struct CocycleCheckReport {
    long triples_checked = 0;
    long failing_triples = 0;
    Scalar max_residual;
    bool ok() const { return failing_triples == 0; }
};

// psi(x,[y,z]) + psi(y,[z,x]) + psi(z,[x,y]) over all window basis triples.
CocycleCheckReport cocycle_condition_check(const GammaConfig& config, const Cocycle& psi,
                                           const Window& window);

// Window a table cocycle must cover so that the condition check, the f
// construction and the residual sweep on `window` stay inside it.
Window required_table_window(const GammaConfig& config, const Window& window);

// The six-case inductive functional, built on every index of `domain`.
// Requires the configured unit element.
LinearFunctional build_f(const GammaConfig& config, const Cocycle& psi, const Window& domain);

// c with (psi - psi_f)|_{(L(a,0),L(b,0))} = c phi_0 there, read off the
// (2u,-2u) pair and cross-checked on (3u,-3u).
Scalar extract_c(const GammaConfig& config, const Cocycle& psi, const LinearFunctional& f,
                 const Window& window);

struct NormalizationResult {
    Scalar c;
    LinearFunctional f;
    Window residual_max_window{0, 0};
    std::vector<std::pair<BasisIndex, BasisIndex>> failures;
    bool ok() const { return failures.empty(); }

    explicit NormalizationResult(const GammaConfig& config) : c(config.zero()) {}
};

// Theorem-4 normalization on the window: f := build_f(psi),
// c := extract_c, then psi - c phi_0 - psi_f must vanish on every basis
// pair of the window.
NormalizationResult normalize_cocycle(const GammaConfig& config, const Cocycle& psi,
                                      const Window& window);

struct CoboundaryFitResult {
    bool feasible = false;
    LinearFunctional f;  // a solution when feasible
    struct CertificateEquation {
        BasisIndex a, b;                    // the pair generating the equation
        std::map<BasisIndex, Scalar> lhs;   // coefficients on the unknowns f(.)
        Scalar rhs;
    };
    std::vector<CertificateEquation> certificate;  // minimal inconsistent subsystem
    Scalar contradiction_value;
};

// Solves f([x,y]) = psi(x,y) over the window exactly; when inconsistent,
// returns a minimal inconsistent subsystem as the obstruction.
CoboundaryFitResult coboundary_fit(const GammaConfig& config, const Cocycle& psi,
                                   const Window& window);

}  // namespace wittkit
