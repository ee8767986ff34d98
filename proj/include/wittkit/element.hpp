#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wittkit/gamma.hpp"

namespace wittkit {

// Index of a basis vector L(alpha, i). The central element C of the
// extension is carried separately by Element.
struct BasisIndex {
    GroupElement degree;
    int level = 0;

    bool operator==(const BasisIndex& o) const {
        return level == o.level && degree == o.degree;
    }
    // Container key order (lex on degree coordinates, then level);
    // the semantic order lifted from the group order is index_cmp below.
    bool operator<(const BasisIndex& o) const {
        if (degree != o.degree) return degree < o.degree;
        return level < o.level;
    }
    std::string to_string() const;
};

// The order on Gamma x Z+ lifted from the configured group order:
// (a,i) < (b,j) iff a < b, or a = b and i < j.
int index_cmp(const GammaConfig& config, const BasisIndex& a, const BasisIndex& b);

enum class BracketKind { WGamma, WGammaHat, WittType, Subquotient };

struct BracketRule {
    BracketKind kind = BracketKind::WGamma;
    int m = 0, n = 0;  // Subquotient level range [m, n]

    static BracketRule wgamma() { return {BracketKind::WGamma}; }
    static BracketRule wgamma_hat() { return {BracketKind::WGammaHat}; }
    static BracketRule witt_type() { return {BracketKind::WittType}; }
    static BracketRule subquotient(int m, int n);

    bool allows_central() const { return kind == BracketKind::WGammaHat; }
    std::string name() const;
    static BracketRule from_name(const std::string& name);
};

// Finite exact linear combination of basis vectors, plus an optional
// coordinate on the central element C. Canonical: zero coefficients are
// never stored, so equality is structural.
class Element {
  public:
    Element() = default;

    static Element basis(const GammaConfig& config, GroupElement degree, int level);
    static Element central(const GammaConfig& config);

    const std::map<BasisIndex, Scalar>& terms() const { return terms_; }
    bool has_central() const { return central_.has_value(); }
    Scalar central_coeff(const GammaConfig& config) const;
    const std::optional<Scalar>& central_opt() const { return central_; }

    bool is_zero() const { return terms_.empty() && !central_; }
    size_t term_count() const { return terms_.size() + (central_ ? 1 : 0); }

    Scalar coeff(const GammaConfig& config, const BasisIndex& idx) const;
    void set_term(const BasisIndex& idx, Scalar c);
    void set_central(Scalar c);
    void add_term(const BasisIndex& idx, const Scalar& c);
    void add_central(const Scalar& c);

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element scaled(const Scalar& c) const;
    Element& operator+=(const Element& o) { return *this = *this + o; }
    Element& operator-=(const Element& o) { return *this = *this - o; }

    bool operator==(const Element& o) const {
        return terms_ == o.terms_ && central_ == o.central_;
    }
    bool operator!=(const Element& o) const { return !(*this == o); }

    Element without_central() const;

    std::string to_string(const GammaConfig& config) const;

  private:
    std::map<BasisIndex, Scalar> terms_;
    std::optional<Scalar> central_;
};

Element bracket(const GammaConfig& config, const Element& x, const Element& y,
                const BracketRule& rule);

// Accumulating form: out += [x, y].
void bracket_add(const GammaConfig& config, const Element& x, const Element& y,
                 const BracketRule& rule, Element& out);

// [x,[y,z]] + [y,[z,x]] + [z,[x,y]]; zero for every Lie bracket rule.
Element jacobi_residual(const GammaConfig& config, const Element& x, const Element& y,
                        const Element& z, const BracketRule& rule);

// --- views from the structure analysis (support, depth, length, ...) ---

std::vector<GroupElement> support(const GammaConfig& config, const Element& x);
int depth(const Element& x);
Element homogeneous_component(const Element& x, const GroupElement& degree);
// last level - first level + 1 of the degree component; throws EmptyComponent.
int component_length(const Element& x, const GroupElement& degree);
std::pair<BasisIndex, Scalar> first_term(const Element& x, const GroupElement& degree);
std::pair<BasisIndex, Scalar> last_term(const Element& x, const GroupElement& degree);
// Max term of the whole element under the lifted order; throws on zero/central-only.
std::pair<BasisIndex, Scalar> max_term(const GammaConfig& config, const Element& x);

// All window basis indices, sorted under the lifted order.
std::vector<BasisIndex> window_basis(const GammaConfig& config, const Window& window);

}  // namespace wittkit
