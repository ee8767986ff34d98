#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wittkit/scalar.hpp"

namespace wittkit {

// Degree in Gamma = Z^r, coordinates over the configured generators.
struct GroupElement {
    std::vector<int> n;

    GroupElement() = default;
    explicit GroupElement(std::vector<int> coords) : n(std::move(coords)) {}

    size_t rank() const { return n.size(); }
    bool is_zero() const {
        for (int v : n)
            if (v) return false;
        return true;
    }

    GroupElement operator+(const GroupElement& o) const;
    GroupElement operator-(const GroupElement& o) const;
    GroupElement operator-() const;
    GroupElement operator*(int k) const;

    bool operator==(const GroupElement& o) const { return n == o.n; }
    bool operator!=(const GroupElement& o) const { return n != o.n; }
    // Plain lexicographic order, used only as a container key. The
    // group-compatible order lives in GammaConfig::compare.
    bool operator<(const GroupElement& o) const { return n < o.n; }

    std::string to_string() const;
};

class ScaleMap;

// The ground configuration: generator symbols for Gamma, an optional
// rational specialization, an optional unit element (an alpha with
// embed(alpha) = 1, required by the cohomology normalization), and the
// signed lexicographic group order.
class GammaConfig {
  public:
    GammaConfig(int rank, std::vector<std::string> generator_names);

    static GammaConfig from_json_text(const std::string& text);
    static GammaConfig integers();  // rank 1, g1 -> 1, unit (1)
    std::string to_json_text() const;
    std::string fingerprint() const;

    int rank() const { return rank_; }
    int nvars() const { return rank_; }
    const std::vector<std::string>& generator_names() const { return generator_names_; }
    bool specialized() const { return specialization_.has_value(); }
    const std::optional<std::vector<Rational>>& specialization() const { return specialization_; }
    const std::optional<GroupElement>& unit() const { return unit_; }

    void set_specialization(std::vector<Rational> values);
    void set_unit(GroupElement u);
    void set_order(std::vector<int> priority, std::vector<int> signs);

    Scalar zero() const { return small_int(0); }
    Scalar one() const { return small_int(1); }
    Scalar scalar(const Rational& q) const { return Scalar(rank_, q); }
    Scalar scalar(long q) const {
        if (q >= -16 && q <= 16) return small_int(q);
        return Scalar(rank_, Rational(q));
    }

    // The linear form sum n_k * g_k; collapses to a rational when a
    // specialization is configured.
    Scalar embed(const GroupElement& alpha) const;

    GroupElement zero_degree() const { return GroupElement(std::vector<int>(rank_, 0)); }
    GroupElement unit_vector(int k) const;

    // Signed lexicographic comparison under order_priority: -1, 0, +1.
    int compare(const GroupElement& a, const GroupElement& b) const;

    // Checks that embed separates all lattice points with coordinates
    // bounded by `bound` (automatic for symbolic generators).
    void check_injectivity(int bound) const;

  private:
    int rank_;
    std::vector<std::string> generator_names_;
    std::optional<std::vector<Rational>> specialization_;
    std::optional<GroupElement> unit_;
    std::vector<int> order_priority_;  // 0-based, most significant first
    std::vector<int> order_signs_;     // +-1 per priority slot

    // Embed results are memoized per thread, keyed by a process-unique
    // family id shared between copies of the same config.
    unsigned long cache_id_ = 0;

    Scalar small_int(long v) const;
    void invalidate_cache();
    void validate() const;
};

// A pair (c, M): a scalar and a unimodular integer matrix with
// c * embed(alpha) = embed(M alpha) for every alpha. Realizes a scalar
// c with c Gamma = Gamma as a lattice action.
class ScaleMap {
  public:
    ScaleMap(const GammaConfig& config, Scalar value, std::vector<std::vector<int>> matrix);
    static ScaleMap identity(const GammaConfig& config);

    const Scalar& value() const { return value_; }
    const std::vector<std::vector<int>>& matrix() const { return matrix_; }

    GroupElement apply(const GroupElement& alpha) const;
    ScaleMap compose(const ScaleMap& o) const;  // this after o
    ScaleMap inverse() const;

    bool operator==(const ScaleMap& o) const {
        return value_ == o.value_ && matrix_ == o.matrix_;
    }

  private:
    Scalar value_;
    std::vector<std::vector<int>> matrix_;

    ScaleMap(Scalar value, std::vector<std::vector<int>> matrix, bool skip_checks);
};

GroupElement scale_apply(const ScaleMap& m, const GroupElement& alpha);

long long int_matrix_det(const std::vector<std::vector<int>>& m);

// Finite verification domain: |degree coordinate| <= degree_bound,
// 0 <= level <= level_bound.
struct Window {
    int degree_bound;
    int level_bound;

    bool contains_degree(const GroupElement& alpha) const;
    bool contains(const GroupElement& alpha, int level) const {
        return contains_degree(alpha) && level >= 0 && level <= level_bound;
    }
    // All degrees in the box, sorted under the configured group order.
    std::vector<GroupElement> degrees(const GammaConfig& config) const;
};

}  // namespace wittkit
