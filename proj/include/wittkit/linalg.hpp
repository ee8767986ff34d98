#pragma once

#include <map>
#include <optional>
#include <vector>

#include "wittkit/element.hpp"

namespace wittkit {

using SparseVec = std::map<int, Scalar>;

// Incremental exact row echelon form over the scalar field, with optional
// provenance: each stored row remembers its expression as a combination of
// the inserted vectors.
class RowEchelon {
  public:
    explicit RowEchelon(bool track_provenance = false)
        : track_provenance_(track_provenance) {}

    // Reduces v against the rows. Returns the residual; when tracking,
    // *combination receives coefficients c_id with
    //   v = residual + sum c_id * inserted[id].
    SparseVec reduce(SparseVec v, SparseVec* combination = nullptr) const;

    // Inserts v (tagged id) if independent of the current rows.
    // Returns true when the rank grew.
    bool insert(SparseVec v, int id = -1);

    int rank() const { return (int)rows_.size(); }
    bool contains(const SparseVec& v) const;

    struct Row {
        int pivot;
        SparseVec v;     // pivot coefficient normalized to 1
        SparseVec prov;  // row as combination of inserted vectors
    };
    const std::vector<Row>& rows() const { return rows_; }

  private:
    std::vector<Row> rows_;  // sorted by pivot column
    bool track_provenance_;
};

// One linear equation sum_j lhs[j] x_j = rhs.
struct LinearEquation {
    SparseVec lhs;
    Scalar rhs;
    int id = -1;
};

struct LinearSolveResult {
    bool feasible = false;
    // Feasible: one exact solution, free unknowns set to zero.
    std::map<int, Scalar> solution;
    // Infeasible: ids of a minimal inconsistent subset, plus the combined
    // contradiction 0 = value it implies.
    std::vector<int> certificate_ids;
    Scalar contradiction_value;
};

// Exact elimination; when infeasible the certificate is shrunk greedily
// until irreducible (dropping any equation restores feasibility).
LinearSolveResult solve_linear_system(const GammaConfig& config,
                                      const std::vector<LinearEquation>& equations,
                                      bool minimize_certificate = true);

// Span of Elements, indexed over their basis terms (and central
// coordinate) as they appear.
class ElementSpan {
  public:
    explicit ElementSpan(bool track_provenance = false) : ech_(track_provenance) {}

    bool insert(const Element& e, int id = -1);
    bool contains(const Element& e) const;
    // Combination over inserted ids when e lies in the span.
    std::optional<SparseVec> express(const Element& e) const;
    int rank() const { return ech_.rank(); }

  private:
    std::map<BasisIndex, int> index_of_;
    int central_index_ = -1;
    int next_index_ = 0;
    RowEchelon ech_;

    SparseVec to_vec(const Element& e, bool extend, bool* unknown_coordinate);
    SparseVec to_vec_const(const Element& e, bool* unknown_coordinate) const;
};

// Rank of a family of elements.
int span_rank(const std::vector<Element>& elements);

}  // namespace wittkit
