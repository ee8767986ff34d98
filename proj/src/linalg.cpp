#include "wittkit/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "wittkit/errors.hpp"

namespace wittkit {

namespace {

void axpy(SparseVec& v, const Scalar& c, const SparseVec& w) {
    if (c.is_zero()) return;
    for (const auto& [col, val] : w) {
        auto it = v.find(col);
        if (it == v.end()) {
            Scalar s = c * val;
            if (!s.is_zero()) v.emplace(col, std::move(s));
        } else {
            it->second += c * val;
            if (it->second.is_zero()) v.erase(it);
        }
    }
}

// The right-hand side lives on the largest column so that pivots always
// prefer genuine unknowns; a row reduced to the RHS column alone is the
// contradiction 0 = value.
constexpr int kRhsCol = std::numeric_limits<int>::max();

}  // namespace

SparseVec RowEchelon::reduce(SparseVec v, SparseVec* combination) const {
    if (combination) combination->clear();
    for (const auto& row : rows_) {
        auto it = v.find(row.pivot);
        if (it == v.end()) continue;
        Scalar c = it->second;  // row pivot is 1
        axpy(v, -c, row.v);
        v.erase(row.pivot);
        if (combination) axpy(*combination, c, row.prov);
    }
    return v;
}

bool RowEchelon::insert(SparseVec v, int id) {
    SparseVec prov;
    for (const auto& row : rows_) {
        auto it = v.find(row.pivot);
        if (it == v.end()) continue;
        Scalar c = it->second;
        axpy(v, -c, row.v);
        v.erase(row.pivot);
        if (track_provenance_) axpy(prov, -c, row.prov);
    }
    if (v.empty()) return false;
    if (track_provenance_ && id >= 0) {
        Scalar one(v.begin()->second.nvars(), Rational(1));
        auto it = prov.find(id);
        if (it == prov.end())
            prov.emplace(id, one);
        else
            it->second += one;
    }
    int pivot = v.begin()->first;
    Scalar inv = v.begin()->second.inverse();
    for (auto& [col, val] : v) val *= inv;
    for (auto& [eid, val] : prov) val *= inv;
    Row row{pivot, std::move(v), std::move(prov)};
    // Back-substitute into existing rows so the set stays mutually reduced.
    for (auto& r : rows_) {
        auto it = r.v.find(row.pivot);
        if (it == r.v.end()) continue;
        Scalar c = it->second;
        axpy(r.v, -c, row.v);
        r.v.erase(row.pivot);
        if (track_provenance_) axpy(r.prov, -c, row.prov);
    }
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), row,
                                [](const Row& a, const Row& b) { return a.pivot < b.pivot; });
    rows_.insert(pos, std::move(row));
    return true;
}

bool RowEchelon::contains(const SparseVec& v) const { return reduce(v).empty(); }

namespace {

bool subset_infeasible(const std::vector<LinearEquation>& equations,
                       const std::vector<int>& ids) {
    RowEchelon ech(false);
    for (const auto& eq : equations) {
        if (std::find(ids.begin(), ids.end(), eq.id) == ids.end()) continue;
        SparseVec v = eq.lhs;
        if (!eq.rhs.is_zero()) v.emplace(kRhsCol, eq.rhs);
        SparseVec reduced = ech.reduce(std::move(v));
        if (reduced.size() == 1 && reduced.begin()->first == kRhsCol) return true;
        ech.insert(std::move(reduced));
    }
    return false;
}

}  // namespace

LinearSolveResult solve_linear_system(const GammaConfig& config,
                                      const std::vector<LinearEquation>& equations,
                                      bool minimize_certificate) {
    LinearSolveResult result;
    RowEchelon ech(true);
    for (const auto& eq : equations) {
        SparseVec v = eq.lhs;
        if (!eq.rhs.is_zero()) v.emplace(kRhsCol, eq.rhs);
        SparseVec used;
        SparseVec reduced = ech.reduce(v, &used);
        if (reduced.size() == 1 && reduced.begin()->first == kRhsCol) {
            result.feasible = false;
            result.contradiction_value = reduced.begin()->second;
            SparseVec combo = used;
            for (auto& [id, c] : combo) c = -c;
            auto it = combo.find(eq.id);
            if (it == combo.end())
                combo.emplace(eq.id, config.one());
            else
                it->second += config.one();
            std::vector<int> ids;
            for (const auto& [id, c] : combo)
                if (!c.is_zero() && id >= 0) ids.push_back(id);
            std::sort(ids.begin(), ids.end());
            if (minimize_certificate) {
                for (size_t k = 0; k < ids.size();) {
                    std::vector<int> trial = ids;
                    trial.erase(trial.begin() + k);
                    if (subset_infeasible(equations, trial))
                        ids = std::move(trial);
                    else
                        ++k;
                }
            }
            result.certificate_ids = std::move(ids);
            return result;
        }
        // Insert the unreduced vector; insert() reduces again and keeps
        // the provenance consistent with the stored rows.
        ech.insert(std::move(v), eq.id);
    }
    result.feasible = true;
    // Rows are mutually reduced with normalized pivots: each row reads
    // x_pivot + sum_free a_j x_j = rhs_entry. Free unknowns are set to 0.
    for (const auto& row : ech.rows()) {
        if (row.pivot == kRhsCol) continue;  // cannot happen when feasible
        auto it = row.v.find(kRhsCol);
        result.solution[row.pivot] = it == row.v.end() ? config.zero() : it->second;
    }
    return result;
}

bool ElementSpan::insert(const Element& e, int id) {
    SparseVec v = to_vec(e, true, nullptr);
    return ech_.insert(std::move(v), id);
}

bool ElementSpan::contains(const Element& e) const {
    bool unknown = false;
    SparseVec v = to_vec_const(e, &unknown);
    if (unknown) return false;
    return ech_.contains(v);
}

std::optional<SparseVec> ElementSpan::express(const Element& e) const {
    bool unknown = false;
    SparseVec v = to_vec_const(e, &unknown);
    if (unknown) return std::nullopt;
    SparseVec combo;
    SparseVec residual = ech_.reduce(std::move(v), &combo);
    if (!residual.empty()) return std::nullopt;
    return combo;
}

SparseVec ElementSpan::to_vec(const Element& e, bool extend, bool* unknown_coordinate) {
    SparseVec v;
    for (const auto& [idx, c] : e.terms()) {
        auto it = index_of_.find(idx);
        if (it == index_of_.end()) {
            if (!extend) {
                if (unknown_coordinate) *unknown_coordinate = true;
                continue;
            }
            it = index_of_.emplace(idx, next_index_++).first;
        }
        v.emplace(it->second, c);
    }
    if (e.has_central()) {
        if (central_index_ < 0) {
            if (!extend) {
                if (unknown_coordinate) *unknown_coordinate = true;
                return v;
            }
            central_index_ = next_index_++;
        }
        v.emplace(central_index_, *e.central_opt());
    }
    return v;
}

SparseVec ElementSpan::to_vec_const(const Element& e, bool* unknown_coordinate) const {
    // extend=false leaves the index maps untouched.
    return const_cast<ElementSpan*>(this)->to_vec(e, false, unknown_coordinate);
}

int span_rank(const std::vector<Element>& elements) {
    ElementSpan span;
    for (const auto& e : elements) span.insert(e);
    return span.rank();
}

}  // namespace wittkit
