#include "wittkit/completion.hpp"

#include <cassert>
#include <limits>
#include <sstream>

#include "wittkit/errors.hpp"

namespace wittkit {

namespace {
constexpr long kInf = std::numeric_limits<long>::max();

long series_valid(const DegreeSeries& s) { return s.exact ? kInf : s.valid_order; }
}  // namespace

Scalar DegreeSeries::coeff_at(const GammaConfig& config, long i) const {
    assert(i >= 0 && (exact || i <= valid_order));
    if (i < (long)coeffs.size()) return coeffs[i];
    return config.zero();
}

bool DegreeSeries::known_zero() const {
    for (const auto& c : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

CompletionElement CompletionElement::from_element(const GammaConfig& config, const Element& x) {
    if (x.has_central()) throw CentralTermPresent();
    CompletionElement out;
    for (const auto& [idx, c] : x.terms()) {
        auto& rec = out.records_[idx.degree];
        if ((long)rec.coeffs.size() <= idx.level)
            rec.coeffs.resize(idx.level + 1, config.zero());
        rec.coeffs[idx.level] = c;
        rec.exact = true;
    }
    for (auto& [d, rec] : out.records_) rec.valid_order = (long)rec.coeffs.size() - 1;
    out.normalize();
    return out;
}

CompletionElement CompletionElement::truncation(const GammaConfig& config, const Element& x,
                                                long order) {
    if (order < 0) throw Error("truncation order must be nonnegative");
    CompletionElement out = from_element(config, x);
    for (auto& [d, rec] : out.records_) {
        rec.exact = false;
        rec.valid_order = order;
        rec.coeffs.resize(order + 1, config.zero());
    }
    return out;
}

bool CompletionElement::is_zero() const {
    for (const auto& [d, rec] : records_)
        if (!rec.known_zero() || !rec.exact) return false;
    return records_.empty();
}

bool CompletionElement::is_exact() const {
    for (const auto& [d, rec] : records_)
        if (!rec.exact) return false;
    return true;
}

Element CompletionElement::known_part() const {
    Element e;
    for (const auto& [d, rec] : records_)
        for (long i = 0; i < (long)rec.coeffs.size(); ++i)
            e.set_term({d, (int)i}, rec.coeffs[i]);
    return e;
}

Element CompletionElement::to_element() const {
    if (!is_exact()) throw Error("completion element is not exact");
    return known_part();
}

void CompletionElement::set_record(const GroupElement& degree, DegreeSeries series) {
    if (series.valid_order < 0 && !series.exact)
        throw Error("valid_order must be nonnegative");
    if (series.coeffs.empty() && !series.exact)
        throw Error("inexact series needs at least the order-0 coefficient");
    records_[degree] = std::move(series);
    normalize();
}

std::optional<Scalar> CompletionElement::coeff(const GammaConfig& config,
                                               const GroupElement& degree, long level) const {
    auto it = records_.find(degree);
    if (it == records_.end()) return config.zero();
    if (!it->second.exact && level > it->second.valid_order) return std::nullopt;
    return it->second.coeff_at(config, level);
}

std::optional<long> CompletionElement::min_valid_order() const {
    std::optional<long> v;
    for (const auto& [d, rec] : records_) {
        if (rec.exact) continue;
        if (!v || rec.valid_order < *v) v = rec.valid_order;
    }
    return v;
}

void CompletionElement::normalize() {
    for (auto it = records_.begin(); it != records_.end();) {
        DegreeSeries& rec = it->second;
        if (rec.exact) {
            while (!rec.coeffs.empty() && rec.coeffs.back().is_zero()) rec.coeffs.pop_back();
            if (rec.coeffs.empty()) {
                it = records_.erase(it);
                continue;
            }
            rec.valid_order = (long)rec.coeffs.size() - 1;
        } else {
            // Inexact series carry explicit zeros up to their valid order.
            assert(!rec.coeffs.empty());
            Scalar zero(rec.coeffs[0].nvars(), Rational(0));
            rec.coeffs.resize(rec.valid_order + 1, zero);
        }
        ++it;
    }
}

CompletionElement CompletionElement::plus(const GammaConfig& config,
                                          const CompletionElement& o) const {
    CompletionElement out = *this;
    for (const auto& [d, rec] : o.records_) {
        auto it = out.records_.find(d);
        if (it == out.records_.end()) {
            out.records_.emplace(d, rec);
            continue;
        }
        DegreeSeries& mine = it->second;
        long v = std::min(series_valid(mine), series_valid(rec));
        DegreeSeries sum;
        sum.exact = v == kInf;
        long cap = sum.exact
                       ? (long)std::max(mine.coeffs.size(), rec.coeffs.size()) - 1
                       : v;
        sum.valid_order = cap;
        for (long i = 0; i <= cap; ++i) {
            Scalar a = i < (long)mine.coeffs.size() ? mine.coeffs[i] : config.zero();
            Scalar b = i < (long)rec.coeffs.size() ? rec.coeffs[i] : config.zero();
            sum.coeffs.push_back(a + b);
        }
        if (sum.coeffs.empty()) sum.coeffs.push_back(config.zero());
        mine = std::move(sum);
    }
    out.normalize();
    return out;
}

CompletionElement CompletionElement::operator-() const {
    CompletionElement out = *this;
    for (auto& [d, rec] : out.records_)
        for (auto& c : rec.coeffs) c = -c;
    return out;
}

CompletionElement CompletionElement::minus(const GammaConfig& config,
                                           const CompletionElement& o) const {
    return plus(config, -o);
}

CompletionElement CompletionElement::scaled(const Scalar& c) const {
    CompletionElement out = *this;
    for (auto& [d, rec] : out.records_)
        for (auto& v : rec.coeffs) v *= c;
    out.normalize();
    return out;
}

std::string CompletionElement::to_string(const GammaConfig& config) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, rec] : records_) {
        if (!first) os << "; ";
        first = false;
        Element part;
        for (long i = 0; i < (long)rec.coeffs.size(); ++i) part.set_term({d, (int)i}, rec.coeffs[i]);
        os << part.to_string(config);
        if (!rec.exact) os << " + O(" << d.to_string() << ", order " << rec.valid_order + 1 << ")";
    }
    if (first) os << "0";
    return os.str();
}

CompletionElement completion_bracket(const GammaConfig& config, const CompletionElement& x,
                                     const CompletionElement& y) {
    struct PairRef {
        const DegreeSeries* a;
        const DegreeSeries* b;
        Scalar degree_coeff;  // embed(beta) - embed(alpha)
    };
    std::map<GroupElement, std::vector<PairRef>> by_degree;
    for (const auto& [alpha, ra] : x.records()) {
        for (const auto& [beta, rb] : y.records()) {
            by_degree[alpha + beta].push_back(
                {&ra, &rb, config.embed(beta) - config.embed(alpha)});
        }
    }
    CompletionElement out;
    for (const auto& [gamma, pairs] : by_degree) {
        long valid = kInf;
        long exact_cap = 0;
        for (const auto& p : pairs) {
            valid = std::min(valid, std::min(series_valid(*p.a), series_valid(*p.b)));
            exact_cap = std::max(exact_cap,
                                 (long)p.a->coeffs.size() + (long)p.b->coeffs.size());
        }
        DegreeSeries rec;
        rec.exact = valid == kInf;
        long cap = rec.exact ? exact_cap : valid;
        rec.valid_order = cap;
        rec.coeffs.assign(cap + 1, config.zero());
        for (const auto& p : pairs) {
            const auto& A = p.a->coeffs;
            const auto& B = p.b->coeffs;
            for (long i = 0; i < (long)A.size(); ++i) {
                if (A[i].is_zero()) continue;
                for (long j = 0; j < (long)B.size(); ++j) {
                    if (B[j].is_zero()) continue;
                    Scalar prod = A[i] * B[j];
                    if (i + j <= cap && !p.degree_coeff.is_zero())
                        rec.coeffs[i + j] += prod * p.degree_coeff;
                    if (j != i && i + j + 1 <= cap)
                        rec.coeffs[i + j + 1] += prod * config.scalar(j - i);
                }
            }
        }
        out.records_.emplace(gamma, std::move(rec));
    }
    out.normalize();
    return out;
}

}  // namespace wittkit
