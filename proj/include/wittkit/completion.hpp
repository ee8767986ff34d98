#pragma once

#include <map>
#include <optional>

#include "wittkit/element.hpp"

namespace wittkit {

// Per-degree level series of a completion element. `coeffs[i]` is the
// coefficient of L(degree, i). When `exact` every coefficient above the
// stored range is zero; otherwise only orders <= valid_order are known.
struct DegreeSeries {
    std::vector<Scalar> coeffs;
    long valid_order = 0;
    bool exact = false;

    Scalar coeff_at(const GammaConfig& config, long i) const;
    bool known_zero() const;
};

// Element of the completion: finite support in Gamma, with a possibly
// truncated level series per degree. Ordinary elements embed with every
// degree record exact.
class CompletionElement {
  public:
    CompletionElement() = default;

    static CompletionElement from_element(const GammaConfig& config, const Element& x);
    // Truncation of x: per-degree series known only up to `order`.
    static CompletionElement truncation(const GammaConfig& config, const Element& x, long order);

    const std::map<GroupElement, DegreeSeries>& records() const { return records_; }
    bool is_zero() const;
    bool is_exact() const;
    // The known part as an ordinary Element (exact records in full,
    // inexact ones up to their valid order).
    Element known_part() const;
    // Requires is_exact().
    Element to_element() const;

    void set_record(const GroupElement& degree, DegreeSeries series);
    std::optional<Scalar> coeff(const GammaConfig& config, const GroupElement& degree,
                                long level) const;
    // Least valid order over stored degrees; nullopt when everything is exact.
    std::optional<long> min_valid_order() const;

    CompletionElement plus(const GammaConfig& config, const CompletionElement& o) const;
    CompletionElement minus(const GammaConfig& config, const CompletionElement& o) const;
    CompletionElement operator-() const;
    CompletionElement scaled(const Scalar& c) const;

    bool operator==(const CompletionElement& o) const { return records_ == o.records_; }

    std::string to_string(const GammaConfig& config) const;

  private:
    std::map<GroupElement, DegreeSeries> records_;
    void normalize();

    friend CompletionElement completion_bracket(const GammaConfig& config,
                                                const CompletionElement& x,
                                                const CompletionElement& y);
};

inline bool operator==(const DegreeSeries& a, const DegreeSeries& b) {
    return a.exact == b.exact && (a.exact || a.valid_order == b.valid_order) &&
           a.coeffs == b.coeffs;
}

// Bracket on the completion. Coefficients of the result are computed
// wherever the operands determine them: order m at an output degree needs
// operand coefficients at orders i+j in {m-1, m} only, so each
// contributing degree pair is valid to min of the operand valid orders.
CompletionElement completion_bracket(const GammaConfig& config, const CompletionElement& x,
                                     const CompletionElement& y);

}  // namespace wittkit
