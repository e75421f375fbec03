#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "rquant/operator.hpp"

namespace rquant {

/// Truncated power series in h with Op2 coefficients, h^0 .. h^order.
class HSeries {
 public:
  HSeries() = default;
  /// Throws std::invalid_argument if `coeffs` is empty or dims differ.
  explicit HSeries(std::vector<Op2> coeffs);

  static HSeries constant(const Op2& value, std::size_t order);
  static HSeries identity(std::size_t dim, std::size_t order);

  [[nodiscard]] std::size_t dim() const { return coeffs_.front().dim(); }
  [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
  [[nodiscard]] const Op2& coeff(std::size_t n) const { return coeffs_.at(n); }
  Op2& coeff(std::size_t n) { return coeffs_.at(n); }
  [[nodiscard]] const std::vector<Op2>& coeffs() const { return coeffs_; }

  /// Highest n with a nonzero coefficient; 0 for a zero series.
  [[nodiscard]] std::size_t h_degree() const;

  /// Drops coefficients above `order`. Throws if order exceeds this series'.
  [[nodiscard]] HSeries truncated(std::size_t order) const;
  /// Pads with zero coefficients up to `order` (exact for polynomial series).
  [[nodiscard]] HSeries extended(std::size_t order) const;

  friend HSeries operator+(const HSeries& a, const HSeries& b);
  friend HSeries operator-(const HSeries& a, const HSeries& b);
  /// Cauchy product truncated to the smaller order.
  friend HSeries operator*(const HSeries& a, const HSeries& b);

  friend bool operator==(const HSeries& a, const HSeries& b) = default;

 private:
  std::vector<Op2> coeffs_;
};

/// Multiplicative inverse through the truncation order. Requires a rational
/// invertible leading coefficient; throws std::domain_error otherwise.
[[nodiscard]] HSeries series_inverse(const HSeries& a);

/// P o a^{-1} o P, the operator sending R(e_i (x) e_j) back to e_j (x) e_i with
/// its slots mirrored.
[[nodiscard]] HSeries mirror(const HSeries& a);

/// h -> -h.
[[nodiscard]] HSeries substitute_h_negation(const HSeries& a);

[[nodiscard]] HSeries substitute_params(const HSeries& a, const std::map<std::string, Poly>& bindings);
[[nodiscard]] HSeries substitute_params(const HSeries& a, const std::map<std::string, Rational>& bindings);

[[nodiscard]] HSeries restrict_to(const HSeries& a, const std::vector<std::size_t>& basis);

}  // namespace rquant
