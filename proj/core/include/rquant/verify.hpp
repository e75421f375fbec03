#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "rquant/series.hpp"

namespace rquant {

/// A classical r-matrix: the h^1 coefficient of a quantum R-matrix.
struct ClassicalR {
  Op2 op;

  [[nodiscard]] std::size_t dim() const { return op.dim(); }
  friend bool operator==(const ClassicalR&, const ClassicalR&) = default;
};

struct Witness {
  std::vector<std::size_t> index;
  Poly value;
};

/// Outcome of evaluating one identity entry by entry.
struct ResidualReport {
  static constexpr std::size_t kMaxWitnesses = 5;

  std::string identity;
  std::size_t nonzero_entries = 0;
  std::vector<Witness> witnesses;
  bool is_zero = true;

  /// Records one residual entry; zero values are ignored.
  void record(std::vector<std::size_t> index, const Poly& value);
};

/// R12 R23 R12 - R23 R12 R23 through the truncation order.
/// Witness index: (order, i, j, k, a, b, c) for input e_i e_j e_k and output
/// e_a e_b e_c.
[[nodiscard]] ResidualReport braid_residual(const HSeries& r);

/// Classical Yang-Baxter expression in its indexed cyclic-sum form, evaluated
/// for all d^6 index tuples. Witness index: (i, j, k, phi, psi, xi).
[[nodiscard]] ResidualReport cyb_residual(const ClassicalR& r);

/// R R - 1. Witness index: (order, i, j, k, l).
[[nodiscard]] ResidualReport involution_residual(const HSeries& r);

/// mirror(R) - R(-h) with the listed parameters negated as well.
[[nodiscard]] ResidualReport mirror_residual(const HSeries& r, const std::set<std::string>& flips = {});

/// r^{kl}_{ij} + r^{lk}_{ji}, cross-checked against P r P + r. Throws
/// std::logic_error if the two forms disagree on the verdict.
[[nodiscard]] ResidualReport classical_skew_residual(const ClassicalR& r);

struct ClassicalLimit {
  bool leading_is_permutation = false;
  ClassicalR r;
};

/// Reads P and r off the first two coefficients. Throws
/// std::invalid_argument when the series has order 0.
[[nodiscard]] ClassicalLimit classical_limit(const HSeries& r);

}  // namespace rquant
