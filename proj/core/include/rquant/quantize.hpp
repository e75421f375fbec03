#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rquant/affine_solve.hpp"
#include "rquant/series.hpp"
#include "rquant/verify.hpp"

namespace rquant {

/// Identities imposed while building R(h) = P + h r + ... . The braid
/// relation is always imposed.
struct ConstraintSet {
  bool involution = false;  // R(h)^2 = 1
  bool mirror = false;      // mirror(R)(h) = R(-h)
  /// Also stack a constraint's order n+1 equation into the order-n system
  /// whenever R_{n+1} drops out of it (always true for the braid relation,
  /// and for the mirror condition when n+1 is odd).
  bool lookahead = false;
};

enum class Constraint { kBraid, kInvolution, kMirror };

[[nodiscard]] std::string to_string(Constraint c);

/// Order-m coefficient of a constraint's defect, flattened:
///   braid:      sum_{a+b+c=m} R_a^12 R_b^23 R_c^12 - R_a^23 R_b^12 R_c^23
///   involution: sum_{a+b=m} R_a R_b - [m=0]
///   mirror:     sum_{a+b=m} (-1)^a P R_a P R_b - [m=0]
/// Coefficients beyond coeffs.size() count as zero. Braid rows are Op3
/// cells, the others Op2 cells, both in (output, input) row-major order.
[[nodiscard]] std::vector<Poly> constraint_expansion(Constraint c, std::span<const Op2> coeffs, std::size_t m);

/// Coefficient matrix of the unknown R_n in the order-m expansion, with
/// R_0 = P, R_1 = r and every other coefficient zero. Columns follow the
/// unknown's entries in (i, j, k, l) lexicographic order. Valid for
/// n >= 2 and m <= n + 1, where the expansion is affine in R_n.
[[nodiscard]] RationalMatrix constraint_block(Constraint c, const ClassicalR& r, std::size_t unknown_order,
                                              std::size_t equation_order);

struct OrderRecord {
  std::size_t order = 0;
  std::size_t equations = 0;
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  std::vector<std::string> new_parameters;
  /// Conditions on earlier parameters that must vanish for this order to be
  /// solvable. Never resolved automatically.
  std::vector<Poly> obstructions;
  /// R_n = particular + sum_k new_parameters[k] * kernel[k].
  Op2 particular;
  std::vector<Op2> kernel;
};

struct QuantizationResult {
  HSeries series;
  ConstraintSet constraints;
  std::vector<OrderRecord> per_order;
  std::size_t total_new_parameters = 0;
  /// Set when a nonzero constant obstruction ended the run; `series` then
  /// stops at the last order solved.
  bool stopped_early = false;

  [[nodiscard]] bool obstruction_free() const;
  [[nodiscard]] std::vector<std::string> parameters() const;
};

/// Solves the enabled constraints degree by degree in h for R_2 .. R_order,
/// starting from R_0 = P and R_1 = r. Each kernel direction of an order's
/// stacked linear system becomes a fresh parameter "p{n}_{k}".
/// Throws std::invalid_argument if order < 2 or r has non-rational entries.
[[nodiscard]] QuantizationResult quantize(const ClassicalR& r, std::size_t order, const ConstraintSet& constraints);

struct MembershipResult {
  bool member = false;
  /// Family parameter -> value (a polynomial in the candidate's parameters).
  std::map<std::string, Poly> bindings;
  // Rank of the bindings as functions of the candidate's parameters: the
  // number of independent directions the candidate sweeps out in the family.
  std::size_t free_directions = 0;
  /// On failure: (order, i, j, k, l) of an entry that cannot be matched, or
  /// the order alone when a recorded obstruction does not vanish.
  std::vector<std::size_t> witness_index;
  Poly witness_value;
  std::string reason;
};

/// Finds values of the family's parameters reproducing `candidate` exactly.
/// Throws std::invalid_argument if dim or order differ.
[[nodiscard]] MembershipResult membership_check(const QuantizationResult& result, const HSeries& candidate);

/// Free-parameter count against the expected dim(V) - 2 (involution and
/// mirror imposed) or dim(V) - 1 (involution only). The expectation is
/// compared, not enforced.
struct ParameterReport {
  std::size_t dim = 0;
  std::size_t order_reached = 0;
  std::size_t total_new_parameters = 0;
  std::vector<std::size_t> per_order_counts;
  std::optional<long> conjectured;
  bool agrees = false;
  bool obstruction_free = false;
  std::string constraint_label;
};

[[nodiscard]] ParameterReport parameter_report(const QuantizationResult& result, std::size_t dim);

}  // namespace rquant
