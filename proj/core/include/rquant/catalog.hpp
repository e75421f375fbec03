#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "rquant/series.hpp"
#include "rquant/verify.hpp"

namespace rquant {

/// dim V = 2, one free parameter "theta" sitting at h^2 in the e1(x)e1 -> e0(x)e0
/// entry. Throws std::invalid_argument for truncation < 2.
[[nodiscard]] HSeries example1(std::size_t truncation = 2);

/// dim V = 3, one free parameter "lambda" at h^3; lambda - 1/4 is stored
/// expanded. Throws std::invalid_argument for truncation < 3.
[[nodiscard]] HSeries example2(std::size_t truncation = 3);

/// Flag-type classical r-matrix
///   r^{kl}_{ij} = (i - c) d^l_i d^k_{j-1} - (j - c) d^l_{i-1} d^k_j
/// evaluated literally; deltas with an out-of-range index vanish.
[[nodiscard]] ClassicalR flag_r(std::size_t dim, const Poly& c);

/// (dim - 1) / 2.
[[nodiscard]] Rational central_c(std::size_t dim);

struct CatalogEntry {
  std::string name;
  std::variant<HSeries, ClassicalR> object;
  std::vector<std::string> parameters;
  std::string provenance;
};

/// All named catalog objects at their default truncation, flag with dim 3
/// and symbolic c.
[[nodiscard]] std::vector<CatalogEntry> catalog_entries();

/// Entry-by-entry comparison of an extracted r against the literal flag
/// formula. Reported, never asserted: the two readings may differ by sign.
struct FlagComparison {
  enum class Relation { kEqual, kNegated, kOther };

  struct Row {
    std::size_t i, j, k, l;
    Poly extracted;
    Poly flag;
  };

  Relation relation = Relation::kOther;
  /// Every position where either operator is nonzero, in (i, j, k, l) order.
  std::vector<Row> rows;
};

[[nodiscard]] FlagComparison compare_with_flag(const ClassicalR& extracted, const Poly& c);
[[nodiscard]] std::string to_string(FlagComparison::Relation relation);

/// True when every nonzero entry sits at (k, l) = (j-1, i) or (j, i-1).
[[nodiscard]] bool has_flag_support(const ClassicalR& r);

}  // namespace rquant
