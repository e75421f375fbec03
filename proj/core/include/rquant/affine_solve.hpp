#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "rquant/poly.hpp"
#include "rquant/rational.hpp"

namespace rquant {

/// Sparse vector as (index, nonzero value) pairs in ascending index order.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Row-sparse rational matrix. Only nonzero entries are stored.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& dense);

  [[nodiscard]] std::size_t rows() const { return data_.size(); }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  [[nodiscard]] Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& value);
  [[nodiscard]] const SparseVector& row(std::size_t r) const { return data_[r]; }
  /// Replaces row r; entries must be sorted by column and nonzero.
  void set_row(std::size_t r, SparseVector row);

  /// Appends the rows of `below`; column counts must agree.
  void append_rows(const RationalMatrix& below);
  [[nodiscard]] bool is_zero() const;

  /// Exact matrix-vector product over polynomials.
  [[nodiscard]] std::vector<Poly> apply(std::span<const Poly> x) const;
  [[nodiscard]] std::vector<Rational> apply(std::span<const Rational> x) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<SparseVector> data_;
};

/// General solution of M x = rhs where M is rational and rhs has polynomial
/// entries. `particular` has free variables set to zero; it solves the system
/// exactly for every parameter value whenever `obstructions` is empty.
struct AffineSolution {
  std::vector<Poly> particular;
  /// Basis of null(M), one vector per free column in ascending column order.
  std::vector<std::vector<Rational>> kernel_basis;
  /// Basis of the left null space: f with f M = 0.
  std::vector<SparseVector> cokernel_functionals;
  /// Nonzero values f . rhs, one per offending functional.
  std::vector<Poly> obstructions;
  /// Index into cokernel_functionals for each obstruction.
  std::vector<std::size_t> obstruction_sources;
  std::size_t rank = 0;

  [[nodiscard]] bool consistent() const { return obstructions.empty(); }
};

/// Exact Gauss-Jordan elimination (pivot: first row, in original order, with
/// a nonzero entry in the current column). The right-hand side is split by
/// parameter monomials and every monomial's coefficient vector is solved with
/// the same row operations. Inconsistency is reported through
/// `obstructions`; nothing is thrown for it.
/// Throws std::invalid_argument if rhs.size() != m.rows().
[[nodiscard]] AffineSolution solve_affine(const RationalMatrix& m, std::span<const Poly> rhs);

/// Solves a square rational system A X = I. Throws std::domain_error when A is
/// singular.
[[nodiscard]] std::vector<std::vector<Rational>> invert_matrix(const std::vector<std::vector<Rational>>& a);

}  // namespace rquant
