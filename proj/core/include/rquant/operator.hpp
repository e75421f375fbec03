#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "rquant/poly.hpp"

namespace rquant {

/// Linear operator on V (x) V with dim V = d. Entry (i, j, k, l) is the
/// coefficient of e_k (x) e_l in the image of e_i (x) e_j: the first upper
/// index labels the first output slot.
class Op2 {
 public:
  Op2() = default;
  /// The zero operator. Throws std::invalid_argument for dim == 0.
  explicit Op2(std::size_t dim);

  static Op2 identity(std::size_t dim);

  [[nodiscard]] std::size_t dim() const { return dim_; }

  [[nodiscard]] const Poly& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const;
  Poly& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l);

  /// Matrix view: row = output pair k*d + l, column = input pair i*d + j.
  [[nodiscard]] const Poly& cell(std::size_t out, std::size_t in) const { return cells_[out * dim_ * dim_ + in]; }
  Poly& cell(std::size_t out, std::size_t in) { return cells_[out * dim_ * dim_ + in]; }

  [[nodiscard]] bool is_zero() const;
  /// True when no parameter occurs in any entry.
  [[nodiscard]] bool is_rational() const;
  [[nodiscard]] std::size_t nonzero_count() const;
  /// Union of the entries' universes, in entry order.
  [[nodiscard]] Universe universe() const;

  /// Applies f to every entry.
  template <typename F>
  [[nodiscard]] Op2 map(F&& f) const {
    Op2 out(dim_);
    for (std::size_t n = 0; n < cells_.size(); ++n) out.cells_[n] = f(cells_[n]);
    return out;
  }

  Op2& operator+=(const Op2& o);
  Op2& operator-=(const Op2& o);
  Op2& operator*=(const Rational& s);
  friend Op2 operator+(Op2 a, const Op2& b) { return a += b; }
  friend Op2 operator-(Op2 a, const Op2& b) { return a -= b; }
  friend Op2 operator*(Op2 a, const Rational& s) { return a *= s; }
  friend Op2 operator*(const Rational& s, Op2 a) { return a *= s; }
  friend Op2 operator*(const Poly& s, const Op2& a);
  friend Op2 operator-(Op2 a) { return a *= Rational(-1); }

  friend bool operator==(const Op2& a, const Op2& b) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Poly> cells_;
};

/// Linear operator on V (x) V (x) V. Entry (i, j, k; a, b, c) is the
/// coefficient of e_a (x) e_b (x) e_c in the image of e_i (x) e_j (x) e_k.
class Op3 {
 public:
  Op3() = default;
  explicit Op3(std::size_t dim);

  static Op3 identity(std::size_t dim);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] std::size_t side() const { return dim_ * dim_ * dim_; }

  [[nodiscard]] const Poly& at(std::array<std::size_t, 3> in, std::array<std::size_t, 3> out) const;
  Poly& at(std::array<std::size_t, 3> in, std::array<std::size_t, 3> out);

  [[nodiscard]] const Poly& cell(std::size_t out, std::size_t in) const { return cells_[out * side() + in]; }
  Poly& cell(std::size_t out, std::size_t in) { return cells_[out * side() + in]; }

  [[nodiscard]] bool is_zero() const;

  Op3& operator+=(const Op3& o);
  Op3& operator-=(const Op3& o);
  friend Op3 operator+(Op3 a, const Op3& b) { return a += b; }
  friend Op3 operator-(Op3 a, const Op3& b) { return a -= b; }

  friend bool operator==(const Op3& a, const Op3& b) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Poly> cells_;
};

/// P(x (x) y) = y (x) x.
[[nodiscard]] Op2 permutation_P(std::size_t dim);

/// (a o b)(x) = a(b(x)). Throws std::invalid_argument on dimension mismatch.
[[nodiscard]] Op2 compose(const Op2& a, const Op2& b);
[[nodiscard]] Op3 compose(const Op3& a, const Op3& b);

/// a acting on slots 1,2 of V(x)V(x)V; identity on slot 3.
[[nodiscard]] Op3 lift12(const Op2& a);
/// a acting on slots 2,3; identity on slot 1.
[[nodiscard]] Op3 lift23(const Op2& a);

/// Restriction to the span of the given basis vectors (renumbered 0..n-1).
[[nodiscard]] Op2 restrict_to(const Op2& a, const std::vector<std::size_t>& basis);

[[nodiscard]] Op2 substitute(const Op2& a, const std::map<std::string, Poly>& bindings);

/// Unit operator with a single 1 at (i, j, k, l).
[[nodiscard]] Op2 unit_op(std::size_t dim, std::size_t i, std::size_t j, std::size_t k, std::size_t l);

}  // namespace rquant
