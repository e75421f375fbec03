#include "rquant/operator.hpp"

#include <algorithm>
#include <stdexcept>

namespace rquant {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
  }
}

// Dense product over the matrix views, skipping zero entries of either factor.
template <typename Op>
void multiply_into(Op& out, const Op& a, const Op& b, std::size_t n) {
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t s = 0; s < n; ++s) {
      const Poly& lhs = a.cell(row, s);
      if (lhs.is_zero()) continue;
      const auto scalar = lhs.constant_value();
      for (std::size_t col = 0; col < n; ++col) {
        const Poly& rhs = b.cell(s, col);
        if (rhs.is_zero()) continue;
        if (scalar) {
          out.cell(row, col) += rhs * *scalar;
        } else {
          out.cell(row, col) += lhs * rhs;
        }
      }
    }
  }
}

}  // namespace

Op2::Op2(std::size_t dim) : dim_(dim), cells_(dim * dim * dim * dim) {
  if (dim == 0) throw std::invalid_argument("Op2: dimension must be positive");
}

Op2 Op2::identity(std::size_t dim) {
  Op2 out(dim);
  for (std::size_t p = 0; p < dim * dim; ++p) out.cell(p, p) = Poly(1);
  return out;
}

const Poly& Op2::at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
  if (i >= dim_ || j >= dim_ || k >= dim_ || l >= dim_) throw std::out_of_range("Op2::at: index out of range");
  return cell(k * dim_ + l, i * dim_ + j);
}

Poly& Op2::at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  if (i >= dim_ || j >= dim_ || k >= dim_ || l >= dim_) throw std::out_of_range("Op2::at: index out of range");
  return cell(k * dim_ + l, i * dim_ + j);
}

bool Op2::is_zero() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool Op2::is_rational() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const Poly& p) { return p.is_constant(); });
}

std::size_t Op2::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(cells_.begin(), cells_.end(), [](const Poly& p) { return !p.is_zero(); }));
}

Universe Op2::universe() const {
  Universe u = empty_universe();
  for (const auto& p : cells_) u = merge_universes(u, p.universe());
  return u;
}

Op2& Op2::operator+=(const Op2& o) {
  require_same_dim(dim_, o.dim_, "Op2::operator+");
  for (std::size_t n = 0; n < cells_.size(); ++n) {
    if (!o.cells_[n].is_zero()) cells_[n] += o.cells_[n];
  }
  return *this;
}

Op2& Op2::operator-=(const Op2& o) {
  require_same_dim(dim_, o.dim_, "Op2::operator-");
  for (std::size_t n = 0; n < cells_.size(); ++n) {
    if (!o.cells_[n].is_zero()) cells_[n] -= o.cells_[n];
  }
  return *this;
}

Op2& Op2::operator*=(const Rational& s) {
  for (auto& p : cells_) p *= s;
  return *this;
}

Op2 operator*(const Poly& s, const Op2& a) {
  return a.map([&s](const Poly& p) { return p.is_zero() ? p : s * p; });
}

Op3::Op3(std::size_t dim) : dim_(dim), cells_(dim * dim * dim * dim * dim * dim) {
  if (dim == 0) throw std::invalid_argument("Op3: dimension must be positive");
}

Op3 Op3::identity(std::size_t dim) {
  Op3 out(dim);
  for (std::size_t p = 0; p < out.side(); ++p) out.cell(p, p) = Poly(1);
  return out;
}

const Poly& Op3::at(std::array<std::size_t, 3> in, std::array<std::size_t, 3> out) const {
  for (std::size_t n = 0; n < 3; ++n) {
    if (in[n] >= dim_ || out[n] >= dim_) throw std::out_of_range("Op3::at: index out of range");
  }
  return cell((out[0] * dim_ + out[1]) * dim_ + out[2], (in[0] * dim_ + in[1]) * dim_ + in[2]);
}

Poly& Op3::at(std::array<std::size_t, 3> in, std::array<std::size_t, 3> out) {
  for (std::size_t n = 0; n < 3; ++n) {
    if (in[n] >= dim_ || out[n] >= dim_) throw std::out_of_range("Op3::at: index out of range");
  }
  return cell((out[0] * dim_ + out[1]) * dim_ + out[2], (in[0] * dim_ + in[1]) * dim_ + in[2]);
}

bool Op3::is_zero() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const Poly& p) { return p.is_zero(); });
}

Op3& Op3::operator+=(const Op3& o) {
  require_same_dim(dim_, o.dim_, "Op3::operator+");
  for (std::size_t n = 0; n < cells_.size(); ++n) {
    if (!o.cells_[n].is_zero()) cells_[n] += o.cells_[n];
  }
  return *this;
}

Op3& Op3::operator-=(const Op3& o) {
  require_same_dim(dim_, o.dim_, "Op3::operator-");
  for (std::size_t n = 0; n < cells_.size(); ++n) {
    if (!o.cells_[n].is_zero()) cells_[n] -= o.cells_[n];
  }
  return *this;
}

Op2 permutation_P(std::size_t dim) {
  Op2 p(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) p.at(i, j, j, i) = Poly(1);
  }
  return p;
}

Op2 compose(const Op2& a, const Op2& b) {
  require_same_dim(a.dim(), b.dim(), "compose");
  Op2 out(a.dim());
  multiply_into(out, a, b, a.dim() * a.dim());
  return out;
}

Op3 compose(const Op3& a, const Op3& b) {
  require_same_dim(a.dim(), b.dim(), "compose");
  Op3 out(a.dim());
  multiply_into(out, a, b, a.side());
  return out;
}

Op3 lift12(const Op2& a) {
  const std::size_t d = a.dim();
  Op3 out(d);
  for (std::size_t pin = 0; pin < d * d; ++pin) {
    for (std::size_t pout = 0; pout < d * d; ++pout) {
      const Poly& v = a.cell(pout, pin);
      if (v.is_zero()) continue;
      for (std::size_t z = 0; z < d; ++z) out.cell(pout * d + z, pin * d + z) = v;
    }
  }
  return out;
}

Op3 lift23(const Op2& a) {
  const std::size_t d = a.dim();
  Op3 out(d);
  for (std::size_t pin = 0; pin < d * d; ++pin) {
    for (std::size_t pout = 0; pout < d * d; ++pout) {
      const Poly& v = a.cell(pout, pin);
      if (v.is_zero()) continue;
      for (std::size_t x = 0; x < d; ++x) out.cell(x * d * d + pout, x * d * d + pin) = v;
    }
  }
  return out;
}

Op2 restrict_to(const Op2& a, const std::vector<std::size_t>& basis) {
  Op2 out(basis.size());
  const std::size_t n = basis.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) out.at(i, j, k, l) = a.at(basis[i], basis[j], basis[k], basis[l]);
      }
    }
  }
  return out;
}

Op2 substitute(const Op2& a, const std::map<std::string, Poly>& bindings) {
  return a.map([&bindings](const Poly& p) { return substitute(p, bindings); });
}

Op2 unit_op(std::size_t dim, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  Op2 out(dim);
  out.at(i, j, k, l) = Poly(1);
  return out;
}

}  // namespace rquant
