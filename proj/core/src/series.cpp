#include "rquant/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "rquant/affine_solve.hpp"

namespace rquant {

HSeries::HSeries(std::vector<Op2> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("HSeries: at least one coefficient required");
  for (const auto& c : coeffs_) {
    if (c.dim() != coeffs_.front().dim()) throw std::invalid_argument("HSeries: coefficient dimension mismatch");
  }
}

HSeries HSeries::constant(const Op2& value, std::size_t order) {
  std::vector<Op2> coeffs(order + 1, Op2(value.dim()));
  coeffs[0] = value;
  return HSeries(std::move(coeffs));
}

HSeries HSeries::identity(std::size_t dim, std::size_t order) { return constant(Op2::identity(dim), order); }

std::size_t HSeries::h_degree() const {
  for (std::size_t n = coeffs_.size(); n-- > 0;) {
    if (!coeffs_[n].is_zero()) return n;
  }
  return 0;
}

HSeries HSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw std::invalid_argument("HSeries::truncated: order exceeds series order");
  return HSeries(std::vector<Op2>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
}

HSeries HSeries::extended(std::size_t order) const {
  std::vector<Op2> coeffs = coeffs_;
  while (coeffs.size() < order + 1) coeffs.emplace_back(dim());
  return HSeries(std::move(coeffs));
}

HSeries operator+(const HSeries& a, const HSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Op2> out;
  for (std::size_t i = 0; i <= n; ++i) out.push_back(a.coeff(i) + b.coeff(i));
  return HSeries(std::move(out));
}

HSeries operator-(const HSeries& a, const HSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Op2> out;
  for (std::size_t i = 0; i <= n; ++i) out.push_back(a.coeff(i) - b.coeff(i));
  return HSeries(std::move(out));
}

HSeries operator*(const HSeries& a, const HSeries& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("HSeries::operator*: dimension mismatch");
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Op2> out(n + 1, Op2(a.dim()));
  for (std::size_t p = 0; p <= n; ++p) {
    if (a.coeff(p).is_zero()) continue;
    for (std::size_t q = 0; p + q <= n; ++q) {
      if (b.coeff(q).is_zero()) continue;
      out[p + q] += compose(a.coeff(p), b.coeff(q));
    }
  }
  return HSeries(std::move(out));
}

HSeries series_inverse(const HSeries& a) {
  const std::size_t d = a.dim();
  const std::size_t side = d * d;
  const Op2& lead = a.coeff(0);
  if (!lead.is_rational()) throw std::domain_error("series_inverse: leading coefficient is not rational");
  std::vector<std::vector<Rational>> m(side, std::vector<Rational>(side));
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) m[r][c] = *lead.cell(r, c).constant_value();
  }
  const auto inv = invert_matrix(m);
  Op2 lead_inv(d);
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) lead_inv.cell(r, c) = Poly(inv[r][c]);
  }

  // b_0 = a_0^{-1},  b_n = -a_0^{-1} sum_{k=1..n} a_k b_{n-k}
  std::vector<Op2> out{lead_inv};
  for (std::size_t n = 1; n <= a.order(); ++n) {
    Op2 acc(d);
    for (std::size_t k = 1; k <= n; ++k) {
      if (!a.coeff(k).is_zero()) acc += compose(a.coeff(k), out[n - k]);
    }
    out.push_back(-compose(lead_inv, acc));
  }
  return HSeries(std::move(out));
}

HSeries mirror(const HSeries& a) {
  const HSeries inv = series_inverse(a);
  const Op2 p = permutation_P(a.dim());
  std::vector<Op2> out;
  for (const auto& c : inv.coeffs()) out.push_back(compose(p, compose(c, p)));
  return HSeries(std::move(out));
}

HSeries substitute_h_negation(const HSeries& a) {
  std::vector<Op2> out = a.coeffs();
  for (std::size_t n = 1; n < out.size(); n += 2) out[n] = -out[n];
  return HSeries(std::move(out));
}

HSeries substitute_params(const HSeries& a, const std::map<std::string, Poly>& bindings) {
  std::vector<Op2> out;
  for (const auto& c : a.coeffs()) out.push_back(substitute(c, bindings));
  return HSeries(std::move(out));
}

HSeries substitute_params(const HSeries& a, const std::map<std::string, Rational>& bindings) {
  std::map<std::string, Poly> as_polys;
  for (const auto& [name, value] : bindings) as_polys.emplace(name, Poly(value));
  return substitute_params(a, as_polys);
}

HSeries restrict_to(const HSeries& a, const std::vector<std::size_t>& basis) {
  std::vector<Op2> out;
  for (const auto& c : a.coeffs()) out.push_back(restrict_to(c, basis));
  return HSeries(std::move(out));
}

}  // namespace rquant
