#include "rquant/verify.hpp"

#include <stdexcept>

namespace rquant {

namespace {

using Series3 = std::vector<Op3>;

Series3 lift_series(const HSeries& r, Op3 (*lift)(const Op2&)) {
  Series3 out;
  for (const auto& c : r.coeffs()) out.push_back(lift(c));
  return out;
}

Series3 multiply(const Series3& a, const Series3& b) {
  const std::size_t n = std::min(a.size(), b.size());
  Series3 out(n, Op3(a.front().dim()));
  for (std::size_t p = 0; p < n; ++p) {
    if (a[p].is_zero()) continue;
    for (std::size_t q = 0; p + q < n; ++q) {
      if (b[q].is_zero()) continue;
      out[p + q] += compose(a[p], b[q]);
    }
  }
  return out;
}

void record_op2(ResidualReport& report, std::size_t order, const Op2& residual) {
  const std::size_t d = residual.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < d; ++l) report.record({order, i, j, k, l}, residual.at(i, j, k, l));
      }
    }
  }
}

void record_series(ResidualReport& report, const HSeries& residual) {
  for (std::size_t n = 0; n <= residual.order(); ++n) record_op2(report, n, residual.coeff(n));
}

}  // namespace

void ResidualReport::record(std::vector<std::size_t> index, const Poly& value) {
  if (value.is_zero()) return;
  ++nonzero_entries;
  is_zero = false;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(Witness{std::move(index), value});
}

ResidualReport braid_residual(const HSeries& r) {
  const Series3 r12 = lift_series(r, lift12);
  const Series3 r23 = lift_series(r, lift23);
  const Series3 lhs = multiply(multiply(r12, r23), r12);
  const Series3 rhs = multiply(multiply(r23, r12), r23);

  ResidualReport report;
  report.identity = "braid";
  const std::size_t d = r.dim();
  for (std::size_t n = 0; n < lhs.size(); ++n) {
    const Op3 diff = lhs[n] - rhs[n];
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
          for (std::size_t a = 0; a < d; ++a) {
            for (std::size_t b = 0; b < d; ++b) {
              for (std::size_t c = 0; c < d; ++c) report.record({n, i, j, k, a, b, c}, diff.at({i, j, k}, {a, b, c}));
            }
          }
        }
      }
    }
  }
  return report;
}

ResidualReport cyb_residual(const ClassicalR& r) {
  const Op2& op = r.op;
  const std::size_t d = op.dim();
  // r^{ab}_{ij} is op.at(i, j, a, b).
  auto bracket = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t phi, std::size_t psi, std::size_t xi) {
    Poly sum = Poly(0);
    for (std::size_t s = 0; s < d; ++s) {
      const Poly& a = op.at(i, j, s, phi);
      if (!a.is_zero()) {
        const Poly& b = op.at(s, k, xi, psi);
        if (!b.is_zero()) sum += a * b;
      }
      const Poly& c = op.at(i, j, psi, s);
      if (!c.is_zero()) {
        const Poly& e = op.at(s, k, xi, phi);
        if (!e.is_zero()) sum += c * e;
      }
    }
    return sum;
  };

  ResidualReport report;
  report.identity = "cyb";
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t phi = 0; phi < d; ++phi) {
          for (std::size_t psi = 0; psi < d; ++psi) {
            for (std::size_t xi = 0; xi < d; ++xi) {
              Poly value = bracket(i, j, k, phi, psi, xi);
              value += bracket(j, k, i, psi, xi, phi);
              value += bracket(k, i, j, xi, phi, psi);
              report.record({i, j, k, phi, psi, xi}, value);
            }
          }
        }
      }
    }
  }
  return report;
}

ResidualReport involution_residual(const HSeries& r) {
  ResidualReport report;
  report.identity = "involution";
  record_series(report, r * r - HSeries::identity(r.dim(), r.order()));
  return report;
}

ResidualReport mirror_residual(const HSeries& r, const std::set<std::string>& flips) {
  std::map<std::string, Poly> negate;
  for (const auto& name : flips) negate.emplace(name, -Poly::variable(name));
  const HSeries expected = substitute_params(substitute_h_negation(r), negate);
  ResidualReport report;
  report.identity = "mirror";
  record_series(report, mirror(r) - expected);
  return report;
}

ResidualReport classical_skew_residual(const ClassicalR& r) {
  const Op2& op = r.op;
  const std::size_t d = op.dim();
  ResidualReport report;
  report.identity = "skew";
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < d; ++l) report.record({i, j, k, l}, op.at(i, j, k, l) + op.at(j, i, l, k));
      }
    }
  }
  const Op2 p = permutation_P(d);
  const bool operator_form_zero = (compose(p, compose(op, p)) + op).is_zero();
  if (operator_form_zero != report.is_zero) {
    throw std::logic_error("classical_skew_residual: entry-wise and operator forms disagree");
  }
  return report;
}

ClassicalLimit classical_limit(const HSeries& r) {
  if (r.order() < 1) throw std::invalid_argument("classical_limit: series must have order >= 1");
  return ClassicalLimit{r.coeff(0) == permutation_P(r.dim()), ClassicalR{r.coeff(1)}};
}

}  // namespace rquant
