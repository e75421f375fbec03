#include "rquant/quantize.hpp"

#include <algorithm>
#include <stdexcept>

namespace rquant {

namespace {

std::vector<Poly> flatten(const Op2& op) {
  const std::size_t side = op.dim() * op.dim();
  std::vector<Poly> out;
  out.reserve(side * side);
  for (std::size_t row = 0; row < side; ++row) {
    for (std::size_t col = 0; col < side; ++col) out.push_back(op.cell(row, col));
  }
  return out;
}

std::vector<Poly> flatten(const Op3& op) {
  const std::size_t side = op.side();
  std::vector<Poly> out;
  out.reserve(side * side);
  for (std::size_t row = 0; row < side; ++row) {
    for (std::size_t col = 0; col < side; ++col) out.push_back(op.cell(row, col));
  }
  return out;
}

const Op2* coefficient(std::span<const Op2> coeffs, std::size_t n) {
  if (n >= coeffs.size() || coeffs[n].is_zero()) return nullptr;
  return &coeffs[n];
}

Op3 braid_expansion(std::span<const Op2> coeffs, std::size_t m) {
  const std::size_t d = coeffs.front().dim();
  const std::size_t top = std::min(m + 1, coeffs.size());
  std::vector<std::optional<Op3>> l12(top);
  std::vector<std::optional<Op3>> l23(top);
  for (std::size_t a = 0; a < top; ++a) {
    if (const Op2* c = coefficient(coeffs, a)) {
      l12[a] = lift12(*c);
      l23[a] = lift23(*c);
    }
  }
  Op3 out(d);
  for (std::size_t a = 0; a < top; ++a) {
    if (!l12[a]) continue;
    for (std::size_t b = 0; a + b <= m && b < top; ++b) {
      if (!l12[b]) continue;
      const std::size_t c = m - a - b;
      if (c >= top || !l12[c]) continue;
      out += compose(compose(*l12[a], *l23[b]), *l12[c]);
      out -= compose(compose(*l23[a], *l12[b]), *l23[c]);
    }
  }
  return out;
}

Op2 involution_expansion(std::span<const Op2> coeffs, std::size_t m) {
  const std::size_t d = coeffs.front().dim();
  Op2 out(d);
  for (std::size_t a = 0; a <= m; ++a) {
    const Op2* x = coefficient(coeffs, a);
    const Op2* y = coefficient(coeffs, m - a);
    if (x && y) out += compose(*x, *y);
  }
  if (m == 0) out -= Op2::identity(d);
  return out;
}

Op2 mirror_expansion(std::span<const Op2> coeffs, std::size_t m) {
  const std::size_t d = coeffs.front().dim();
  const Op2 p = permutation_P(d);
  Op2 out(d);
  for (std::size_t a = 0; a <= m; ++a) {
    const Op2* x = coefficient(coeffs, a);
    const Op2* y = coefficient(coeffs, m - a);
    if (!x || !y) continue;
    Op2 term = compose(compose(p, compose(*x, p)), *y);
    if (a % 2 == 1) term = -term;
    out += term;
  }
  if (m == 0) out -= Op2::identity(d);
  return out;
}

std::string join_constraints(const ConstraintSet& c) {
  std::string out = "braid";
  if (c.involution) out += "+involution";
  if (c.mirror) out += "+mirror";
  return out;
}

// Many cokernel functionals give the same condition up to sign or scale.
std::vector<Poly> distinct_up_to_scale(const std::vector<Poly>& polys) {
  std::vector<Poly> out;
  std::vector<Poly> seen;
  for (const auto& p : polys) {
    const Poly monic = p * (Rational(1) / p.terms().front().coeff);
    if (std::find(seen.begin(), seen.end(), monic) != seen.end()) continue;
    seen.push_back(monic);
    out.push_back(p);
  }
  return out;
}

std::size_t binding_rank(const std::map<std::string, Poly>& bindings) {
  std::vector<Poly> values;
  for (const auto& [name, value] : bindings) values.push_back(value);
  if (values.empty()) return 0;
  unify_universes(values);
  std::vector<Monomial> columns;
  std::vector<SparseVector> rows;
  for (const auto& v : values) {
    SparseVector row;
    for (const auto& term : v.terms()) {
      if (term.monomial.is_one()) continue;
      auto it = std::find(columns.begin(), columns.end(), term.monomial);
      const auto col = static_cast<std::size_t>(it - columns.begin());
      if (it == columns.end()) columns.push_back(term.monomial);
      row.emplace_back(col, term.coeff);
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    rows.push_back(std::move(row));
  }
  if (columns.empty()) return 0;
  RationalMatrix m(rows.size(), columns.size());
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, std::move(rows[r]));
  const std::vector<Poly> zeros(m.rows());
  return solve_affine(m, zeros).rank;
}

}  // namespace

std::string to_string(Constraint c) {
  switch (c) {
    case Constraint::kBraid:
      return "braid";
    case Constraint::kInvolution:
      return "involution";
    case Constraint::kMirror:
      return "mirror";
  }
  return "unknown";
}

std::vector<Poly> constraint_expansion(Constraint c, std::span<const Op2> coeffs, std::size_t m) {
  if (coeffs.empty()) throw std::invalid_argument("constraint_expansion: no coefficients");
  switch (c) {
    case Constraint::kBraid:
      return flatten(braid_expansion(coeffs, m));
    case Constraint::kInvolution:
      return flatten(involution_expansion(coeffs, m));
    case Constraint::kMirror:
      return flatten(mirror_expansion(coeffs, m));
  }
  throw std::invalid_argument("constraint_expansion: unknown constraint");
}

RationalMatrix constraint_block(Constraint c, const ClassicalR& r, std::size_t unknown_order,
                                std::size_t equation_order) {
  if (unknown_order < 2 || equation_order > unknown_order + 1) {
    throw std::invalid_argument("constraint_block: requires unknown order >= 2 and equation order <= unknown order + 1");
  }
  const std::size_t d = r.dim();
  std::vector<Op2> coeffs(unknown_order + 1, Op2(d));
  coeffs[0] = permutation_P(d);
  coeffs[1] = r.op;
  const std::vector<Poly> base =
      constraint_expansion(c, std::span<const Op2>(coeffs).first(unknown_order), equation_order);

  const std::size_t unknowns = d * d * d * d;
  RationalMatrix block(base.size(), unknowns);
  std::vector<SparseVector> rows(base.size());
  std::size_t u = 0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < d; ++l, ++u) {
          coeffs[unknown_order] = unit_op(d, i, j, k, l);
          const std::vector<Poly> with_unit = constraint_expansion(c, coeffs, equation_order);
          for (std::size_t row = 0; row < base.size(); ++row) {
            const Poly delta = with_unit[row] - base[row];
            if (delta.is_zero()) continue;
            const auto value = delta.constant_value();
            if (!value) throw std::logic_error("constraint_block: coefficient depends on parameters");
            rows[row].emplace_back(u, *value);
          }
        }
      }
    }
  }
  for (std::size_t row = 0; row < rows.size(); ++row) block.set_row(row, std::move(rows[row]));
  return block;
}

bool QuantizationResult::obstruction_free() const {
  return !stopped_early && std::all_of(per_order.begin(), per_order.end(),
                                       [](const OrderRecord& rec) { return rec.obstructions.empty(); });
}

std::vector<std::string> QuantizationResult::parameters() const {
  std::vector<std::string> out;
  for (const auto& rec : per_order) out.insert(out.end(), rec.new_parameters.begin(), rec.new_parameters.end());
  return out;
}

QuantizationResult quantize(const ClassicalR& r, std::size_t order, const ConstraintSet& constraints) {
  if (order < 2) throw std::invalid_argument("quantize: truncation order must be at least 2");
  if (!r.op.is_rational()) throw std::invalid_argument("quantize: classical r-matrix must have rational entries");
  const std::size_t d = r.dim();

  std::vector<Constraint> active{Constraint::kBraid};
  if (constraints.involution) active.push_back(Constraint::kInvolution);
  if (constraints.mirror) active.push_back(Constraint::kMirror);

  QuantizationResult result;
  result.constraints = constraints;
  std::vector<Op2> coeffs{permutation_P(d), r.op};

  // Orders 0 and 1 involve only P and r.
  {
    OrderRecord rec;
    rec.order = 1;
    rec.particular = r.op;
    for (const Constraint c : active) {
      for (std::size_t m = 0; m <= 1; ++m) {
        for (auto& value : constraint_expansion(c, coeffs, m)) {
          if (!value.is_zero()) rec.obstructions.push_back(std::move(value));
        }
      }
    }
    if (!rec.obstructions.empty()) {
      result.per_order.push_back(std::move(rec));
      result.series = HSeries(coeffs);
      result.stopped_early = true;
      return result;
    }
  }

  std::map<std::pair<Constraint, std::size_t>, bool> leading_zero_cache;
  auto leading_block_zero = [&](Constraint c, std::size_t m) {
    const auto key = std::make_pair(c, m);
    auto it = leading_zero_cache.find(key);
    if (it == leading_zero_cache.end()) it = leading_zero_cache.emplace(key, constraint_block(c, r, m, m).is_zero()).first;
    return it->second;
  };

  Universe universe = empty_universe();
  for (std::size_t n = 2; n <= order; ++n) {
    RationalMatrix system(0, d * d * d * d);
    std::vector<Poly> rhs;
    for (const Constraint c : active) {
      std::vector<std::size_t> orders;
      if (!(constraints.lookahead && n >= 3 && leading_block_zero(c, n))) orders.push_back(n);
      if (constraints.lookahead && leading_block_zero(c, n + 1)) orders.push_back(n + 1);
      for (const std::size_t m : orders) {
        system.append_rows(constraint_block(c, r, n, m));
        for (auto& known : constraint_expansion(c, coeffs, m)) rhs.push_back(-known);
      }
    }

    const AffineSolution sol = solve_affine(system, rhs);

    OrderRecord rec;
    rec.order = n;
    rec.equations = system.rows();
    rec.rank = sol.rank;
    rec.kernel_dim = sol.kernel_basis.size();
    rec.obstructions = distinct_up_to_scale(sol.obstructions);

    std::vector<std::string> names = *universe;
    for (std::size_t k = 0; k < sol.kernel_basis.size(); ++k) {
      rec.new_parameters.push_back("p" + std::to_string(n) + "_" + std::to_string(k));
      names.push_back(rec.new_parameters.back());
    }
    if (!rec.new_parameters.empty()) universe = make_universe(std::move(names));

    rec.particular = Op2(d);
    Op2 next(d);
    std::size_t u = 0;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
          for (std::size_t l = 0; l < d; ++l, ++u) {
            rec.particular.at(i, j, k, l) = sol.particular[u];
            Poly entry = sol.particular[u].with_universe(universe);
            for (std::size_t q = 0; q < sol.kernel_basis.size(); ++q) {
              const Rational& w = sol.kernel_basis[q][u];
              if (!w.is_zero()) entry += Poly::variable(rec.new_parameters[q], universe) * w;
            }
            next.at(i, j, k, l) = std::move(entry);
          }
        }
      }
    }
    for (const auto& kvec : sol.kernel_basis) {
      Op2 dir(d);
      u = 0;
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          for (std::size_t k = 0; k < d; ++k) {
            for (std::size_t l = 0; l < d; ++l, ++u) dir.at(i, j, k, l) = Poly(kvec[u]);
          }
        }
      }
      rec.kernel.push_back(std::move(dir));
    }

    const bool fatal = std::any_of(rec.obstructions.begin(), rec.obstructions.end(),
                                   [](const Poly& p) { return p.is_constant() && !p.is_zero(); });
    result.total_new_parameters += rec.kernel_dim;
    result.per_order.push_back(std::move(rec));
    if (fatal) {
      result.stopped_early = true;
      break;
    }
    for (auto& c : coeffs) c = c.map([&universe](const Poly& p) { return p.with_universe(universe); });
    coeffs.push_back(std::move(next));
  }
  result.series = HSeries(std::move(coeffs));
  return result;
}

MembershipResult membership_check(const QuantizationResult& result, const HSeries& candidate) {
  const HSeries& family = result.series;
  if (family.dim() != candidate.dim() || family.order() != candidate.order()) {
    throw std::invalid_argument("membership_check: dimension or order mismatch");
  }
  const std::size_t d = family.dim();
  MembershipResult out;

  auto fail_entry = [&](std::size_t n, std::size_t flat, const Poly& value, std::string reason) {
    const std::size_t i = flat / (d * d * d);
    const std::size_t j = (flat / (d * d)) % d;
    const std::size_t k = (flat / d) % d;
    const std::size_t l = flat % d;
    out.member = false;
    out.witness_index = {n, i, j, k, l};
    out.witness_value = value;
    out.reason = std::move(reason);
    return out;
  };

  for (std::size_t n = 0; n <= std::min<std::size_t>(1, family.order()); ++n) {
    std::size_t flat = 0;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
          for (std::size_t l = 0; l < d; ++l, ++flat) {
            const Poly diff = candidate.coeff(n).at(i, j, k, l) - family.coeff(n).at(i, j, k, l);
            if (!diff.is_zero()) return fail_entry(n, flat, diff, "fixed coefficient differs");
          }
        }
      }
    }
  }

  for (const auto& rec : result.per_order) {
    if (rec.order < 2) continue;
    const std::size_t n = rec.order;
    std::vector<Poly> rhs;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
          for (std::size_t l = 0; l < d; ++l) {
            rhs.push_back(candidate.coeff(n).at(i, j, k, l) - substitute(rec.particular.at(i, j, k, l), out.bindings));
          }
        }
      }
    }
    RationalMatrix directions(rhs.size(), rec.kernel.size());
    for (std::size_t q = 0; q < rec.kernel.size(); ++q) {
      const Op2& dir = rec.kernel[q];
      std::size_t flat = 0;
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          for (std::size_t k = 0; k < d; ++k) {
            for (std::size_t l = 0; l < d; ++l, ++flat) {
              if (!dir.at(i, j, k, l).is_zero()) directions.set(flat, q, *dir.at(i, j, k, l).constant_value());
            }
          }
        }
      }
    }
    const AffineSolution sol = solve_affine(directions, rhs);
    if (!sol.consistent()) {
      const auto& functional = sol.cokernel_functionals[sol.obstruction_sources.front()];
      return fail_entry(n, functional.front().first, sol.obstructions.front(), "no parameter values match this order");
    }
    for (std::size_t q = 0; q < rec.new_parameters.size(); ++q) {
      out.bindings.emplace(rec.new_parameters[q], sol.particular[q]);
    }
  }

  for (const auto& rec : result.per_order) {
    for (const auto& obstruction : rec.obstructions) {
      const Poly value = substitute(obstruction, out.bindings);
      if (!value.is_zero()) {
        out.member = false;
        out.witness_index = {rec.order};
        out.witness_value = value;
        out.reason = "side condition does not vanish at the matching parameters";
        return out;
      }
    }
  }
  out.member = true;
  out.free_directions = binding_rank(out.bindings);
  return out;
}

ParameterReport parameter_report(const QuantizationResult& result, std::size_t dim) {
  ParameterReport report;
  report.dim = dim;
  report.order_reached = result.series.order();
  report.total_new_parameters = result.total_new_parameters;
  report.obstruction_free = result.obstruction_free();
  report.constraint_label = join_constraints(result.constraints);
  for (const auto& rec : result.per_order) {
    if (rec.order >= 2) report.per_order_counts.push_back(rec.kernel_dim);
  }
  const long d = static_cast<long>(dim);
  if (result.constraints.involution && result.constraints.mirror) {
    report.conjectured = d - 2;
  } else if (result.constraints.involution) {
    report.conjectured = d - 1;
  }
  report.agrees = report.conjectured && static_cast<long>(report.total_new_parameters) == *report.conjectured;
  return report;
}

}  // namespace rquant
