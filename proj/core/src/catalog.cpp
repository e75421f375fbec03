#include "rquant/catalog.hpp"

#include <stdexcept>

namespace rquant {

namespace {

// coefficient * h^order * (e_k (x) e_l) added to the image of e_i (x) e_j.
struct Term {
  std::size_t order, i, j, k, l;
  Poly coeff;
};

HSeries build(std::size_t dim, std::size_t truncation, const std::vector<Term>& terms) {
  std::vector<Op2> coeffs(truncation + 1, Op2(dim));
  for (const auto& t : terms) {
    if (t.order <= truncation) coeffs[t.order].at(t.i, t.j, t.k, t.l) += t.coeff;
  }
  return HSeries(std::move(coeffs));
}

}  // namespace

HSeries example1(std::size_t truncation) {
  if (truncation < 2) throw std::invalid_argument("example1: truncation must be at least 2");
  const Poly theta = Poly::variable("theta");
  return build(2, truncation,
               {
                   {0, 0, 0, 0, 0, 1},
                   // e0 e1 -> (e1 + h e0) e0
                   {0, 0, 1, 1, 0, 1},
                   {1, 0, 1, 0, 0, 1},
                   // e1 e0 -> e0 (e1 - h e0)
                   {0, 1, 0, 0, 1, 1},
                   {1, 1, 0, 0, 0, -1},
                   // e1 e1 -> e1 e1 + theta h^2 e0 e0
                   {0, 1, 1, 1, 1, 1},
                   {2, 1, 1, 0, 0, theta},
               });
}

HSeries example2(std::size_t truncation) {
  if (truncation < 3) throw std::invalid_argument("example2: truncation must be at least 3");
  const Poly lambda = Poly::variable("lambda");
  const Poly lambda_shift = lambda - Poly(Rational(1, 4));
  const Rational half(1, 2);
  return build(3, truncation,
               {
                   {0, 0, 0, 0, 0, 1},
                   // e0 e1 -> (e1 + h e0) e0
                   {0, 0, 1, 1, 0, 1},
                   {1, 0, 1, 0, 0, 1},
                   // e1 e0 -> e0 (e1 - h e0)
                   {0, 1, 0, 0, 1, 1},
                   {1, 1, 0, 0, 0, -1},
                   {0, 1, 1, 1, 1, 1},
                   // e0 e2 -> (e2 + h e1 + h^2/2 e0) e0
                   {0, 0, 2, 2, 0, 1},
                   {1, 0, 2, 1, 0, 1},
                   {2, 0, 2, 0, 0, half},
                   // e2 e0 -> e0 (e2 - h e1 + h^2/2 e0)
                   {0, 2, 0, 0, 2, 1},
                   {1, 2, 0, 0, 1, -1},
                   {2, 2, 0, 0, 0, half},
                   // e1 e2 -> e2 (e1 + h e0) + h^2 (1/2 e1 + lambda h e0) e0
                   {0, 1, 2, 2, 1, 1},
                   {1, 1, 2, 2, 0, 1},
                   {2, 1, 2, 1, 0, half},
                   {3, 1, 2, 0, 0, lambda},
                   // e2 e1 -> (e1 - h e0) e2 + h^2 e0 (1/2 e1 - lambda h e0)
                   {0, 2, 1, 1, 2, 1},
                   {1, 2, 1, 0, 2, -1},
                   {2, 2, 1, 0, 1, half},
                   {3, 2, 1, 0, 0, -lambda},
                   // e2 e2 -> e2 (e2 + h e1 + h^2/2 e0)
                   //          - h e1 (e2 + (lambda - 1/4) h^2 e0)
                   //          + h^2 e0 (1/2 e2 + (lambda - 1/4) h e1)
                   {0, 2, 2, 2, 2, 1},
                   {1, 2, 2, 2, 1, 1},
                   {2, 2, 2, 2, 0, half},
                   {1, 2, 2, 1, 2, -1},
                   {3, 2, 2, 1, 0, -lambda_shift},
                   {2, 2, 2, 0, 2, half},
                   {3, 2, 2, 0, 1, lambda_shift},
               });
}

ClassicalR flag_r(std::size_t dim, const Poly& c) {
  Op2 op(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      // (k, l) = (j - 1, i) carries (i - c); (k, l) = (j, i - 1) carries -(j - c).
      if (j >= 1) op.at(i, j, j - 1, i) += Poly(static_cast<long>(i)) - c;
      if (i >= 1) op.at(i, j, j, i - 1) -= Poly(static_cast<long>(j)) - c;
    }
  }
  return ClassicalR{std::move(op)};
}

Rational central_c(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("central_c: dimension must be positive");
  return Rational(static_cast<long>(dim) - 1, 2);
}

std::vector<CatalogEntry> catalog_entries() {
  return {
      {"example1", example1(), {"theta"}, "dim 2 R-matrix series, free parameter theta at h^2"},
      {"example2", example2(), {"lambda"}, "involutive mirror-symmetric R-matrix, dim 3, free parameter lambda at h^3"},
      {"flag", flag_r(3, Poly::variable("c")), {"c"}, "flag-type classical r-matrix, any dim, constant c"},
  };
}

FlagComparison compare_with_flag(const ClassicalR& extracted, const Poly& c) {
  const std::size_t d = extracted.dim();
  const ClassicalR flag = flag_r(d, c);
  FlagComparison out;
  bool equal = true;
  bool negated = true;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < d; ++l) {
          const Poly& x = extracted.op.at(i, j, k, l);
          const Poly& f = flag.op.at(i, j, k, l);
          if (x.is_zero() && f.is_zero()) continue;
          out.rows.push_back({i, j, k, l, x, f});
          equal = equal && x == f;
          negated = negated && x == -f;
        }
      }
    }
  }
  if (equal) {
    out.relation = FlagComparison::Relation::kEqual;
  } else if (negated) {
    out.relation = FlagComparison::Relation::kNegated;
  }
  return out;
}

std::string to_string(FlagComparison::Relation relation) {
  switch (relation) {
    case FlagComparison::Relation::kEqual:
      return "equal";
    case FlagComparison::Relation::kNegated:
      return "negated";
    case FlagComparison::Relation::kOther:
      break;
  }
  return "other";
}

bool has_flag_support(const ClassicalR& r) {
  const std::size_t d = r.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < d; ++l) {
          if (r.op.at(i, j, k, l).is_zero()) continue;
          const bool first = j >= 1 && k == j - 1 && l == i;
          const bool second = i >= 1 && k == j && l == i - 1;
          if (!first && !second) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace rquant
