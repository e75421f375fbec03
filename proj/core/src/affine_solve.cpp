#include "rquant/affine_solve.hpp"

#include <algorithm>
#include <stdexcept>

namespace rquant {

namespace {

// dst -= factor * src
void subtract_scaled(SparseVector& dst, const Rational& factor, const SparseVector& src) {
  SparseVector out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(std::move(dst[i++]));
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, -(factor * src[j].second));
      ++j;
    } else {
      Rational v = dst[i].second - factor * src[j].second;
      if (!v.is_zero()) out.emplace_back(dst[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

const Rational* find_entry(const SparseVector& v, std::size_t index) {
  const auto it = std::lower_bound(v.begin(), v.end(), index,
                                   [](const auto& entry, std::size_t i) { return entry.first < i; });
  if (it == v.end() || it->first != index) return nullptr;
  return &it->second;
}

Poly combine(const SparseVector& f, std::span<const Poly> values) {
  Poly out = Poly(0);
  for (const auto& [idx, weight] : f) {
    if (!values[idx].is_zero()) out += values[idx] * weight;
  }
  return out;
}

}  // namespace

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, Rational(1));
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& dense) {
  const std::size_t cols = dense.empty() ? 0 : dense.front().size();
  RationalMatrix m(dense.size(), cols);
  for (std::size_t r = 0; r < dense.size(); ++r) {
    if (dense[r].size() != cols) throw std::invalid_argument("RationalMatrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!dense[r][c].is_zero()) m.data_[r].emplace_back(c, dense[r][c]);
    }
  }
  return m;
}

Rational RationalMatrix::at(std::size_t r, std::size_t c) const {
  const Rational* v = find_entry(data_.at(r), c);
  return v ? *v : Rational(0);
}

void RationalMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
  if (c >= cols_) throw std::out_of_range("RationalMatrix: column out of range");
  auto& row = data_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t i) { return e.first < i; });
  if (it != row.end() && it->first == c) {
    if (value.is_zero()) {
      row.erase(it);
    } else {
      it->second = value;
    }
  } else if (!value.is_zero()) {
    row.insert(it, {c, value});
  }
}

void RationalMatrix::set_row(std::size_t r, SparseVector row) {
  if (!row.empty() && row.back().first >= cols_) throw std::out_of_range("RationalMatrix: column out of range");
  data_.at(r) = std::move(row);
}

void RationalMatrix::append_rows(const RationalMatrix& below) {
  if (rows() == 0) cols_ = below.cols_;
  if (below.cols_ != cols_) throw std::invalid_argument("RationalMatrix: column count mismatch");
  data_.insert(data_.end(), below.data_.begin(), below.data_.end());
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const SparseVector& r) { return r.empty(); });
}

std::vector<Poly> RationalMatrix::apply(std::span<const Poly> x) const {
  if (x.size() != cols_) throw std::invalid_argument("RationalMatrix::apply: size mismatch");
  std::vector<Poly> out(rows());
  for (std::size_t r = 0; r < rows(); ++r) out[r] = combine(data_[r], x);
  return out;
}

std::vector<Rational> RationalMatrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw std::invalid_argument("RationalMatrix::apply: size mismatch");
  std::vector<Rational> out(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (const auto& [c, v] : data_[r]) out[r] += v * x[c];
  }
  return out;
}

AffineSolution solve_affine(const RationalMatrix& m, std::span<const Poly> rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve_affine: rhs length does not match matrix rows");
  const std::size_t nrows = m.rows();
  const std::size_t ncols = m.cols();

  std::vector<Poly> values(rhs.begin(), rhs.end());
  unify_universes(values);

  // Rows in the working set carry their reduced form and the combination of
  // original rows that produced it. All-zero rows never enter elimination.
  std::vector<SparseVector> reduced;
  std::vector<SparseVector> combo;
  AffineSolution sol;
  for (std::size_t r = 0; r < nrows; ++r) {
    if (m.row(r).empty()) {
      sol.cokernel_functionals.push_back(SparseVector{{r, Rational(1)}});
      continue;
    }
    reduced.push_back(m.row(r));
    combo.push_back(SparseVector{{r, Rational(1)}});
  }

  std::vector<bool> is_pivot_row(reduced.size(), false);
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (column, working row)
  std::vector<bool> is_pivot_col(ncols, false);
  for (std::size_t col = 0; col < ncols; ++col) {
    std::size_t prow = reduced.size();
    for (std::size_t r = 0; r < reduced.size(); ++r) {
      if (!is_pivot_row[r] && !reduced[r].empty() && reduced[r].front().first == col) {
        prow = r;
        break;
      }
    }
    if (prow == reduced.size()) continue;

    const Rational scale = inverse(reduced[prow].front().second);
    for (auto& [c, v] : reduced[prow]) v *= scale;
    for (auto& [c, v] : combo[prow]) v *= scale;
    for (std::size_t r = 0; r < reduced.size(); ++r) {
      if (r == prow) continue;
      const Rational* entry = find_entry(reduced[r], col);
      if (entry == nullptr) continue;
      const Rational factor = *entry;
      subtract_scaled(reduced[r], factor, reduced[prow]);
      subtract_scaled(combo[r], factor, combo[prow]);
    }
    is_pivot_row[prow] = true;
    is_pivot_col[col] = true;
    pivots.emplace_back(col, prow);
  }
  sol.rank = pivots.size();

  for (std::size_t r = 0; r < reduced.size(); ++r) {
    if (!is_pivot_row[r]) sol.cokernel_functionals.push_back(std::move(combo[r]));
  }
  std::sort(sol.cokernel_functionals.begin(), sol.cokernel_functionals.end(),
            [](const SparseVector& a, const SparseVector& b) { return a.front().first < b.front().first; });

  const Universe u = values.empty() ? empty_universe() : values.front().universe();
  sol.particular.assign(ncols, Poly(0).with_universe(u));
  for (const auto& [col, r] : pivots) sol.particular[col] = combine(combo[r], values).with_universe(u);

  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot_col[free]) continue;
    std::vector<Rational> k(ncols);
    k[free] = Rational(1);
    for (const auto& [col, r] : pivots) {
      if (const Rational* e = find_entry(reduced[r], free)) k[col] = -*e;
    }
    sol.kernel_basis.push_back(std::move(k));
  }

  for (std::size_t i = 0; i < sol.cokernel_functionals.size(); ++i) {
    Poly value = combine(sol.cokernel_functionals[i], values);
    if (!value.is_zero()) {
      sol.obstructions.push_back(value.with_universe(u));
      sol.obstruction_sources.push_back(i);
    }
  }
  return sol;
}

std::vector<std::vector<Rational>> invert_matrix(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> work = a;
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (work[i].size() != n) throw std::invalid_argument("invert_matrix: matrix is not square");
    inv[i][i] = Rational(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && work[p][col].is_zero()) ++p;
    if (p == n) throw std::domain_error("invert_matrix: singular matrix");
    std::swap(work[p], work[col]);
    std::swap(inv[p], inv[col]);
    const Rational scale = inverse(work[col][col]);
    for (std::size_t c = 0; c < n; ++c) {
      work[col][c] *= scale;
      inv[col][c] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work[r][col].is_zero()) continue;
      const Rational factor = work[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        if (!work[col][c].is_zero()) work[r][c] -= factor * work[col][c];
        if (!inv[col][c].is_zero()) inv[r][c] -= factor * inv[col][c];
      }
    }
  }
  return inv;
}

}  // namespace rquant
