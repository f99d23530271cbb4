#include "coxeter/int_lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace coxeter {

namespace {

IntVector axpy(const IntVector& y, Int a, const IntVector& x) {
  IntVector r = y;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked::sub(r[i], checked::mul(a, x[i]));
  return r;
}

struct Echelon {
  std::vector<IntVector> rows;  // pivot rows first, then rows vanishing on the pivot columns
  std::vector<std::size_t> pivots;
};

// Unimodular row reduction to echelon form on columns [0, cols). The pivot
// rows are normalized: positive pivot, entries above each pivot in [0, pivot).
Echelon echelon(std::vector<IntVector> rows, std::size_t cols) {
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() || checked::abs(rows[i][c]) < checked::abs(rows[best][c])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        rows[i] = axpy(rows[i], rows[i][c] / rows[r][c], rows[r]);
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (r >= rows.size() || rows[r][c] == 0) continue;
    if (rows[r][c] < 0) rows[r] = -rows[r];
    for (std::size_t i = 0; i < r; ++i) rows[i] = axpy(rows[i], checked::floor_div(rows[i][c], rows[r][c]), rows[r]);
    out.pivots.push_back(c);
    ++r;
  }
  out.rows = std::move(rows);
  return out;
}

// Back-substitution of v against an echelon basis restricted to the first
// `cols` columns. Returns the coefficients if v lies in the span.
std::optional<IntVector> back_substitute(const std::vector<IntVector>& basis, const std::vector<std::size_t>& pivots,
                                         IntVector v, std::size_t cols) {
  IntVector coef(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::size_t p = pivots[i];
    const Int piv = basis[i][p];
    for (std::size_t c = (i == 0 ? 0 : pivots[i - 1] + 1); c < p; ++c)
      if (v[c] != 0) return std::nullopt;
    if (v[p] % piv != 0) return std::nullopt;
    coef[i] = v[p] / piv;
    v = axpy(v, coef[i], basis[i]);
  }
  for (std::size_t c = 0; c < cols; ++c)
    if (v[c] != 0) return std::nullopt;
  return coef;
}

IntVector slice(const IntVector& v, std::size_t from, std::size_t count) {
  IntVector r(count);
  for (std::size_t i = 0; i < count; ++i) r[i] = v[from + i];
  return r;
}

}  // namespace

Sublattice Sublattice::zero(std::size_t ambient_rank) {
  Sublattice s;
  s.ambient_rank_ = ambient_rank;
  return s;
}

Sublattice Sublattice::full(std::size_t ambient_rank) {
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < ambient_rank; ++i) {
    IntVector e(ambient_rank);
    e[i] = 1;
    rows.push_back(e);
  }
  return hnf(rows, ambient_rank);
}

std::vector<std::size_t> Sublattice::pivots() const {
  std::vector<std::size_t> p;
  for (const auto& row : basis_) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    p.push_back(c);
  }
  return p;
}

Int LatticeIndex::value() const {
  if (!is_finite()) throw std::logic_error("lattice index is infinite");
  return value_;
}

Sublattice hnf(std::span<const IntVector> rows, std::size_t ambient_rank) {
  for (const auto& r : rows)
    if (r.size() != ambient_rank) throw std::invalid_argument("hnf: row length mismatch");
  Echelon e = echelon(std::vector<IntVector>(rows.begin(), rows.end()), ambient_rank);
  Sublattice s;
  s.ambient_rank_ = ambient_rank;
  s.basis_.assign(e.rows.begin(), e.rows.begin() + static_cast<std::ptrdiff_t>(e.pivots.size()));
  return s;
}

Sublattice hnf(std::initializer_list<IntVector> rows, std::size_t ambient_rank) {
  return hnf(std::span<const IntVector>(rows.begin(), rows.size()), ambient_rank);
}

std::optional<IntVector> coordinates(const Sublattice& s, const IntVector& v) {
  if (v.size() != s.ambient_rank()) throw std::invalid_argument("contains: length mismatch");
  return back_substitute(s.basis(), s.pivots(), v, v.size());
}

bool contains(const Sublattice& s, const IntVector& v) { return coordinates(s, v).has_value(); }

Sublattice kernel_lattice(std::span<const IntVector> rows, std::size_t ambient_rank) {
  const std::size_t k = rows.size();
  if (k + ambient_rank > kMaxWidth) throw std::length_error("kernel_lattice: system too wide");
  // row j = (column j of the system | e_j); unimodular reduction exposes the kernel
  std::vector<IntVector> aug;
  for (std::size_t j = 0; j < ambient_rank; ++j) {
    IntVector r(k + ambient_rank);
    for (std::size_t i = 0; i < k; ++i) {
      if (rows[i].size() != ambient_rank) throw std::invalid_argument("kernel_lattice: row length mismatch");
      r[i] = rows[i][j];
    }
    r[k + j] = 1;
    aug.push_back(r);
  }
  Echelon e = echelon(std::move(aug), k);
  std::vector<IntVector> kernel;
  for (std::size_t i = e.pivots.size(); i < e.rows.size(); ++i) kernel.push_back(slice(e.rows[i], k, ambient_rank));
  return hnf(kernel, ambient_rank);
}

Sublattice kernel_lattice(const IntMatrix& m) {
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < m.dim(); ++i) rows.push_back(m.row(i));
  return kernel_lattice(rows, m.dim());
}

std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& rhs) {
  const std::size_t n = m.dim();
  if (rhs.size() != n) throw std::invalid_argument("solve_integer: length mismatch");
  std::vector<IntVector> aug;
  for (std::size_t j = 0; j < n; ++j) {
    IntVector r(2 * n);
    for (std::size_t i = 0; i < n; ++i) r[i] = m(i, j);
    r[n + j] = 1;
    aug.push_back(r);
  }
  Echelon e = echelon(std::move(aug), n);
  std::vector<IntVector> image_rows;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) image_rows.push_back(slice(e.rows[i], 0, n));
  auto coef = back_substitute(image_rows, e.pivots, rhs, n);
  if (!coef) return std::nullopt;
  IntVector eta(n);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) eta = eta + (*coef)[i] * slice(e.rows[i], n, n);
  return eta;
}

LatticeIndex index(const Sublattice& sub, const Sublattice& super) {
  if (sub.ambient_rank() != super.ambient_rank()) throw std::invalid_argument("index: ambient rank mismatch");
  std::vector<IntVector> coords;
  for (const auto& b : sub.basis()) {
    auto c = coordinates(super, b);
    if (!c) throw std::invalid_argument("index: sublattice is not contained in superlattice");
    coords.push_back(*c);
  }
  if (sub.rank() < super.rank()) return LatticeIndex::infinite();
  const std::size_t k = sub.rank();
  IntMatrix change(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) change(i, j) = coords[i][j];
  return LatticeIndex::finite(checked::abs(change.determinant()));
}

Sublattice saturation(const Sublattice& s) {
  Sublattice perp = kernel_lattice(s.basis(), s.ambient_rank());
  return kernel_lattice(perp.basis(), s.ambient_rank());
}

Sublattice image(const IntMatrix& m, const Sublattice& s) {
  std::vector<IntVector> rows;
  for (const auto& b : s.basis()) rows.push_back(m * b);
  return hnf(rows, s.ambient_rank());
}

bool same_coset(const IntVector& a, const IntVector& b, const Sublattice& s) { return contains(s, a - b); }

std::vector<IntVector> enumerate_coset_in_box(const IntVector& offset, const Sublattice& s, Int bound) {
  if (bound < 1) throw std::invalid_argument("enumerate_coset_in_box: bound must be positive");
  if (offset.size() != s.ambient_rank()) throw std::invalid_argument("enumerate_coset_in_box: length mismatch");
  const std::size_t n = offset.size();
  const auto& basis = s.basis();
  const auto pivots = s.pivots();
  std::vector<IntVector> out;

  // Coordinates before pivot i+1 are final once rows 0..i are chosen.
  auto settled_ok = [&](const IntVector& v, std::size_t from, std::size_t to) {
    for (std::size_t c = from; c < to; ++c)
      if (checked::abs(v[c]) > bound) return false;
    return true;
  };

  auto rec = [&](auto&& self, std::size_t i, const IntVector& v) -> void {
    if (i == basis.size()) {
      std::size_t from = pivots.empty() ? 0 : pivots.back() + 1;
      if (settled_ok(v, from, n)) out.push_back(v);
      return;
    }
    const std::size_t p = pivots[i];
    const Int piv = basis[i][p];
    // |v[p] + c * piv| <= bound
    Int lo = checked::ceil_div(checked::sub(-bound, v[p]), piv);
    Int hi = checked::floor_div(checked::sub(bound, v[p]), piv);
    std::size_t next = i + 1 < pivots.size() ? pivots[i + 1] : n;
    for (Int c = lo; c <= hi; ++c) {
      IntVector w = axpy(v, -c, basis[i]);
      if (settled_ok(w, p, next)) self(self, i + 1, w);
    }
  };

  std::size_t first = pivots.empty() ? n : pivots.front();
  if (settled_ok(offset, 0, first)) rec(rec, 0, offset);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace coxeter
