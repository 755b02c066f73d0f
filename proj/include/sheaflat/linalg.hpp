// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sheaflat/error.hpp"
#include "sheaflat/field.hpp"
#include "sheaflat/matrix.hpp"

namespace sheaflat {

namespace detail {

// Gauss-Jordan elimination in place. Row operations only touch the nonzero
// columns of the pivot row, which keeps the mostly-sparse chain complex
// differentials cheap even though storage is dense. When `full` is false the
// pivot rows are neither normalised nor cleared above (enough for rank).
template <FieldType F>
std::vector<std::size_t> eliminate(Matrix<F>& m, bool full) {
  const F& f = m.field();
  using Scalar = typename F::Scalar;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> nz;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < m.rows() && f.is_zero(m(r, c))) ++r;
    if (r == m.rows()) continue;
    m.swap_rows(r, pivot_row);
    if (full && !f.is_one(m(pivot_row, c))) {
      const Scalar inv = f.inv(m(pivot_row, c));
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (!f.is_zero(m(pivot_row, k))) m(pivot_row, k) = f.mul(m(pivot_row, k), inv);
      }
    }
    nz.clear();
    for (std::size_t k = c; k < m.cols(); ++k) {
      if (!f.is_zero(m(pivot_row, k))) nz.push_back(k);
    }
    const Scalar pivot_inv = full ? f.one() : f.inv(m(pivot_row, c));
    const std::size_t first = full ? 0 : pivot_row + 1;
    for (std::size_t rr = first; rr < m.rows(); ++rr) {
      if (rr == pivot_row || f.is_zero(m(rr, c))) continue;
      const Scalar factor = full ? m(rr, c) : f.mul(m(rr, c), pivot_inv);
      for (std::size_t k : nz) f.sub_mul(m(rr, k), factor, m(pivot_row, k));
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  return pivots;
}

}  // namespace detail

template <FieldType F>
struct EchelonForm {
  Matrix<F> reduced;                // zero rows removed
  std::vector<std::size_t> pivots;  // increasing
};

/// Unique reduced row echelon form with zero rows dropped.
template <FieldType F>
EchelonForm<F> rref(Matrix<F> m) {
  std::vector<std::size_t> pivots = detail::eliminate(m, /*full=*/true);
  std::vector<std::size_t> keep(pivots.size());
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return {m.select(keep, cols), std::move(pivots)};
}

template <FieldType F>
std::size_t rank(Matrix<F> m) {
  return detail::eliminate(m, /*full=*/false).size();
}

/// Canonical subspace of F^n: basis rows in RREF, zero rows removed. Two
/// subspaces are equal exactly when their bases are entrywise equal.
template <FieldType F>
class Subspace {
 public:
  using Scalar = typename F::Scalar;

  /// Row span of `rows`.
  static Subspace span(const Matrix<F>& rows) {
    EchelonForm<F> e = rref(rows);
    return Subspace(std::move(e.reduced), std::move(e.pivots));
  }
  static Subspace zero(const F& field, std::size_t ambient) {
    return Subspace(Matrix<F>(field, 0, ambient), {});
  }
  static Subspace full(const F& field, std::size_t ambient) {
    std::vector<std::size_t> piv(ambient);
    for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
    return Subspace(Matrix<F>::identity(field, ambient), std::move(piv));
  }

  const F& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Coordinates of v in the RREF basis, or nullopt when v is outside.
  std::optional<std::vector<Scalar>> coordinates(std::span<const Scalar> v) const {
    if (v.size() != ambient_dim()) throw Error(ErrorCode::kAmbientMismatch, "vector length");
    const F& f = field();
    std::vector<Scalar> coords(dim(), f.zero());
    std::vector<Scalar> residual(v.begin(), v.end());
    for (std::size_t i = 0; i < dim(); ++i) {
      coords[i] = residual[pivots_[i]];
      if (f.is_zero(coords[i])) continue;
      for (std::size_t c = pivots_[i]; c < ambient_dim(); ++c) {
        if (!f.is_zero(basis_(i, c))) f.sub_mul(residual[c], coords[i], basis_(i, c));
      }
    }
    for (const auto& r : residual) {
      if (!f.is_zero(r)) return std::nullopt;
    }
    return coords;
  }

  bool contains(std::span<const Scalar> v) const { return coordinates(v).has_value(); }

  bool contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim()) throw Error(ErrorCode::kAmbientMismatch, "contains");
    for (std::size_t r = 0; r < other.dim(); ++r) {
      if (!contains(other.basis_.row(r))) return false;
    }
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Subspace(Matrix<F> basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space {v : m v = 0} as a canonical subspace of F^cols.
template <FieldType F>
Subspace<F> kernel_basis(const Matrix<F>& m) {
  const F& f = m.field();
  EchelonForm<F> e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  Matrix<F> vecs(f, m.cols() - e.pivots.size(), m.cols());
  std::size_t k = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    vecs(k, free) = f.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) vecs(k, e.pivots[i]) = f.neg(e.reduced(i, free));
    ++k;
  }
  return Subspace<F>::span(vecs);
}

/// Row space of a matrix (the image of its transpose); the image of a map m
/// acting on columns is column_space(m).
template <FieldType F>
Subspace<F> column_space(const Matrix<F>& m) {
  return Subspace<F>::span(m.transpose());
}

template <FieldType F>
Subspace<F> sum_subspace(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorCode::kAmbientMismatch, "sum of subspaces of different ambient spaces");
  }
  return Subspace<F>::span(vstack(a.basis(), b.basis()));
}

/// Annihilator with respect to the standard pairing; (a^perp)^perp = a.
template <FieldType F>
Matrix<F> annihilator(const Subspace<F>& a) {
  return kernel_basis(a.basis()).basis();
}

template <FieldType F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorCode::kAmbientMismatch, "intersection of subspaces of different ambient spaces");
  }
  return kernel_basis(vstack(annihilator(a), annihilator(b)));
}

/// Incrementally built echelon basis: answers "is v in the span so far".
template <FieldType F>
class IncrementalBasis {
 public:
  using Scalar = typename F::Scalar;

  IncrementalBasis(F field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

  /// Adds v if it is independent of the rows so far; returns whether it was.
  bool add(std::span<const Scalar> v) {
    std::vector<Scalar> w = reduce(v);
    auto it = std::find_if(w.begin(), w.end(), [&](const Scalar& s) { return !field_.is_zero(s); });
    if (it == w.end()) return false;
    const std::size_t p = static_cast<std::size_t>(it - w.begin());
    const Scalar inv = field_.inv(w[p]);
    for (auto& s : w) s = field_.mul(s, inv);
    rows_.push_back(std::move(w));
    pivots_.push_back(p);
    return true;
  }

  bool in_span(std::span<const Scalar> v) const {
    std::vector<Scalar> w = reduce(v);
    return std::all_of(w.begin(), w.end(), [&](const Scalar& s) { return field_.is_zero(s); });
  }

  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<Scalar> reduce(std::span<const Scalar> v) const {
    if (v.size() != ambient_) throw Error(ErrorCode::kAmbientMismatch, "vector length");
    std::vector<Scalar> w(v.begin(), v.end());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Scalar c = w[pivots_[i]];
      if (field_.is_zero(c)) continue;
      for (std::size_t k = 0; k < ambient_; ++k) {
        if (!field_.is_zero(rows_[i][k])) field_.sub_mul(w[k], c, rows_[i][k]);
      }
    }
    return w;
  }

  F field_;
  std::size_t ambient_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Solves a x = b for every column b of rhs at once. Free variables are set
/// to zero, so the answer is deterministic. nullopt if some column is not in
/// the column space of a.
template <FieldType F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& rhs) {
  if (a.rows() != rhs.rows()) throw Error(ErrorCode::kDimensionMismatch, "solve: row counts");
  const F& f = a.field();
  EchelonForm<F> e = rref(hstack(a, rhs));
  Matrix<F> x(f, a.cols(), rhs.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] >= a.cols()) return std::nullopt;  // inconsistent row
    for (std::size_t j = 0; j < rhs.cols(); ++j) x(e.pivots[i], j) = e.reduced(i, a.cols() + j);
  }
  return x;
}

/// Basis of the quotient ker/im: the RREF basis of im greedily extended by
/// the RREF basis rows of ker that raise the rank, in order. Rows of the
/// result are the chosen coset representatives.
template <FieldType F>
Matrix<F> quotient_basis(const Subspace<F>& ker, const Subspace<F>& im) {
  if (ker.ambient_dim() != im.ambient_dim()) throw Error(ErrorCode::kAmbientMismatch, "quotient");
  IncrementalBasis<F> basis(ker.field(), ker.ambient_dim());
  for (std::size_t r = 0; r < im.dim(); ++r) basis.add(im.basis().row(r));
  std::vector<std::vector<typename F::Scalar>> reps;
  for (std::size_t r = 0; r < ker.dim(); ++r) {
    auto row = ker.basis().row(r);
    if (basis.add(row)) reps.emplace_back(row.begin(), row.end());
  }
  return Matrix<F>::from_rows(ker.field(), ker.ambient_dim(), reps);
}

/// Expresses each column of `vectors` (all lying in `ker`) in the quotient
/// basis `reps` of ker/im; the result has reps.rows() rows.
template <FieldType F>
Matrix<F> quotient_coordinates(const Matrix<F>& reps, const Subspace<F>& im, const Matrix<F>& vectors) {
  const Matrix<F> frame = vstack(reps, im.basis()).transpose();
  std::optional<Matrix<F>> c = solve(frame, vectors);
  if (!c) throw Error(ErrorCode::kNotWellDefined, "vector outside the cycle space");
  std::vector<std::size_t> keep(reps.rows());
  std::vector<std::size_t> cols(vectors.cols());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return c->select(keep, cols);
}

/// Matrix of the map ker_src/im_src -> ker_tgt/im_tgt induced by f, in the
/// deterministic quotient bases of quotient_basis().
template <FieldType F>
Matrix<F> induced_map_on_quotient(const Matrix<F>& f, const Subspace<F>& ker_src, const Subspace<F>& im_src,
                                  const Subspace<F>& ker_tgt, const Subspace<F>& im_tgt) {
  if (f.cols() != ker_src.ambient_dim() || f.rows() != ker_tgt.ambient_dim()) {
    throw Error(ErrorCode::kAmbientMismatch, "map shape " + f.shape());
  }
  if (!ker_src.contains(im_src) || !ker_tgt.contains(im_tgt)) {
    throw Error(ErrorCode::kNotWellDefined, "image not contained in kernel");
  }
  const Matrix<F> image_of_ker = f * ker_src.basis().transpose();
  for (std::size_t j = 0; j < image_of_ker.cols(); ++j) {
    if (!ker_tgt.contains(image_of_ker.column(j))) {
      throw Error(ErrorCode::kNotWellDefined, "map does not carry cycles to cycles");
    }
  }
  const Matrix<F> image_of_im = f * im_src.basis().transpose();
  for (std::size_t j = 0; j < image_of_im.cols(); ++j) {
    if (!im_tgt.contains(image_of_im.column(j))) {
      throw Error(ErrorCode::kNotWellDefined, "map does not carry boundaries to boundaries");
    }
  }
  const Matrix<F> src_reps = quotient_basis(ker_src, im_src);
  const Matrix<F> tgt_reps = quotient_basis(ker_tgt, im_tgt);
  return quotient_coordinates(tgt_reps, im_tgt, f * src_reps.transpose());
}

}  // namespace sheaflat
