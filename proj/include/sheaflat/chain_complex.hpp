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
#include <cstdlib>
#include <future>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sheaflat/error.hpp"
#include "sheaflat/field.hpp"
#include "sheaflat/linalg.hpp"
#include "sheaflat/matrix.hpp"

namespace sheaflat {

/// Bounded chain complex C_lo <- ... <- C_hi. differential(i) is
/// d_i : C_i -> C_{i-1}, a dim(i-1) x dim(i) matrix; d_lo is the zero map to
/// the zero space. d o d = 0 is verified at construction.
template <FieldType F>
class ChainComplex {
 public:
  /// `dims[k]` is dim C_{lo+k}; `diffs[k]` is d_{lo+k+1}.
  ChainComplex(F field, int lo, std::vector<std::size_t> dims, std::vector<Matrix<F>> diffs)
      : field_(std::move(field)),
        lo_(lo),
        dims_(std::move(dims)),
        diffs_(std::move(diffs)),
        empty_(field_, 0, 0),
        below_(field_, 0, 0),
        above_(field_, 0, 0) {
    if (dims_.empty()) {
      dims_.push_back(0);
    }
    below_ = Matrix<F>(field_, 0, dims_.front());
    above_ = Matrix<F>(field_, dims_.back(), 0);
    if (diffs_.size() + 1 != dims_.size()) {
      throw Error(ErrorCode::kNotAChainComplex, "need one differential between consecutive degrees");
    }
    for (int i = lo_ + 1; i <= hi(); ++i) {
      const Matrix<F>& d = differential(i);
      if (d.rows() != dim(i - 1) || d.cols() != dim(i)) {
        throw Error(ErrorCode::kNotAChainComplex, "d_" + std::to_string(i) + " has shape " + d.shape());
      }
    }
    for (int i = lo_ + 2; i <= hi(); ++i) {
      if (!(differential(i - 1) * differential(i)).is_zero()) {
        throw Error(ErrorCode::kNotAChainComplex, "d_" + std::to_string(i - 1) + " d_" + std::to_string(i) + " != 0");
      }
    }
  }

  const F& field() const { return field_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }

  std::size_t dim(int i) const {
    if (i < lo_ || i > hi()) return 0;
    return dims_[static_cast<std::size_t>(i - lo_)];
  }

  /// d_i : C_i -> C_{i-1}; a zero matrix of the right shape outside the
  /// stored range.
  const Matrix<F>& differential(int i) const {
    if (i == lo_) return below_;
    if (i == hi() + 1) return above_;
    if (i < lo_ || i > hi()) return empty_;
    return diffs_[static_cast<std::size_t>(i - lo_ - 1)];
  }

  long long euler_characteristic() const {
    long long chi = 0;
    for (int i = lo_; i <= hi(); ++i) chi += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(dim(i));
    return chi;
  }

  /// The same complex with every degree moved up by `by`.
  ChainComplex shifted(int by) const { return ChainComplex(field_, lo_ + by, dims_, diffs_); }

 private:
  F field_;
  int lo_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix<F>> diffs_;
  Matrix<F> empty_;
  Matrix<F> below_;  // d_lo
  Matrix<F> above_;  // d_{hi+1}
};

/// Homology dimensions per degree. For augmented complexes `reduced` is set
/// and degree -1 holds the cokernel of the augmentation.
struct HomologyProfile {
  std::map<int, std::size_t> dims;
  bool reduced = false;
  FieldSpec field;

  std::size_t dim(int i) const {
    auto it = dims.find(i);
    return it == dims.end() ? 0 : it->second;
  }
  std::size_t total() const {
    std::size_t t = 0;
    for (auto [i, d] : dims) t += d;
    return t;
  }
  long long euler_characteristic() const {
    long long chi = 0;
    for (auto [i, d] : dims) chi += ((i % 2 + 2) % 2 == 0 ? 1 : -1) * static_cast<long long>(d);
    return chi;
  }
  /// Nonzero entries only, e.g. {1: 2}.
  std::map<int, std::size_t> nonzero() const {
    std::map<int, std::size_t> out;
    for (auto [i, d] : dims) {
      if (d) out[i] = d;
    }
    return out;
  }
  bool same_dims(const HomologyProfile& o) const { return nonzero() == o.nonzero(); }
};

/// Worker count for per-degree rank computations: SHEAFLAT_THREADS when set
/// and positive, otherwise 1.
inline std::size_t configured_threads() {
  if (const char* env = std::getenv("SHEAFLAT_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return 1;
}

/// dim H_i = dim C_i - rank d_i - rank d_{i+1}.
template <FieldType F>
HomologyProfile homology(const ChainComplex<F>& c, bool reduced = false) {
  const int lo = c.lo();
  const int hi = c.hi();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(hi - lo + 2), 0);  // ranks[i - lo] = rank d_i
  const std::size_t workers = configured_threads();
  if (workers <= 1) {
    for (int i = lo + 1; i <= hi; ++i) ranks[static_cast<std::size_t>(i - lo)] = rank(c.differential(i));
  } else {
    // each degree's matrix is independent and immutable
    for (int start = lo + 1; start <= hi; start += static_cast<int>(workers)) {
      std::vector<std::pair<int, std::future<std::size_t>>> jobs;
      for (int i = start; i <= hi && i < start + static_cast<int>(workers); ++i) {
        jobs.emplace_back(i, std::async(std::launch::async, [&c, i] { return rank(c.differential(i)); }));
      }
      for (auto& [i, fut] : jobs) ranks[static_cast<std::size_t>(i - lo)] = fut.get();
    }
  }
  HomologyProfile h;
  h.reduced = reduced;
  h.field = c.field().spec();
  for (int i = lo; i <= hi; ++i) {
    const std::size_t out_rank = ranks[static_cast<std::size_t>(i - lo)];
    const std::size_t in_rank = i + 1 <= hi ? ranks[static_cast<std::size_t>(i + 1 - lo)] : 0;
    h.dims[i] = c.dim(i) - out_rank - in_rank;
  }
  return h;
}

/// Cycles, boundaries and a deterministic quotient basis in one degree.
template <FieldType F>
struct HomologyGroup {
  int degree;
  Subspace<F> cycles;
  Subspace<F> boundaries;
  Matrix<F> representatives;  // rows: coset representatives of cycles/boundaries

  std::size_t dim() const { return representatives.rows(); }

  /// Column j: class of column j of `cycles_as_columns` in the quotient basis.
  Matrix<F> classes_of(const Matrix<F>& cycles_as_columns) const {
    return quotient_coordinates(representatives, boundaries, cycles_as_columns);
  }
};

template <FieldType F>
HomologyGroup<F> homology_group(const ChainComplex<F>& c, int i) {
  Subspace<F> z = kernel_basis(c.differential(i));
  Subspace<F> b = column_space(c.differential(i + 1));
  Matrix<F> reps = quotient_basis(z, b);
  return HomologyGroup<F>{i, std::move(z), std::move(b), std::move(reps)};
}

/// Degreewise maps f_i : A_i -> B_i commuting with the differentials,
/// verified at construction. Degrees outside [lo, hi] map by zero.
template <FieldType F>
class ChainMap {
 public:
  ChainMap(const ChainComplex<F>& src, const ChainComplex<F>& tgt, int lo, std::vector<Matrix<F>> maps)
      : field_(src.field()), lo_(lo), maps_(std::move(maps)) {
    const int top = std::max(src.hi(), tgt.hi());
    const int bottom = std::min(src.lo(), tgt.lo());
    for (int i = bottom; i <= top; ++i) {
      const Matrix<F> f = at(i, src, tgt);
      if (f.rows() != tgt.dim(i) || f.cols() != src.dim(i)) {
        throw Error(ErrorCode::kNotAChainMap, "degree " + std::to_string(i) + " component has shape " + f.shape());
      }
    }
    for (int i = bottom; i <= top + 1; ++i) {
      // d f_i = f_{i-1} d
      if (!(tgt.differential(i) * at(i, src, tgt) == at(i - 1, src, tgt) * src.differential(i))) {
        throw Error(ErrorCode::kNotAChainMap, "does not commute with d in degree " + std::to_string(i));
      }
    }
  }

  Matrix<F> at(int i, const ChainComplex<F>& src, const ChainComplex<F>& tgt) const {
    if (i < lo_ || i >= lo_ + static_cast<int>(maps_.size())) return Matrix<F>(field_, tgt.dim(i), src.dim(i));
    return maps_[static_cast<std::size_t>(i - lo_)];
  }

 private:
  F field_;
  int lo_;
  std::vector<Matrix<F>> maps_;
};

/// Map induced in homology by a chain map component f_i.
template <FieldType F>
Matrix<F> induced_map(const Matrix<F>& f_i, const HomologyGroup<F>& src, const HomologyGroup<F>& tgt) {
  if (src.dim() == 0 || tgt.dim() == 0) return Matrix<F>(f_i.field(), tgt.dim(), src.dim());
  return tgt.classes_of(f_i * src.representatives.transpose());
}

/// One term of a long exact sequence.
struct LesTerm {
  std::string name;  // e.g. "H_1(A)"
  int degree = 0;
  std::size_t dim = 0;
};

/// A long exact sequence written left to right: terms[k] -> terms[k+1] via
/// maps[k]. Sequence starts and ends with an implicit 0.
template <FieldType F>
struct LongExactSequence {
  std::vector<LesTerm> terms;
  std::vector<Matrix<F>> maps;
  std::vector<bool> exact_at;          // one per term
  std::vector<bool> composite_zero;    // maps[k+1] maps[k] == 0
  std::map<int, std::size_t> connecting;  // degree d -> index of H_d(C) -> H_{d-1}(A)
  bool exact() const {
    return std::all_of(exact_at.begin(), exact_at.end(), [](bool b) { return b; });
  }
};

/// Exactness bookkeeping: at term k, rank(in) + rank(out) = dim and
/// out o in = 0.
template <FieldType F>
void check_exactness(LongExactSequence<F>& les) {
  const std::size_t n = les.terms.size();
  les.exact_at.assign(n, false);
  les.composite_zero.assign(n > 0 ? n - 1 : 0, true);
  std::vector<std::size_t> ranks(les.maps.size());
  for (std::size_t k = 0; k < les.maps.size(); ++k) ranks[k] = rank(les.maps[k]);
  for (std::size_t k = 0; k + 1 < les.maps.size(); ++k) {
    les.composite_zero[k] = (les.maps[k + 1] * les.maps[k]).is_zero();
  }
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t in = k == 0 ? 0 : ranks[k - 1];
    const std::size_t out = k < les.maps.size() ? ranks[k] : 0;
    const bool comp = (k == 0 || k >= les.maps.size()) ? true : les.composite_zero[k - 1];
    les.exact_at[k] = comp && in + out == les.terms[k].dim;
  }
}

/// The long exact homology sequence of a short exact sequence of complexes
/// 0 -> A -i-> B -p-> C -> 0, with connecting maps computed by the zig-zag:
/// lift a cycle of C through p, apply d in B, pull back through i.
/// Terms run from the top degree down: H_n(A) -> H_n(B) -> H_n(C) -> H_{n-1}(A) ...
template <FieldType F>
LongExactSequence<F> long_exact_sequence(const ChainComplex<F>& a, const ChainComplex<F>& b,
                                         const ChainComplex<F>& c, const ChainMap<F>& i,
                                         const ChainMap<F>& p, const std::string& a_name = "A",
                                         const std::string& b_name = "B", const std::string& c_name = "C") {
  const int top = std::max({a.hi(), b.hi(), c.hi()});
  const int bottom = std::min({a.lo(), b.lo(), c.lo()});
  // chain level exactness
  for (int d = bottom; d <= top; ++d) {
    const Matrix<F> id = i.at(d, a, b);
    const Matrix<F> pd = p.at(d, b, c);
    if (rank(id) != a.dim(d) || rank(pd) != c.dim(d) || !(pd * id).is_zero() || a.dim(d) + c.dim(d) != b.dim(d)) {
      throw Error(ErrorCode::kNotAChainMap, "not a short exact sequence in degree " + std::to_string(d));
    }
  }
  std::map<int, HomologyGroup<F>> ha, hb, hc;
  for (int d = bottom; d <= top; ++d) {
    ha.emplace(d, homology_group(a, d));
    hb.emplace(d, homology_group(b, d));
    hc.emplace(d, homology_group(c, d));
  }
  auto name = [](const std::string& s, int d) { return "H_" + std::to_string(d) + "(" + s + ")"; };

  LongExactSequence<F> les;
  for (int d = top; d >= bottom; --d) {
    les.terms.push_back({name(a_name, d), d, ha.at(d).dim()});
    les.terms.push_back({name(b_name, d), d, hb.at(d).dim()});
    les.terms.push_back({name(c_name, d), d, hc.at(d).dim()});
    les.maps.push_back(induced_map(i.at(d, a, b), ha.at(d), hb.at(d)));
    les.maps.push_back(induced_map(p.at(d, b, c), hb.at(d), hc.at(d)));
    if (d > bottom) {
      // connecting map H_d(C) -> H_{d-1}(A)
      const HomologyGroup<F>& src = hc.at(d);
      const HomologyGroup<F>& tgt = ha.at(d - 1);
      Matrix<F> delta(c.field(), tgt.dim(), src.dim());
      if (src.dim() > 0) {
        const Matrix<F> z = src.representatives.transpose();
        auto lift = solve(p.at(d, b, c), z);
        if (!lift) throw Error(ErrorCode::kNotWellDefined, "projection is not onto");
        const Matrix<F> w = b.differential(d) * *lift;
        auto pulled = solve(i.at(d - 1, a, b), w);
        if (!pulled) throw Error(ErrorCode::kNotWellDefined, "boundary of a lift is not in the subcomplex");
        if (tgt.dim() > 0) delta = tgt.classes_of(*pulled);
      }
      les.connecting[d] = les.maps.size();
      les.maps.push_back(std::move(delta));
    }
  }
  check_exactness(les);
  return les;
}

}  // namespace sheaflat
