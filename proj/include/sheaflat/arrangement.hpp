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

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sheaflat/error.hpp"
#include "sheaflat/field.hpp"
#include "sheaflat/lattice.hpp"
#include "sheaflat/linalg.hpp"
#include "sheaflat/matrix.hpp"
#include "sheaflat/polynomial.hpp"
#include "sheaflat/poset.hpp"
#include "sheaflat/sheaf.hpp"

namespace sheaflat {

/// A central hyperplane arrangement in F^n, each hyperplane given by a
/// normal vector (the hyperplane is the kernel of the functional).
template <FieldType F>
class Arrangement {
 public:
  using Scalar = typename F::Scalar;

  Arrangement(F field, std::size_t ambient_dim, std::vector<std::vector<Scalar>> normals,
              std::vector<std::string> names = {})
      : field_(std::move(field)), n_(ambient_dim), normals_(std::move(normals)), names_(std::move(names)) {
    if (normals_.empty()) throw Error(ErrorCode::kInvalidArrangement, "an arrangement needs a hyperplane");
    if (names_.empty()) {
      for (std::size_t i = 0; i < normals_.size(); ++i) names_.push_back("H" + std::to_string(i + 1));
    }
    if (names_.size() != normals_.size()) throw Error(ErrorCode::kInvalidArrangement, "one name per hyperplane");
    for (std::size_t i = 0; i < normals_.size(); ++i) {
      if (normals_[i].size() != n_) {
        throw Error(ErrorCode::kInvalidArrangement, "normal " + std::to_string(i + 1) + " has " +
                                                        std::to_string(normals_[i].size()) + " entries, expected " +
                                                        std::to_string(n_));
      }
      if (rank(normal_matrix({i})) == 0) {
        throw Error(ErrorCode::kInvalidArrangement, "normal " + std::to_string(i + 1) + " is zero");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (rank(normal_matrix({j, i})) == 1) {
          throw Error(ErrorCode::kInvalidArrangement, "normals " + std::to_string(j + 1) + " and " +
                                                          std::to_string(i + 1) + " are proportional");
        }
      }
    }
  }

  const F& field() const { return field_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t size() const { return normals_.size(); }
  const std::vector<std::vector<Scalar>>& normals() const { return normals_; }
  const std::vector<std::string>& names() const { return names_; }

  /// Rows are the selected normals.
  Matrix<F> normal_matrix(const std::vector<std::size_t>& which) const {
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t i : which) rows.push_back(normals_[i]);
    return Matrix<F>::from_rows(field_, n_, rows);
  }

  Subspace<F> hyperplane(std::size_t i) const { return kernel_basis(normal_matrix({i})); }

 private:
  F field_;
  std::size_t n_;
  std::vector<std::vector<Scalar>> normals_;
  std::vector<std::string> names_;
};

/// Intersection lattice L(A) ordered by reverse inclusion.
///
/// Element order: V first, then the hyperplanes in arrangement order, then
/// higher ranks level by level in order of discovery.
template <FieldType F>
struct ArrangementLattice {
  Arrangement<F> arrangement;
  Lattice lattice;
  std::vector<Subspace<F>> subspaces;

  std::size_t dim_of(Element x) const { return subspaces[x].dim(); }
  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> d;
    for (const auto& s : subspaces) d.push_back(s.dim());
    return d;
  }
  /// dim of U, the intersection of all hyperplanes.
  std::size_t center_dim() const { return dim_of(lattice.top()); }
  bool is_essential() const { return center_dim() == 0; }
  /// Atom of the lattice for hyperplane i.
  Element atom(std::size_t i) const { return 1 + i; }
};

template <FieldType F>
ArrangementLattice<F> build_lattice(const Arrangement<F>& arr) {
  const F& k = arr.field();
  std::vector<Subspace<F>> subs{Subspace<F>::full(k, arr.ambient_dim())};
  std::vector<Subspace<F>> hyper;
  for (std::size_t i = 0; i < arr.size(); ++i) hyper.push_back(arr.hyperplane(i));

  auto key = [&](const Subspace<F>& s) {
    std::string out;
    const Matrix<F>& b = s.basis();
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) out += k.to_string(b(r, c)) + ",";
      out += ";";
    }
    return out;
  };
  std::map<std::string, std::size_t> seen{{key(subs[0]), 0}};
  std::vector<std::size_t> level{0};
  while (!level.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t x : level) {
      for (const auto& h : hyper) {
        Subspace<F> y = intersect(subs[x], h);
        if (y.dim() == subs[x].dim()) continue;
        if (seen.emplace(key(y), subs.size()).second) {
          next.push_back(subs.size());
          subs.push_back(std::move(y));
        }
      }
    }
    level = std::move(next);
  }

  std::vector<std::string> labels;
  for (const auto& s : subs) {
    std::string label;
    for (std::size_t i = 0; i < hyper.size(); ++i) {
      if (hyper[i].contains(s)) label += (label.empty() ? "" : ",") + arr.names()[i];
    }
    labels.push_back(label.empty() ? "V" : label);
  }
  Poset p = Poset::from_predicate(
      subs.size(), [&](Element x, Element y) { return subs[x].contains(subs[y]); }, std::move(labels));
  Lattice l(std::move(p));
  return ArrangementLattice<F>{arr, std::move(l), std::move(subs)};
}

/// Sheaf of subspaces S_x with x <= y implying S_y inside S_x; F(x) = S_x in
/// its own RREF basis and F^y_x the inclusion. Since the basis of S_x is in
/// RREF, coordinates of a vector of S_x are its entries at the pivots.
template <FieldType F>
Sheaf<F> inclusion_sheaf(const Poset& p, const F& field, const std::vector<Subspace<F>>& subs) {
  std::vector<std::size_t> dims;
  for (const auto& s : subs) dims.push_back(s.dim());
  return Sheaf<F>(p, field, std::move(dims), [&](Element x, Element y) {
    if (!subs[x].contains(subs[y])) {
      throw Error(ErrorCode::kNotFunctorial, "subspace at " + p.label(y) + " is not inside " + p.label(x));
    }
    const auto& piv = subs[x].pivots();
    Matrix<F> m(field, subs[x].dim(), subs[y].dim());
    for (std::size_t r = 0; r < piv.size(); ++r)
      for (std::size_t c = 0; c < subs[y].dim(); ++c) m(r, c) = subs[y].basis()(c, piv[r]);
    return m;
  });
}

/// F(x) = x, structure maps the inclusions.
template <FieldType F>
Sheaf<F> natural_sheaf(const ArrangementLattice<F>& al) {
  return inclusion_sheaf(al.lattice.poset(), al.arrangement.field(), al.subspaces);
}

/// chi(t) = sum_x mu(0, x) t^{dim x}.
inline Polynomial char_poly(const Lattice& l, const std::vector<std::size_t>& dims) {
  Polynomial chi;
  for (Element x = 0; x < l.size(); ++x) chi = chi + Polynomial::monomial(dims[x], l.mobius(l.bottom(), x));
  return chi;
}

template <FieldType F>
Polynomial char_poly(const ArrangementLattice<F>& al) {
  return char_poly(al.lattice, al.dims());
}

/// (-1)^{rk - 1} chi'(1), without a rank precondition.
inline std::int64_t signed_derivative_at_one(const Lattice& l, const std::vector<std::size_t>& dims) {
  const std::int64_t d = char_poly(l, dims).derivative().eval(1);
  return (l.rank() - 1) % 2 == 0 ? d : -d;
}

inline std::int64_t beta_invariant(const Lattice& l, const std::vector<std::size_t>& dims) {
  if (l.rank() < 2) throw Error(ErrorCode::kRankTooSmall, "beta needs rank at least 2");
  const std::int64_t b = signed_derivative_at_one(l, dims);
  if (b < 0) throw Error(ErrorCode::kNotGeometric, "negative beta invariant");
  return b;
}

template <FieldType F>
std::int64_t beta_invariant(const ArrangementLattice<F>& al) {
  return beta_invariant(al.lattice, al.dims());
}

/// Parent values pulled back along a sublattice embedding.
template <class T>
std::vector<T> pull_back_values(const SubLattice& sub, const std::vector<T>& parent) {
  std::vector<T> out;
  for (Element x : sub.to_parent) out.push_back(parent[x]);
  return out;
}

struct CharPolyDeletionRestriction {
  Polynomial whole, deletion, restriction;
  bool holds() const { return whole == deletion - restriction; }
};

/// chi_L = chi_{L_a} - chi_{L^a}, each with dimensions taken from the
/// subspaces.
template <FieldType F>
CharPolyDeletionRestriction charpoly_deletion_restriction(const ArrangementLattice<F>& al, Element a) {
  const auto dims = al.dims();
  const SubLattice del = deletion(al.lattice, a);
  const SubLattice res = restriction(al.lattice, a);
  return {char_poly(al.lattice, dims), char_poly(del.lattice, pull_back_values(del, dims)),
          char_poly(res.lattice, pull_back_values(res, dims))};
}

// ---------------------------------------------------------------------------
// Derived arrangements.

/// A with hyperplane i removed.
template <FieldType F>
Arrangement<F> deletion_arrangement(const Arrangement<F>& arr, std::size_t i) {
  std::vector<std::vector<typename F::Scalar>> normals;
  std::vector<std::string> names;
  for (std::size_t j = 0; j < arr.size(); ++j) {
    if (j == i) continue;
    normals.push_back(arr.normals()[j]);
    names.push_back(arr.names()[j]);
  }
  return Arrangement<F>(arr.field(), arr.ambient_dim(), std::move(normals), std::move(names));
}

/// The arrangement {b cap a : b != a} inside the hyperplane a = H_i, in the
/// coordinates of the RREF basis of a. Coincident traces are kept once.
template <FieldType F>
Arrangement<F> restriction_arrangement(const Arrangement<F>& arr, std::size_t i) {
  const F& k = arr.field();
  const Subspace<F> a = arr.hyperplane(i);
  std::vector<std::vector<typename F::Scalar>> normals;
  std::vector<std::string> names;
  for (std::size_t j = 0; j < arr.size(); ++j) {
    if (j == i) continue;
    std::vector<typename F::Scalar> v = a.basis().apply(arr.normals()[j]);
    bool duplicate = false;
    for (const auto& w : normals) {
      if (rank(Matrix<F>::from_rows(k, v.size(), {v, w})) == 1) duplicate = true;
    }
    if (duplicate) continue;
    normals.push_back(std::move(v));
    names.push_back(arr.names()[j]);
  }
  return Arrangement<F>(k, a.dim(), std::move(normals), std::move(names));
}

// ---------------------------------------------------------------------------
// Standard families.

/// x_i = 0 for i = 1..n.
template <FieldType F>
Arrangement<F> coordinate_arrangement(const F& field, std::size_t n) {
  std::vector<std::vector<typename F::Scalar>> normals;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<typename F::Scalar> v(n, field.zero());
    v[i] = field.one();
    normals.push_back(std::move(v));
  }
  return Arrangement<F>(field, n, std::move(normals));
}

/// x_i = x_j for i < j, in lexicographic order of (i, j).
template <FieldType F>
Arrangement<F> braid_arrangement(const F& field, std::size_t n) {
  std::vector<std::vector<typename F::Scalar>> normals;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<typename F::Scalar> v(n, field.zero());
      v[i] = field.one();
      v[j] = field.neg(field.one());
      normals.push_back(std::move(v));
      names.push_back("x" + std::to_string(i + 1) + "=x" + std::to_string(j + 1));
    }
  return Arrangement<F>(field, n, std::move(normals), std::move(names));
}

/// Every hyperplane of F_p^n: one normal per projective point, normalised
/// so the first nonzero entry is 1, in lexicographic order.
inline Arrangement<PrimeField> full_field_arrangement(std::uint32_t p, std::size_t n) {
  PrimeField k(p);
  std::vector<std::vector<PrimeField::Scalar>> normals;
  std::vector<PrimeField::Scalar> v(n, 0);
  // odometer over F_p^n, most significant entry first
  while (true) {
    std::size_t lead = 0;
    while (lead < n && v[lead] == 0) ++lead;
    if (lead < n && v[lead] == 1) normals.push_back(v);
    std::size_t i = n;
    while (i > 0 && v[i - 1] == p - 1) v[--i] = 0;
    if (i == 0) break;
    ++v[i - 1];
  }
  return Arrangement<PrimeField>(k, n, std::move(normals));
}

/// m hyperplanes x_1 + c x_2 = 0 (c = 0..m-1) in F^n: a rank 2 arrangement.
template <FieldType F>
Arrangement<F> pencil_arrangement(const F& field, std::size_t m, std::size_t n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "a pencil needs dimension at least 2");
  std::vector<std::vector<typename F::Scalar>> normals;
  for (std::size_t c = 0; c < m; ++c) {
    std::vector<typename F::Scalar> v(n, field.zero());
    v[0] = field.one();
    v[1] = field.from_int(static_cast<long long>(c));
    normals.push_back(std::move(v));
  }
  return Arrangement<F>(field, n, std::move(normals));
}

/// m random integer normals with entries in [-3, 3] spanning Q^n; retries
/// until the sample is a valid essential arrangement.
inline Arrangement<Rationals> random_essential_arrangement(std::size_t m, std::size_t n, std::uint64_t seed) {
  if (m < n) throw Error(ErrorCode::kInvalidArgument, "an essential arrangement needs at least n hyperplanes");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-3, 3);
  Rationals q;
  while (true) {
    std::vector<std::vector<mpq_class>> normals;
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<mpq_class> v;
      for (std::size_t j = 0; j < n; ++j) v.emplace_back(entry(rng));
      normals.push_back(std::move(v));
    }
    try {
      Arrangement<Rationals> arr(q, n, normals);
      std::vector<std::size_t> all(m);
      for (std::size_t i = 0; i < m; ++i) all[i] = i;
      if (rank(arr.normal_matrix(all)) == n) return arr;
    } catch (const Error&) {
      // zero or proportional normals; draw again
    }
  }
}

}  // namespace sheaflat
