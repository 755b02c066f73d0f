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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sheaflat/error.hpp"
#include "sheaflat/field.hpp"
#include "sheaflat/matrix.hpp"
#include "sheaflat/poset.hpp"

namespace sheaflat {

/// A sheaf on a finite poset: a contravariant functor to finite dimensional
/// vector spaces. F(x) = F^{dim_at(x)}, and for x <= y the structure map
/// F^y_x : F(y) -> F(x) is a dim_at(x) x dim_at(y) matrix.
///
/// Functoriality (F^y_x F^z_y = F^z_x, F^x_x = 1) is checked at construction.
template <FieldType F>
class Sheaf {
 public:
  using MapFn = std::function<Matrix<F>(Element x, Element y)>;

  /// `map(x, y)` is queried for every strict relation x < y.
  Sheaf(Poset poset, F field, std::vector<std::size_t> dims, const MapFn& map)
      : poset_(std::move(poset)), field_(std::move(field)), dims_(std::move(dims)) {
    const std::size_t n = poset_.size();
    if (dims_.size() != n) throw Error(ErrorCode::kDimensionMismatch, "one dimension per element");
    maps_.resize(n * n);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (!poset_.leq(x, y)) continue;
        Matrix<F> m = x == y ? Matrix<F>::identity(field_, dims_[x]) : map(x, y);
        if (m.rows() != dims_[x] || m.cols() != dims_[y] || !(m.field() == field_)) {
          throw Error(ErrorCode::kDimensionMismatch, "structure map " + poset_.label(y) + "->" +
                                                         poset_.label(x) + " has shape " + m.shape());
        }
        maps_[x * n + y] = std::move(m);
      }
    }
    check_functorial();
  }

  /// Builds the sheaf from its maps on covers only; longer relations are
  /// composites along an arbitrary saturated chain and functoriality then
  /// certifies that the choice did not matter.
  static Sheaf from_cover_maps(Poset poset, F field, std::vector<std::size_t> dims, const MapFn& cover_map) {
    const std::size_t n = poset.size();
    std::vector<std::optional<Matrix<F>>> cache(n * n);
    std::function<Matrix<F>(Element, Element)> get = [&](Element x, Element y) -> Matrix<F> {
      auto& slot = cache[x * n + y];
      if (slot) return *slot;
      if (poset.covers_pair(x, y)) {
        slot = cover_map(x, y);
      } else {
        // step through some z with x covered by z <= y
        for (auto [a, z] : poset.covers()) {
          if (a == x && poset.leq(z, y)) {
            slot = get(x, z) * get(z, y);
            break;
          }
        }
      }
      return *slot;
    };
    return Sheaf(std::move(poset), std::move(field), std::move(dims), get);
  }

  const Poset& poset() const { return poset_; }
  const F& field() const { return field_; }
  std::size_t dim_at(Element x) const { return dims_[x]; }
  const std::vector<std::size_t>& dims() const { return dims_; }

  /// F^y_x : F(y) -> F(x) for x <= y.
  const Matrix<F>& structure_map(Element x, Element y) const {
    const auto& slot = maps_[x * poset_.size() + y];
    if (!slot) throw Error(ErrorCode::kNotComparable, poset_.label(x) + " is not below " + poset_.label(y));
    return *slot;
  }

 private:
  void check_functorial() const {
    const std::size_t n = poset_.size();
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        if (x == y || !poset_.leq(x, y)) continue;
        for (Element z = 0; z < n; ++z) {
          if (z == y || !poset_.leq(y, z)) continue;
          if (!(structure_map(x, y) * structure_map(y, z) == structure_map(x, z))) {
            throw Error(ErrorCode::kNotFunctorial, "F^" + poset_.label(z) + "_" + poset_.label(x) +
                                                       " is not the composite through " + poset_.label(y));
          }
        }
      }
  }

  Poset poset_;
  F field_;
  std::vector<std::size_t> dims_;
  std::vector<std::optional<Matrix<F>>> maps_;
};

/// Constant sheaf with value F^k and identity structure maps.
template <FieldType F>
Sheaf<F> constant_sheaf(const Poset& p, const F& field, std::size_t k) {
  return Sheaf<F>(p, field, std::vector<std::size_t>(p.size(), k),
                  [&](Element, Element) { return Matrix<F>::identity(field, k); });
}

/// Pullback f*F = F o f along an order preserving map f : Q -> P.
template <FieldType F>
Sheaf<F> pullback(const Sheaf<F>& sheaf, const Poset& q, std::span<const Element> f) {
  if (!is_monotone(q, sheaf.poset(), f)) {
    throw Error(ErrorCode::kMapNotMonotone, "element map does not preserve the order");
  }
  std::vector<std::size_t> dims(q.size());
  for (Element x = 0; x < q.size(); ++x) dims[x] = sheaf.dim_at(f[x]);
  return Sheaf<F>(q, sheaf.field(), std::move(dims),
                  [&](Element x, Element y) { return sheaf.structure_map(f[x], f[y]); });
}

/// Restriction of a sheaf to an induced subposet.
template <FieldType F>
Sheaf<F> restrict_sheaf(const Sheaf<F>& sheaf, const Subposet& sub) {
  return pullback(sheaf, sub.poset, sub.to_parent);
}

/// A morphism of sheaves kappa : F -> G on the same poset, checked natural:
/// kappa_x F^y_x = G^y_x kappa_y.
template <FieldType F>
struct SheafMorphism {
  std::vector<Matrix<F>> components;  // kappa_x : F(x) -> G(x)

  static SheafMorphism make(const Sheaf<F>& src, const Sheaf<F>& tgt, std::vector<Matrix<F>> comps) {
    const Poset& p = src.poset();
    if (p.size() != tgt.poset().size() || comps.size() != p.size()) {
      throw Error(ErrorCode::kSheafDomainMismatch, "sheaf morphism between different posets");
    }
    for (Element x = 0; x < p.size(); ++x) {
      if (comps[x].rows() != tgt.dim_at(x) || comps[x].cols() != src.dim_at(x)) {
        throw Error(ErrorCode::kDimensionMismatch, "component at " + p.label(x));
      }
    }
    for (Element x = 0; x < p.size(); ++x)
      for (Element y = 0; y < p.size(); ++y) {
        if (x == y || !p.leq(x, y)) continue;
        if (!(comps[x] * src.structure_map(x, y) == tgt.structure_map(x, y) * comps[y])) {
          throw Error(ErrorCode::kNotFunctorial, "morphism not natural at " + p.label(x) + " <= " + p.label(y));
        }
      }
    return SheafMorphism{std::move(comps)};
  }
};

}  // namespace sheaflat
