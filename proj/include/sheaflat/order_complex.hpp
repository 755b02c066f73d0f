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
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sheaflat/chain_complex.hpp"
#include "sheaflat/error.hpp"
#include "sheaflat/field.hpp"
#include "sheaflat/matrix.hpp"
#include "sheaflat/poset.hpp"
#include "sheaflat/sheaf.hpp"

namespace sheaflat {

/// Augmentation of a sheaf complex: a target space and maps F(x) -> target
/// compatible with the structure maps.
template <FieldType F>
struct Augmentation {
  std::size_t dim = 0;
  std::vector<Matrix<F>> maps;  // maps[x] : F(x) -> target
};

/// Augmentation through a parent sheaf: the sheaf on `sub` is the parent
/// sheaf restricted, and every element of `sub` lies above `target`.
template <FieldType F>
Augmentation<F> augmentation_to(const Sheaf<F>& parent, Element target, const Subposet& sub) {
  Augmentation<F> aug{parent.dim_at(target), {}};
  aug.maps.reserve(sub.poset.size());
  for (Element x : sub.to_parent) aug.maps.push_back(parent.structure_map(target, x));
  return aug;
}

/// Chain complex of a sheaf on a poset together with its basis bookkeeping.
/// Degree n has one block of size dim F(x_0) per chain x_0 > ... > x_n, in
/// lexicographic chain order.
template <FieldType F>
struct SheafChainComplex {
  ChainComplex<F> complex;
  std::vector<std::vector<Chain>> chains;           // chains[n], n >= 0
  std::vector<std::vector<std::size_t>> offsets;    // offsets[n][j]: first coordinate of chains[n][j]
  std::vector<std::vector<std::size_t>> widths;     // widths[n][j] = dim F(top of chains[n][j])
  bool augmented = false;

  std::optional<std::size_t> index_of(std::size_t n, const Chain& c) const {
    if (n >= chains.size()) return std::nullopt;
    auto it = std::lower_bound(chains[n].begin(), chains[n].end(), c);
    if (it == chains[n].end() || !(*it == c)) return std::nullopt;
    return static_cast<std::size_t>(it - chains[n].begin());
  }
};

namespace detail {

template <FieldType F>
void add_block(Matrix<F>& m, std::size_t r0, std::size_t c0, const Matrix<F>& block) {
  const F& k = m.field();
  for (std::size_t r = 0; r < block.rows(); ++r)
    for (std::size_t c = 0; c < block.cols(); ++c) {
      if (!k.is_zero(block(r, c))) m(r0 + r, c0 + c) = k.add(m(r0 + r, c0 + c), block(r, c));
    }
}

template <FieldType F>
void add_scaled_identity(Matrix<F>& m, std::size_t r0, std::size_t c0, std::size_t size,
                         const typename F::Scalar& s) {
  const F& k = m.field();
  for (std::size_t i = 0; i < size; ++i) m(r0 + i, c0 + i) = k.add(m(r0 + i, c0 + i), s);
}

}  // namespace detail

/// Builds T_* (strict chains) or, with `degenerate`, the simplicial complex
/// S_* truncated at `max_degree`. With an augmentation the complex gains a
/// degree -1 term and d_0 is the sum of the augmentation maps.
///
/// d s_sigma = (F^{x_0}_{x_1} s)_{d_0 sigma} + sum_{i >= 1} (-1)^i s_{d_i sigma}.
template <FieldType F>
SheafChainComplex<F> sheaf_chain_complex(const Sheaf<F>& sheaf,
                                         const std::optional<Augmentation<F>>& aug = std::nullopt,
                                         bool degenerate = false,
                                         std::size_t max_degree = std::numeric_limits<std::size_t>::max()) {
  const Poset& p = sheaf.poset();
  const F& k = sheaf.field();
  if (aug) {
    if (aug->maps.size() != p.size()) {
      throw Error(ErrorCode::kAugmentationIncompatible, "one augmentation map per element");
    }
    for (Element x = 0; x < p.size(); ++x) {
      if (aug->maps[x].rows() != aug->dim || aug->maps[x].cols() != sheaf.dim_at(x)) {
        throw Error(ErrorCode::kAugmentationIncompatible, "augmentation map at " + p.label(x) + " has shape " +
                                                              aug->maps[x].shape());
      }
      for (Element y = 0; y < p.size(); ++y) {
        if (x != y && p.leq(x, y) && !(aug->maps[x] * sheaf.structure_map(x, y) == aug->maps[y])) {
          throw Error(ErrorCode::kAugmentationIncompatible,
                      "augmentation does not commute with F^" + p.label(y) + "_" + p.label(x));
        }
      }
    }
  }
  std::size_t top = 0;
  if (degenerate) {
    if (max_degree == std::numeric_limits<std::size_t>::max()) {
      throw Error(ErrorCode::kInvalidArgument, "degenerate complex needs a truncation degree");
    }
    top = p.empty() ? 0 : max_degree;
  } else {
    top = p.empty() ? 0 : std::min(p.height(), max_degree);
  }

  SheafChainComplex<F> out{ChainComplex<F>(k, 0, {0}, {}), {}, {}, {}, aug.has_value()};
  std::vector<std::size_t> dims;
  for (std::size_t n = 0; n <= top && !p.empty(); ++n) {
    out.chains.push_back(degenerate ? p.enumerate_simplices(n) : p.enumerate_chains(n));
    std::vector<std::size_t> off, wid;
    std::size_t total = 0;
    for (const Chain& c : out.chains.back()) {
      off.push_back(total);
      wid.push_back(sheaf.dim_at(c.top()));
      total += wid.back();
    }
    out.offsets.push_back(std::move(off));
    out.widths.push_back(std::move(wid));
    dims.push_back(total);
  }

  std::vector<Matrix<F>> diffs;
  if (aug) {
    const std::size_t d0 = dims.empty() ? 0 : dims[0];
    Matrix<F> eps(k, aug->dim, d0);
    if (!dims.empty()) {
      for (std::size_t j = 0; j < out.chains[0].size(); ++j) {
        detail::add_block(eps, 0, out.offsets[0][j], aug->maps[out.chains[0][j].top()]);
      }
    }
    diffs.push_back(std::move(eps));
  }
  for (std::size_t n = 1; n < dims.size(); ++n) {
    Matrix<F> d(k, dims[n - 1], dims[n]);
    for (std::size_t j = 0; j < out.chains[n].size(); ++j) {
      const Chain& sigma = out.chains[n][j];
      const std::size_t col = out.offsets[n][j];
      for (std::size_t i = 0; i <= n; ++i) {
        Chain face = sigma;
        face.elements.erase(face.elements.begin() + static_cast<std::ptrdiff_t>(i));
        const std::size_t fi = *out.index_of(n - 1, face);
        const std::size_t row = out.offsets[n - 1][fi];
        if (i == 0) {
          detail::add_block(d, row, col, sheaf.structure_map(sigma.elements[1], sigma.elements[0]));
        } else {
          detail::add_scaled_identity(d, row, col, out.widths[n][j], i % 2 == 0 ? k.one() : k.neg(k.one()));
        }
      }
    }
    diffs.push_back(std::move(d));
  }
  if (aug) {
    std::vector<std::size_t> all{aug->dim};
    all.insert(all.end(), dims.begin(), dims.end());
    if (dims.empty()) all.push_back(0);
    out.complex = ChainComplex<F>(k, -1, std::move(all), std::move(diffs));
  } else {
    out.complex = ChainComplex<F>(k, 0, std::move(dims), std::move(diffs));
  }
  return out;
}

/// T_*(P;F).
template <FieldType F>
SheafChainComplex<F> chain_complex_T(const Sheaf<F>& sheaf) {
  return sheaf_chain_complex(sheaf);
}

/// Augmented T_*(P;F), with the augmentation target in degree -1.
template <FieldType F>
SheafChainComplex<F> chain_complex_T(const Sheaf<F>& sheaf, const Augmentation<F>& aug) {
  return sheaf_chain_complex(sheaf, std::optional<Augmentation<F>>(aug));
}

/// S_*(P;F) on all simplices x_0 >= ... >= x_n up to `max_degree`. Homology
/// is only meaningful strictly below `max_degree`.
template <FieldType F>
SheafChainComplex<F> chain_complex_S(const Sheaf<F>& sheaf, std::size_t max_degree) {
  return sheaf_chain_complex(sheaf, std::optional<Augmentation<F>>(), /*degenerate=*/true, max_degree);
}

/// Homology of a sheaf on a poset.
template <FieldType F>
HomologyProfile sheaf_homology(const Sheaf<F>& sheaf) {
  return homology(chain_complex_T(sheaf).complex);
}

/// Reduced homology with respect to an augmentation.
template <FieldType F>
HomologyProfile sheaf_homology(const Sheaf<F>& sheaf, const Augmentation<F>& aug) {
  return homology(chain_complex_T(sheaf, aug).complex, /*reduced=*/true);
}

/// Chain map between T-type complexes induced by an element map f and
/// per-element components phi_x : F_src(x) -> F_tgt(f(x)). A chain whose
/// image is degenerate goes to zero. `aug_component` is the degree -1 map
/// when both sides are augmented.
template <FieldType F>
ChainMap<F> induced_chain_map(const SheafChainComplex<F>& src, const SheafChainComplex<F>& tgt,
                              std::span<const Element> f, const std::function<Matrix<F>(Element)>& component,
                              const std::optional<Matrix<F>>& aug_component = std::nullopt) {
  const F& k = src.complex.field();
  const bool aug = src.augmented && tgt.augmented;
  std::vector<Matrix<F>> maps;
  if (aug) {
    if (!aug_component) throw Error(ErrorCode::kNotAChainMap, "augmented complexes need a degree -1 component");
    maps.push_back(*aug_component);
  }
  const std::size_t top = src.chains.size();
  for (std::size_t n = 0; n < top; ++n) {
    Matrix<F> m(k, tgt.complex.dim(static_cast<int>(n)), src.complex.dim(static_cast<int>(n)));
    for (std::size_t j = 0; j < src.chains[n].size(); ++j) {
      const Chain& sigma = src.chains[n][j];
      Chain image;
      bool degenerate = false;
      for (Element x : sigma.elements) {
        if (!image.elements.empty() && image.elements.back() == f[x]) degenerate = true;
        image.elements.push_back(f[x]);
      }
      if (degenerate || src.widths[n][j] == 0) continue;
      auto ti = tgt.index_of(n, image);
      if (!ti) throw Error(ErrorCode::kMapNotMonotone, "image of a chain is not a chain");
      detail::add_block(m, tgt.offsets[n][*ti], src.offsets[n][j], component(sigma.top()));
    }
    maps.push_back(std::move(m));
  }
  return ChainMap<F>(src.complex, tgt.complex, aug ? -1 : 0, std::move(maps));
}

/// Chain map T_*(P;F) -> T_*(P;G) of a sheaf morphism (same chain bases).
template <FieldType F>
ChainMap<F> morphism_chain_map(const SheafChainComplex<F>& src, const SheafChainComplex<F>& tgt,
                               const SheafMorphism<F>& kappa) {
  std::vector<Element> id(kappa.components.size());
  for (Element x = 0; x < id.size(); ++x) id[x] = x;
  return induced_chain_map<F>(src, tgt, id, [&](Element x) { return kappa.components[x]; });
}

}  // namespace sheaflat
