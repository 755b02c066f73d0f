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
#include <cstdint>
#include <random>
#include <vector>

#include "sheaflat/chain_complex.hpp"
#include "sheaflat/error.hpp"
#include "sheaflat/lattice.hpp"
#include "sheaflat/simplicial.hpp"

namespace sheaflat {

/// Broken circuit complex of a geometric lattice under a total order of its
/// atoms. Each cover x < y is labelled by the largest atom b with x v b = y;
/// the simplices are the label sets of the label-increasing saturated chains
/// starting at the bottom. Vertices are atom element indices.
struct BrokenCircuitReport {
  std::vector<Element> atom_order;          // smallest first
  Element apex = 0;                         // the largest atom
  SimplicialComplex full;
  SimplicialComplex reduced;                // simplices avoiding the apex
  bool label_sets_closed = false;           // label sets already face-closed
  bool is_cone = false;
  std::vector<std::size_t> increasing_chains;  // per element: increasing chains from the bottom
  HomologyProfile full_homology;            // reduced simplicial homology
  HomologyProfile reduced_homology;         // reduced simplicial homology of the base
};

/// Label of a cover x < y: the largest atom (in `order`) whose join with x is y.
inline Element cover_label(const Lattice& l, const std::vector<Element>& order, Element x, Element y) {
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (l.join(x, *it) == y) return *it;
  }
  throw Error(ErrorCode::kNotGeometric, "cover " + l.label(x) + " < " + l.label(y) + " has no atom label");
}

template <FieldType F>
BrokenCircuitReport bc_complex(const Lattice& l, std::vector<Element> order, const F& field) {
  if (!is_geometric(l)) throw Error(ErrorCode::kNotGeometric, "broken circuits need a geometric lattice");
  {
    std::vector<Element> sorted = order;
    std::vector<Element> atoms = l.atoms();
    std::sort(sorted.begin(), sorted.end());
    std::sort(atoms.begin(), atoms.end());
    if (sorted != atoms) throw Error(ErrorCode::kInvalidArgument, "atom order must list every atom once");
  }
  std::vector<std::size_t> position(l.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

  BrokenCircuitReport r;
  r.atom_order = order;
  r.apex = order.back();
  r.increasing_chains.assign(l.size(), 0);

  std::vector<std::vector<Element>> up(l.size());
  for (auto [x, y] : l.poset().covers()) up[x].push_back(y);

  std::vector<Simplex> label_sets;
  Simplex labels;
  // depth-first over saturated chains from the bottom with increasing labels
  auto walk = [&](auto&& self, Element x) -> void {
    ++r.increasing_chains[x];
    Simplex sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    label_sets.push_back(std::move(sorted));
    for (Element y : up[x]) {
      const Element lab = cover_label(l, order, x, y);
      if (!labels.empty() && position[lab] <= position[labels.back()]) continue;
      labels.push_back(lab);
      self(self, y);
      labels.pop_back();
    }
  };
  walk(walk, l.bottom());

  r.label_sets_closed = SimplicialComplex::is_closed(label_sets);
  r.full = SimplicialComplex(label_sets);
  r.is_cone = r.full.is_cone_with_apex(r.apex);
  r.reduced = r.full.deletion(r.apex);
  r.full_homology = simplicial_homology(r.full, field, true);
  r.reduced_homology = simplicial_homology(r.reduced, field, true);
  return r;
}

/// Atoms in element order.
inline std::vector<Element> default_atom_order(const Lattice& l) {
  std::vector<Element> order = l.atoms();
  std::sort(order.begin(), order.end());
  return order;
}

/// A seeded shuffle of the atoms.
inline std::vector<Element> random_atom_order(const Lattice& l, std::uint64_t seed) {
  std::vector<Element> order = default_atom_order(l);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

}  // namespace sheaflat
