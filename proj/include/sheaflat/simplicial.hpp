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
#include <set>
#include <utility>
#include <vector>

#include "sheaflat/chain_complex.hpp"
#include "sheaflat/field.hpp"
#include "sheaflat/matrix.hpp"
#include "sheaflat/poset.hpp"

namespace sheaflat {

using Simplex = std::vector<std::size_t>;  // sorted vertex list

/// Finite abstract simplicial complex, closed under faces. The empty simplex
/// is always present.
class SimplicialComplex {
 public:
  SimplicialComplex() { simplices_.insert(Simplex{}); }

  /// Downward closure of the given simplices.
  explicit SimplicialComplex(const std::vector<Simplex>& generators) : SimplicialComplex() {
    for (Simplex s : generators) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      add_with_faces(s);
    }
  }

  /// Whether `generators` was already face-closed.
  static bool is_closed(const std::vector<Simplex>& generators) {
    std::set<Simplex> have;
    for (Simplex s : generators) {
      std::sort(s.begin(), s.end());
      have.insert(s);
    }
    for (const Simplex& s : have) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        if (!have.count(face)) return false;
      }
    }
    return true;
  }

  bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }
  const std::set<Simplex>& simplices() const { return simplices_; }

  /// Top dimension; -1 for the void-only complex.
  int dimension() const {
    int d = -1;
    for (const Simplex& s : simplices_) d = std::max(d, static_cast<int>(s.size()) - 1);
    return d;
  }

  /// Simplices of dimension d (d + 1 vertices), lexicographic.
  std::vector<Simplex> of_dimension(int d) const {
    std::vector<Simplex> out;
    for (const Simplex& s : simplices_) {
      if (static_cast<int>(s.size()) == d + 1) out.push_back(s);
    }
    return out;
  }

  /// f-vector starting at dimension 0.
  std::vector<std::size_t> face_counts() const {
    std::vector<std::size_t> f(static_cast<std::size_t>(std::max(dimension() + 1, 0)), 0);
    for (const Simplex& s : simplices_) {
      if (!s.empty()) ++f[s.size() - 1];
    }
    return f;
  }

  /// Whether adding v to any simplex stays inside the complex.
  bool is_cone_with_apex(std::size_t v) const {
    for (const Simplex& s : simplices_) {
      Simplex t = s;
      if (!std::binary_search(t.begin(), t.end(), v)) {
        t.insert(std::upper_bound(t.begin(), t.end(), v), v);
        if (!contains(t)) return false;
      }
    }
    return true;
  }

  /// Simplices not containing v.
  SimplicialComplex deletion(std::size_t v) const {
    std::vector<Simplex> keep;
    for (const Simplex& s : simplices_) {
      if (!std::binary_search(s.begin(), s.end(), v)) keep.push_back(s);
    }
    return SimplicialComplex(keep);
  }

 private:
  void add_with_faces(const Simplex& s) {
    if (!simplices_.insert(s).second) return;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      add_with_faces(face);
    }
  }

  std::set<Simplex> simplices_;
};

/// Simplicial chain complex. Reduced: the empty simplex spans degree -1.
template <FieldType F>
ChainComplex<F> simplicial_chain_complex(const SimplicialComplex& k, const F& field, bool reduced) {
  const int lo = reduced ? -1 : 0;
  const int hi = std::max(k.dimension(), lo);
  std::vector<std::vector<Simplex>> cells;
  std::vector<std::size_t> dims;
  for (int d = lo; d <= hi; ++d) {
    cells.push_back(k.of_dimension(d));
    dims.push_back(cells.back().size());
  }
  std::vector<Matrix<F>> diffs;
  for (int d = lo + 1; d <= hi; ++d) {
    const auto& rows = cells[static_cast<std::size_t>(d - 1 - lo)];
    const auto& cols = cells[static_cast<std::size_t>(d - lo)];
    Matrix<F> m(field, rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (std::size_t i = 0; i < cols[j].size(); ++i) {
        Simplex face = cols[j];
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        const auto r = static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), face) - rows.begin());
        m(r, j) = field.from_int(i % 2 == 0 ? 1 : -1);
      }
    }
    diffs.push_back(std::move(m));
  }
  return ChainComplex<F>(field, lo, std::move(dims), std::move(diffs));
}

template <FieldType F>
HomologyProfile simplicial_homology(const SimplicialComplex& k, const F& field, bool reduced = true) {
  return homology(simplicial_chain_complex(k, field, reduced), reduced);
}

/// Order complex |P|: vertices are elements, simplices are chains.
inline SimplicialComplex order_complex(const Poset& p) {
  std::vector<Simplex> chains;
  const std::size_t h = p.empty() ? 0 : p.height();
  for (std::size_t n = 0; n <= h && !p.empty(); ++n) {
    for (const Chain& c : p.enumerate_chains(n)) {
      Simplex s(c.elements.begin(), c.elements.end());
      std::sort(s.begin(), s.end());
      chains.push_back(std::move(s));
    }
  }
  return SimplicialComplex(chains);
}

}  // namespace sheaflat
