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
#include <string>
#include <utility>
#include <vector>

#include "sheaflat/error.hpp"
#include "sheaflat/poset.hpp"

namespace sheaflat {

/// Finite lattice over a graded poset, with join and meet tables filled at
/// construction.
class Lattice {
 public:
  explicit Lattice(Poset p) : poset_(std::move(p)) {
    const std::size_t n = poset_.size();
    if (n == 0) throw Error(ErrorCode::kNotALattice, "empty poset");
    if (!poset_.minimum() || !poset_.maximum()) {
      throw Error(ErrorCode::kNotALattice, "no minimum or no maximum");
    }
    join_.assign(n * n, 0);
    meet_.assign(n * n, 0);
    std::vector<std::size_t> below(n, 0);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) below[a] += poset_.leq(b, a) ? 1 : 0;
    for (Element x = 0; x < n; ++x) {
      for (Element y = x; y < n; ++y) {
        const Element j = least_bound(x, y, below, /*upper=*/true);
        const Element m = least_bound(x, y, below, /*upper=*/false);
        join_[x * n + y] = join_[y * n + x] = j;
        meet_[x * n + y] = meet_[y * n + x] = m;
      }
    }
    for (auto [x, y] : poset_.covers()) {
      if (x == bottom()) atoms_.push_back(y);
    }
  }

  const Poset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  Element bottom() const { return *poset_.minimum(); }
  Element top() const { return *poset_.maximum(); }
  const std::vector<Element>& atoms() const { return atoms_; }
  int rank() const { return poset_.rank_of(top()); }
  int rank_of(Element x) const { return poset_.rank_of(x); }
  bool leq(Element x, Element y) const { return poset_.leq(x, y); }
  Element join(Element x, Element y) const { return join_[x * size() + y]; }
  Element meet(Element x, Element y) const { return meet_[x * size() + y]; }
  std::string label(Element x) const { return poset_.label(x); }

  bool is_atom(Element x) const { return std::find(atoms_.begin(), atoms_.end(), x) != atoms_.end(); }

  /// Join of a set of elements; the empty join is the bottom.
  Element join_all(std::span<const Element> xs) const {
    Element acc = bottom();
    for (Element x : xs) acc = join(acc, x);
    return acc;
  }

  /// Atoms below x, in element order.
  std::vector<Element> atoms_below(Element x) const {
    std::vector<Element> out;
    for (Element a : atoms_) {
      if (leq(a, x)) out.push_back(a);
    }
    return out;
  }

  long long mobius(Element x, Element y) const { return poset_.mobius(x, y); }

 private:
  // The join (meet) is the bound lying below (above) every other bound; the
  // candidate is the bound with the fewest elements under (over) it.
  Element least_bound(Element x, Element y, const std::vector<std::size_t>& below, bool upper) const {
    const std::size_t n = size();
    auto is_bound = [&](Element z) {
      return upper ? (poset_.leq(x, z) && poset_.leq(y, z)) : (poset_.leq(z, x) && poset_.leq(z, y));
    };
    std::optional<Element> best;
    for (Element z = 0; z < n; ++z) {
      if (!is_bound(z)) continue;
      if (!best || (upper ? below[z] < below[*best] : below[z] > below[*best])) best = z;
    }
    for (Element z = 0; z < n; ++z) {
      if (is_bound(z) && !(upper ? poset_.leq(*best, z) : poset_.leq(z, *best))) {
        throw Error(ErrorCode::kNotALattice, std::string("no unique ") + (upper ? "join" : "meet") +
                                                 " of " + label(x) + " and " + label(y));
      }
    }
    return *best;
  }

  Poset poset_;
  std::vector<Element> join_;
  std::vector<Element> meet_;
  std::vector<Element> atoms_;
};

/// A lattice derived from a parent lattice, with its elements mapped back.
struct SubLattice {
  Lattice lattice;
  std::vector<Element> to_parent;

  std::optional<Element> from_parent(Element parent) const {
    auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent);
    if (it == to_parent.end() || *it != parent) return std::nullopt;
    return static_cast<Element>(it - to_parent.begin());
  }
};

inline bool is_atomic(const Lattice& l) {
  for (Element x = 0; x < l.size(); ++x) {
    const auto below = l.atoms_below(x);
    if (l.join_all(below) != x) return false;
  }
  return true;
}

/// Submodularity rk(x v y) + rk(x ^ y) <= rk(x) + rk(y) on all pairs, plus
/// atomicity.
inline bool is_geometric(const Lattice& l) {
  if (!is_atomic(l)) return false;
  for (Element x = 0; x < l.size(); ++x)
    for (Element y = x + 1; y < l.size(); ++y) {
      if (l.rank_of(l.join(x, y)) + l.rank_of(l.meet(x, y)) > l.rank_of(x) + l.rank_of(y)) return false;
    }
  return true;
}

inline void require_atom(const Lattice& l, Element a) {
  if (a >= l.size() || !l.is_atom(a)) {
    throw Error(ErrorCode::kNotAnAtom, "element " + std::to_string(a) + " is not an atom");
  }
}

/// Deletion lattice: all joins of atoms other than a (empty join = bottom).
inline SubLattice deletion(const Lattice& l, Element a) {
  require_atom(l, a);
  std::vector<bool> in(l.size(), false);
  in[l.bottom()] = true;
  std::vector<Element> frontier{l.bottom()};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (Element x : frontier) {
      for (Element b : l.atoms()) {
        if (b == a) continue;
        const Element y = l.join(x, b);
        if (!in[y]) {
          in[y] = true;
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  Subposet sub = filter_subposet(l.poset(), [&](Element x) { return in[x]; });
  return {Lattice(std::move(sub.poset)), std::move(sub.to_parent)};
}

/// Restriction lattice: the interval of elements above the atom a, with
/// minimum a and rank lowered by one.
inline SubLattice restriction(const Lattice& l, Element a) {
  require_atom(l, a);
  Subposet sub = up_set(l.poset(), a);
  return {Lattice(std::move(sub.poset)), std::move(sub.to_parent)};
}

/// A set of atoms is independent when every proper subset has strictly
/// smaller join. Dropping one atom at a time suffices, since joins are
/// monotone in the set.
inline bool is_independent(const Lattice& l, std::span<const Element> atoms) {
  for (Element a : atoms) require_atom(l, a);
  std::vector<Element> s(atoms.begin(), atoms.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw Error(ErrorCode::kInvalidArgument, "repeated atom");
  }
  const Element whole = l.join_all(s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<Element> rest = s;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (l.join_all(rest) == whole) return false;
  }
  return true;
}

/// Smallest-index atom a with join(A \ {a}) = join(A), if any.
inline std::optional<Element> find_dependent_atom(const Lattice& l) {
  const Element whole = l.join_all(l.atoms());
  for (Element a : l.atoms()) {
    std::vector<Element> rest;
    for (Element b : l.atoms()) {
      if (b != a) rest.push_back(b);
    }
    if (l.join_all(rest) == whole) return a;
  }
  return std::nullopt;
}

/// A graded atomic lattice whose atoms are independent is Boolean.
inline bool is_boolean(const Lattice& l) {
  return is_independent(l, l.atoms());
}

// ---------------------------------------------------------------------------
// Standard small lattices.

/// Boolean lattice B(n) on bitmasks 0..2^n-1.
inline Lattice boolean_lattice(std::size_t n) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::string> labels;
  for (std::size_t m = 0; m < size; ++m) {
    std::string s = "{";
    for (std::size_t i = 0; i < n; ++i) {
      if (m >> i & 1) s += (s.size() > 1 ? "," : "") + std::to_string(i + 1);
    }
    labels.push_back(s + "}");
  }
  return Lattice(Poset::from_predicate(
      size, [](Element a, Element b) { return (a & b) == a; }, std::move(labels)));
}

/// Chain 0 < 1 < ... < n-1.
inline Lattice chain_lattice(std::size_t n) {
  return Lattice(Poset::from_predicate(n, [](Element a, Element b) { return a <= b; }));
}

namespace detail {

inline void set_partitions(std::size_t n, std::size_t i, std::vector<int>& block,
                           int blocks, std::vector<std::vector<int>>& out) {
  if (i == n) {
    out.push_back(block);
    return;
  }
  for (int b = 0; b <= blocks; ++b) {
    block[i] = b;
    set_partitions(n, i + 1, block, std::max(blocks, b + 1), out);
  }
}

}  // namespace detail

/// Partition lattice Pi(n) ordered by refinement, listed by rank (number of
/// elements minus number of blocks) and then by restricted growth string.
inline Lattice partition_lattice(std::size_t n) {
  std::vector<std::vector<int>> parts;
  std::vector<int> block(n, 0);
  if (n == 0) {
    parts.push_back({});
  } else {
    block[0] = 0;
    detail::set_partitions(n, 1, block, 1, parts);
  }
  auto nblocks = [](const std::vector<int>& p) {
    int b = 0;
    for (int v : p) b = std::max(b, v + 1);
    return b;
  };
  std::stable_sort(parts.begin(), parts.end(),
                   [&](const auto& a, const auto& b) { return nblocks(a) > nblocks(b); });
  std::vector<std::string> labels;
  for (const auto& p : parts) {
    std::string s;
    for (int b = 0; b < nblocks(p); ++b) {
      s += b ? "|" : "";
      for (std::size_t i = 0; i < n; ++i) {
        if (p[i] == b) s += std::to_string(i + 1);
      }
    }
    labels.push_back(s);
  }
  // p refines q iff elements in the same block of p share a block of q
  auto refines = [&](Element a, Element b) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (parts[a][i] == parts[a][j] && parts[b][i] != parts[b][j]) return false;
      }
    return true;
  };
  return Lattice(Poset::from_predicate(parts.size(), refines, std::move(labels)));
}

/// Face lattice of a square ordered by reverse inclusion: the square, four
/// edges, four vertices, the empty face.
inline Lattice square_face_lattice() {
  // 0: square, 1-4: edges e_i = [v_i, v_{i+1}], 5-8: vertices, 9: empty face
  std::vector<std::pair<Element, Element>> rel;
  for (Element e = 1; e <= 4; ++e) rel.emplace_back(0, e);
  for (Element i = 0; i < 4; ++i) {
    const Element edge = 1 + i;
    rel.emplace_back(edge, 5 + i);
    rel.emplace_back(edge, 5 + (i + 1) % 4);
  }
  for (Element v = 5; v <= 8; ++v) rel.emplace_back(v, 9);
  return Lattice(Poset(10, rel, {"P", "e1", "e2", "e3", "e4", "v1", "v2", "v3", "v4", "{}"}));
}

}  // namespace sheaflat
