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
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sheaflat/error.hpp"

namespace sheaflat {

using Element = std::size_t;

/// A strictly ordered chain of a poset, stored top element first:
/// elements[0] > elements[1] > ... > elements[n]. Its length is n. The sheaf
/// value of a chain lives at elements[0].
struct Chain {
  std::vector<Element> elements;

  std::size_t length() const { return elements.empty() ? 0 : elements.size() - 1; }
  Element top() const { return elements.front(); }
  Element bottom() const { return elements.back(); }
  friend bool operator==(const Chain&, const Chain&) = default;
  friend auto operator<=>(const Chain&, const Chain&) = default;
};

/// Finite graded poset on the elements 0..n-1.
///
/// The order is given by generating relations (x, y) meaning x < y; the
/// constructor takes the reflexive-transitive closure and rejects cycles.
/// Gradedness is validated eagerly: there must be a rank function with
/// rk(y) = rk(x) + 1 on every cover. Ranks are normalised so that the
/// minimal elements of every connected component have rank 0; with a unique
/// minimum this is the standard grading (longest chain from the minimum).
class Poset {
 public:
  Poset() = default;

  Poset(std::size_t n, const std::vector<std::pair<Element, Element>>& less_than,
        std::vector<std::string> labels = {})
      : n_(n), leq_(n * n, 0), labels_(std::move(labels)) {
    for (Element x = 0; x < n_; ++x) leq_[x * n_ + x] = 1;
    for (auto [x, y] : less_than) {
      if (x >= n_ || y >= n_) throw Error(ErrorCode::kNotAPoset, "relation out of range");
      leq_[x * n_ + y] = 1;
    }
    close_transitively();
    init();
  }

  /// Builds a poset from a full order predicate leq(x, y).
  template <class Leq>
  static Poset from_predicate(std::size_t n, Leq&& leq, std::vector<std::string> labels = {}) {
    Poset p;
    p.n_ = n;
    p.leq_.assign(n * n, 0);
    p.labels_ = std::move(labels);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) p.leq_[x * n + y] = (x == y || leq(x, y)) ? 1 : 0;
    p.close_transitively();
    p.init();
    return p;
  }

  std::size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }
  bool leq(Element x, Element y) const { return leq_[x * n_ + y] != 0; }
  bool lt(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }
  int rank_of(Element x) const { return rank_[x]; }
  /// Largest rank of an element (0 for the empty poset).
  int rank() const { return max_rank_; }

  std::string label(Element x) const {
    return x < labels_.size() ? labels_[x] : std::to_string(x);
  }
  const std::vector<std::string>& labels() const { return labels_; }

  /// All cover pairs (x, y) with x covered by y, in lexicographic order.
  const std::vector<std::pair<Element, Element>>& covers() const { return covers_; }
  bool covers_pair(Element x, Element y) const {
    return std::binary_search(covers_.begin(), covers_.end(), std::make_pair(x, y));
  }

  std::optional<Element> minimum() const { return minimum_; }
  std::optional<Element> maximum() const { return maximum_; }

  /// Möbius function by the defining recursion mu(x,x) = 1,
  /// mu(x,y) = -sum_{x <= z < y} mu(x,z). The table is filled at
  /// construction, so this is a read-only lookup.
  long long mobius(Element x, Element y) const {
    if (!leq(x, y)) {
      throw Error(ErrorCode::kNotComparable, label(x) + " is not below " + label(y));
    }
    return mobius_[x * n_ + y];
  }

  /// All chains with n+1 elements, in lexicographic order of their
  /// top-first element tuples.
  std::vector<Chain> enumerate_chains(std::size_t n) const {
    std::vector<Chain> out;
    Chain current;
    for (Element top = 0; top < n_; ++top) {
      current.elements.assign(1, top);
      extend_down(current, n, /*strict=*/true, out);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Weakly decreasing sequences x_0 >= ... >= x_n (degenerate simplices
  /// included), lexicographic order.
  std::vector<Chain> enumerate_simplices(std::size_t n) const {
    std::vector<Chain> out;
    Chain current;
    for (Element top = 0; top < n_; ++top) {
      current.elements.assign(1, top);
      extend_down(current, n, /*strict=*/false, out);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Length of the longest chain.
  std::size_t height() const {
    std::size_t best = 0;
    std::vector<std::size_t> longest(n_, 0);
    for (Element y : topological_) {
      for (Element x = 0; x < n_; ++x) {
        if (lt(x, y)) longest[y] = std::max(longest[y], longest[x] + 1);
      }
      best = std::max(best, longest[y]);
    }
    return best;
  }

  /// Elements in a linear extension of the order.
  const std::vector<Element>& linear_extension() const { return topological_; }

 private:
  void close_transitively() {
    for (Element k = 0; k < n_; ++k)
      for (Element i = 0; i < n_; ++i) {
        if (!leq_[i * n_ + k]) continue;
        for (Element j = 0; j < n_; ++j) {
          if (leq_[k * n_ + j]) leq_[i * n_ + j] = 1;
        }
      }
  }

  void init() {
    for (Element x = 0; x < n_; ++x)
      for (Element y = x + 1; y < n_; ++y) {
        if (leq(x, y) && leq(y, x)) {
          throw Error(ErrorCode::kNotAPoset, "relation is not antisymmetric at " + label(x) + ", " + label(y));
        }
      }
    // linear extension: sort by number of elements below
    topological_.resize(n_);
    std::vector<std::size_t> below(n_, 0);
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y) below[x] += leq(y, x) ? 1 : 0;
    for (Element x = 0; x < n_; ++x) topological_[x] = x;
    std::stable_sort(topological_.begin(), topological_.end(),
                     [&](Element a, Element b) { return below[a] < below[b]; });

    covers_.clear();
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y) {
        if (!lt(x, y)) continue;
        bool cover = true;
        for (Element z = 0; z < n_ && cover; ++z) cover = !(lt(x, z) && lt(z, y));
        if (cover) covers_.emplace_back(x, y);
      }
    std::sort(covers_.begin(), covers_.end());

    grade();

    minimum_.reset();
    maximum_.reset();
    for (Element x = 0; x < n_; ++x) {
      bool is_min = true;
      bool is_max = true;
      for (Element y = 0; y < n_; ++y) {
        is_min = is_min && leq(x, y);
        is_max = is_max && leq(y, x);
      }
      if (is_min) minimum_ = x;
      if (is_max) maximum_ = x;
    }

    mobius_.assign(n_ * n_, 0);
    for (Element x = 0; x < n_; ++x) {
      for (Element y : topological_) {
        if (!leq(x, y)) continue;
        if (x == y) {
          mobius_[x * n_ + y] = 1;
          continue;
        }
        long long sum = 0;
        for (Element z = 0; z < n_; ++z) {
          if (leq(x, z) && lt(z, y)) sum += mobius_[x * n_ + z];
        }
        mobius_[x * n_ + y] = -sum;
      }
    }
  }

  // Propagates rk(y) = rk(x) + 1 across covers within each connected
  // component of the Hasse diagram, then shifts each component so its
  // lowest rank is 0.
  void grade() {
    rank_.assign(n_, 0);
    std::vector<bool> seen(n_, false);
    std::vector<std::vector<std::pair<Element, int>>> adj(n_);
    for (auto [x, y] : covers_) {
      adj[x].emplace_back(y, 1);
      adj[y].emplace_back(x, -1);
    }
    for (Element start = 0; start < n_; ++start) {
      if (seen[start]) continue;
      std::vector<Element> component;
      std::queue<Element> todo;
      todo.push(start);
      seen[start] = true;
      rank_[start] = 0;
      while (!todo.empty()) {
        Element x = todo.front();
        todo.pop();
        component.push_back(x);
        for (auto [y, step] : adj[x]) {
          if (!seen[y]) {
            seen[y] = true;
            rank_[y] = rank_[x] + step;
            todo.push(y);
          } else if (rank_[y] != rank_[x] + step) {
            throw Error(ErrorCode::kNotGraded,
                        "cover " + label(std::min(x, y)) + "-" + label(std::max(x, y)) +
                            " breaks every rank function");
          }
        }
      }
      int low = rank_[start];
      for (Element x : component) low = std::min(low, rank_[x]);
      for (Element x : component) rank_[x] -= low;
    }
    max_rank_ = 0;
    for (Element x = 0; x < n_; ++x) max_rank_ = std::max(max_rank_, rank_[x]);
  }

  void extend_down(Chain& current, std::size_t n, bool strict, std::vector<Chain>& out) const {
    if (current.length() == n) {
      out.push_back(current);
      return;
    }
    const Element last = current.elements.back();
    for (Element x = 0; x < n_; ++x) {
      if (strict ? !lt(x, last) : !leq(x, last)) continue;
      current.elements.push_back(x);
      extend_down(current, n, strict, out);
      current.elements.pop_back();
    }
  }

  std::size_t n_ = 0;
  std::vector<char> leq_;
  std::vector<std::string> labels_;
  std::vector<int> rank_;
  int max_rank_ = 0;
  std::vector<std::pair<Element, Element>> covers_;
  std::optional<Element> minimum_;
  std::optional<Element> maximum_;
  std::vector<long long> mobius_;
  std::vector<Element> topological_;
};

/// An induced subposet together with the map back to the parent's elements.
/// to_parent is strictly increasing, so element order (and therefore the
/// lexicographic chain order) is inherited from the parent.
struct Subposet {
  Poset poset;
  std::vector<Element> to_parent;

  /// Index of a parent element in the subposet, if present.
  std::optional<Element> from_parent(Element parent) const {
    auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent);
    if (it == to_parent.end() || *it != parent) return std::nullopt;
    return static_cast<Element>(it - to_parent.begin());
  }
};

/// Standard grading of a poset with a minimum: rk(x) = longest chain from
/// the minimum to x. Throws NotGraded if some cover does not raise it by 1.
inline std::vector<int> standard_grading(const Poset& p) {
  if (!p.minimum()) throw Error(ErrorCode::kInvalidArgument, "standard grading needs a minimum");
  const Element bottom = *p.minimum();
  std::vector<int> rk(p.size(), 0);
  for (Element y : p.linear_extension()) {
    for (Element x = 0; x < p.size(); ++x) {
      if (p.lt(x, y) && p.leq(bottom, x)) rk[y] = std::max(rk[y], rk[x] + 1);
    }
  }
  for (auto [x, y] : p.covers()) {
    if (rk[y] != rk[x] + 1) {
      throw Error(ErrorCode::kNotGraded, "cover " + p.label(x) + " < " + p.label(y) + " skips a rank");
    }
  }
  return rk;
}

/// Subposet induced on the given parent elements (any order, duplicates ignored).
inline Subposet induced_subposet(const Poset& p, std::vector<Element> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (Element x : keep) labels.push_back(p.label(x));
  Poset sub = Poset::from_predicate(
      keep.size(), [&](Element a, Element b) { return p.leq(keep[a], keep[b]); }, std::move(labels));
  return {std::move(sub), std::move(keep)};
}

template <class Pred>
Subposet filter_subposet(const Poset& p, Pred&& keep_if) {
  std::vector<Element> keep;
  for (Element x = 0; x < p.size(); ++x) {
    if (keep_if(x)) keep.push_back(x);
  }
  return induced_subposet(p, std::move(keep));
}

inline Subposet interval(const Poset& p, Element x, Element y) {
  if (!p.leq(x, y)) throw Error(ErrorCode::kNotComparable, p.label(x) + " is not below " + p.label(y));
  return filter_subposet(p, [&](Element z) { return p.leq(x, z) && p.leq(z, y); });
}

inline Subposet up_set(const Poset& p, Element x) {
  return filter_subposet(p, [&](Element z) { return p.leq(x, z); });
}

inline Subposet strict_up_set(const Poset& p, Element x) {
  return filter_subposet(p, [&](Element z) { return p.lt(x, z); });
}

inline Subposet strict_down_set(const Poset& p, Element x) {
  return filter_subposet(p, [&](Element z) { return p.lt(z, x); });
}

inline Subposet without(const Poset& p, std::vector<Element> removed) {
  std::sort(removed.begin(), removed.end());
  return filter_subposet(p, [&](Element z) { return !std::binary_search(removed.begin(), removed.end(), z); });
}

/// Whether an element map Q -> P is order preserving.
inline bool is_monotone(const Poset& q, const Poset& p, std::span<const Element> f) {
  if (f.size() != q.size()) return false;
  for (Element x = 0; x < q.size(); ++x) {
    if (f[x] >= p.size()) return false;
    for (Element y = 0; y < q.size(); ++y) {
      if (q.leq(x, y) && !p.leq(f[x], f[y])) return false;
    }
  }
  return true;
}

}  // namespace sheaflat
