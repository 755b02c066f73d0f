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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sheaflat/chain_complex.hpp"
#include "sheaflat/error.hpp"
#include "sheaflat/field.hpp"
#include "sheaflat/lattice.hpp"
#include "sheaflat/linalg.hpp"
#include "sheaflat/matrix.hpp"
#include "sheaflat/order_complex.hpp"
#include "sheaflat/poset.hpp"
#include "sheaflat/sheaf.hpp"

namespace sheaflat {

namespace detail {

inline void require_lattice_sheaf(const Lattice& l, const Poset& p) {
  bool same = p.size() == l.size();
  for (Element x = 0; same && x < p.size(); ++x)
    for (Element y = 0; same && y < p.size(); ++y) same = p.leq(x, y) == l.leq(x, y);
  if (!same) throw Error(ErrorCode::kSheafDomainMismatch, "sheaf is not defined on this lattice");
}

/// Everything the deletion-restriction sequences need for one atom.
template <FieldType F>
struct DeletionRestrictionData {
  Element bottom;
  Element atom;
  Subposet punctured;  // L \ 0
  Subposet sub;        // L_1 = L \ {0, a}
  Subposet deleted;    // L_a \ 0
  Subposet above;      // L_{>a} = L^a \ a
  std::vector<Element> sub_into_punctured;
  Sheaf<F> punctured_sheaf, sub_sheaf, deleted_sheaf, above_sheaf;

  static DeletionRestrictionData make(const Lattice& l, const Sheaf<F>& sheaf, Element a) {
    require_atom(l, a);
    require_lattice_sheaf(l, sheaf.poset());
    const Poset& p = l.poset();
    const Element z = l.bottom();
    Subposet punctured = without(p, {z});
    Subposet sub = without(p, {z, a});
    const SubLattice del = deletion(l, a);
    std::vector<Element> keep;
    for (Element x : del.to_parent) {
      if (x != z) keep.push_back(x);
    }
    Subposet deleted = induced_subposet(p, keep);
    Subposet above = strict_up_set(p, a);
    std::vector<Element> into;
    for (Element x : sub.to_parent) into.push_back(*punctured.from_parent(x));
    Sheaf<F> ps = restrict_sheaf(sheaf, punctured);
    Sheaf<F> ss = restrict_sheaf(sheaf, sub);
    Sheaf<F> ds = restrict_sheaf(sheaf, deleted);
    Sheaf<F> as = restrict_sheaf(sheaf, above);
    return {z,
            a,
            std::move(punctured),
            std::move(sub),
            std::move(deleted),
            std::move(above),
            std::move(into),
            std::move(ps),
            std::move(ss),
            std::move(ds),
            std::move(as)};
  }
};

/// Quotient of a T-complex by the subcomplex of chains avoiding `a`: the
/// chains with bottom element `a`, with the projection from the full complex.
/// Degrees below `lo` of the full complex map to zero.
template <FieldType F>
std::pair<ChainComplex<F>, std::vector<Matrix<F>>> quotient_by_chains_with_bottom(const SheafChainComplex<F>& full,
                                                                                    Element a) {
  const F& k = full.complex.field();
  std::vector<std::size_t> dims;
  std::vector<Matrix<F>> proj;
  for (std::size_t n = 0; n < full.chains.size(); ++n) {
    std::vector<std::size_t> rows_kept;
    for (std::size_t j = 0; j < full.chains[n].size(); ++j) {
      if (full.chains[n][j].bottom() != a) continue;
      for (std::size_t c = 0; c < full.widths[n][j]; ++c) rows_kept.push_back(full.offsets[n][j] + c);
    }
    Matrix<F> pr(k, rows_kept.size(), full.complex.dim(static_cast<int>(n)));
    for (std::size_t r = 0; r < rows_kept.size(); ++r) pr(r, rows_kept[r]) = k.one();
    dims.push_back(rows_kept.size());
    proj.push_back(std::move(pr));
  }
  std::vector<Matrix<F>> diffs;
  for (std::size_t n = 1; n < dims.size(); ++n) {
    diffs.push_back(proj[n - 1] * full.complex.differential(static_cast<int>(n)) * proj[n].transpose());
  }
  return {ChainComplex<F>(k, 0, std::move(dims), std::move(diffs)), std::move(proj)};
}

template <FieldType F>
bool same_complex(const ChainComplex<F>& a, const ChainComplex<F>& b) {
  const int lo = std::min(a.lo(), b.lo());
  const int hi = std::max(a.hi(), b.hi());
  for (int i = lo; i <= hi; ++i) {
    if (a.dim(i) != b.dim(i)) return false;
  }
  for (int i = lo + 1; i <= hi; ++i) {
    if (!(a.differential(i) == b.differential(i))) return false;
  }
  return true;
}

template <FieldType F>
std::vector<Element> identity_map(std::size_t n) {
  std::vector<Element> id(n);
  for (Element x = 0; x < n; ++x) id[x] = x;
  return id;
}

}  // namespace detail

/// The deletion-restriction long exact sequence for one atom, with every
/// map computed explicitly.
template <FieldType F>
struct LesReport {
  Element atom = 0;
  HomologyProfile whole;        // H_*(L \ 0)
  HomologyProfile sub;          // H_*(L \ {0, a})
  HomologyProfile deletion;     // H_*(L_a \ 0), computed on its own
  HomologyProfile restriction;  // H_*(L^a \ a), reduced in degree 0, coker(eps) in degree -1
  std::size_t coker_epsilon = 0;
  LongExactSequence<F> sequence;
  bool quotient_is_shifted_restriction = false;
  bool deletion_matches_sub = false;

  bool passed() const { return sequence.exact() && quotient_is_shifted_restriction && deletion_matches_sub; }
};

/// 0 -> T(L_1) -> T(L \ 0) -> Q -> 0 where Q is spanned by the chains with
/// bottom a; its homology sequence is
///   ... -> H_i(L^a\a) -> H_i(L_1) -> H_i(L\0) -> H_{i-1}(L^a\a) -> ...
///   -> H_0(L_1) -> H_0(L\0) -> coker(eps) -> 0.
template <FieldType F>
LesReport<F> deletion_restriction_les(const Lattice& l, const Sheaf<F>& sheaf, Element a) {
  auto data = detail::DeletionRestrictionData<F>::make(l, sheaf, a);
  const Element a_in_punctured = *data.punctured.from_parent(a);

  const SheafChainComplex<F> whole = chain_complex_T(data.punctured_sheaf);
  const SheafChainComplex<F> sub = chain_complex_T(data.sub_sheaf);
  const ChainMap<F> incl = induced_chain_map<F>(sub, whole, data.sub_into_punctured, [&](Element x) {
    return Matrix<F>::identity(sheaf.field(), data.sub_sheaf.dim_at(x));
  });
  auto [quotient, proj] = detail::quotient_by_chains_with_bottom(whole, a_in_punctured);
  const ChainMap<F> project(whole.complex, quotient, 0, std::move(proj));

  LesReport<F> report;
  report.atom = a;
  report.sequence = long_exact_sequence(sub.complex, whole.complex, quotient, incl, project);
  for (LesTerm& t : report.sequence.terms) {
    const std::string d = std::to_string(t.degree);
    if (t.name.ends_with("(A)")) {
      t.name = "H_" + d + "(L_1)";
    } else if (t.name.ends_with("(B)")) {
      t.name = "H_" + d + "(L\\0)";
    } else if (t.degree >= 2) {
      t.name = "H_" + std::to_string(t.degree - 1) + "(L^a\\a)";
    } else {
      t.name = t.degree == 1 ? "H~_0(L^a\\a)" : "coker(eps)";
    }
  }

  // Q is the augmented complex of L_{>a} with F(a) in degree -1, shifted up.
  const SheafChainComplex<F> above =
      chain_complex_T(data.above_sheaf, augmentation_to(sheaf, a, data.above));
  report.quotient_is_shifted_restriction = detail::same_complex(quotient, above.complex.shifted(1));
  report.restriction = homology(above.complex, /*reduced=*/true);
  report.coker_epsilon = report.restriction.dim(-1);

  report.whole = homology(whole.complex);
  report.sub = homology(sub.complex);
  report.deletion = sheaf_homology(data.deleted_sheaf);
  report.deletion_matches_sub = report.sub.same_dims(report.deletion);
  return report;
}

enum class ReducedLesStatus { kPassed, kFailed, kHypothesisFails };

inline const char* to_string(ReducedLesStatus s) {
  switch (s) {
    case ReducedLesStatus::kPassed:
      return "passed";
    case ReducedLesStatus::kFailed:
      return "failed";
    case ReducedLesStatus::kHypothesisFails:
      return "hypothesis_fails";
  }
  return "unknown";
}

/// The all-reduced sequence, valid when eps_* : H_0(L^a \ a) -> F(a) is onto.
template <FieldType F>
struct ReducedLesReport {
  Element atom = 0;
  ReducedLesStatus status = ReducedLesStatus::kFailed;
  std::size_t coker_epsilon = 0;
  HomologyProfile whole;        // reduced, L \ 0
  HomologyProfile sub;          // reduced, L_1
  HomologyProfile deletion;     // reduced, L_a \ 0
  HomologyProfile restriction;  // reduced, L^a \ a
  LongExactSequence<F> sequence;  // ends ... -> H~_0(L_1) -> H~_0(L \ 0) -> 0
  bool augmented_sequence_exact = false;
  bool image_in_reduced = false;  // connecting map H~_0(L^a\a) -> H_0(L_1) lands in ker eps_*
  bool deletion_matches_sub = false;
};

template <FieldType F>
ReducedLesReport<F> reduced_les_check(const Lattice& l, const Sheaf<F>& sheaf, Element a) {
  auto data = detail::DeletionRestrictionData<F>::make(l, sheaf, a);
  const F& k = sheaf.field();
  const Element z = data.bottom;
  const Element a_in_punctured = *data.punctured.from_parent(a);
  const std::size_t dim0 = sheaf.dim_at(z);

  ReducedLesReport<F> report;
  report.atom = a;

  const auto aug_whole = augmentation_to(sheaf, z, data.punctured);
  const auto aug_sub = augmentation_to(sheaf, z, data.sub);
  const SheafChainComplex<F> whole = chain_complex_T(data.punctured_sheaf, aug_whole);
  const SheafChainComplex<F> sub = chain_complex_T(data.sub_sheaf, aug_sub);
  const ChainMap<F> incl = induced_chain_map<F>(
      sub, whole, data.sub_into_punctured,
      [&](Element x) { return Matrix<F>::identity(k, data.sub_sheaf.dim_at(x)); }, Matrix<F>::identity(k, dim0));

  // The quotient only involves degrees >= 0, so it is the unreduced one.
  const SheafChainComplex<F> whole_plain = chain_complex_T(data.punctured_sheaf);
  auto [quotient, proj] = detail::quotient_by_chains_with_bottom(whole_plain, a_in_punctured);
  std::vector<Matrix<F>> proj_aug{Matrix<F>(k, 0, dim0)};
  for (auto& m : proj) proj_aug.push_back(std::move(m));
  const ChainMap<F> project(whole.complex, quotient, -1, std::move(proj_aug));

  LongExactSequence<F> full = long_exact_sequence(sub.complex, whole.complex, quotient, incl, project);
  report.augmented_sequence_exact = full.exact();

  const SheafChainComplex<F> above = chain_complex_T(data.above_sheaf, augmentation_to(sheaf, a, data.above));
  report.restriction = homology(above.complex, true);
  report.coker_epsilon = report.restriction.dim(-1);
  report.whole = homology(whole.complex, true);
  report.sub = homology(sub.complex, true);
  report.deletion = sheaf_homology(data.deleted_sheaf, augmentation_to(sheaf, z, data.deleted));
  report.deletion_matches_sub = report.sub.same_dims(report.deletion);

  // Truncate after H~_0(L \ 0), which is the B-term in degree 0.
  std::size_t last = 0;
  for (std::size_t t = 0; t < full.terms.size(); ++t) {
    if (full.terms[t].degree == 0 && full.terms[t].name.ends_with("(B)")) last = t;
  }
  report.sequence.terms.assign(full.terms.begin(), full.terms.begin() + static_cast<std::ptrdiff_t>(last + 1));
  report.sequence.maps.assign(full.maps.begin(), full.maps.begin() + static_cast<std::ptrdiff_t>(last));
  for (auto [d, idx] : full.connecting) {
    if (idx < last) report.sequence.connecting[d] = idx;
  }
  check_exactness(report.sequence);
  for (LesTerm& t : report.sequence.terms) {
    const std::string d = std::to_string(t.degree);
    if (t.name.ends_with("(A)")) {
      t.name = "H~_" + d + "(L_1)";
    } else if (t.name.ends_with("(B)")) {
      t.name = "H~_" + d + "(L\\0)";
    } else {
      t.name = "H~_" + std::to_string(t.degree - 1) + "(L^a\\a)";
    }
  }

  // im(H~_0(L^a\a) -> H_0(L_1)) inside ker(eps_* : H_0(L_1) -> F(0)).
  {
    const SheafChainComplex<F> sub_plain = chain_complex_T(data.sub_sheaf);
    const ChainMap<F> incl_plain = induced_chain_map<F>(sub_plain, whole_plain, data.sub_into_punctured, [&](Element x) {
      return Matrix<F>::identity(k, data.sub_sheaf.dim_at(x));
    });
    auto [q2, proj2] = detail::quotient_by_chains_with_bottom(whole_plain, a_in_punctured);
    const ChainMap<F> project_plain(whole_plain.complex, q2, 0, std::move(proj2));
    const LongExactSequence<F> plain =
        long_exact_sequence(sub_plain.complex, whole_plain.complex, q2, incl_plain, project_plain);
    const HomologyGroup<F> h0 = homology_group(sub_plain.complex, 0);
    const Matrix<F> eps_star = sub.complex.differential(0) * h0.representatives.transpose();
    auto it = plain.connecting.find(1);
    report.image_in_reduced = it == plain.connecting.end() || (eps_star * plain.maps[it->second]).is_zero();
  }

  if (report.coker_epsilon != 0) {
    report.status = ReducedLesStatus::kHypothesisFails;
  } else {
    const bool ok = report.sequence.exact() && report.augmented_sequence_exact && report.image_in_reduced &&
                    report.deletion_matches_sub;
    report.status = ok ? ReducedLesStatus::kPassed : ReducedLesStatus::kFailed;
  }
  return report;
}

/// The map t : L_1 -> L_a \ 0 (x if x is in L_a, else the join of the
/// atoms below x other than a) and the checks built on it.
template <FieldType F>
struct FiberReport {
  Element atom = 0;
  std::vector<Element> t;  // parent element -> parent element, on L_1
  bool monotone = false;
  bool fiber_minima = false;
  bool dims_match = false;
  bool induced_isomorphism = false;  // t_* is an isomorphism in every degree
  HomologyProfile sub;
  HomologyProfile deletion;

  bool passed() const { return monotone && fiber_minima && dims_match && induced_isomorphism; }
};

template <FieldType F>
FiberReport<F> fiber_lemma_check(const Lattice& l, const Sheaf<F>& sheaf, Element a) {
  auto data = detail::DeletionRestrictionData<F>::make(l, sheaf, a);
  FiberReport<F> report;
  report.atom = a;

  const auto& sub = data.sub;
  const auto& del = data.deleted;
  std::vector<Element> t_sub(sub.poset.size());  // L_1 index -> L_a \ 0 index
  for (Element x = 0; x < sub.poset.size(); ++x) {
    const Element px = sub.to_parent[x];
    Element image = px;
    if (!del.from_parent(px)) {
      std::vector<Element> b;
      for (Element at : l.atoms_below(px)) {
        if (at != a) b.push_back(at);
      }
      image = l.join_all(b);
    }
    report.t.push_back(image);
    t_sub[x] = *del.from_parent(image);
  }
  report.monotone = is_monotone(sub.poset, del.poset, t_sub);

  report.fiber_minima = true;
  for (Element y = 0; y < del.poset.size(); ++y) {
    const Element py = del.to_parent[y];
    auto ys = sub.from_parent(py);
    if (!ys || !del.poset.leq(y, t_sub[*ys])) {
      report.fiber_minima = false;
      continue;
    }
    for (Element x = 0; x < sub.poset.size(); ++x) {
      if (del.poset.leq(y, t_sub[x]) && !sub.poset.leq(*ys, x)) report.fiber_minima = false;
    }
  }

  const SheafChainComplex<F> src = chain_complex_T(data.sub_sheaf);
  const SheafChainComplex<F> tgt = chain_complex_T(data.deleted_sheaf);
  report.sub = homology(src.complex);
  report.deletion = homology(tgt.complex);
  report.dims_match = report.sub.same_dims(report.deletion);

  if (report.monotone) {
    const ChainMap<F> tmap = induced_chain_map<F>(src, tgt, t_sub, [&](Element x) {
      const Element px = sub.to_parent[x];
      return sheaf.structure_map(report.t[x], px);
    });
    report.induced_isomorphism = true;
    const int hi = std::max(src.complex.hi(), tgt.complex.hi());
    for (int d = 0; d <= hi; ++d) {
      const HomologyGroup<F> hs = homology_group(src.complex, d);
      const HomologyGroup<F> ht = homology_group(tgt.complex, d);
      const Matrix<F> m = induced_map(tmap.at(d, src.complex, tgt.complex), hs, ht);
      if (m.rows() != m.cols() || rank(m) != m.rows()) report.induced_isomorphism = false;
    }
  }
  return report;
}

}  // namespace sheaflat
