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

#include <gtest/gtest.h>

#include <cstdlib>

#include "sheaflat/sheaflat.hpp"

namespace sheaflat {
namespace {

using Dims = std::map<int, std::size_t>;

TEST(ChainComplex, RejectsBadShapesAndNonzeroSquare) {
  Rationals q;
  EXPECT_THROW(ChainComplex<Rationals>(q, 0, {1, 1}, {Matrix<Rationals>(q, 2, 1)}), Error);
  EXPECT_THROW(ChainComplex<Rationals>(q, 0, {1, 1, 1}, {Matrix<Rationals>(q, 1, 1)}), Error);
  const auto one = Matrix<Rationals>::identity(q, 1);
  try {
    ChainComplex<Rationals> c(q, 0, {1, 1, 1}, {one, one});
    FAIL() << "d o d != 0 accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAChainComplex);
  }
}

TEST(ChainComplex, HomologyOfSmallComplex) {
  Rationals q;
  // C_1 = Q^2 -> C_0 = Q, (a, b) -> a - b: H_0 = 0, H_1 = 1
  const ChainComplex<Rationals> c(q, 0, {1, 2}, {Matrix<Rationals>::from_ints(q, {{1, -1}})});
  const HomologyProfile h = homology(c);
  EXPECT_EQ(h.nonzero(), (Dims{{1, 1}}));
  EXPECT_EQ(h.euler_characteristic(), c.euler_characteristic());
  EXPECT_EQ(c.shifted(2).lo(), 2);
  EXPECT_EQ(c.differential(5).rows(), 0u);
}

TEST(ChainComplex, ThreadCountDoesNotChangeResult) {
  const auto al = build_lattice(braid_arrangement(Rationals{}, 4));
  const HomologyProfile serial = natural_sheaf_homology(al, false);
  setenv("SHEAFLAT_THREADS", "3", 1);
  EXPECT_EQ(configured_threads(), 3u);
  const HomologyProfile parallel = natural_sheaf_homology(al, false);
  unsetenv("SHEAFLAT_THREADS");
  EXPECT_TRUE(serial.same_dims(parallel));
  EXPECT_EQ(serial.nonzero(), (Dims{{0, 4}, {1, 2}}));
}

TEST(Sheaf, RejectsNonFunctorialMaps) {
  Rationals q;
  const Poset chain3(3, {{0, 1}, {1, 2}});
  // F^2_0 should be F^1_0 F^2_1 = 1 but is 2
  auto bad = [&](Element x, Element y) {
    return Matrix<Rationals>::from_ints(q, {{x == 0 && y == 2 ? 2 : 1}});
  };
  try {
    Sheaf<Rationals> s(chain3, q, {1, 1, 1}, bad);
    FAIL() << "non-functorial sheaf accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotFunctorial);
  }
  EXPECT_THROW(Sheaf<Rationals>(chain3, q, {1, 1}, bad), Error);
}

TEST(Sheaf, PullbackRequiresMonotoneMap) {
  Rationals q;
  const Poset chain2(2, {{0, 1}});
  const Sheaf<Rationals> s = constant_sheaf(chain2, q, 2);
  const std::vector<Element> swap{1, 0};
  try {
    pullback(s, chain2, swap);
    FAIL() << "order reversing map accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMapNotMonotone);
  }
}

TEST(ConstantSheaf, ZeroDimensionalGivesZero) {
  const Lattice l = partition_lattice(4);
  const auto h = sheaf_homology(constant_sheaf(l.poset(), Rationals{}, 0));
  EXPECT_EQ(h.total(), 0u);
}

TEST(ConstantSheaf, PosetWithMaximumIsAcyclic) {
  const Lattice l = partition_lattice(4);
  const Subposet p = without(l.poset(), {l.bottom()});
  for (std::size_t k : {1u, 3u}) {
    const auto h = sheaf_homology(constant_sheaf(p.poset, Rationals{}, k));
    EXPECT_EQ(h.nonzero(), (Dims{{0, k}}));
  }
}

TEST(ConstantSheaf, Pi4ProperPartIsWedgeOfSixCircles) {
  const Lattice l = partition_lattice(4);
  const Subposet p = without(l.poset(), {l.bottom(), l.top()});
  const auto h = sheaf_homology(constant_sheaf(p.poset, Rationals{}, 1));
  EXPECT_EQ(h.nonzero(), (Dims{{0, 1}, {1, 6}}));
  EXPECT_EQ(static_cast<long long>(h.dim(1)), std::llabs(l.mobius(l.bottom(), l.top())));
  // the same over F_2 and through the order complex
  const auto h2 = sheaf_homology(constant_sheaf(p.poset, PrimeField(2), 1));
  EXPECT_EQ(h2.nonzero(), (Dims{{0, 1}, {1, 6}}));
  const auto simp = simplicial_homology(order_complex(p.poset), Rationals{}, false);
  EXPECT_EQ(simp.nonzero(), (Dims{{0, 1}, {1, 6}}));
}

TEST(ConstantSheaf, B3PuncturedEulerCharacteristic) {
  const Lattice l = boolean_lattice(3);
  const Subposet p = without(l.poset(), {l.bottom()});
  const auto t = chain_complex_T(constant_sheaf(p.poset, Rationals{}, 1));
  // 7 elements, 12 strict pairs, 6 maximal chains
  EXPECT_EQ(t.complex.dim(0), 7u);
  EXPECT_EQ(t.complex.dim(1), 12u);
  EXPECT_EQ(t.complex.dim(2), 6u);
  EXPECT_EQ(t.complex.euler_characteristic(), 1);
  EXPECT_EQ(homology(t.complex).euler_characteristic(), 1);
}

TEST(TComplex, SinglePoint) {
  const Poset pt(1, {});
  const auto t = chain_complex_T(constant_sheaf(pt, Rationals{}, 4));
  EXPECT_EQ(t.complex.dim(0), 4u);
  EXPECT_EQ(t.complex.hi(), 0);
  EXPECT_EQ(homology(t.complex).nonzero(), (Dims{{0, 4}}));
}

TEST(TComplex, RankTwoDimensionCount) {
  // dim T_0 = |A|(dim V - 1) + (dim V - 2), dim T_1 = |A|(dim V - 2)
  Rationals q;
  for (std::size_t n : {2u, 3u, 4u}) {
    for (std::size_t m = 2; m <= 6; ++m) {
      const auto al = build_lattice(pencil_arrangement(q, m, n));
      const Lattice& l = al.lattice;
      const auto sheaf = restrict_sheaf(natural_sheaf(al), without(l.poset(), {l.bottom()}));
      const auto t = chain_complex_T(sheaf);
      EXPECT_EQ(t.complex.dim(0), m * (n - 1) + (n - 2));
      EXPECT_EQ(t.complex.dim(1), m * (n - 2));
    }
  }
}

TEST(TComplex, BasisOrderIsLexicographic) {
  const Lattice l = boolean_lattice(2);
  const auto t = chain_complex_T(constant_sheaf(l.poset(), Rationals{}, 2));
  ASSERT_EQ(t.chains.size(), 3u);
  EXPECT_TRUE(std::is_sorted(t.chains[1].begin(), t.chains[1].end()));
  EXPECT_EQ(t.offsets[1], (std::vector<std::size_t>{0, 2, 4, 6, 8}));
  EXPECT_EQ(*t.index_of(1, Chain{{3, 0}}), 2u);
}

TEST(Augmentation, IncompatibleMapsAreRejected) {
  Rationals q;
  const Lattice l = boolean_lattice(2);
  const Subposet p = without(l.poset(), {l.bottom()});
  const Sheaf<Rationals> s = constant_sheaf(p.poset, q, 1);
  Augmentation<Rationals> aug{1, {}};
  for (Element x = 0; x < p.poset.size(); ++x) aug.maps.push_back(Matrix<Rationals>::from_ints(q, {{x == 2 ? 2 : 1}}));
  try {
    chain_complex_T(s, aug);
    FAIL() << "incompatible augmentation accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAugmentationIncompatible);
  }
}

TEST(Augmentation, EmptyPosetReportsCokernel) {
  // L^a \ a for a rank one lattice is empty: H~_{-1} = F(a)
  const auto al = build_lattice(coordinate_arrangement(Rationals{}, 1));
  const Lattice& l = al.lattice;
  const Sheaf<Rationals> f = natural_sheaf(al);
  const Subposet above = strict_up_set(l.poset(), l.top());
  const auto h = sheaf_homology(restrict_sheaf(f, above), augmentation_to(f, l.top(), above));
  EXPECT_EQ(h.total(), 0u);
  const Subposet above_bottom = strict_up_set(l.poset(), l.bottom());
  const auto h2 = sheaf_homology(restrict_sheaf(f, above_bottom), augmentation_to(f, l.bottom(), above_bottom));
  EXPECT_EQ(h2.nonzero(), (Dims{{-1, 1}}));
}

TEST(Reduced, DegreeZeroLosesImageOfAugmentation) {
  // dim H~_0 = dim H_0 - rank(eps_*), H~_i = H_i for i > 0
  Rationals q;
  for (const auto& arr : {braid_arrangement(q, 4), coordinate_arrangement(q, 3), pencil_arrangement(q, 5, 3)}) {
    const auto al = build_lattice(arr);
    const Lattice& l = al.lattice;
    const Sheaf<Rationals> f = natural_sheaf(al);
    const Subposet p = without(l.poset(), {l.bottom()});
    const auto plain = chain_complex_T(restrict_sheaf(f, p));
    const auto aug = chain_complex_T(restrict_sheaf(f, p), augmentation_to(f, l.bottom(), p));
    const HomologyProfile h = homology(plain.complex);
    const HomologyProfile ht = homology(aug.complex, true);
    const HomologyGroup<Rationals> h0 = homology_group(plain.complex, 0);
    const std::size_t eps_rank = rank(aug.complex.differential(0) * h0.representatives.transpose());
    EXPECT_EQ(ht.dim(0), h.dim(0) - eps_rank);
    EXPECT_EQ(ht.dim(-1), al.arrangement.ambient_dim() - eps_rank);
    for (int i = 1; i <= l.rank(); ++i) EXPECT_EQ(ht.dim(i), h.dim(i));
  }
}

TEST(Simplicial, SmallComplexes) {
  Rationals q;
  const SimplicialComplex circle({{0, 1}, {0, 2}, {1, 2}});
  EXPECT_EQ(simplicial_homology(circle, q).nonzero(), (Dims{{1, 1}}));
  const SimplicialComplex disk({{0, 1, 2}});
  EXPECT_TRUE(simplicial_homology(disk, q).nonzero().empty());
  EXPECT_EQ(simplicial_homology(disk, q, false).nonzero(), (Dims{{0, 1}}));
  const SimplicialComplex two_points({{0}, {1}});
  EXPECT_EQ(simplicial_homology(two_points, q).nonzero(), (Dims{{0, 1}}));
  const SimplicialComplex empty;
  EXPECT_EQ(simplicial_homology(empty, q).nonzero(), (Dims{{-1, 1}}));
  EXPECT_TRUE(disk.is_cone_with_apex(2));
  EXPECT_FALSE(circle.is_cone_with_apex(2));
  EXPECT_EQ(circle.deletion(2).face_counts(), (std::vector<std::size_t>{2, 1}));
}

TEST(Simplicial, RealProjectivePlaneTorsionShowsOverF2) {
  // six-vertex triangulation of RP^2
  const SimplicialComplex rp2({{0, 1, 3}, {1, 3, 4}, {1, 2, 4}, {2, 4, 0}, {0, 2, 3}, {2, 3, 5},
                               {3, 4, 5}, {4, 0, 5}, {0, 1, 5}, {1, 2, 5}});
  EXPECT_EQ(rp2.face_counts(), (std::vector<std::size_t>{6, 15, 10}));
  EXPECT_TRUE(simplicial_homology(rp2, Rationals{}).nonzero().empty());
  EXPECT_EQ(simplicial_homology(rp2, PrimeField(2)).nonzero(), (Dims{{1, 1}, {2, 1}}));
}

TEST(InducedMaps, ChainMapCommutesAndMorphismsCompose) {
  Rationals q;
  const auto al = build_lattice(braid_arrangement(q, 3));
  const Lattice& l = al.lattice;
  const Sheaf<Rationals> f = natural_sheaf(al);
  const Subposet p = without(l.poset(), {l.bottom()});
  const Sheaf<Rationals> fp = restrict_sheaf(f, p);
  const Sheaf<Rationals> c = constant_sheaf(p.poset, q, 2);
  // multiplication by 3 on every stalk
  std::vector<Matrix<Rationals>> comps;
  for (Element x = 0; x < p.poset.size(); ++x) comps.push_back(Matrix<Rationals>::identity(q, 2).scaled(3));
  const auto phi = SheafMorphism<Rationals>::make(c, c, comps);
  const auto tc = chain_complex_T(c);
  const ChainMap<Rationals> m = morphism_chain_map(tc, tc, phi);
  const HomologyGroup<Rationals> h0 = homology_group(tc.complex, 0);
  const Matrix<Rationals> ind = induced_map(m.at(0, tc.complex, tc.complex), h0, h0);
  EXPECT_EQ(ind, Matrix<Rationals>::identity(q, 2).scaled(3));
  // a non-natural family is rejected
  std::vector<Matrix<Rationals>> bad;
  for (Element x = 0; x < p.poset.size(); ++x) bad.push_back(Matrix<Rationals>(q, fp.dim_at(x), 2));
  bad[0](0, 0) = 1;
  EXPECT_THROW(SheafMorphism<Rationals>::make(c, fp, bad), Error);
}

}  // namespace
}  // namespace sheaflat
