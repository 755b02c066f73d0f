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

#include "sheaflat/sheaflat.hpp"

namespace sheaflat {
namespace {

using Dims = std::map<int, std::size_t>;

TEST(NaturalHomology, Braid4) {
  const auto al = build_lattice(braid_arrangement(Rationals{}, 4));
  EXPECT_EQ(natural_sheaf_homology(al, true).nonzero(), (Dims{{1, 2}}));
  EXPECT_EQ(natural_sheaf_homology(al, false).nonzero(), (Dims{{0, 4}, {1, 2}}));
  EXPECT_TRUE(natural_sheaf_homology(al, true).same_dims(predicted_natural_homology(al, true)));
  EXPECT_TRUE(natural_sheaf_homology(al, false).same_dims(predicted_natural_homology(al, false)));
}

TEST(NaturalHomology, ConcentratedInRankMinusTwo) {
  Rationals q;
  const auto full = build_lattice(full_field_arrangement(2, 3));
  EXPECT_EQ(natural_sheaf_homology(full, true).nonzero(), (Dims{{1, 3}}));
  for (const auto& arr : {braid_arrangement(q, 3), braid_arrangement(q, 5), pencil_arrangement(q, 6, 3),
                          random_essential_arrangement(6, 3, 1), random_essential_arrangement(7, 4, 2)}) {
    const auto al = build_lattice(arr);
    const auto h = natural_sheaf_homology(al, true);
    EXPECT_TRUE(h.same_dims(predicted_natural_homology(al, true))) << al.arrangement.size();
  }
  // the same over F_3 for a reduction of braid(4)
  const auto f3 = build_lattice(braid_arrangement(PrimeField(3), 4));
  EXPECT_EQ(natural_sheaf_homology(f3, true).nonzero(), (Dims{{1, 2}}));
}

TEST(NaturalHomology, BooleanVanishes) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto al = build_lattice(coordinate_arrangement(Rationals{}, n));
    EXPECT_EQ(natural_sheaf_homology(al, true).total(), 0u) << n;
    EXPECT_EQ(natural_sheaf_homology(al, false).nonzero(), (Dims{{0, n}})) << n;
  }
}

TEST(NaturalHomology, RankTooSmall) {
  const auto al = build_lattice(coordinate_arrangement(Rationals{}, 1));
  try {
    natural_sheaf_homology(al, true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRankTooSmall);
  }
  const auto rk2 = build_lattice(braid_arrangement(Rationals{}, 3));
  EXPECT_THROW(lusztig_homology(rk2), Error);
}

// Counts chains of L \ {0, 1} weighted by dim F(top), alternating by length.
long long weighted_chain_euler(const ArrangementLattice<Rationals>& al) {
  const Lattice& l = al.lattice;
  const Subposet p = without(l.poset(), {l.bottom(), l.top()});
  long long chi = 0;
  for (std::size_t n = 0; n <= p.poset.height(); ++n) {
    for (const Chain& c : p.poset.enumerate_chains(n)) {
      const long long w = static_cast<long long>(al.dim_of(p.to_parent[c.elements.front()]));
      chi += (n % 2 ? -1 : 1) * w;
    }
  }
  return chi;
}

TEST(Lusztig, Braid4ComputedValues) {
  const auto al = build_lattice(braid_arrangement(Rationals{}, 4));
  const auto r = lusztig_homology(al);
  EXPECT_EQ(r.computed.nonzero(), (Dims{{0, 4}, {1, 8}}));
  EXPECT_EQ(r.beta, 2);
  EXPECT_EQ(r.mobius_top, -6);
  EXPECT_EQ(r.dim_v, 4u);
  EXPECT_EQ(r.dim_u, 1u);
  EXPECT_TRUE(r.max_kill_identical);
  EXPECT_TRUE(r.sheaf_les_exact);
  // T_0 = 6*3 + 7*2 = 32, T_1 = 18*2 = 36
  EXPECT_EQ(r.chain_euler, -4);
  EXPECT_EQ(weighted_chain_euler(al), -4);
  EXPECT_EQ(r.computed.euler_characteristic(), -4);
  // dim V + dim U in degree 0 is off by dim U when the center is nonzero
  EXPECT_EQ(r.predicted.nonzero(), (Dims{{0, 5}, {1, 8}}));
  EXPECT_FALSE(r.prediction_euler_consistent());
  EXPECT_FALSE(r.matches());
  // chains through the top: the reduced proper part shifted up by one, so
  // H_1(L \ 0; G) vanishes and |mu| dim U sits in degree 2
  EXPECT_EQ(r.skyscraper.nonzero(), (Dims{{2, 6}}));
}

TEST(Lusztig, EssentialArrangementsMatchPrediction) {
  const auto full23 = build_lattice(full_field_arrangement(2, 3));
  const auto r = lusztig_homology(full23);
  EXPECT_EQ(r.computed.nonzero(), (Dims{{0, 3}, {1, 3}}));
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.prediction_euler_consistent());

  const auto full33 = build_lattice(full_field_arrangement(3, 3));
  EXPECT_EQ(lusztig_homology(full33).computed.nonzero(), (Dims{{0, 3}, {1, 16}}));

  const auto rnd = build_lattice(random_essential_arrangement(8, 4, 1));
  const auto rr = lusztig_homology(rnd);
  EXPECT_EQ(rr.computed.nonzero(), (Dims{{0, 4}, {2, 19}}));
  EXPECT_TRUE(rr.passed());
}

TEST(Lusztig, NonEssentialOffByCenterDimension) {
  // coordinate(3) inside Q^4: center is a line
  Rationals q;
  const Arrangement<Rationals> arr(q, 4, std::vector<std::vector<mpq_class>>{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  const auto al = build_lattice(arr);
  const auto r = lusztig_homology(al);
  EXPECT_EQ(al.center_dim(), 1u);
  EXPECT_EQ(r.computed.nonzero(), (Dims{{0, 4}, {1, 1}}));
  EXPECT_EQ(r.predicted.dim(0), r.computed.dim(0) + al.center_dim());
  EXPECT_EQ(r.chain_euler, weighted_chain_euler(al));
  EXPECT_FALSE(r.prediction_euler_consistent());
  EXPECT_TRUE(r.max_kill_identical);
  EXPECT_TRUE(r.sheaf_les_exact);
}

}  // namespace
}  // namespace sheaflat
