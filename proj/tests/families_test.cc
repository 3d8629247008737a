// Copyright 2026 The hypernim Authors.
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

#include "hypernim/families.h"

#include <bit>

#include <gtest/gtest.h>

#include "hypernim/errors.h"
#include "hypernim/structure.h"
#include "oracles.h"

namespace hypernim {
namespace {

std::int64_t Binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// k-subsets of the ground set of kk that lie inside no edge of kk.
std::vector<VertexSet> NaiveKConstruction(const Hypergraph& kk, int k) {
  std::vector<VertexSet> out;
  const int n = kk.num_vertices();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (std::popcount(s) != k) continue;
    bool inside = false;
    for (VertexSet e : kk.edges()) inside = inside || VertexSet(s).IsSubsetOf(e);
    if (!inside) out.emplace_back(s);
  }
  return Hypergraph(n, out).edges();
}

TEST(FamiliesTest, Sizes) {
  EXPECT_EQ(ClassicalNim(3).num_edges(), 3);
  EXPECT_EQ(Moore(4, 2).num_edges(), 10);
  EXPECT_EQ(Uniform(6, 3).num_edges(), 20);
  for (int k = 1; k <= 5; ++k) {
    const Hypergraph p = PairTransversal(k);
    EXPECT_EQ(p.num_vertices(), 2 * k);
    EXPECT_EQ(p.num_edges(), 1 << k);
    for (VertexSet e : p.edges()) {
      for (int i = 0; i < k; ++i) EXPECT_NE(e.contains(i), e.contains(i + k));
    }
  }
  EXPECT_EQ(FanoLines().num_edges(), 7);
  EXPECT_EQ(FanoComplement().num_edges(), 28);
  EXPECT_EQ(CubeFacets().num_edges(), 6);
  EXPECT_EQ(Uniformity(CubeFacets()), 4);
  EXPECT_EQ(CycleFamily(5, 2, SubgraphFamily::kEdgeConnected).num_edges(), 5);
  // The vertex variants use (k+1)-vertex supports, which pairwise meet on a
  // cycle of at most 2k+1 vertices.
  const Hypergraph vc = CycleFamily(4, 2, SubgraphFamily::kVertexConnected);
  EXPECT_EQ(vc.num_edges(), 4);
  EXPECT_EQ(Uniformity(vc), 3);
  EXPECT_FALSE(IsTransversalFree(vc));
  EXPECT_FALSE(
      IsTransversalFree(CycleFamily(5, 2, SubgraphFamily::kVertexTree)));
  EXPECT_EQ(CompleteBipartiteFamily(3, SubgraphFamily::kEdgeConnected)
                .num_vertices(),
            6);
  EXPECT_THROW(Moore(3, 3), InvalidArgument);
  EXPECT_THROW(ClassicalNim(0), InvalidArgument);
}

TEST(FamiliesTest, FanoLinesFormAProjectivePlane) {
  const Hypergraph f = FanoLines();
  for (int i = 0; i < 7; ++i) {
    for (int j = i + 1; j < 7; ++j) {
      EXPECT_EQ((f.edge(i) & f.edge(j)).size(), 1);
    }
  }
  // Every pair of points lies on exactly one line.
  for (int a = 0; a < 7; ++a) {
    for (int b = a + 1; b < 7; ++b) {
      int lines = 0;
      for (VertexSet e : f.edges()) lines += VertexSet{a, b}.IsSubsetOf(e);
      EXPECT_EQ(lines, 1);
    }
  }
  EXPECT_EQ(FanoComplement(), KConstruction(FanoLines(), 3, 1, true));
  EXPECT_EQ(FanoComplement().edges(), NaiveKConstruction(FanoLines(), 3));
  EXPECT_THROW(KConstruction(FanoLines(), 3, 1), InvalidArgument);
}

TEST(FamiliesTest, KExampleSatisfiesItsConditions) {
  for (int k = 4; k <= 6; ++k) {
    for (int delta = 1; delta <= k - 3; ++delta) {
      const Hypergraph kk = ExampleKHypergraph(k, delta);
      EXPECT_EQ(kk.num_edges(), 3);
      EXPECT_EQ(kk.num_vertices(), 2 * k + delta);
      EXPECT_EQ(Uniformity(kk), k + delta - 1);
      EXPECT_TRUE(CheckKConstruction(kk, k, delta).all()) << k << delta;
      if (k <= 5) {
        EXPECT_EQ(KConstruction(kk, k, delta).edges(),
                  NaiveKConstruction(kk, k));
      }
    }
  }
  EXPECT_THROW(ExampleKHypergraph(3, 1), InvalidArgument);
}

TEST(FamiliesTest, KConstructionIsMatroidAndMinimalTf) {
  const Hypergraph h = KConstruction(ExampleKHypergraph(4, 1), 4, 1);
  EXPECT_EQ(h.num_edges(), Binomial(9, 4) - 3);
  EXPECT_TRUE(ExchangeAxiomHolds(h));
  EXPECT_TRUE(testing::NaiveMinimalTf(h));
}

TEST(FamiliesTest, CubeIsMinimalTfSelfDualButNotMatroid) {
  const Hypergraph cube = CubeFacets();
  EXPECT_TRUE(testing::NaiveMinimalTf(cube));
  EXPECT_TRUE(IsSelfDual(cube));
  EXPECT_FALSE(ExchangeAxiomHolds(cube));
  EXPECT_FALSE(HasChainProperty(cube));
  EXPECT_FALSE(SatisfiesD3(cube));
  // Vertex order 000, 100, 010, 001, 110, 101, 011, 111 with the first
  // coordinate as bit 0. Each facet fixes exactly one coordinate.
  const int coords[8] = {0b000, 0b001, 0b010, 0b100,
                         0b011, 0b101, 0b110, 0b111};
  for (VertexSet e : cube.edges()) {
    int common_ones = 7, common_zeros = 7;
    e.ForEach([&](int v) {
      common_ones &= coords[v];
      common_zeros &= ~coords[v];
    });
    EXPECT_EQ(std::popcount(static_cast<unsigned>(common_ones | common_zeros)),
              1);
  }
}

TEST(FamiliesTest, Palvolgyi) {
  for (int k = 3; k <= 4; ++k) {
    const Hypergraph h = Palvolgyi(k);
    const int r = static_cast<int>(Binomial(2 * k - 2, k - 1) / 2);
    EXPECT_EQ(h.num_vertices(), 2 * k - 2 + r);
    EXPECT_EQ(h.num_edges(), 2 * r);
    EXPECT_EQ(Uniformity(h), k);
    EXPECT_TRUE(testing::NaiveMinimalTf(h)) << k;
  }
}

TEST(FamiliesTest, StarOfCliques) {
  EXPECT_TRUE(testing::NaiveMinimalTf(StarOfCliques(2)));
  EXPECT_TRUE(AreIsomorphic(StarOfCliquesGraph(2), TreeFamilyGraph(2)));
  // k = 3: deleting the clique edges away from the root leaves a spider
  // whose 3-edge trees have no transversal member, so the construction is
  // transversal-free but not minimal.
  const Hypergraph h3 = StarOfCliques(3);
  EXPECT_TRUE(IsTransversalFree(h3));
  EXPECT_FALSE(testing::NaiveMinimalTf(h3));
  EXPECT_FALSE(IsMinimalTransversalFree(h3));
  EXPECT_FALSE(GenerateFamily({"star-of-cliques", {{"k", 3}}}).jm);
  EXPECT_TRUE(GenerateFamily({"star-of-cliques", {{"k", 2}}}).jm);
}

TEST(FamiliesTest, TreeFamily) {
  for (int k = 2; k <= 3; ++k) {
    const SimpleGraph g = TreeFamilyGraph(k);
    EXPECT_EQ(g.num_edges(), k * (k + 1));
    EXPECT_EQ(g.Degree(0), k + 1);
    EXPECT_TRUE(testing::NaiveMinimalTf(TreeFamily(k)));
  }
}

TEST(FamiliesTest, Augment) {
  const Hypergraph c5 = CycleFamily(5, 2, SubgraphFamily::kEdgeConnected);
  const Hypergraph aug = Augment(c5, VertexSet{0, 1, 4});
  EXPECT_EQ(aug.num_edges(), c5.num_edges() + 1);
  EXPECT_TRUE(aug.Contains(VertexSet{0, 1, 4}));
  // An existing edge is absorbed by deduplication.
  EXPECT_EQ(Augment(c5, VertexSet{0, 2}), c5);
  EXPECT_THROW(Augment(c5, VertexSet{0, 3}), InvalidArgument);
  EXPECT_THROW(Augment(c5, VertexSet{0, 1, 2, 3}), InvalidArgument);
  EXPECT_THROW(Augment(c5, VertexSet{}), InvalidArgument);
}

TEST(FamiliesTest, CatalogClaimsHold) {
  for (const FamilySpec& spec : BuiltinInstances()) {
    const FamilyInstance inst = GenerateFamily(spec);
    const Hypergraph& h = inst.hypergraph;
    SCOPED_TRACE(inst.id);
    EXPECT_TRUE(h.CoversGroundSet());
    if (inst.matroid) EXPECT_TRUE(ExchangeAxiomHolds(h));
    if (inst.self_dual) EXPECT_TRUE(IsSelfDual(h));
    if (inst.jm && h.num_vertices() <= 20) {
      EXPECT_TRUE(IsConnected(h));
      EXPECT_TRUE(testing::NaiveMinimalTf(h));
    }
    if (inst.graph_origin) {
      const auto again = SubgraphHypergraph(inst.graph_origin->graph,
                                            inst.graph_origin->k,
                                            inst.graph_origin->family);
      ASSERT_TRUE(again.has_value());
      EXPECT_EQ(*again, h);
    }
  }
}

TEST(FamiliesTest, BipartiteFamilies) {
  for (int k = 2; k <= 4; ++k) {
    for (SubgraphFamily f :
         {SubgraphFamily::kEdgeConnected, SubgraphFamily::kEdgeTree}) {
      const Hypergraph h = CompleteBipartiteFamily(k, f);
      EXPECT_TRUE(IsSelfDual(h)) << k;
      EXPECT_TRUE(testing::NaiveMinimalTf(h)) << k;
      // Basis exchange holds only for k = 2.
      EXPECT_EQ(ExchangeAxiomHolds(h), k == 2) << k;
    }
  }
  // The shortest cycle of K_{2,k} has four edges, so the variants first
  // differ at k = 4.
  EXPECT_EQ(CompleteBipartiteFamily(4, SubgraphFamily::kEdgeConnected)
                .num_edges(),
            56);
  EXPECT_EQ(CompleteBipartiteFamily(4, SubgraphFamily::kEdgeTree).num_edges(),
            50);
  EXPECT_EQ(CompleteBipartiteFamily(3, SubgraphFamily::kEdgeConnected),
            CompleteBipartiteFamily(3, SubgraphFamily::kEdgeTree));
}

TEST(FamiliesTest, SpecsAndCatalog) {
  EXPECT_EQ(ParseFamilyParams("k=2,n=3"),
            (std::map<std::string, int>{{"k", 2}, {"n", 3}}));
  EXPECT_TRUE(ParseFamilyParams("").empty());
  EXPECT_THROW(ParseFamilyParams("k"), InvalidArgument);
  EXPECT_THROW(ParseFamilyParams("k=x"), InvalidArgument);
  EXPECT_EQ(FormatFamilySpec({"moore", {{"n", 3}, {"k", 2}}}),
            "moore(k=2,n=3)");
  EXPECT_EQ(GenerateFamily({"cycle_ec", {{"n", 4}, {"k", 2}}}).hypergraph,
            CycleFamily(4, 2, SubgraphFamily::kEdgeConnected));
  EXPECT_THROW(GenerateFamily({"nope", {}}), InvalidArgument);
  EXPECT_THROW(GenerateFamily({"moore", {{"n", 3}}}), InvalidArgument);
  EXPECT_THROW(GenerateFamily({"moore", {{"n", 3}, {"k", 2}, {"z", 1}}}),
               InvalidArgument);
  for (const FamilySpec& spec : BuiltinInstances()) {
    bool listed = false;
    for (const FamilyInfo& info : FamilyCatalog()) {
      listed = listed || info.name == spec.name;
    }
    EXPECT_TRUE(listed) << spec.name;
  }
}

}  // namespace
}  // namespace hypernim
