#include <gtest/gtest.h>

#include "cliquedim/contradiction_graph.hpp"
#include "cliquedim/error.hpp"
#include "fixtures.hpp"

using namespace cliquedim;
using fixtures::make_class;
using fixtures::make_dataset;

TEST(ContradictionGraph, FullClassOnePoint) {
  auto g = ContradictionGraph::build(make_class(1, {"0", "1"}), 1);
  ASSERT_EQ(g.num_vertices(), 2u);
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(g.vertex(0), make_dataset({{0, 0}}));
  EXPECT_EQ(g.vertex(1), make_dataset({{0, 1}}));
}

TEST(ContradictionGraph, EqualityClassAtTwo) {
  auto g = ContradictionGraph::build(fixtures::equality_class(), 2);
  EXPECT_EQ(g.num_vertices(), 6u);
}

TEST(ContradictionGraph, SingletonIsEdgeless) {
  for (std::size_t m = 1; m <= 3; ++m) {
    auto g = ContradictionGraph::build(fixtures::family(Family::singleton, 3), m);
    EXPECT_EQ(g.num_edges(), 0u) << m;
  }
}

TEST(ContradictionGraph, MatchesOracleEnumeration) {
  for (const auto& [name, cls] : default_corpus()) {
    for (std::size_t m = 1; m <= 2; ++m) {
      auto g = ContradictionGraph::build(cls, m);
      auto datasets = oracle::realizable_multisets(cls.universe_size(), fixtures::row_bits(cls), m);
      ASSERT_EQ(g.num_vertices(), datasets.size()) << name << " m=" << m;
      if (datasets.size() > 64) continue;
      auto adj = oracle::contradiction_adjacency(datasets);
      for (std::size_t i = 0; i < datasets.size(); ++i) {
        std::vector<LabeledExample> ex;
        for (auto [p, y] : datasets[i]) ex.push_back({Point{p}, static_cast<std::uint8_t>(y)});
        auto idx = g.find(Dataset(ex));
        ASSERT_TRUE(idx.has_value());
        EXPECT_EQ(*idx, i) << "canonical order";
        for (std::size_t j = 0; j < datasets.size(); ++j) {
          EXPECT_EQ(g.is_edge(i, j), (adj[i] >> j & 1) != 0) << name << " m=" << m;
        }
      }
    }
  }
}

TEST(ContradictionGraph, SelfIsNotAnEdge) {
  auto g = ContradictionGraph::build(fixtures::worked_example(), 2);
  for (std::size_t i = 0; i < g.num_vertices(); ++i) EXPECT_FALSE(g.is_edge(i, i));
}

TEST(ContradictionGraph, PermutedDatasetIsSameVertex) {
  auto g = ContradictionGraph::build(fixtures::family(Family::full, 2), 2);
  EXPECT_EQ(g.find(make_dataset({{0, 0}, {1, 1}})), g.find(make_dataset({{1, 1}, {0, 0}})));
}

TEST(ContradictionGraph, Errors) {
  EXPECT_THROW(ContradictionGraph::build(fixtures::equality_class(), 0), Error);
  try {
    ContradictionGraph::build(fixtures::family(Family::full, 3), 3, GraphLimits{.vertex_cap = 10});
    FAIL() << "expected resource limit";
  } catch (const ResourceLimitError& e) {
    EXPECT_EQ(e.dimension(), "vertices");
  }
  auto g = ContradictionGraph::build(fixtures::equality_class(), 1);
  EXPECT_THROW(g.vertex(99), Error);
}

TEST(IndependentSets, FullClassOnePoint) {
  auto g = ContradictionGraph::build(make_class(1, {"0", "1"}), 1);
  auto sets = independent_sets(g);
  ASSERT_EQ(sets.size(), 2u);
  EXPECT_EQ(sets[0].members.count(), 1u);
  EXPECT_EQ(sets[1].members.count(), 1u);
}

TEST(IndependentSets, SingletonHasOneSetCoveringAll) {
  auto g = ContradictionGraph::build(fixtures::family(Family::singleton, 2), 2);
  auto sets = independent_sets(g);
  ASSERT_EQ(sets.size(), 1u);
  EXPECT_EQ(sets[0].members.count(), g.num_vertices());
}

TEST(IndependentSets, WorkedExampleAtThreeMatchesOracle) {
  auto cls = fixtures::worked_example();
  auto g = ContradictionGraph::build(cls, 3);
  auto sets = independent_sets(g);
  EXPECT_LE(sets.size(), 16u);
  EXPECT_LE(independent_sets(g, {.prune_nonmaximal = false}).size(), 16u);
  for (const auto& s : sets) {
    EXPECT_EQ(s.members, consistent_vertices(g, s.witness));
    // Independent: no two members contradict.
    for (auto i = s.members.find_first(); i != VertexSet::npos; i = s.members.find_next(i)) {
      for (auto j = s.members.find_next(i); j != VertexSet::npos; j = s.members.find_next(j)) {
        EXPECT_FALSE(g.is_edge(i, j));
      }
    }
  }
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = 0; b < sets.size(); ++b) {
      if (a != b) {
        EXPECT_FALSE(sets[a].members.is_subset_of(sets[b].members)) << "non-maximal row kept";
      }
    }
  }
}

TEST(IndependentSets, PatternCap) {
  auto g = ContradictionGraph::build(fixtures::family(Family::singleton, 4), 1, GraphLimits{.pattern_universe_cap = 3});
  try {
    independent_sets(g);
    FAIL() << "expected resource limit";
  } catch (const ResourceLimitError& e) {
    EXPECT_EQ(e.dimension(), "patterns");
  }
}

TEST(WitnessHypothesis, UnconstrainedPointsAreZero) {
  auto g = ContradictionGraph::build(fixtures::family(Family::full, 2), 1);
  VertexSet s(g.num_vertices());
  s.set(*g.find(make_dataset({{0, 1}})));
  EXPECT_EQ(witness_hypothesis(g, s).to_string(), "10");
  EXPECT_EQ(witness_hypothesis(g, VertexSet(g.num_vertices())).to_string(), "00");
}

TEST(WitnessHypothesis, UnionOfConstraints) {
  auto g = ContradictionGraph::build(fixtures::family(Family::full, 2), 2);
  VertexSet s(g.num_vertices());
  s.set(*g.find(make_dataset({{0, 0}, {0, 0}})));
  s.set(*g.find(make_dataset({{0, 0}, {1, 1}})));
  EXPECT_EQ(witness_hypothesis(g, s).to_string(), "01");
}

TEST(WitnessHypothesis, ConflictThrows) {
  auto g = ContradictionGraph::build(fixtures::family(Family::full, 2), 1);
  VertexSet s(g.num_vertices());
  s.set(*g.find(make_dataset({{0, 0}})));
  s.set(*g.find(make_dataset({{0, 1}})));
  try {
    witness_hypothesis(g, s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_independent);
  }
}

TEST(EdgeList, Formats) {
  auto one_edge = ContradictionGraph::build(make_class(1, {"0", "1"}), 1);
  EXPECT_EQ(export_edge_list(one_edge), "p 2 1\ne 0 1\n");
  auto edgeless = ContradictionGraph::build(fixtures::family(Family::singleton, 3), 1);
  EXPECT_EQ(export_edge_list(edgeless), "p 3 0\n");
  auto worked = ContradictionGraph::build(fixtures::worked_example(), 1);
  EXPECT_EQ(export_edge_list(worked).substr(0, 6), "p 8 4\n");
  EXPECT_NE(export_edge_list(worked, true).find("v 0 (0:0)"), std::string::npos);
}

TEST(Fingerprint, InvariantUnderPointRelabeling) {
  auto a = ContradictionGraph::build(make_class(3, {"000", "100", "110", "111"}), 2);
  auto b = ContradictionGraph::build(make_class(3, {"000", "001", "011", "111"}), 2);
  EXPECT_EQ(isomorphism_fingerprint(a), isomorphism_fingerprint(b));
  auto c = ContradictionGraph::build(fixtures::family(Family::full, 2), 2);
  EXPECT_NE(isomorphism_fingerprint(a), isomorphism_fingerprint(c));
}

TEST(Fingerprint, Header) {
  auto edgeless = ContradictionGraph::build(fixtures::family(Family::singleton, 3), 1);
  std::string f = isomorphism_fingerprint(edgeless);
  EXPECT_EQ(f.substr(0, f.find("hash")), "fingerprint 3 0 2 1\nc 3 0\n");
}
