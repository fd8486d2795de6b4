#include <gtest/gtest.h>

#include "oracles.hpp"

// The oracles themselves are checked on hand-computed cases.

TEST(OracleClique, SmallGraphs) {
  EXPECT_EQ(oracle::exhaustive_max_clique({}), 0u);
  EXPECT_EQ(oracle::exhaustive_max_clique({0}), 1u);
  EXPECT_EQ(oracle::exhaustive_max_clique({0b110, 0b101, 0b011}), 3u);
  // 5-cycle: omega = 2.
  oracle::Adjacency c5{0b10010, 0b00101, 0b01010, 0b10100, 0b01001};
  EXPECT_EQ(oracle::exhaustive_max_clique(c5), 2u);
  EXPECT_EQ(oracle::bron_kerbosch_max_clique(c5), 2u);
}

TEST(OracleLp, HandSolved) {
  // 5-cycle edges as rows: fractional clique 5/2.
  std::vector<std::uint64_t> rows{0b00011, 0b00110, 0b01100, 0b11000, 0b10001};
  EXPECT_EQ(oracle::basic_solution_packing_lp(5, rows), mpq_class(5, 2));
  EXPECT_EQ(oracle::basic_solution_packing_lp(3, {0b111}), mpq_class(1));
  EXPECT_EQ(oracle::basic_solution_packing_lp(2, {0b01, 0b10}), mpq_class(2));
}

TEST(OracleDatasets, Counts) {
  // Full class on one point, m = 2: only the two constant-label sequences are realizable.
  auto seq = oracle::realizable_sequences(1, {0, 1}, 2);
  EXPECT_EQ(seq.size(), 2u);
  auto eq = oracle::realizable_multisets(2, {0b00, 0b11}, 2);
  EXPECT_EQ(eq.size(), 6u);
  auto eq_seq = oracle::realizable_sequences(2, {0b00, 0b11}, 2);
  EXPECT_EQ(eq_seq.size(), 8u);
}
