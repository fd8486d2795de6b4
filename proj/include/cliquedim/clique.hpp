#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "cliquedim/contradiction_graph.hpp"
#include "cliquedim/graph.hpp"
#include "cliquedim/mistake_tree.hpp"
#include "cliquedim/rational.hpp"

namespace cliquedim {

/// A set of pairwise-contradicting vertices of a contradiction graph. The
/// graph must outlive the clique.
class Clique {
 public:
  /// Sorts and deduplicates; throws Error(not_clique) if two members do not
  /// contradict, Error(index_out_of_range) for bad indices.
  Clique(const ContradictionGraph& graph, std::vector<std::size_t> members);

  const ContradictionGraph& graph() const noexcept { return *graph_; }
  const std::vector<std::size_t>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

 private:
  const ContradictionGraph* graph_;
  std::vector<std::size_t> members_;
};

struct CliqueSearchOptions {
  std::uint64_t node_budget = 100'000'000;
};

struct CliqueSearchResult {
  std::vector<std::size_t> members;  // sorted
  bool exact = true;                 // false: budget ran out, members is a lower bound
  std::uint64_t nodes = 0;
};

enum class Decision { yes, no, unknown };

struct CliqueDecision {
  Decision answer = Decision::unknown;
  std::vector<std::size_t> witness;  // a clique of the requested size when answer == yes
  std::uint64_t nodes = 0;
};

/// Branch and bound with greedy-coloring bounds over bitsets. Vertices are
/// processed in descending-degree order (ties by index), so results are
/// deterministic.
CliqueSearchResult max_clique(const Graph& graph, const CliqueSearchOptions& options = {});
CliqueDecision has_clique_of_size(const Graph& graph, std::size_t k, const CliqueSearchOptions& options = {});

struct MaxCliqueResult {
  Clique clique;
  bool exact = true;
  std::uint64_t nodes = 0;
};

MaxCliqueResult max_clique(const ContradictionGraph& g, const CliqueSearchOptions& options = {});

/// Also answers `no` outright when k exceeds |H|: the sets V_h for h in H
/// cover every vertex, so no clique is larger than |H|.
CliqueDecision has_clique_of_size(const ContradictionGraph& g, std::size_t k,
                                  const CliqueSearchOptions& options = {});

/// Bron-Kerbosch with pivoting. The callback returns false to stop early.
void for_each_maximal_clique(const Graph& graph, const std::function<bool(const std::vector<std::size_t>&)>& visit);

struct BalancedPointReport {
  Point point;
  std::size_t count_zero = 0;  // members whose original dataset holds (point, 0)
  std::size_t count_one = 0;
  Rational threshold;          // (|C| - 1) / (2m)

  // Elimination-loop accounting.
  std::size_t example_deletions = 0;
  std::size_t edge_deletions = 0;
  std::size_t max_edge_deletions_per_step = 0;
  std::size_t initial_edges = 0;
  std::size_t surviving_edges = 0;
  std::pair<std::size_t, std::size_t> surviving_edge;  // graph vertex indices
};

/// Repeatedly deletes an example (x,b) from a working copy of a member while
/// fewer than (|C|-1)/(2m) working members hold (x,1-b), dropping edges that
/// stop contradicting. A surviving edge names the balanced point; its counts
/// are measured on the original datasets. Throws Error(degenerate_clique) if
/// |C| < 2.
BalancedPointReport find_balanced_point(const Clique& clique);

struct TreeFromCliqueResult {
  MistakeTree tree;      // raw recursion; leaves hold surviving members
  MistakeTree complete;  // `tree` truncated to its minimum leaf depth
  std::size_t depth = 0;
};

/// Recursive split on balanced points until each part has at most one member.
TreeFromCliqueResult tree_from_clique(const Clique& clique);

/// The 2^d branch datasets of a complete tree shattered by g's class, with
/// d = g.m(). Throws Error(not_complete), Error(not_shattered) or
/// Error(invalid_params) when the depth does not match.
Clique clique_from_tree(const MistakeTree& tree, const ContradictionGraph& g);

}  // namespace cliquedim
