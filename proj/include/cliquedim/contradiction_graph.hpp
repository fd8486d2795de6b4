#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cliquedim/concept_class.hpp"
#include "cliquedim/graph.hpp"

namespace cliquedim {

struct GraphLimits {
  std::size_t vertex_cap = 1'000'000;
  /// Largest |X| for which all 2^|X| labelings are enumerated.
  std::size_t pattern_universe_cap = 20;
};

/// G_m(H): vertices are the realizable canonical datasets of length m, in
/// canonical order; {S, S'} is an edge iff some point is labeled 0 in one and
/// 1 in the other. Immutable once built.
class ContradictionGraph {
 public:
  /// Throws Error(invalid_params) for m = 0 or an empty class and
  /// ResourceLimitError("vertices") when the vertex cap is exceeded.
  static ContradictionGraph build(const ConceptClass& cls, std::size_t m, const GraphLimits& limits = {});

  const ConceptClass& concept_class() const noexcept { return class_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::span<const Dataset> vertices() const noexcept { return vertices_; }
  const GraphLimits& limits() const noexcept { return limits_; }

  /// Throws Error(index_out_of_range).
  const Dataset& vertex(std::size_t i) const;
  bool is_edge(std::size_t i, std::size_t j) const;

  std::optional<std::size_t> find(const Dataset& dataset) const;
  std::size_t num_edges() const;
  Graph adjacency() const;

 private:
  ContradictionGraph(ConceptClass cls, std::size_t m, GraphLimits limits)
      : class_(std::move(cls)), m_(m), limits_(limits) {}

  ConceptClass class_;
  std::size_t m_;
  GraphLimits limits_;
  std::vector<Dataset> vertices_;
};

/// V_h for one labeling h, as a vertex bitset.
struct IndependentSet {
  HypothesisPattern witness;
  VertexSet members;
};

struct IndependentSetOptions {
  bool prune_nonmaximal = true;
};

/// All distinct V_h over every h in {0,1}^X (witness = lexicographically
/// smallest h producing the set). Every maximal independent set of the graph
/// is among them. Throws ResourceLimitError("patterns") when |X| exceeds the
/// graph's pattern cap.
std::vector<IndependentSet> independent_sets(const ContradictionGraph& g, const IndependentSetOptions& options = {});

/// Bitset of vertices consistent with h.
VertexSet consistent_vertices(const ContradictionGraph& g, const HypothesisPattern& h);

/// A labeling consistent with every member dataset; points no member uses are
/// labeled 0. Throws Error(not_independent) naming the conflicting point.
HypothesisPattern witness_hypothesis(const ContradictionGraph& g, const VertexSet& members);

/// `p <vertices> <edges>` then `e <i> <j>` (i < j); with `verbose`, a
/// `v <i> <dataset>` line per vertex precedes the edges.
std::string export_edge_list(const ContradictionGraph& g, bool verbose = false);

/// Isomorphism-invariant summary from colour refinement (1-WL) seeded by
/// degree. Equal graphs give equal text; unequal text proves non-isomorphism.
/// Lines: `fingerprint <vertices> <edges> <rounds incl. the stable one> <classes>`, then
/// `c <size> <degree>` per final colour class in canonical colour order, then
/// `hash <fnv1a-64 over every round's signatures>`.
std::string isomorphism_fingerprint(const ContradictionGraph& g);

}  // namespace cliquedim
