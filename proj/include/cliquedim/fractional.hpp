#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliquedim/contradiction_graph.hpp"
#include "cliquedim/rational.hpp"
#include "cliquedim/simplex.hpp"

namespace cliquedim {

/// Nonnegative vertex weights whose sum over every independent set is at most 1.
struct FractionalClique {
  const ContradictionGraph* graph = nullptr;
  std::map<std::size_t, Rational> weights;  // vertex index -> weight, zeros omitted

  Rational size() const;
};

/// Nonnegative pattern weights covering every vertex with total at least 1.
struct FractionalColoring {
  const ContradictionGraph* graph = nullptr;
  std::map<HypothesisPattern, Rational> weights;

  Rational colors() const;
};

struct DualityCertificate {
  FractionalClique primal;
  FractionalColoring dual;
  Rational value;
};

/// First violated packing constraint against the full maximal V_h family,
/// or nullopt when feasible.
std::optional<std::string> clique_violation(const FractionalClique& clique);
std::optional<std::string> clique_violation(const FractionalClique& clique, std::span<const IndependentSet> family);

/// First vertex covered less than 1 (checked by direct consistency), or nullopt.
std::optional<std::string> coloring_violation(const FractionalColoring& coloring);

/// Both sides feasible and primal size = dual colors = value, exactly.
std::optional<std::string> certificate_violation(const DualityCertificate& cert);

/// ω*_m by the exact simplex over the deduplicated maximal V_h rows. The dual
/// is reported as a coloring on the rows' witness patterns. Throws
/// Error(infeasible_model) if the solved pair fails validation.
DualityCertificate omega_star(const ContradictionGraph& g, const SimplexOptions& options = {});

/// Weight 2^{m-|X|} on each of the 2^|X| patterns; colors = 2^m.
/// Throws ResourceLimitError("patterns") beyond the graph's pattern cap.
FractionalColoring uniform_coloring_witness(const ContradictionGraph& g);

struct PatternDistribution {
  std::vector<std::pair<HypothesisPattern, Rational>> atoms;  // ascending patterns, positive mass
};

struct DatasetDistribution {
  std::vector<std::pair<std::size_t, Rational>> atoms;  // ascending vertex indices, positive mass
};

/// Throws Error(zero_coloring) when colors = 0.
PatternDistribution coloring_to_distribution(const FractionalColoring& coloring);
/// Throws Error(zero_clique) when size = 0.
DatasetDistribution clique_to_distribution(const FractionalClique& clique);

Rational consistency_probability(const PatternDistribution& mu, const Dataset& dataset);
/// max over all 2^|X| patterns h of Pr_{S ~ nu}[h consistent with S].
Rational max_pattern_probability(const ContradictionGraph& g, const DatasetDistribution& nu);

/// Text format: `value n/d`, then `primal` with `<vertex> n/d` lines, then
/// `dual` with `<pattern bits> n/d` lines. '#' lines are comments.
std::string write_certificate(const DualityCertificate& cert);
/// Binds the parsed weights to g; does not validate. Throws Error(parse_error).
DualityCertificate parse_certificate(std::string_view text, const ContradictionGraph& g);

}  // namespace cliquedim
