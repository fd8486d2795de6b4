#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cliquedim/graph.hpp"
#include "cliquedim/rational.hpp"

namespace cliquedim {

struct SimplexOptions {
  std::size_t max_pivots = 1'000'000;
  std::size_t max_tableau_entries = 50'000'000;
};

struct PackingLpSolution {
  Rational value;
  std::vector<Rational> primal;  // one per variable
  std::vector<Rational> dual;    // one per row
  std::size_t pivots = 0;
};

/// Solves   max sum_v x_v   s.t.  sum_{v in R} x_v <= 1 for every row R,  x >= 0
/// exactly, by a dense-tableau primal simplex from the slack basis with
/// Bland's rule. The dual vector is read off the slack reduced costs, so
/// primal and dual objectives agree at termination.
/// Throws ResourceLimitError("lp-size" / "pivots").
PackingLpSolution solve_packing_lp(std::size_t num_vars, std::span<const VertexSet> rows,
                                   const SimplexOptions& options = {});

}  // namespace cliquedim
