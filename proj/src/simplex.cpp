#include "cliquedim/simplex.hpp"

#include "cliquedim/error.hpp"

namespace cliquedim {

PackingLpSolution solve_packing_lp(std::size_t num_vars, std::span<const VertexSet> rows,
                                   const SimplexOptions& options) {
  const std::size_t n = num_vars;
  const std::size_t r = rows.size();
  const std::size_t cols = n + r;
  if (r * (cols + 1) > options.max_tableau_entries) {
    throw ResourceLimitError("lp-size", std::to_string(r) + " x " + std::to_string(cols) + " tableau");
  }
  for (const auto& row : rows) {
    if (row.size() != n) throw Error(ErrorKind::invalid_params, "constraint row size differs from variable count");
  }

  // tableau[i] holds cols coefficients followed by the right-hand side.
  std::vector<std::vector<Rational>> tableau(r, std::vector<Rational>(cols + 1));
  std::vector<std::size_t> basis(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (auto v = rows[i].find_first(); v != VertexSet::npos; v = rows[i].find_next(v)) tableau[i][v] = 1;
    tableau[i][n + i] = 1;
    tableau[i][cols] = 1;
    basis[i] = n + i;
  }
  std::vector<Rational> objective(cols + 1);
  for (std::size_t j = 0; j < n; ++j) objective[j] = -1;

  PackingLpSolution sol;
  std::vector<std::size_t> pivot_support;
  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(objective[j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = r;
    Rational best_ratio;
    for (std::size_t i = 0; i < r; ++i) {
      if (sgn(tableau[i][enter]) <= 0) continue;
      Rational ratio = tableau[i][cols] / tableau[i][enter];
      if (leave == r || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == r) throw Error(ErrorKind::infeasible_model, "packing LP reported unbounded");
    if (++sol.pivots > options.max_pivots) {
      throw ResourceLimitError("pivots", "more than " + std::to_string(options.max_pivots) + " simplex pivots");
    }

    auto& prow = tableau[leave];
    Rational inv = 1 / prow[enter];
    pivot_support.clear();
    for (std::size_t k = 0; k <= cols; ++k) {
      if (sgn(prow[k]) != 0) {
        prow[k] *= inv;
        pivot_support.push_back(k);
      }
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (sgn(row[enter]) == 0) return;
      Rational factor = row[enter];
      for (auto k : pivot_support) row[k] -= factor * prow[k];
    };
    for (std::size_t i = 0; i < r; ++i) {
      if (i != leave) eliminate(tableau[i]);
    }
    eliminate(objective);
    basis[leave] = enter;
  }

  sol.value = objective[cols];
  sol.primal.assign(n, Rational(0));
  for (std::size_t i = 0; i < r; ++i) {
    if (basis[i] < n) sol.primal[basis[i]] = tableau[i][cols];
  }
  sol.dual.resize(r);
  for (std::size_t i = 0; i < r; ++i) sol.dual[i] = objective[n + i];
  return sol;
}

}  // namespace cliquedim
