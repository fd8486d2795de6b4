#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace oracle {

std::size_t exhaustive_max_clique(const Adjacency& adj) {
  const std::size_t n = adj.size();
  if (n > 20) throw std::invalid_argument("exhaustive_max_clique: more than 20 vertices");
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    std::size_t size = static_cast<std::size_t>(std::popcount(s));
    if (size <= best) continue;
    bool clique = true;
    for (std::size_t v = 0; v < n && clique; ++v) {
      if ((s >> v & 1) && (s & ~(adj[v] | (std::uint64_t{1} << v))) != 0) clique = false;
    }
    if (clique) best = size;
  }
  return best;
}

std::size_t bron_kerbosch_max_clique(const Adjacency& adj) {
  if (adj.size() > 64) throw std::invalid_argument("bron_kerbosch_max_clique: more than 64 vertices");
  std::size_t best = 0;
  std::function<void(std::size_t, std::uint64_t, std::uint64_t)> rec = [&](std::size_t r, std::uint64_t p,
                                                                           std::uint64_t x) {
    if (p == 0 && x == 0) {
      best = std::max(best, r);
      return;
    }
    if (r + static_cast<std::size_t>(std::popcount(p)) <= best) return;
    while (p != 0) {
      int v = std::countr_zero(p);
      rec(r + 1, p & adj[v], x & adj[v]);
      p &= p - 1;
      x |= std::uint64_t{1} << v;
    }
  };
  std::uint64_t all = adj.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << adj.size()) - 1;
  rec(0, all, 0);
  return best;
}

std::vector<Sequence> realizable_sequences(std::size_t universe, const std::vector<std::uint64_t>& rows,
                                           std::size_t m) {
  std::vector<Sequence> out;
  const std::size_t letters = 2 * universe;
  std::vector<std::size_t> digits(m, 0);
  while (true) {
    Sequence s;
    for (auto d : digits) s.push_back({static_cast<std::uint32_t>(d / 2), static_cast<int>(d % 2)});
    bool realizable = std::any_of(rows.begin(), rows.end(), [&](std::uint64_t h) {
      return std::all_of(s.begin(), s.end(), [&](const Example& e) { return static_cast<int>(h >> e.first & 1) == e.second; });
    });
    if (realizable) out.push_back(std::move(s));
    std::size_t i = 0;
    while (i < m && ++digits[i] == letters) digits[i++] = 0;
    if (i == m) break;
  }
  return out;
}

std::vector<Sequence> realizable_multisets(std::size_t universe, const std::vector<std::uint64_t>& rows,
                                           std::size_t m) {
  std::vector<Sequence> all = realizable_sequences(universe, rows, m);
  for (auto& s : all) std::sort(s.begin(), s.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

Adjacency contradiction_adjacency(const std::vector<Sequence>& datasets) {
  if (datasets.size() > 64) throw std::invalid_argument("contradiction_adjacency: more than 64 datasets");
  Adjacency adj(datasets.size(), 0);
  for (std::size_t i = 0; i < datasets.size(); ++i) {
    for (std::size_t j = i + 1; j < datasets.size(); ++j) {
      bool edge = false;
      for (const auto& a : datasets[i]) {
        for (const auto& b : datasets[j]) edge = edge || (a.first == b.first && a.second != b.second);
      }
      if (edge) {
        adj[i] |= std::uint64_t{1} << j;
        adj[j] |= std::uint64_t{1} << i;
      }
    }
  }
  return adj;
}

std::vector<std::uint64_t> maximal_consistency_rows(std::size_t universe, const std::vector<Sequence>& datasets) {
  std::vector<std::uint64_t> rows;
  for (std::uint64_t h = 0; h < (std::uint64_t{1} << universe); ++h) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < datasets.size(); ++i) {
      bool ok = std::all_of(datasets[i].begin(), datasets[i].end(),
                            [&](const Example& e) { return static_cast<int>(h >> e.first & 1) == e.second; });
      if (ok) mask |= std::uint64_t{1} << i;
    }
    rows.push_back(mask);
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  std::vector<std::uint64_t> maximal;
  for (auto r : rows) {
    bool dominated = std::any_of(rows.begin(), rows.end(), [&](std::uint64_t o) { return o != r && (r & ~o) == 0; });
    if (!dominated && r != 0) maximal.push_back(r);
  }
  return maximal;
}

namespace {

// Solves A x = b for square A; false when singular.
bool solve_double(std::vector<std::vector<double>> a, std::vector<double> b, std::vector<double>& x) {
  const std::size_t k = b.size();
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < k; ++r) {
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    }
    if (std::fabs(a[piv][c]) < 1e-9) return false;
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c || a[r][c] == 0) continue;
      double f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < k; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  x.resize(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = b[i] / a[i][i];
  return true;
}

bool solve_exact(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b, std::vector<mpq_class>& x) {
  const std::size_t k = b.size();
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && a[piv][c] == 0) ++piv;
    if (piv == k) return false;
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c || a[r][c] == 0) continue;
      mpq_class f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < k; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  x.resize(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = b[i] / a[i][i];
  return true;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

double binom(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

}  // namespace

double basic_solution_count(std::size_t num_vars, std::size_t num_rows) {
  double total = 0;
  for (std::size_t k = 0; k <= std::min(num_vars, num_rows); ++k) total += binom(num_vars, k) * binom(num_rows, k);
  return total;
}

mpq_class basic_solution_packing_lp(std::size_t num_vars, const std::vector<std::uint64_t>& rows) {
  const std::size_t r = rows.size();
  mpq_class best = 0;
  double best_double = 0;
  auto in_row = [&](std::size_t row, std::size_t v) { return (rows[row] >> v & 1) != 0; };

  for (std::size_t k = 1; k <= std::min(num_vars, r); ++k) {
    for_each_subset(num_vars, k, [&](const std::vector<std::size_t>& support) {
      for_each_subset(r, k, [&](const std::vector<std::size_t>& tight) {
        std::vector<std::vector<double>> a(k, std::vector<double>(k));
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) a[i][j] = in_row(tight[i], support[j]) ? 1.0 : 0.0;
        }
        std::vector<double> x;
        if (!solve_double(a, std::vector<double>(k, 1.0), x)) return;
        double obj = 0;
        for (double v : x) {
          if (v < -1e-9) return;
          obj += v;
        }
        if (obj < best_double - 1e-7) return;
        for (std::size_t row = 0; row < r; ++row) {
          double load = 0;
          for (std::size_t j = 0; j < k; ++j) load += in_row(row, support[j]) ? x[j] : 0.0;
          if (load > 1 + 1e-9) return;
        }
        // Exact confirmation of the candidate.
        std::vector<std::vector<mpq_class>> qa(k, std::vector<mpq_class>(k));
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) qa[i][j] = a[i][j] != 0 ? 1 : 0;
        }
        std::vector<mpq_class> qx;
        if (!solve_exact(qa, std::vector<mpq_class>(k, mpq_class(1)), qx)) return;
        mpq_class total = 0;
        for (const auto& v : qx) {
          if (v < 0) return;
          total += v;
        }
        for (std::size_t row = 0; row < r; ++row) {
          mpq_class load = 0;
          for (std::size_t j = 0; j < k; ++j) {
            if (in_row(row, support[j])) load += qx[j];
          }
          if (load > 1) return;
        }
        if (total > best) {
          best = total;
          best_double = best.get_d();
        }
      });
    });
  }
  return best;
}

}  // namespace oracle
