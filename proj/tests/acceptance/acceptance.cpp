// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cliquedim/boosting.hpp"
#include "cliquedim/clique.hpp"
#include "cliquedim/dimensions.hpp"
#include "cliquedim/error.hpp"
#include "cliquedim/fractional.hpp"
#include "cliquedim/generators.hpp"
#include "cliquedim/numeric_checks.hpp"
#include "cliquedim/verification.hpp"
#include "fixtures.hpp"

using namespace cliquedim;

namespace {

constexpr std::size_t kMaxM = 3;

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (failures.size() < 5) failures.push_back(what);
    }
  }
};

std::string str(const Rational& q) { return to_string(q); }

// Smallest d with base^d >= s.
std::size_t log_ceil(std::size_t s, std::size_t base) {
  std::size_t d = 0;
  BigInt p = 1;
  while (p < static_cast<unsigned long>(s)) {
    p *= static_cast<unsigned long>(base);
    ++d;
  }
  return d;
}

Outcome worked_example() {
  Outcome o;
  ConceptClass cls = fixtures::worked_example();
  auto ld = littlestone_dimension(cls);
  DimensionValue cd = clique_dimension(cls, 4);
  o.require(ld.dimension == 2, "LD = " + std::to_string(ld.dimension));
  o.require(cd.value == 3 && cd.exactness == Exactness::exact,
            "CD = " + std::to_string(cd.value) + " " + to_string(cd.exactness));
  auto g = ContradictionGraph::build(cls, 3);
  std::vector<std::size_t> members;
  for (const auto& d : sec6_highlighted_clique()) {
    auto v = g.find(d);
    o.require(v.has_value(), "red dataset " + d.render() + " is not a vertex of G_3");
    if (v) members.push_back(*v);
  }
  std::size_t size = 0;
  try {
    size = Clique(g, members).size();
  } catch (const Error& e) {
    o.require(false, e.what());
  }
  o.require(size == 8, "red clique size " + std::to_string(size));
  o.detail = "LD=" + std::to_string(ld.dimension) + " CD=" + std::to_string(cd.value) + " " +
             to_string(cd.exactness) + " red clique size=" + std::to_string(size);
  return o;
}

Outcome clique_vs_fractional(const std::vector<NamedClass>& corpus) {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& [name, cls] : corpus) {
    for (const auto& row : dimension_table(cls, kMaxM)) {
      std::string at = name + " m=" + std::to_string(row.m);
      if (!row.omega || !row.omega_exact || !row.omega_star) {
        o.require(false, at + ": not computed exactly");
        continue;
      }
      Rational omega(static_cast<unsigned long>(*row.omega));
      o.require(omega <= *row.omega_star, at + ": omega > omega*");
      o.require(*row.omega_star <= pow2(static_cast<long>(row.m)), at + ": omega* > 2^m");
      ++checked;
    }
  }
  o.detail = std::to_string(checked) + " (class, m) pairs, m<=" + std::to_string(kMaxM);
  return o;
}

Outcome strong_duality(const std::vector<NamedClass>& corpus) {
  Outcome o;
  std::size_t runs = 0;
  for (const auto& [name, cls] : corpus) {
    for (std::size_t m = 1; m <= kMaxM; ++m) {
      auto g = ContradictionGraph::build(cls, m);
      std::string at = name + " m=" + std::to_string(m);
      DualityCertificate cert = omega_star(g);
      ++runs;
      o.require(cert.primal.size() == cert.value && cert.dual.colors() == cert.value, at + ": values differ");
      o.require(!clique_violation(cert.primal).has_value(), at + ": primal infeasible");
      o.require(!coloring_violation(cert.dual).has_value(), at + ": dual infeasible");
      // Direct recheck: every labeling h packs at most 1, every vertex is covered at least 1.
      const std::size_t n = cls.universe_size();
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        HypothesisPattern h(n, bits);
        Rational load = 0;
        for (const auto& [v, w] : cert.primal.weights) {
          if (is_consistent(h, g.vertex(v))) load += w;
        }
        o.require(load <= 1, at + ": pattern " + h.to_string() + " packs " + str(load));
      }
      for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        Rational cover = 0;
        for (const auto& [h, w] : cert.dual.weights) {
          if (is_consistent(h, g.vertex(v))) cover += w;
        }
        o.require(cover >= 1, at + ": vertex " + std::to_string(v) + " covered " + str(cover));
      }
      DualityCertificate back = parse_certificate(write_certificate(cert), g);
      o.require(!certificate_violation(back).has_value() && back.value == cert.value, at + ": round trip");
    }
  }
  o.detail = std::to_string(runs) + " certificates, primal = dual exactly";
  return o;
}

Outcome clique_number_bounded(const std::vector<NamedClass>& corpus) {
  Outcome o;
  std::size_t bounds = 0, trees = 0;
  for (const auto& [name, cls] : corpus) {
    std::size_t ld = littlestone_dimension(cls).dimension;
    for (std::size_t m = 1; m <= kMaxM; ++m) {
      auto g = ContradictionGraph::build(cls, m);
      std::string at = name + " m=" + std::to_string(m);
      auto best = max_clique(g);
      o.require(best.exact, at + ": clique search not exact");
      BigInt cap = pow(BigInt(static_cast<unsigned long>(2 * m + 1)), static_cast<unsigned long>(ld));
      o.require(BigInt(static_cast<unsigned long>(best.clique.size())) <= cap, at + ": omega above (2m+1)^LD");
      ++bounds;
      auto check_tree = [&](const Clique& c) {
        auto r = tree_from_clique(c);
        std::size_t need = log_ceil(c.size(), 2 * m + 1);
        o.require(r.depth >= need, at + ": depth " + std::to_string(r.depth) + " < " + std::to_string(need));
        o.require(r.complete.is_complete() && is_shattered_by(r.complete, cls), at + ": tree not shattered");
        ++trees;
      };
      check_tree(best.clique);
      if (m <= 2) {
        for_each_maximal_clique(g.adjacency(), [&](const std::vector<std::size_t>& members) {
          check_tree(Clique(g, members));
          return true;
        });
      }
    }
  }
  o.detail = std::to_string(bounds) + " clique-number bounds, " + std::to_string(trees) + " trees from cliques";
  return o;
}

Outcome balanced_example(const std::vector<NamedClass>& corpus) {
  Outcome o;
  std::size_t cliques = 0;
  for (const auto& [name, cls] : corpus) {
    for (std::size_t m = 1; m <= kMaxM; ++m) {
      auto g = ContradictionGraph::build(cls, m);
      std::string at = name + " m=" + std::to_string(m);
      for_each_maximal_clique(g.adjacency(), [&](const std::vector<std::size_t>& members) {
        if (members.size() < 2) return true;  // a lone vertex has no balanced point to find
        Clique c(g, members);
        auto r = find_balanced_point(c);
        const std::size_t s = c.size();
        // Counts recomputed on the original member datasets.
        std::size_t zero = 0, one = 0;
        for (auto v : members) {
          zero += g.vertex(v).contains({r.point, 0}) ? 1 : 0;
          one += g.vertex(v).contains({r.point, 1}) ? 1 : 0;
        }
        Rational threshold(static_cast<long>(s - 1), static_cast<long>(2 * m));
        o.require(zero == r.count_zero && one == r.count_one, at + ": reported counts differ");
        o.require(Rational(static_cast<unsigned long>(zero)) >= threshold &&
                      Rational(static_cast<unsigned long>(one)) >= threshold,
                  at + ": counts below (|C|-1)/(2m)");
        o.require(r.example_deletions <= s * m, at + ": too many deletions");
        o.require(r.edge_deletions < s * (s - 1) / 2, at + ": every edge dropped");
        o.require(r.surviving_edges >= 1, at + ": no surviving edge");
        ++cliques;
        return true;
      });
    }
  }
  o.detail = std::to_string(cliques) + " maximal cliques, m<=" + std::to_string(kMaxM);
  return o;
}

oracle::Adjacency masks(const Graph& g) {
  oracle::Adjacency adj(g.num_vertices(), 0);
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    for (std::size_t j = 0; j < g.num_vertices(); ++j) {
      if (g.has_edge(i, j)) adj[i] |= std::uint64_t{1} << j;
    }
  }
  return adj;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::size_t clique_cases = 0, lp_cases = 0;
  // Random graphs.
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 5 + trial % 16;
    Graph g(n);
    std::bernoulli_distribution edge(0.15 + 0.7 * static_cast<double>(trial % 7) / 6.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (edge(rng)) g.add_edge(i, j);
      }
    }
    auto r = max_clique(g);
    o.require(r.exact && r.members.size() == oracle::exhaustive_max_clique(masks(g)),
              "random graph " + std::to_string(trial));
    ++clique_cases;
  }
  // Random classes: contradiction graphs with at most 20 vertices, and LPs on at most 12.
  for (int trial = 0; trial < 400 && (clique_cases < 120 || lp_cases < 60); ++trial) {
    std::size_t n = 2 + trial % 3;
    std::size_t space = std::size_t{1} << n;
    std::size_t k = 1 + rng() % space;
    ConceptClass cls = generate(Family::random, {.universe_size = n, .class_size = k, .seed = rng()});
    for (std::size_t m = 1; m <= 2; ++m) {
      auto g = ContradictionGraph::build(cls, m);
      std::string at = cls.key() + " m=" + std::to_string(m);
      if (g.num_vertices() <= 20) {
        o.require(max_clique(g).clique.size() == oracle::exhaustive_max_clique(masks(g.adjacency())), at + ": omega");
        ++clique_cases;
      }
      if (g.num_vertices() <= 12) {
        auto datasets = oracle::realizable_multisets(n, fixtures::row_bits(cls), m);
        auto rows = oracle::maximal_consistency_rows(n, datasets);
        if (rows.size() > 16 || oracle::basic_solution_count(datasets.size(), rows.size()) > 3e5) continue;
        Rational expected = oracle::basic_solution_packing_lp(datasets.size(), rows);
        Rational got = omega_star(g).value;
        o.require(got == expected, at + ": omega* " + str(got) + " vs oracle " + str(expected));
        ++lp_cases;
      }
    }
  }
  o.require(clique_cases >= 50 && lp_cases >= 50, "too few oracle comparisons");
  o.detail = std::to_string(clique_cases) + " clique comparisons, " + std::to_string(lp_cases) + " LP comparisons";
  return o;
}

Outcome small_population_error(const std::vector<NamedClass>& corpus) {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& [name, cls] : corpus) {
    CheckReport r = small_pop_err_checks(cls, kMaxM);
    checks += r.entries().size();
    for (const auto& e : r.entries()) {
      o.require(e.status == CheckStatus::pass, name + ": " + e.name + " " + e.detail);
    }
  }
  o.detail = std::to_string(checks) + " exact comparisons, theta in {0,1/4,1/2,1}, m<=" + std::to_string(kMaxM);
  return o;
}

Outcome boosting_pipeline() {
  Outcome o;
  ConceptClass cls = fixtures::equality_class();
  WeakLearner weak = mu_tilde(cls, 2);
  BoostConfig cfg = make_boost_config(weak, 3);
  auto g = ContradictionGraph::build(cls, 3);
  PatternSampler sampler(weak.mu);

  // (a) + (b): seeded transcripts on every realizable S. Even trials draw
  // i.i.d. from the weak learner; odd trials pick, from all four patterns, a
  // random one that is gamma-good for the current weights when there is one.
  const std::size_t transcripts = 10'000;
  std::size_t regret_ok = 0, certified = 0, shadowed = 0, premise = 0, implication_ok = 0;
  std::vector<HypothesisPattern> all_patterns;
  for (std::uint64_t b = 0; b < 4; ++b) all_patterns.emplace_back(2, b);
  for (std::size_t i = 0; i < transcripts; ++i) {
    const Dataset& S = g.vertex(i % g.num_vertices());
    std::mt19937_64 rng(0xb005 ^ i);
    InstanceChooser chooser;
    if (i % 2 == 0) {
      chooser = [&](std::size_t, std::span<const double>) { return sampler(rng); };
    } else {
      chooser = [&](std::size_t, std::span<const double> w) {
        std::vector<HypothesisPattern> good;
        for (const auto& h : all_patterns) {
          double gain = 0;
          for (std::size_t j = 0; j < S.size(); ++j) {
            const auto& z = S.examples()[j];
            gain += h.at(z.point) == z.label ? w[j] : 0.0;
          }
          if (gain >= 0.5 + to_double(cfg.gamma)) good.push_back(h);
        }
        if (good.empty() || rng() % 50 == 0) return all_patterns[rng() % 4];
        return good[rng() % good.size()];
      };
    }
    bool shadow = i % 100 == 0;
    auto tr = run_expert_game_online(S, {.rounds = cfg.T, .gamma = cfg.gamma, .rational_shadow = shadow}, chooser);
    regret_ok += tr.regret_within_bound() ? 1 : 0;
    o.require(tr.regret_within_bound(), "transcript " + std::to_string(i) + ": regret above bound");
    if (shadow) {
      ++shadowed;
      certified += tr.shadow->regret_certified ? 1 : 0;
      o.require(tr.shadow->regret_certified, "transcript " + std::to_string(i) + ": exact regret not certified");
    }
    if (tr.all_gamma_good()) {
      ++premise;
      bool holds = tr.good_rounds_implication_holds();
      implication_ok += holds ? 1 : 0;
      o.require(holds, "transcript " + std::to_string(i) + ": all rounds good but majority inconsistent");
    }
  }
  o.require(premise > 0, "no transcript had every round gamma-good");

  // (c): Monte Carlo consistency probability against m^-alpha.
  SspfcdReport mc = verify_sspfcd_bound(cls, 2, 3, {}, {.samples = 100'000, .seed = 0});
  std::size_t mc_pass = 0;
  for (const auto& l : mc.lines) mc_pass += l.status == LineStatus::pass ? 1 : 0;
  o.require(!mc.skipped && mc.enumerated && mc_pass == mc.lines.size() && mc.lines.size() == g.num_vertices(),
            "Monte Carlo: " + std::to_string(mc_pass) + "/" + std::to_string(mc.lines.size()) + " datasets pass");

  std::ostringstream d;
  d << "T=" << cfg.T << " (a) " << regret_ok << "/" << transcripts << " within sqrt(2T ln m), " << certified << "/"
    << shadowed << " exactly certified; (b) " << implication_ok << "/" << premise
    << " all-good transcripts with consistent majority; (c) " << mc_pass << "/" << mc.lines.size()
    << " datasets, bound " << format_log_value(cfg.log_bound());
  o.detail = d.str();
  return o;
}

Outcome numeric_lemmas() {
  Outcome o;
  CheckReport r = numeric_lemma_checks();
  for (const auto& e : r.entries()) o.require(e.status == CheckStatus::pass, e.name + " " + e.detail);
  o.detail = std::to_string(r.count(CheckStatus::pass)) + " checks (d=30..40, alpha=2..12)";
  return o;
}

Outcome sequence_quotient() {
  Outcome o;
  std::size_t classes = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& cls : fixtures::all_classes(n)) {
      ++classes;
      for (std::size_t m = 1; m <= 2; ++m) {
        std::string at = cls.key() + " m=" + std::to_string(m);
        auto g = ContradictionGraph::build(cls, m);
        auto seqs = oracle::realizable_sequences(n, fixtures::row_bits(cls), m);
        auto adj = oracle::contradiction_adjacency(seqs);
        std::size_t omega_seq = oracle::bron_kerbosch_max_clique(adj);
        o.require(max_clique(g).clique.size() == omega_seq, at + ": omega differs");

        auto row_masks = oracle::maximal_consistency_rows(n, seqs);
        std::vector<VertexSet> rows;
        for (auto mask : row_masks) {
          VertexSet r(seqs.size());
          for (std::size_t v = 0; v < seqs.size(); ++v) r[v] = (mask >> v & 1) != 0;
          rows.push_back(r);
        }
        Rational star_seq = solve_packing_lp(seqs.size(), rows).value;
        Rational star = omega_star(g).value;
        o.require(star == star_seq, at + ": omega* " + str(star) + " vs sequences " + str(star_seq));
      }
    }
  }
  o.detail = std::to_string(classes) + " classes with |X|<=3, m<=2";
  return o;
}

}  // namespace

int main() {
  const auto corpus = default_corpus();
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "worked example LD=2 CD=3 and red 8-clique", 10, worked_example},
      {2, "omega_m <= omega*_m <= 2^m", 300, [&] { return clique_vs_fractional(corpus); }},
      {3, "finite strong duality certificates", 0, [&] { return strong_duality(corpus); }},
      {4, "omega_m <= (2m+1)^LD and trees from cliques", 0, [&] { return clique_number_bounded(corpus); }},
      {5, "balanced point on every maximal clique", 0, [&] { return balanced_example(corpus); }},
      {6, "oracle equivalence", 120, oracle_equivalence},
      {7, "small population error", 0, [&] { return small_population_error(corpus); }},
      {8, "boosting pipeline", 600, boosting_pipeline},
      {9, "numeric lemma checks", 10, numeric_lemmas},
      {10, "sequence vs multiset vertices", 0, sequence_quotient},
  };

  bool all = true;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      o.ok = false;
      o.failures.push_back("took longer than " + std::to_string(static_cast<int>(c.limit_s)) + " s");
    }
    std::ostringstream t;
    t.setf(std::ios::fixed);
    t.precision(2);
    t << secs;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << o.detail << " ["
              << t.str() << " s]\n";
    for (const auto& f : o.failures) std::cout << "    " << f << "\n";
    std::cout.flush();
    all = all && o.ok;
  }
  return all ? 0 : 1;
}
