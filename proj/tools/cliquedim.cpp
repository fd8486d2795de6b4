// Command-line front end: one subcommand per engine operation.
//
// Exit codes: 0 ok, 1 a check failed, 2 usage or input error, 3 a resource
// cap was hit (the cap is named on stderr).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cliquedim/boosting.hpp"
#include "cliquedim/clique.hpp"
#include "cliquedim/concept_class.hpp"
#include "cliquedim/contradiction_graph.hpp"
#include "cliquedim/dimensions.hpp"
#include "cliquedim/error.hpp"
#include "cliquedim/fractional.hpp"
#include "cliquedim/generators.hpp"
#include "cliquedim/mistake_tree.hpp"
#include "cliquedim/numeric_checks.hpp"
#include "cliquedim/verification.hpp"

namespace {

using namespace cliquedim;

struct RunConfig {
  std::string input;
  std::uint64_t seed = 0;
  std::optional<std::size_t> m;
  std::optional<std::size_t> m_max;
  std::size_t vertex_cap = GraphLimits{}.vertex_cap;
  std::size_t pattern_cap = GraphLimits{}.pattern_universe_cap;
  std::uint64_t node_budget = CliqueSearchOptions{}.node_budget;
  bool single_worker = false;
  bool verbose = false;
  bool rational_shadow = false;
  bool fingerprint = false;
  std::string out;
  mutable bool out_consumed = false;

  // command specific
  std::string family;
  std::optional<std::size_t> n;
  std::size_t k = 2;
  std::string clique;
  std::string tree_path;
  std::string cert_path;
  std::optional<std::size_t> m0;
  std::string gamma;
  std::uint64_t samples = SspfcdOptions{}.samples;
};

struct CheckFailed {};

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse_error, "cannot open " + path);
  return read_all(in);
}

ConceptClass load_class(const RunConfig& cfg) {
  if (cfg.input.empty() || cfg.input == "-") return parse_class(read_all(std::cin));
  return parse_class(read_file(cfg.input));
}

std::vector<NamedClass> load_corpus(const RunConfig& cfg) {
  if (cfg.input.empty()) return default_corpus();
  return {{cfg.input, parse_class(read_file(cfg.input))}};
}

GraphLimits limits(const RunConfig& cfg) { return {cfg.vertex_cap, cfg.pattern_cap}; }

DimensionOptions dimension_options(const RunConfig& cfg) {
  DimensionOptions o;
  o.limits = limits(cfg);
  o.clique.node_budget = cfg.node_budget;
  return o;
}

std::size_t need_m(const RunConfig& cfg) {
  if (!cfg.m) throw CLI::ValidationError("--m", "this command needs --m");
  return *cfg.m;
}

std::vector<std::size_t> parse_indices(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size()) throw Error(ErrorKind::parse_error, "bad vertex index '" + item + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

Clique choose_clique(const RunConfig& cfg, const ContradictionGraph& g) {
  if (!cfg.clique.empty()) return Clique(g, parse_indices(cfg.clique));
  CliqueSearchOptions opts;
  opts.node_budget = cfg.node_budget;
  return max_clique(g, opts).clique;
}

std::string render_members(const ContradictionGraph& g, const std::vector<std::size_t>& members) {
  std::string out;
  for (auto v : members) out += "v " + std::to_string(v) + " " + g.vertex(v).render() + "\n";
  return out;
}

std::string seed_header(const RunConfig& cfg) { return "# seed " + std::to_string(cfg.seed) + "\n"; }

std::string run_gen(const RunConfig& cfg) {
  Family family = parse_family(cfg.family);
  std::size_t n = cfg.n.value_or(family == Family::paper_example_sec6 ? 4 : 2);
  GeneratorParams p{n, cfg.k, cfg.seed};
  return seed_header(cfg) + write_class(generate(family, p));
}

std::string run_graph(const RunConfig& cfg) {
  ContradictionGraph g = ContradictionGraph::build(load_class(cfg), need_m(cfg), limits(cfg));
  if (cfg.fingerprint) return seed_header(cfg) + isomorphism_fingerprint(g);
  return seed_header(cfg) + export_edge_list(g, cfg.verbose);
}

std::string run_omega(const RunConfig& cfg) {
  ContradictionGraph g = ContradictionGraph::build(load_class(cfg), need_m(cfg), limits(cfg));
  CliqueSearchOptions opts;
  opts.node_budget = cfg.node_budget;
  MaxCliqueResult r = max_clique(g, opts);
  std::string out = seed_header(cfg) + "omega=" + std::to_string(r.clique.size()) +
                    (r.exact ? " exact" : " lower-bound") + "\n";
  if (cfg.verbose) out += render_members(g, r.clique.members());
  return out;
}

std::string run_omega_star(const RunConfig& cfg) {
  ContradictionGraph g = ContradictionGraph::build(load_class(cfg), need_m(cfg), limits(cfg));
  if (!cfg.cert_path.empty()) {
    // Independent revalidation of a stored certificate.
    DualityCertificate cert = parse_certificate(read_file(cfg.cert_path), g);
    auto why = certificate_violation(cert);
    std::string out = seed_header(cfg) + to_string(cert.value) + "\n" + (why ? "INVALID " + *why : "VALID") + "\n";
    if (why) {
      std::cout << out;
      throw CheckFailed{};
    }
    return out;
  }
  DualityCertificate cert = omega_star(g);
  std::string out = seed_header(cfg) + to_string(cert.value) + "\n";
  if (!cfg.out.empty()) {
    // The certificate file is the artifact; the value still goes to stdout.
    std::ofstream f(cfg.out);
    if (!f) throw Error(ErrorKind::parse_error, "cannot write " + cfg.out);
    f << seed_header(cfg) << write_certificate(cert);
    cfg.out_consumed = true;
  } else if (cfg.verbose) {
    out += write_certificate(cert);
  }
  return out;
}

std::string run_ld(const RunConfig& cfg) {
  LittlestoneResult r = littlestone_dimension(load_class(cfg));
  std::string out = seed_header(cfg) + "ld=" + std::to_string(r.dimension) + "\n";
  if (cfg.verbose) out += write_tree(r.tree);
  return out;
}

std::string run_vc(const RunConfig& cfg) {
  VcResult r = vc_dimension(load_class(cfg));
  std::string out = seed_header(cfg) + "vc=" + std::to_string(r.dimension) + "\n";
  if (cfg.verbose) {
    out += "shattered";
    for (auto p : r.shattered) out += " " + std::to_string(p.id);
    out += "\n";
  }
  return out;
}

std::string render_decisions(const DimensionValue& v) {
  std::string out = "# " + v.provenance + "\n";
  for (const auto& d : v.decisions) {
    const char* answer = d.full == Decision::yes ? "full" : d.full == Decision::no ? "not-full" : "unknown";
    out += "# m=" + std::to_string(d.m) + " " + answer + " (" + d.provenance + ")\n";
  }
  return out;
}

std::string run_cd(const RunConfig& cfg) {
  DimensionValue v = clique_dimension(load_class(cfg), cfg.m_max.value_or(4), dimension_options(cfg));
  std::string out = seed_header(cfg) + "cd=" + std::to_string(v.value) + " " + to_string(v.exactness) + "\n";
  if (cfg.verbose) out += render_decisions(v);
  return out;
}

std::string run_cd_star(const RunConfig& cfg) {
  DimensionValue v = fractional_clique_dimension(load_class(cfg), cfg.m_max.value_or(3), dimension_options(cfg));
  std::string out = seed_header(cfg) + "cd_star=" + std::to_string(v.value) + " " + to_string(v.exactness) + "\n";
  if (cfg.verbose) out += render_decisions(v);
  return out;
}

std::string run_balanced(const RunConfig& cfg) {
  ContradictionGraph g = ContradictionGraph::build(load_class(cfg), need_m(cfg), limits(cfg));
  Clique c = choose_clique(cfg, g);
  BalancedPointReport r = find_balanced_point(c);
  std::ostringstream out;
  out << seed_header(cfg);
  out << "point=" << r.point.id << " count0=" << r.count_zero << " count1=" << r.count_one
      << " threshold=" << to_string(r.threshold) << "\n";
  out << "clique_size=" << c.size() << " deletions=" << r.example_deletions << " edges_dropped=" << r.edge_deletions
      << " max_drop_per_step=" << r.max_edge_deletions_per_step << " surviving_edges=" << r.surviving_edges << "\n";
  if (cfg.verbose) out << render_members(g, c.members());
  return out.str();
}

std::string run_tree_from_clique(const RunConfig& cfg) {
  ContradictionGraph g = ContradictionGraph::build(load_class(cfg), need_m(cfg), limits(cfg));
  Clique c = choose_clique(cfg, g);
  TreeFromCliqueResult r = tree_from_clique(c);
  bool shattered = is_shattered_by(r.complete, g.concept_class());
  std::string out = seed_header(cfg) + "# clique_size=" + std::to_string(c.size()) + " depth=" +
                    std::to_string(r.depth) + (shattered ? " shattered" : " NOT-shattered") + "\n" +
                    write_tree(r.complete);
  if (!shattered) {
    std::cout << out;
    throw CheckFailed{};
  }
  return out;
}

std::string run_clique_from_tree(const RunConfig& cfg) {
  if (cfg.tree_path.empty()) throw CLI::ValidationError("--tree", "clique-from-tree needs --tree <file>");
  MistakeTree tree = parse_tree(read_file(cfg.tree_path));
  ContradictionGraph g = ContradictionGraph::build(load_class(cfg), tree.max_leaf_depth(), limits(cfg));
  Clique c = clique_from_tree(tree, g);
  return seed_header(cfg) + "clique_size=" + std::to_string(c.size()) + "\n" + render_members(g, c.members());
}

std::string run_boost(const RunConfig& cfg) {
  ConceptClass cls = load_class(cfg);
  std::size_t m0 = 0;
  if (cfg.m0) {
    m0 = *cfg.m0;
  } else {
    auto found = smallest_separating_m0(cls, cfg.m_max.value_or(3), limits(cfg));
    m0 = found.value_or(1);  // no separation: the report below becomes a skip
  }
  std::optional<Rational> gamma;
  if (!cfg.gamma.empty()) gamma = parse_rational(cfg.gamma);
  SspfcdOptions opts;
  opts.seed = cfg.seed;
  opts.samples = cfg.samples;
  SspfcdReport report = verify_sspfcd_bound(cls, m0, need_m(cfg), gamma, opts, limits(cfg));
  std::string out = report.render();
  if (cfg.rational_shadow && report.config) {
    // Exact regret certificate for one transcript per dataset.
    WeakLearner weak = mu_tilde(cls, m0, limits(cfg));
    PatternSampler sampler(weak.mu);
    ContradictionGraph g = ContradictionGraph::build(cls, report.config->m, limits(cfg));
    bool all = true;
    for (std::size_t i = 0; i < g.num_vertices(); ++i) {
      std::mt19937_64 rng(cfg.seed ^ i);
      ExpertGameOptions eo{report.config->T, report.config->gamma, true};
      auto tr = run_expert_game_online(g.vertex(i), eo,
                                       [&](std::size_t, std::span<const double>) { return sampler(rng); });
      all = all && tr.shadow->regret_certified;
      out += "# shadow S=" + g.vertex(i).render() + " regret<=" + std::to_string(to_double(tr.shadow->regret_upper)) +
             (tr.shadow->regret_certified ? " certified" : " NOT-certified") + "\n";
    }
    if (!all) {
      std::cout << out;
      throw CheckFailed{};
    }
  }
  if (!report.passed()) {
    std::cout << out;
    throw CheckFailed{};
  }
  return out;
}

std::string finish_report(const RunConfig& cfg, const CheckReport& report) {
  std::string out = seed_header(cfg) + report.render() + "# " + std::to_string(report.count(CheckStatus::pass)) +
                    " pass, " + std::to_string(report.count(CheckStatus::fail)) + " fail, " +
                    std::to_string(report.count(CheckStatus::warn)) + " warn, " +
                    std::to_string(report.count(CheckStatus::skip)) + " skip\n";
  if (!report.passed()) {
    std::cout << out;
    throw CheckFailed{};
  }
  return out;
}

std::string run_verify_lemmas(const RunConfig& cfg) {
  return finish_report(cfg, verify_lemmas(load_corpus(cfg), cfg.m_max.value_or(3), dimension_options(cfg)));
}

std::string run_verify_dichotomy(const RunConfig& cfg) {
  return finish_report(cfg, verify_dichotomy(load_corpus(cfg), cfg.m_max.value_or(3), dimension_options(cfg)));
}

std::string run_curves(const RunConfig& cfg) {
  DimensionReport r = compute_dimensions(load_class(cfg), cfg.m_max.value_or(3), dimension_options(cfg));
  return seed_header(cfg) + r.to_csv();
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty() || cfg.out_consumed) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw Error(ErrorKind::parse_error, "cannot write " + cfg.out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contradiction graphs, clique dimensions and their certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;

  app.add_option("--seed", cfg.seed, "Master seed (echoed in every header)");
  app.add_option("--m", cfg.m, "Dataset length m");
  app.add_option("--m-max", cfg.m_max, "Search horizon (default 3 for LP commands, 4 for clique commands)");
  app.add_option("--vertex-cap", cfg.vertex_cap, "Largest contradiction graph to build");
  app.add_option("--pattern-cap", cfg.pattern_cap, "Largest |X| for labeling enumeration");
  app.add_option("--node-budget", cfg.node_budget, "Branch-and-bound node budget");
  app.add_flag("--single-worker", cfg.single_worker, "Run on one thread (always the case)");
  app.add_flag("--verbose", cfg.verbose, "Print witnesses and certificates");
  app.add_flag("--rational-shadow", cfg.rational_shadow, "Certify Hedge regret with exact arithmetic");
  app.add_option("--out", cfg.out, "Write output to this file (omega-star: the certificate)");

  using Runner = std::string (*)(const RunConfig&);
  Runner runner = nullptr;
  auto command = [&](const char* name, const char* help, Runner r) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&runner, r] { runner = r; });
    return sub;
  };
  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "Class file ('-' or absent: stdin)");
    return sub;
  };

  CLI::App* gen = command("gen", "Generate a concept class", run_gen);
  gen->add_option("family", cfg.family, "full|singleton|thresholds|parities|paper_example_sec6|random|disjoint_pairs")
      ->required();
  gen->add_option("--n", cfg.n, "Universe size (default 2, or 4 for paper_example_sec6)");
  gen->add_option("--k", cfg.k, "Class size (random family)");

  with_input(command("graph", "Export G_m as an edge list", run_graph))
      ->add_flag("--fingerprint", cfg.fingerprint, "Print a colour-refinement isomorphism fingerprint instead");
  with_input(command("omega", "Clique number of G_m", run_omega));
  with_input(command("omega-star", "Fractional clique number of G_m with certificate", run_omega_star))
      ->add_option("--check", cfg.cert_path, "Revalidate a stored certificate instead of solving");
  with_input(command("ld", "Littlestone dimension", run_ld));
  with_input(command("vc", "VC dimension", run_vc));
  with_input(command("cd", "Clique dimension", run_cd));
  with_input(command("cd-star", "Fractional clique dimension", run_cd_star));
  with_input(command("balanced", "Balanced point of a clique in G_m", run_balanced))
      ->add_option("--clique", cfg.clique, "Comma-separated vertex indices (default: a maximum clique)");
  with_input(command("tree-from-clique", "Shattered tree from a clique in G_m", run_tree_from_clique))
      ->add_option("--clique", cfg.clique, "Comma-separated vertex indices (default: a maximum clique)");
  with_input(command("clique-from-tree", "Clique from a complete shattered tree", run_clique_from_tree))
      ->add_option("--tree", cfg.tree_path, "Tree file");
  CLI::App* boost = with_input(command("boost", "Monte Carlo check of the boosted consistency bound", run_boost));
  boost->add_option("--m0", cfg.m0, "Anchor length (default: smallest separating m0 <= m_max)");
  boost->add_option("--gamma", cfg.gamma, "Margin as a rational (default epsilon/4)");
  boost->add_option("--samples", cfg.samples, "Samples per dataset");
  with_input(command("verify-lemmas", "Run every lemma check (default: built-in corpus)", run_verify_lemmas));
  with_input(command("verify-dichotomy", "Polynomial-or-exponential checks (default: built-in corpus)",
                     run_verify_dichotomy));
  with_input(command("curves", "omega_m, omega*_m, 2^m table as CSV", run_curves));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    emit(cfg, runner(cfg));
    return 0;
  } catch (const CheckFailed&) {
    return 1;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit (" << e.dimension() << "): " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::parse_error || e.kind() == ErrorKind::invalid_params ||
                   e.kind() == ErrorKind::index_out_of_range
               ? 2
               : 1;
  }
}
