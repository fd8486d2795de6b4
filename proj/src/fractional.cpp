#include "cliquedim/fractional.hpp"

#include <sstream>

#include "cliquedim/error.hpp"

namespace cliquedim {

Rational FractionalClique::size() const {
  Rational s = 0;
  for (const auto& [v, w] : weights) s += w;
  return s;
}

Rational FractionalColoring::colors() const {
  Rational s = 0;
  for (const auto& [h, w] : weights) s += w;
  return s;
}

std::optional<std::string> clique_violation(const FractionalClique& clique, std::span<const IndependentSet> family) {
  const ContradictionGraph& g = *clique.graph;
  for (const auto& [v, w] : clique.weights) {
    if (v >= g.num_vertices()) return "vertex " + std::to_string(v) + " out of range";
    if (sgn(w) < 0) return "negative weight on vertex " + std::to_string(v);
  }
  for (const auto& set : family) {
    Rational load = 0;
    for (const auto& [v, w] : clique.weights) {
      if (set.members.test(v)) load += w;
    }
    if (load > 1) return "V_" + set.witness.to_string() + " carries " + to_string(load);
  }
  return std::nullopt;
}

std::optional<std::string> clique_violation(const FractionalClique& clique) {
  return clique_violation(clique, independent_sets(*clique.graph));
}

std::optional<std::string> coloring_violation(const FractionalColoring& coloring) {
  const ContradictionGraph& g = *coloring.graph;
  const std::size_t n = g.concept_class().universe_size();
  for (const auto& [h, w] : coloring.weights) {
    if (h.size() != n) return "pattern " + h.to_string() + " has the wrong length";
    if (sgn(w) < 0) return "negative weight on pattern " + h.to_string();
  }
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    Rational cover = 0;
    for (const auto& [h, w] : coloring.weights) {
      if (is_consistent(h, g.vertices()[v])) cover += w;
    }
    if (cover < 1) return "vertex " + g.vertices()[v].render() + " covered only " + to_string(cover);
  }
  return std::nullopt;
}

std::optional<std::string> certificate_violation(const DualityCertificate& cert) {
  if (cert.primal.graph != cert.dual.graph || cert.primal.graph == nullptr) return "primal and dual bind different graphs";
  if (auto why = clique_violation(cert.primal)) return "primal infeasible: " + *why;
  if (auto why = coloring_violation(cert.dual)) return "dual infeasible: " + *why;
  Rational p = cert.primal.size();
  Rational d = cert.dual.colors();
  if (p != cert.value || d != cert.value) {
    return "objective mismatch: primal " + to_string(p) + ", dual " + to_string(d) + ", value " + to_string(cert.value);
  }
  return std::nullopt;
}

DualityCertificate omega_star(const ContradictionGraph& g, const SimplexOptions& options) {
  auto family = independent_sets(g);
  std::vector<VertexSet> rows;
  rows.reserve(family.size());
  for (const auto& set : family) rows.push_back(set.members);
  PackingLpSolution lp = solve_packing_lp(g.num_vertices(), rows, options);

  DualityCertificate cert;
  cert.value = lp.value;
  cert.primal.graph = &g;
  cert.dual.graph = &g;
  for (std::size_t v = 0; v < lp.primal.size(); ++v) {
    if (sgn(lp.primal[v]) != 0) cert.primal.weights.emplace(v, lp.primal[v]);
  }
  for (std::size_t i = 0; i < lp.dual.size(); ++i) {
    if (sgn(lp.dual[i]) != 0) cert.dual.weights.emplace(family[i].witness, lp.dual[i]);
  }
  if (auto why = clique_violation(cert.primal, family)) throw Error(ErrorKind::infeasible_model, *why);
  if (auto why = coloring_violation(cert.dual)) throw Error(ErrorKind::infeasible_model, *why);
  if (cert.primal.size() != cert.value || cert.dual.colors() != cert.value) {
    throw Error(ErrorKind::infeasible_model, "primal and dual objectives differ");
  }
  return cert;
}

FractionalColoring uniform_coloring_witness(const ContradictionGraph& g) {
  const std::size_t n = g.concept_class().universe_size();
  if (n > g.limits().pattern_universe_cap) {
    throw ResourceLimitError("patterns", "|X| = " + std::to_string(n) + " exceeds the pattern cap " +
                                             std::to_string(g.limits().pattern_universe_cap));
  }
  FractionalColoring c;
  c.graph = &g;
  Rational w = pow2(static_cast<long>(g.m()) - static_cast<long>(n));
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) c.weights.emplace(HypothesisPattern(n, b), w);
  return c;
}

PatternDistribution coloring_to_distribution(const FractionalColoring& coloring) {
  Rational total = coloring.colors();
  if (sgn(total) <= 0) throw Error(ErrorKind::zero_coloring, "coloring has no weight");
  PatternDistribution mu;
  for (const auto& [h, w] : coloring.weights) {
    if (sgn(w) > 0) mu.atoms.emplace_back(h, Rational(w / total));
  }
  return mu;
}

DatasetDistribution clique_to_distribution(const FractionalClique& clique) {
  Rational total = clique.size();
  if (sgn(total) <= 0) throw Error(ErrorKind::zero_clique, "fractional clique has no weight");
  DatasetDistribution nu;
  for (const auto& [v, w] : clique.weights) {
    if (sgn(w) > 0) nu.atoms.emplace_back(v, Rational(w / total));
  }
  return nu;
}

Rational consistency_probability(const PatternDistribution& mu, const Dataset& dataset) {
  Rational p = 0;
  for (const auto& [h, w] : mu.atoms) {
    if (is_consistent(h, dataset)) p += w;
  }
  return p;
}

Rational max_pattern_probability(const ContradictionGraph& g, const DatasetDistribution& nu) {
  const std::size_t n = g.concept_class().universe_size();
  if (n > g.limits().pattern_universe_cap) {
    throw ResourceLimitError("patterns", "|X| = " + std::to_string(n) + " exceeds the pattern cap");
  }
  Rational best = 0;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    HypothesisPattern h(n, b);
    Rational p = 0;
    for (const auto& [v, w] : nu.atoms) {
      if (is_consistent(h, g.vertices()[v])) p += w;
    }
    if (p > best) best = p;
  }
  return best;
}

std::string write_certificate(const DualityCertificate& cert) {
  std::ostringstream out;
  out << "value " << to_string(cert.value) << "\n";
  out << "primal\n";
  for (const auto& [v, w] : cert.primal.weights) out << v << " " << to_string(w) << "\n";
  out << "dual\n";
  for (const auto& [h, w] : cert.dual.weights) out << h.to_string() << " " << to_string(w) << "\n";
  return out.str();
}

DualityCertificate parse_certificate(std::string_view text, const ContradictionGraph& g) {
  std::istringstream in{std::string(text)};
  std::string line;
  DualityCertificate cert;
  cert.primal.graph = &g;
  cert.dual.graph = &g;
  enum class Section { header, primal, dual } section = Section::header;
  bool have_value = false;
  const std::size_t n = g.concept_class().universe_size();
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a) || a[0] == '#') continue;
    if (a == "primal" || a == "dual") {
      if (!have_value) throw Error(ErrorKind::parse_error, "section before 'value' line");
      section = a == "primal" ? Section::primal : Section::dual;
      continue;
    }
    if (!(ls >> b) || (ls >> extra)) throw Error(ErrorKind::parse_error, "malformed line '" + line + "'");
    switch (section) {
      case Section::header:
        if (a != "value" || have_value) throw Error(ErrorKind::parse_error, "expected 'value <q>', got '" + line + "'");
        cert.value = parse_rational(b);
        have_value = true;
        break;
      case Section::primal: {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
          v = std::stoull(a, &pos);
        } catch (const std::exception&) {
          pos = 0;
        }
        if (pos != a.size()) throw Error(ErrorKind::parse_error, "bad vertex index '" + a + "'");
        if (v >= g.num_vertices()) throw Error(ErrorKind::parse_error, "vertex " + a + " out of range");
        if (!cert.primal.weights.emplace(v, parse_rational(b)).second) {
          throw Error(ErrorKind::parse_error, "vertex " + a + " listed twice");
        }
        break;
      }
      case Section::dual: {
        if (a.size() != n) throw Error(ErrorKind::parse_error, "pattern '" + a + "' has the wrong length");
        HypothesisPattern h;
        try {
          h = HypothesisPattern::from_string(a);
        } catch (const Error& e) {
          throw Error(ErrorKind::parse_error, e.what());
        }
        if (!cert.dual.weights.emplace(h, parse_rational(b)).second) {
          throw Error(ErrorKind::parse_error, "pattern " + a + " listed twice");
        }
        break;
      }
    }
  }
  if (!have_value) throw Error(ErrorKind::parse_error, "missing 'value' line");
  return cert;
}

}  // namespace cliquedim
