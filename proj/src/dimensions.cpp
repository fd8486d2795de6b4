#include "cliquedim/dimensions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "cliquedim/error.hpp"
#include "cliquedim/fractional.hpp"
#include "cliquedim/numeric_checks.hpp"

namespace cliquedim {

namespace {

/// 2^m > k.
bool pow2_exceeds(std::size_t m, std::size_t k) { return m >= 64 || (std::uint64_t{1} << m) > k; }

std::size_t floor_log2(std::size_t k) { return k == 0 ? 0 : static_cast<std::size_t>(std::bit_width(k) - 1); }

}  // namespace

VcResult vc_dimension(const ConceptClass& cls) {
  VcResult best;
  const std::size_t n = cls.universe_size();
  const std::size_t cap = std::min(n, floor_log2(cls.size()));
  std::vector<std::uint32_t> chosen;
  // Depth-first over d-subsets in lexicographic order; true once one is shattered.
  std::function<bool(std::size_t, std::size_t, std::uint64_t)> search = [&](std::size_t start, std::size_t d,
                                                                            std::uint64_t mask) -> bool {
    if (chosen.size() == d) {
      std::set<std::uint64_t> seen;
      for (const auto& h : cls.rows()) seen.insert(h.bits() & mask);
      return seen.size() == (std::size_t{1} << d);
    }
    for (std::size_t x = start; x + (d - chosen.size()) <= n; ++x) {
      chosen.push_back(static_cast<std::uint32_t>(x));
      if (search(x + 1, d, mask | (std::uint64_t{1} << x))) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (std::size_t d = 1; d <= cap; ++d) {
    chosen.clear();
    if (!search(0, d, 0)) break;
    best.dimension = d;
    best.shattered.clear();
    for (auto x : chosen) best.shattered.push_back(Point{x});
  }
  return best;
}

std::size_t LittlestoneSolver::dimension(const ConceptClass& cls) {
  if (cls.is_empty()) throw Error(ErrorKind::empty_class, "Littlestone dimension of an empty class");
  if (cls.size() == 1) return 0;
  std::string key = cls.key();
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const std::size_t ceiling = floor_log2(cls.size());
  std::size_t best = 0;
  for (std::uint32_t x = 0; x < cls.universe_size() && best < ceiling; ++x) {
    ConceptClass zero = restrict(cls, Point{x}, 0);
    if (zero.is_empty()) continue;
    ConceptClass one = restrict(cls, Point{x}, 1);
    if (one.is_empty()) continue;
    std::size_t a = dimension(zero);
    if (a + 1 <= best) continue;
    best = std::max(best, 1 + std::min(a, dimension(one)));
  }
  memo_.emplace(std::move(key), best);
  return best;
}

MistakeTree LittlestoneSolver::witness(const ConceptClass& cls, std::size_t depth) {
  if (depth == 0) return MistakeTree::leaf();
  for (std::uint32_t x = 0; x < cls.universe_size(); ++x) {
    ConceptClass zero = restrict(cls, Point{x}, 0);
    ConceptClass one = restrict(cls, Point{x}, 1);
    if (zero.is_empty() || one.is_empty()) continue;
    if (dimension(zero) + 1 >= depth && dimension(one) + 1 >= depth) {
      return MistakeTree::node(Point{x}, witness(zero, depth - 1), witness(one, depth - 1));
    }
  }
  throw Error(ErrorKind::invalid_params, "no shattered tree of depth " + std::to_string(depth));
}

LittlestoneResult littlestone_dimension(const ConceptClass& cls) {
  LittlestoneSolver solver;
  LittlestoneResult r;
  r.dimension = solver.dimension(cls);
  r.tree = solver.witness(cls, r.dimension);
  return r;
}

const char* to_string(Exactness e) { return e == Exactness::exact ? "exact" : "lower-bound-at-m_max"; }

DimensionValue clique_dimension(const ConceptClass& cls, std::size_t m_max, const DimensionOptions& options) {
  if (m_max == 0) throw Error(ErrorKind::invalid_params, "m_max must be at least 1");
  const std::size_t ld = LittlestoneSolver().dimension(cls);
  DimensionValue out;
  bool all_decided = true;
  for (std::size_t m = 1; m <= m_max; ++m) {
    MDecision d{m, Decision::unknown, {}};
    if (m <= ld) {
      d = {m, Decision::yes, "tree"};
    } else if (pow2_exceeds(m, cls.size())) {
      d = {m, Decision::no, "class-size"};
    } else {
      try {
        ContradictionGraph g = ContradictionGraph::build(cls, m, options.limits);
        CliqueDecision r = has_clique_of_size(g, std::size_t{1} << m, options.clique);
        d = {m, r.answer, r.answer == Decision::unknown ? "budget" : "search"};
      } catch (const ResourceLimitError& e) {
        d = {m, Decision::unknown, "resource:" + e.dimension()};
      }
    }
    if (d.full == Decision::yes) out.value = m;
    if (d.full == Decision::unknown) all_decided = false;
    out.decisions.push_back(std::move(d));
  }

  std::string beyond;
  if (pow2_exceeds(m_max + 1, cls.size())) {
    beyond = "m>" + std::to_string(m_max) + " excluded by |H|=" + std::to_string(cls.size()) + " < 2^m";
  } else if (std::size_t cutoff = polynomial_cutoff(ld); m_max >= cutoff) {
    beyond = "m>" + std::to_string(m_max) + " excluded by (2m+1)^" + std::to_string(ld) + " < 2^m past m0=" +
             std::to_string(cutoff);
  }
  if (all_decided && !beyond.empty()) {
    out.exactness = Exactness::exact;
    out.provenance = "searched m<=" + std::to_string(m_max) + "; " + beyond;
  } else {
    out.exactness = Exactness::lower_bound;
    out.provenance = all_decided ? "no analytic cutoff within m_max=" + std::to_string(m_max)
                                 : "some m<=" + std::to_string(m_max) + " undecided";
  }
  return out;
}

std::optional<std::size_t> boosting_cutoff(double alpha, double margin) {
  if (!(margin > 0) || !std::isfinite(alpha)) return std::nullopt;
  const double ln2 = std::log(2.0);
  // f(m) = m ln 2 - alpha ln m + 2 ln margin increases for m > alpha / ln 2.
  auto f = [&](double m) { return m * ln2 - alpha * std::log(m) + 2 * std::log(margin); };
  auto ok = [&](double m) { return f(m) > 1e-6 * (alpha * std::log(m) + 1); };
  double lo = std::max(2.0, std::ceil(alpha / ln2) + 1);
  if (ok(lo)) return static_cast<std::size_t>(lo) + 1;
  double hi = lo;
  while (!ok(hi)) {
    hi *= 2;
    if (hi > 1e18) return std::nullopt;
  }
  while (hi - lo > 1) {
    double mid = std::floor((lo + hi) / 2);
    (ok(mid) ? hi : lo) = mid;
  }
  return static_cast<std::size_t>(hi) + 1;
}

DimensionValue fractional_clique_dimension(const ConceptClass& cls, std::size_t m_max,
                                           const DimensionOptions& options) {
  if (m_max == 0) throw Error(ErrorKind::invalid_params, "m_max must be at least 1");
  DimensionValue out;
  bool all_decided = true;
  std::optional<std::size_t> separating;
  Rational separating_value;
  for (std::size_t m = 1; m <= m_max; ++m) {
    MDecision d{m, Decision::unknown, {}};
    try {
      ContradictionGraph g = ContradictionGraph::build(cls, m, options.limits);
      Rational value = omega_star(g, options.simplex).value;
      bool full = value == pow2(static_cast<long>(m));
      d = {m, full ? Decision::yes : Decision::no, "lp"};
      if (!full && !separating) {
        separating = m;
        separating_value = value;
      }
    } catch (const ResourceLimitError& e) {
      if (pow2_exceeds(m, cls.size())) {
        d = {m, Decision::no, "class-size"};
      } else {
        d = {m, Decision::unknown, "resource:" + e.dimension()};
      }
    }
    if (d.full == Decision::yes) out.value = m;
    if (d.full == Decision::unknown) all_decided = false;
    out.decisions.push_back(std::move(d));
  }

  std::string beyond;
  if (pow2_exceeds(m_max + 1, cls.size())) {
    beyond = "m>" + std::to_string(m_max) + " excluded by |H|=" + std::to_string(cls.size()) + " < 2^m";
  } else if (separating) {
    Rational eps = 1 / separating_value - 1 / pow2(static_cast<long>(*separating));
    Rational gamma = eps / 4;
    double g = to_double(gamma);
    double margin = to_double(Rational(eps - 2 * gamma));
    double alpha = 2.0 / (g * g) * -std::log(margin);
    auto cutoff = boosting_cutoff(alpha, margin);
    if (cutoff && m_max >= *cutoff) {
      beyond = "m>" + std::to_string(m_max) + " excluded by the boosting bound past m=" + std::to_string(*cutoff);
    }
  }
  if (all_decided && !beyond.empty()) {
    out.exactness = Exactness::exact;
    out.provenance = "solved m<=" + std::to_string(m_max) + "; " + beyond;
  } else {
    out.exactness = Exactness::lower_bound;
    out.provenance = all_decided ? "no analytic cutoff within m_max=" + std::to_string(m_max)
                                 : "some m<=" + std::to_string(m_max) + " undecided";
  }
  return out;
}

std::vector<DimensionRow> dimension_table(const ConceptClass& cls, std::size_t m_max,
                                          const DimensionOptions& options) {
  std::vector<DimensionRow> rows;
  for (std::size_t m = 1; m <= m_max; ++m) {
    DimensionRow row;
    row.m = m;
    try {
      ContradictionGraph g = ContradictionGraph::build(cls, m, options.limits);
      row.num_vertices = g.num_vertices();
      MaxCliqueResult c = max_clique(g, options.clique);
      row.omega = c.clique.size();
      row.omega_exact = c.exact;
      try {
        row.omega_star = omega_star(g, options.simplex).value;
      } catch (const ResourceLimitError&) {
      }
    } catch (const ResourceLimitError&) {
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

DimensionReport compute_dimensions(const ConceptClass& cls, std::size_t m_max, const DimensionOptions& options) {
  DimensionReport r;
  r.m_max = m_max;
  r.vc = vc_dimension(cls).dimension;
  r.ld = LittlestoneSolver().dimension(cls);
  r.cd = clique_dimension(cls, m_max, options);
  r.cd_star = fractional_clique_dimension(cls, m_max, options);
  r.rows = dimension_table(cls, m_max, options);
  return r;
}

std::string DimensionReport::to_csv() const {
  std::ostringstream out;
  out << "m,num_vertices,omega,omega_exact,omega_star_num,omega_star_den,two_pow_m\n";
  for (const auto& row : rows) {
    out << row.m << ",";
    out << (row.num_vertices ? std::to_string(*row.num_vertices) : "NA") << ",";
    out << (row.omega ? std::to_string(*row.omega) : "NA") << ",";
    out << (row.omega ? (row.omega_exact ? "true" : "false") : "NA") << ",";
    if (row.omega_star) {
      out << row.omega_star->get_num().get_str() << "," << row.omega_star->get_den().get_str() << ",";
    } else {
      out << "NA,NA,";
    }
    out << pow(BigInt(2), row.m).get_str() << "\n";
  }
  out << "# summary\n";
  out << "m_max," << m_max << "\n";
  out << "vc," << vc << "\n";
  out << "ld," << ld << "\n";
  out << "cd," << cd.value << "," << to_string(cd.exactness) << "\n";
  out << "cd_star," << cd_star.value << "," << to_string(cd_star.exactness) << "\n";
  return out.str();
}

CheckReport check_inequalities(const DimensionReport& r, const ConceptClass& cls, const DimensionOptions& options) {
  CheckReport report;
  report.expect("vc<=ld", r.vc <= r.ld, std::to_string(r.vc) + " <= " + std::to_string(r.ld));
  if (r.ld <= r.m_max) {
    report.expect("ld<=cd", r.ld <= r.cd.value, std::to_string(r.ld) + " <= " + std::to_string(r.cd.value));
  } else {
    report.add("ld<=cd", CheckStatus::skip, "LD exceeds m_max=" + std::to_string(r.m_max));
  }

  std::optional<std::size_t> first_separated;
  for (const auto& row : r.rows) {
    std::string tag = " m=" + std::to_string(row.m);
    BigInt full = pow(BigInt(2), row.m);
    if (!row.omega || !row.omega_star) {
      report.add("omega<=omega_star<=2^m" + tag, CheckStatus::skip, "not computed within caps");
    } else {
      bool ok = Rational(static_cast<unsigned long>(*row.omega)) <= *row.omega_star && *row.omega_star <= full;
      report.expect("omega<=omega_star<=2^m" + tag, ok,
                    std::to_string(*row.omega) + " <= " + to_string(*row.omega_star) + " <= " + full.get_str());
    }
    if (row.omega) {
      BigInt poly = pow(BigInt(2 * row.m + 1), r.ld);
      report.expect("omega<=(2m+1)^ld" + tag, BigInt(static_cast<unsigned long>(*row.omega)) <= poly,
                    std::to_string(*row.omega) + " <= " + poly.get_str());
    }
    if (row.omega_star) {
      bool separated = *row.omega_star < full;
      if (separated && !first_separated) first_separated = row.m;
      if (first_separated && !separated) {
        report.add("fractional_dichotomy" + tag, CheckStatus::warn,
                   "omega*_m = 2^m after separation at m0=" + std::to_string(*first_separated));
      }
    }
  }

  if (r.cd.exactness == Exactness::exact && r.ld >= 2) {
    // cd <= 2 LD log2 LD  <=>  2^cd <= LD^(2 LD)
    bool ok = r.cd.value <= 300 || BigInt(1) << r.cd.value <= pow(BigInt(r.ld), 2 * r.ld);
    report.expect("cd<=max(2ld*log2(ld),300)", ok, "cd=" + std::to_string(r.cd.value));
  } else {
    report.add("cd<=max(2ld*log2(ld),300)", CheckStatus::skip,
               r.ld < 2 ? "LD < 2" : "cd is only a lower bound");
  }

  if (r.ld == 0) {
    report.add("ld_tree_is_clique", CheckStatus::skip, "LD = 0");
  } else {
    try {
      LittlestoneSolver solver;
      MistakeTree tree = solver.witness(cls, r.ld);
      ContradictionGraph g = ContradictionGraph::build(cls, r.ld, options.limits);
      Clique c = clique_from_tree(tree, g);
      report.expect("ld_tree_is_clique", c.size() == (std::size_t{1} << r.ld),
                    "clique of size " + std::to_string(c.size()) + " in G_" + std::to_string(r.ld));
    } catch (const ResourceLimitError& e) {
      report.add("ld_tree_is_clique", CheckStatus::skip, e.what());
    } catch (const Error& e) {
      report.add("ld_tree_is_clique", CheckStatus::fail, e.what());
    }
  }
  return report;
}

CheckReport check_inequalities(const ConceptClass& cls, std::size_t m_max, const DimensionOptions& options) {
  return check_inequalities(compute_dimensions(cls, m_max, options), cls, options);
}

}  // namespace cliquedim
