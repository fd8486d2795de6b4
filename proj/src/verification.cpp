#include "cliquedim/verification.hpp"

#include <map>

#include "cliquedim/boosting.hpp"
#include "cliquedim/error.hpp"
#include "cliquedim/fractional.hpp"
#include "cliquedim/numeric_checks.hpp"

namespace cliquedim {

CheckReport duality_checks(const ConceptClass& cls, std::size_t m_max, const DimensionOptions& options) {
  CheckReport report;
  for (std::size_t m = 1; m <= m_max; ++m) {
    std::string tag = " m=" + std::to_string(m);
    try {
      ContradictionGraph g = ContradictionGraph::build(cls, m, options.limits);
      DualityCertificate cert = omega_star(g, options.simplex);
      auto why = certificate_violation(cert);
      report.expect("duality" + tag, !why, why ? *why : "value " + to_string(cert.value));
      DualityCertificate again = parse_certificate(write_certificate(cert), g);
      auto why2 = certificate_violation(again);
      report.expect("certificate_roundtrip" + tag, !why2 && again.value == cert.value,
                    why2 ? *why2 : "reparsed value " + to_string(again.value));
      FractionalColoring uniform = uniform_coloring_witness(g);
      auto why3 = coloring_violation(uniform);
      report.expect("uniform_coloring" + tag, !why3 && uniform.colors() == pow2(static_cast<long>(m)),
                    why3 ? *why3 : "colors " + to_string(uniform.colors()));
    } catch (const ResourceLimitError& e) {
      report.add("duality" + tag, CheckStatus::skip, e.what());
    }
  }
  return report;
}

CheckReport small_pop_err_checks(const ConceptClass& cls, std::size_t m_max, const DimensionOptions& options) {
  CheckReport report;
  const Rational thetas[] = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(1)};
  for (std::size_t m = 1; m <= m_max; ++m) {
    std::string tag = " m=" + std::to_string(m);
    try {
      ContradictionGraph g = ContradictionGraph::build(cls, m, options.limits);
      DualityCertificate cert = omega_star(g, options.simplex);
      PatternDistribution mu = coloring_to_distribution(cert.dual);
      std::size_t checked = 0;
      std::string first_failure;
      for (const Dataset& s : g.vertices()) {
        std::map<LabeledExample, Rational> mass;
        for (const auto& z : s.examples()) mass[z] += Rational(1, static_cast<unsigned long>(s.size()));
        ExampleDistribution D(mass.begin(), mass.end());
        for (const auto& theta : thetas) {
          SmallPopErrResult r = small_pop_err_check(cls, mu, cert.value, m, D, theta);
          ++checked;
          if (!r.passed && first_failure.empty()) {
            first_failure = "S=" + s.render() + " theta=" + to_string(theta) + ": " + to_string(r.probability) +
                            " < " + to_string(r.bound);
          }
        }
      }
      report.expect("small_pop_err" + tag, first_failure.empty(),
                    first_failure.empty() ? std::to_string(checked) + " exact comparisons" : first_failure);
    } catch (const ResourceLimitError& e) {
      report.add("small_pop_err" + tag, CheckStatus::skip, e.what());
    }
  }
  return report;
}

CheckReport dichotomy_checks(const ConceptClass& cls, std::size_t m_max, const DimensionOptions& options) {
  CheckReport report;
  const std::size_t ld = LittlestoneSolver().dimension(cls);
  std::optional<std::size_t> separated_at;
  for (std::size_t m = 1; m <= m_max; ++m) {
    std::string tag = " m=" + std::to_string(m);
    try {
      ContradictionGraph g = ContradictionGraph::build(cls, m, options.limits);
      if (m > ld) {
        MaxCliqueResult c = max_clique(g, options.clique);
        BigInt poly = pow(BigInt(2 * m + 1), ld);
        report.expect("integral_dichotomy" + tag, BigInt(static_cast<unsigned long>(c.clique.size())) <= poly,
                      "omega" + std::string(c.exact ? "=" : ">=") + std::to_string(c.clique.size()) +
                          " <= (2m+1)^" + std::to_string(ld) + "=" + poly.get_str());
      }
      Rational value = omega_star(g, options.simplex).value;
      bool separated = value < pow2(static_cast<long>(m));
      if (separated_at && !separated) {
        report.add("fractional_dichotomy" + tag, CheckStatus::warn,
                   "omega*_m = 2^m after separation at m0=" + std::to_string(*separated_at));
      } else if (separated_at) {
        report.add("fractional_dichotomy" + tag, CheckStatus::pass,
                   "omega*=" + to_string(value) + " < 2^m (separated since m0=" + std::to_string(*separated_at) + ")");
      }
      if (separated && !separated_at) separated_at = m;
    } catch (const ResourceLimitError& e) {
      report.add("dichotomy" + tag, CheckStatus::skip, e.what());
    }
  }
  return report;
}

CheckReport verify_lemmas(const std::vector<NamedClass>& corpus, std::size_t m_max, const DimensionOptions& options) {
  CheckReport report;
  for (const auto& named : corpus) {
    std::string prefix = named.name + ": ";
    report.append(check_inequalities(named.cls, m_max, options), prefix);
    report.append(duality_checks(named.cls, m_max, options), prefix);
    report.append(small_pop_err_checks(named.cls, m_max, options), prefix);
  }
  report.append(numeric_lemma_checks(), "numeric: ");
  return report;
}

CheckReport verify_dichotomy(const std::vector<NamedClass>& corpus, std::size_t m_max,
                             const DimensionOptions& options) {
  CheckReport report;
  for (const auto& named : corpus) report.append(dichotomy_checks(named.cls, m_max, options), named.name + ": ");
  return report;
}

}  // namespace cliquedim
