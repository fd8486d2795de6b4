#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cliquedim/concept_class.hpp"
#include "cliquedim/contradiction_graph.hpp"
#include "cliquedim/fractional.hpp"
#include "cliquedim/numeric_checks.hpp"
#include "cliquedim/report.hpp"

namespace cliquedim {

/// The normalized optimal fractional coloring of G_{m0}, with its separation.
struct WeakLearner {
  std::size_t m0 = 0;
  Rational omega_star;
  Rational epsilon;  // 1/omega*_{m0} - 1/2^{m0}
  PatternDistribution mu;
};

/// Throws Error(no_separation) when omega*_{m0} = 2^{m0}.
WeakLearner mu_tilde(const ConceptClass& cls, std::size_t m0, const GraphLimits& limits = {},
                     const SimplexOptions& simplex = {});

/// Smallest m0 in [1, m_max] with omega*_{m0} < 2^{m0}.
std::optional<std::size_t> smallest_separating_m0(const ConceptClass& cls, std::size_t m_max,
                                                  const GraphLimits& limits = {},
                                                  const SimplexOptions& simplex = {});

/// Smallest odd T >= max(1, ceil(2 ln m / gamma^2)); the ceiling is decided
/// on certified bounds for ln m.
std::size_t boosting_rounds(const Rational& gamma, std::size_t m);

struct BoostConfig {
  std::size_t m0 = 0;
  Rational epsilon;
  Rational gamma;
  std::size_t m = 0;
  std::size_t T = 0;

  /// (2/gamma^2) ln(1/(epsilon - 2 gamma)); +inf when epsilon <= 2 gamma.
  double alpha() const;
  /// ln of the guaranteed consistency probability m^{-alpha}.
  double log_bound() const;
  /// T ln(epsilon - 2 gamma), the log of the all-rounds-good probability bound.
  double log_all_good_bound() const;
};

/// gamma defaults to epsilon/4. Throws Error(invalid_params) unless
/// 0 < gamma < 1/2 and m >= 1.
BoostConfig make_boost_config(const WeakLearner& weak, std::size_t m, std::optional<Rational> gamma = {});

struct ExpertRound {
  std::vector<double> weights;        // w_t over the m experts, sums to 1
  HypothesisPattern instance;         // h_t
  std::vector<std::uint8_t> losses;   // l(z_j, h_t) = 1[h_t(x_j) = y_j]
  double expected_loss = 0;           // <w_t, l_t> = 1 - L_{D_t}(h_t)
  bool gamma_good = false;            // L_{D_t}(h_t) <= 1/2 - gamma
};

/// Exact enclosure of the Hedge run, with e^{-eta} bracketed by rationals.
struct ShadowCertificate {
  Interval beta;                 // e^{-eta}
  Interval total_loss;           // sum_t <w_t, l_t>
  Rational regret_upper;         // total_loss.hi - best expert loss
  Rational bound_sq_lower;       // 2 T ln m, lower end
  bool regret_certified = false; // regret_upper <= 0 or regret_upper^2 <= bound_sq_lower
};

struct ExpertGameTranscript {
  std::vector<LabeledExample> experts;  // z_1..z_m in dataset order
  double eta = 0;
  std::vector<ExpertRound> rounds;
  std::vector<std::size_t> cumulative;  // per-expert sum of losses = consistency counts
  double total_loss = 0;
  double regret = 0;
  double regret_bound = 0;              // sqrt(2 T ln m)
  HypothesisPattern majority;
  bool majority_consistent = false;
  std::optional<ShadowCertificate> shadow;

  bool regret_within_bound() const { return regret <= regret_bound; }
  bool all_gamma_good() const;
  std::size_t min_consistency_count() const;
  /// all rounds gamma-good  =>  every count > T/2  =>  majority consistent.
  bool good_rounds_implication_holds() const;
};

struct ExpertGameOptions {
  std::size_t rounds = 0;
  Rational gamma;
  bool rational_shadow = false;
};

/// Chooses h_t from the weights w_t; it never sees h_t itself.
using InstanceChooser = std::function<HypothesisPattern(std::size_t t, std::span<const double> weights)>;

/// Hedge with eta = sqrt(2 ln m / T), w_1 uniform, w_{t+1}(z) proportional
/// to w_t(z) exp(-eta l(z, h_t)). Throws Error(invalid_params) on an empty
/// dataset or zero rounds.
ExpertGameTranscript run_expert_game_online(const Dataset& dataset, const ExpertGameOptions& options,
                                            const InstanceChooser& choose);
/// Throws Error(length_mismatch) unless |instances| = options.rounds.
ExpertGameTranscript run_expert_game(const Dataset& dataset, std::span<const HypothesisPattern> instances,
                                     const ExpertGameOptions& options);

/// D_t(x, y) = sum of w_t over experts equal to (x, y).
std::vector<std::pair<LabeledExample, double>> label_distribution(const std::vector<LabeledExample>& experts,
                                                                  std::span<const double> weights);

/// Pointwise strict majority. Throws Error(even_length) for even or zero length.
HypothesisPattern majority_vote(std::span<const HypothesisPattern> patterns);

/// Inverse-CDF sampling from a finitely supported distribution with the
/// 53-bit uniform (rng() >> 11) * 2^-53, so streams are portable.
class PatternSampler {
 public:
  explicit PatternSampler(const PatternDistribution& mu);
  HypothesisPattern operator()(std::mt19937_64& rng) const;

 private:
  std::vector<HypothesisPattern> atoms_;
  std::vector<double> cdf_;
};

/// Majority vote of config.T independent draws from the weak learner.
HypothesisPattern sample_boosted(const WeakLearner& weak, const BoostConfig& config, std::uint64_t seed);
HypothesisPattern sample_boosted(const PatternSampler& sampler, std::size_t T, std::mt19937_64& rng);

/// Two-sided Clopper-Pearson interval at the given confidence level.
std::pair<double, double> clopper_pearson(std::uint64_t successes, std::uint64_t trials, double confidence = 0.99);

struct SspfcdOptions {
  std::uint64_t samples = 100'000;
  std::size_t enumeration_cap = 10'000;
  std::size_t dataset_sample = 100;
  std::uint64_t seed = 0;
  double confidence = 0.99;
};

enum class LineStatus { pass, fail, skip };

struct SspfcdLine {
  std::string dataset;
  std::uint64_t successes = 0;
  std::uint64_t samples = 0;
  double estimate = 0;
  double ci_lo = 0;
  double ci_hi = 0;
  LineStatus status = LineStatus::skip;
};

struct SspfcdReport {
  std::uint64_t seed = 0;
  bool skipped = false;
  std::string skip_reason;
  std::optional<BoostConfig> config;
  bool enumerated = true;
  std::vector<SspfcdLine> lines;

  bool passed() const;
  /// `# seed` header, then `S=<rendering> est=<p> ci=[lo,hi] bound=<b> STATUS` lines.
  std::string render() const;
};

/// Monte Carlo check of Pr_{h ~ mu_m}[h consistent with S] >= m^{-alpha}
/// over every realizable S of size m (or a seeded sample of them). Dataset i
/// uses seed master ^ i. FAIL only when the whole interval lies below the
/// bound; a missing separation yields SKIP lines.
SspfcdReport verify_sspfcd_bound(const ConceptClass& cls, std::size_t m0, std::size_t m,
                                 std::optional<Rational> gamma, const SspfcdOptions& options,
                                 const GraphLimits& limits = {});

/// Writes b = exp(log_b) as a decimal mantissa/exponent string; works far
/// below the double range.
std::string format_log_value(double log_b);

struct SmallPopErrResult {
  Rational probability;  // Pr_{h ~ mu*}[L_D(h) <= theta]
  Rational bound;        // 1/omega*_m - (1 - theta)^m
  bool passed = false;
};

using ExampleDistribution = std::vector<std::pair<LabeledExample, Rational>>;

/// Exact check against the normalized optimal coloring mu* of G_m. Throws
/// Error(not_realizable_distribution) when no h in H has L_D(h) = 0, and
/// Error(invalid_params) unless 0 <= theta <= 1 and D sums to 1.
SmallPopErrResult small_pop_err_check(const ConceptClass& cls, const PatternDistribution& mu_star,
                                      const Rational& omega_star, std::size_t m, const ExampleDistribution& D,
                                      const Rational& theta);
SmallPopErrResult small_pop_err_check(const ConceptClass& cls, std::size_t m, const ExampleDistribution& D,
                                      const Rational& theta, const GraphLimits& limits = {});

/// L_D(h) = mass of examples h mislabels.
Rational population_loss(const HypothesisPattern& h, const ExampleDistribution& D);

struct AllGoodFrequency {
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double ci_lo = 0;
  double ci_hi = 0;
  double log_bound = 0;  // ln (epsilon - 2 gamma)^T
  bool passed = false;   // FAIL only when the whole interval lies below the bound
};

/// Frequency of the all-rounds-gamma-good event over seeded transcripts whose
/// instances are i.i.d. draws from the weak learner (trial i uses seed ^ i).
AllGoodFrequency all_good_frequency(const Dataset& dataset, const WeakLearner& weak, const BoostConfig& config,
                                    std::uint64_t trials, std::uint64_t seed);

}  // namespace cliquedim
