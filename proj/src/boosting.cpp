#include "cliquedim/boosting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include <boost/math/special_functions/beta.hpp>

#include "cliquedim/error.hpp"

namespace cliquedim {

namespace {

constexpr unsigned kShadowBits = 128;

double ln_double(std::size_t m) { return std::log(static_cast<double>(m)); }

std::string fixed(double v, int digits) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << v;
  return out.str();
}

ShadowCertificate shadow_run(const std::vector<std::size_t>& history, std::size_t m,
                             std::size_t T, const std::vector<std::vector<std::uint8_t>>& losses,
                             std::size_t best) {
  ShadowCertificate cert;
  Interval ln_m = m > 1 ? ln_bounds(Rational(static_cast<unsigned long>(m)), kShadowBits) : Interval{0, 0};
  Rational t(static_cast<unsigned long>(T));
  Interval eta{sqrt_bounds(Rational(2 * ln_m.lo / t), kShadowBits).lo,
               sqrt_bounds(Rational(2 * ln_m.hi / t), kShadowBits).hi};
  cert.beta = exp_neg_bounds(eta, kShadowBits);

  // pow_lo[k] <= beta^k <= pow_hi[k]
  std::vector<Rational> pow_lo(T + 1), pow_hi(T + 1);
  pow_lo[0] = pow_hi[0] = 1;
  for (std::size_t k = 1; k <= T; ++k) {
    pow_lo[k] = round_down_dyadic(pow_lo[k - 1] * cert.beta.lo, kShadowBits);
    pow_hi[k] = round_up_dyadic(pow_hi[k - 1] * cert.beta.hi, kShadowBits);
  }

  Rational total_lo = 0, total_hi = 0;
  for (std::size_t r = 0; r < T; ++r) {
    // w_t(j) is proportional to beta^{c_j}; the expected loss N/(N+M) grows
    // with the loss-1 mass N and shrinks with the loss-0 mass M.
    Rational n_lo = 0, n_hi = 0, z_lo = 0, z_hi = 0;
    for (std::size_t j = 0; j < m; ++j) {
      std::size_t c = history[r * m + j];
      if (losses[r][j]) {
        n_lo += pow_lo[c];
        n_hi += pow_hi[c];
      } else {
        z_lo += pow_lo[c];
        z_hi += pow_hi[c];
      }
    }
    if (sgn(n_hi) > 0) total_hi += round_up_dyadic(n_hi / (n_hi + z_lo), kShadowBits);
    if (sgn(n_lo) > 0) total_lo += round_down_dyadic(n_lo / (n_lo + z_hi), kShadowBits);
  }
  cert.total_loss = {total_lo, total_hi};
  cert.regret_upper = total_hi - static_cast<unsigned long>(best);
  cert.bound_sq_lower = 2 * t * ln_m.lo;
  cert.regret_certified = sgn(cert.regret_upper) <= 0 || cert.regret_upper * cert.regret_upper <= cert.bound_sq_lower;
  return cert;
}

std::vector<Dataset> sample_datasets(const ConceptClass& cls, std::size_t m, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t n = cls.universe_size();
  std::vector<Dataset> out;
  for (std::size_t i = 0; i < count; ++i) {
    const HypothesisPattern& h = cls.rows()[rng() % cls.size()];
    std::vector<LabeledExample> ex;
    for (std::size_t k = 0; k < m; ++k) {
      Point p{static_cast<std::uint32_t>(rng() % n)};
      ex.push_back({p, static_cast<std::uint8_t>(h.at(p))});
    }
    out.emplace_back(std::move(ex));
  }
  return out;
}

}  // namespace

WeakLearner mu_tilde(const ConceptClass& cls, std::size_t m0, const GraphLimits& limits,
                     const SimplexOptions& simplex) {
  ContradictionGraph g = ContradictionGraph::build(cls, m0, limits);
  DualityCertificate cert = omega_star(g, simplex);
  Rational full = pow2(static_cast<long>(m0));
  if (cert.value >= full) {
    throw Error(ErrorKind::no_separation, "omega*_" + std::to_string(m0) + " = " + to_string(cert.value) +
                                              " equals 2^" + std::to_string(m0));
  }
  WeakLearner weak;
  weak.m0 = m0;
  weak.omega_star = cert.value;
  weak.epsilon = 1 / cert.value - 1 / full;
  weak.mu = coloring_to_distribution(cert.dual);
  return weak;
}

std::optional<std::size_t> smallest_separating_m0(const ConceptClass& cls, std::size_t m_max,
                                                  const GraphLimits& limits, const SimplexOptions& simplex) {
  for (std::size_t m0 = 1; m0 <= m_max; ++m0) {
    ContradictionGraph g = ContradictionGraph::build(cls, m0, limits);
    if (omega_star(g, simplex).value < pow2(static_cast<long>(m0))) return m0;
  }
  return std::nullopt;
}

std::size_t boosting_rounds(const Rational& gamma, std::size_t m) {
  if (sgn(gamma) <= 0) throw Error(ErrorKind::invalid_params, "gamma must be positive");
  std::size_t T = 0;
  if (m > 1) {
    // ln m is irrational for m >= 2, so the enclosure eventually pins the ceiling.
    for (unsigned bits = 64;; bits *= 2) {
      Interval ln_m = ln_bounds(Rational(static_cast<unsigned long>(m)), bits);
      Rational lo = 2 * ln_m.lo / (gamma * gamma);
      Rational hi = 2 * ln_m.hi / (gamma * gamma);
      BigInt clo, chi;
      mpz_cdiv_q(clo.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
      mpz_cdiv_q(chi.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
      if (clo == chi) {
        if (!clo.fits_ulong_p()) throw ResourceLimitError("rounds", "T does not fit in 64 bits");
        T = clo.get_ui();
        break;
      }
    }
  }
  if (T == 0) T = 1;
  if (T % 2 == 0) ++T;
  return T;
}

double BoostConfig::alpha() const {
  Rational margin = epsilon - 2 * gamma;
  if (sgn(margin) <= 0) return std::numeric_limits<double>::infinity();
  double g = to_double(gamma);
  return 2.0 / (g * g) * -std::log(to_double(margin));
}

double BoostConfig::log_bound() const {
  if (m <= 1) return 0;
  return -alpha() * ln_double(m);
}

double BoostConfig::log_all_good_bound() const {
  Rational margin = epsilon - 2 * gamma;
  if (sgn(margin) <= 0) return -std::numeric_limits<double>::infinity();
  return static_cast<double>(T) * std::log(to_double(margin));
}

BoostConfig make_boost_config(const WeakLearner& weak, std::size_t m, std::optional<Rational> gamma) {
  if (m == 0) throw Error(ErrorKind::invalid_params, "m must be at least 1");
  BoostConfig c;
  c.m0 = weak.m0;
  c.epsilon = weak.epsilon;
  c.gamma = gamma ? *gamma : Rational(weak.epsilon / 4);
  if (sgn(c.gamma) <= 0 || c.gamma >= Rational(1, 2)) {
    throw Error(ErrorKind::invalid_params, "gamma must lie in (0, 1/2), got " + to_string(c.gamma));
  }
  c.m = m;
  c.T = boosting_rounds(c.gamma, m);
  return c;
}

bool ExpertGameTranscript::all_gamma_good() const {
  return std::all_of(rounds.begin(), rounds.end(), [](const ExpertRound& r) { return r.gamma_good; });
}

std::size_t ExpertGameTranscript::min_consistency_count() const {
  return cumulative.empty() ? 0 : *std::min_element(cumulative.begin(), cumulative.end());
}

bool ExpertGameTranscript::good_rounds_implication_holds() const {
  if (!all_gamma_good()) return true;
  return 2 * min_consistency_count() > rounds.size() && majority_consistent;
}

ExpertGameTranscript run_expert_game_online(const Dataset& dataset, const ExpertGameOptions& options,
                                            const InstanceChooser& choose) {
  if (dataset.empty()) throw Error(ErrorKind::invalid_params, "the expert game needs a nonempty dataset");
  if (options.rounds == 0) throw Error(ErrorKind::invalid_params, "the expert game needs at least one round");
  const std::size_t m = dataset.size();
  const std::size_t T = options.rounds;
  const double good_threshold = 0.5 + to_double(options.gamma);

  ExpertGameTranscript tr;
  tr.experts.assign(dataset.examples().begin(), dataset.examples().end());
  tr.eta = m > 1 ? std::sqrt(2.0 * ln_double(m) / static_cast<double>(T)) : 0.0;
  tr.cumulative.assign(m, 0);
  std::vector<double> w(m, 1.0 / static_cast<double>(m));
  std::vector<HypothesisPattern> instances;
  std::vector<std::size_t> history;  // cumulative counts before each round, row-major
  std::vector<std::vector<std::uint8_t>> losses;
  const double decay = std::exp(-tr.eta);

  for (std::size_t t = 0; t < T; ++t) {
    ExpertRound round;
    round.weights = w;
    round.instance = choose(t, std::span<const double>(round.weights));
    round.losses.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
      const auto& z = tr.experts[j];
      round.losses[j] = round.instance.at(z.point) == z.label ? 1 : 0;
      round.expected_loss += w[j] * round.losses[j];
    }
    round.gamma_good = round.expected_loss >= good_threshold;
    if (options.rational_shadow) {
      history.insert(history.end(), tr.cumulative.begin(), tr.cumulative.end());
      losses.push_back(round.losses);
    }
    double norm = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (round.losses[j]) {
        w[j] *= decay;
        ++tr.cumulative[j];
      }
      norm += w[j];
    }
    for (auto& x : w) x /= norm;
    tr.total_loss += round.expected_loss;
    instances.push_back(round.instance);
    tr.rounds.push_back(std::move(round));
  }

  std::size_t best = tr.min_consistency_count();
  tr.regret = tr.total_loss - static_cast<double>(best);
  tr.regret_bound = m > 1 ? std::sqrt(2.0 * static_cast<double>(T) * ln_double(m)) : 0.0;
  if (instances.size() % 2 == 1) {
    tr.majority = majority_vote(instances);
    tr.majority_consistent = is_consistent(tr.majority, dataset);
  }
  if (options.rational_shadow) tr.shadow = shadow_run(history, m, T, losses, best);
  return tr;
}

ExpertGameTranscript run_expert_game(const Dataset& dataset, std::span<const HypothesisPattern> instances,
                                     const ExpertGameOptions& options) {
  if (instances.size() != options.rounds) {
    throw Error(ErrorKind::length_mismatch, std::to_string(instances.size()) + " instances for " +
                                                std::to_string(options.rounds) + " rounds");
  }
  return run_expert_game_online(dataset, options,
                                [&](std::size_t t, std::span<const double>) { return instances[t]; });
}

std::vector<std::pair<LabeledExample, double>> label_distribution(const std::vector<LabeledExample>& experts,
                                                                  std::span<const double> weights) {
  if (experts.size() != weights.size()) throw Error(ErrorKind::length_mismatch, "one weight per expert expected");
  std::map<LabeledExample, double> mass;
  for (std::size_t j = 0; j < experts.size(); ++j) mass[experts[j]] += weights[j];
  return {mass.begin(), mass.end()};
}

HypothesisPattern majority_vote(std::span<const HypothesisPattern> patterns) {
  if (patterns.empty() || patterns.size() % 2 == 0) {
    throw Error(ErrorKind::even_length, "majority needs an odd number of patterns, got " +
                                            std::to_string(patterns.size()));
  }
  const std::size_t n = patterns.front().size();
  std::vector<std::size_t> ones(n, 0);
  for (const auto& h : patterns) {
    if (h.size() != n) throw Error(ErrorKind::invalid_params, "patterns of different lengths");
    for (std::size_t i = 0; i < n; ++i) ones[i] += (h.bits() >> i) & 1U;
  }
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (2 * ones[i] > patterns.size()) bits |= std::uint64_t{1} << i;
  }
  return HypothesisPattern(n, bits);
}

PatternSampler::PatternSampler(const PatternDistribution& mu) {
  if (mu.atoms.empty()) throw Error(ErrorKind::zero_coloring, "cannot sample from an empty distribution");
  double acc = 0;
  for (const auto& [h, w] : mu.atoms) {
    atoms_.push_back(h);
    acc += to_double(w);
    cdf_.push_back(acc);
  }
  cdf_.back() = 2.0;  // absorbs rounding so every u in [0,1) lands somewhere
}

HypothesisPattern PatternSampler::operator()(std::mt19937_64& rng) const {
  double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  return atoms_[static_cast<std::size_t>(it - cdf_.begin())];
}

HypothesisPattern sample_boosted(const PatternSampler& sampler, std::size_t T, std::mt19937_64& rng) {
  if (T % 2 == 0) throw Error(ErrorKind::even_length, "T must be odd");
  HypothesisPattern first = sampler(rng);
  const std::size_t n = first.size();
  std::vector<std::uint32_t> ones(n, 0);
  auto tally = [&](const HypothesisPattern& h) {
    std::uint64_t b = h.bits();
    for (std::size_t i = 0; i < n; ++i) ones[i] += static_cast<std::uint32_t>((b >> i) & 1U);
  };
  tally(first);
  for (std::size_t t = 1; t < T; ++t) tally(sampler(rng));
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (2 * static_cast<std::size_t>(ones[i]) > T) bits |= std::uint64_t{1} << i;
  }
  return HypothesisPattern(n, bits);
}

HypothesisPattern sample_boosted(const WeakLearner& weak, const BoostConfig& config, std::uint64_t seed) {
  PatternSampler sampler(weak.mu);
  std::mt19937_64 rng(seed);
  return sample_boosted(sampler, config.T, rng);
}

std::pair<double, double> clopper_pearson(std::uint64_t successes, std::uint64_t trials, double confidence) {
  if (trials == 0 || successes > trials) throw Error(ErrorKind::invalid_params, "need 0 <= successes <= trials, trials > 0");
  double a = 1.0 - confidence;
  double k = static_cast<double>(successes);
  double n = static_cast<double>(trials);
  double lo = successes == 0 ? 0.0 : boost::math::ibeta_inv(k, n - k + 1, a / 2);
  double hi = successes == trials ? 1.0 : boost::math::ibeta_inv(k + 1, n - k, 1 - a / 2);
  return {lo, hi};
}

std::string format_log_value(double log_b) {
  if (std::isinf(log_b) && log_b < 0) return "0";
  double x = log_b / std::log(10.0);
  double e = std::floor(x);
  double mant = std::pow(10.0, x - e);
  if (mant >= 9.9995) {
    mant /= 10;
    e += 1;
  }
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(4);
  out << mant << "e" << (e < 0 ? "-" : "+") << static_cast<long long>(std::fabs(e));
  return out.str();
}

bool SspfcdReport::passed() const {
  return std::none_of(lines.begin(), lines.end(), [](const SspfcdLine& l) { return l.status == LineStatus::fail; });
}

std::string SspfcdReport::render() const {
  std::ostringstream out;
  out << "# seed " << seed << "\n";
  std::string bound = "NA";
  if (config) {
    const BoostConfig& c = *config;
    bound = format_log_value(c.log_bound());
    out << "# m0=" << c.m0 << " epsilon=" << to_string(c.epsilon) << " gamma=" << to_string(c.gamma)
        << " m=" << c.m << " T=" << c.T << " alpha=" << fixed(c.alpha(), 4) << "\n";
    out << "# bound m^-alpha=" << bound << " (epsilon-2gamma)^T=" << format_log_value(c.log_all_good_bound())
        << "\n";
  }
  if (skipped) out << "# skip: " << skip_reason << "\n";
  out << "# datasets " << (enumerated ? "enumerated" : "sampled") << " " << lines.size() << "\n";
  for (const auto& l : lines) {
    out << "S=" << l.dataset;
    if (l.status == LineStatus::skip) {
      out << " est=NA ci=[NA,NA] bound=NA SKIP\n";
      continue;
    }
    out << " est=" << fixed(l.estimate, 6) << " ci=[" << fixed(l.ci_lo, 6) << "," << fixed(l.ci_hi, 6)
        << "] bound=" << bound << (l.status == LineStatus::pass ? " PASS" : " FAIL") << "\n";
  }
  return out.str();
}

SspfcdReport verify_sspfcd_bound(const ConceptClass& cls, std::size_t m0, std::size_t m,
                                 std::optional<Rational> gamma, const SspfcdOptions& options,
                                 const GraphLimits& limits) {
  if (options.samples == 0) throw Error(ErrorKind::invalid_params, "need at least one sample per dataset");
  SspfcdReport report;
  report.seed = options.seed;

  std::vector<Dataset> datasets;
  try {
    GraphLimits enum_limits = limits;
    enum_limits.vertex_cap = std::min(limits.vertex_cap, options.enumeration_cap);
    ContradictionGraph g = ContradictionGraph::build(cls, m, enum_limits);
    datasets.assign(g.vertices().begin(), g.vertices().end());
  } catch (const ResourceLimitError&) {
    report.enumerated = false;
    datasets = sample_datasets(cls, m, options.dataset_sample, options.seed);
  }

  std::optional<WeakLearner> weak;
  try {
    weak = mu_tilde(cls, m0, limits);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::no_separation) throw;
    report.skipped = true;
    report.skip_reason = e.what();
  }
  if (!weak) {
    for (const auto& s : datasets) report.lines.push_back({s.render(), 0, 0, 0, 0, 0, LineStatus::skip});
    return report;
  }

  report.config = make_boost_config(*weak, m, gamma);
  const BoostConfig& config = *report.config;
  const double log_bound = config.log_bound();
  PatternSampler sampler(weak->mu);
  for (std::size_t i = 0; i < datasets.size(); ++i) {
    std::mt19937_64 rng(options.seed ^ static_cast<std::uint64_t>(i));
    SspfcdLine line;
    line.dataset = datasets[i].render();
    line.samples = options.samples;
    for (std::uint64_t s = 0; s < options.samples; ++s) {
      if (is_consistent(sample_boosted(sampler, config.T, rng), datasets[i])) ++line.successes;
    }
    line.estimate = static_cast<double>(line.successes) / static_cast<double>(line.samples);
    std::tie(line.ci_lo, line.ci_hi) = clopper_pearson(line.successes, line.samples, options.confidence);
    bool below = line.ci_hi <= 0 || std::log(line.ci_hi) < log_bound;
    line.status = below ? LineStatus::fail : LineStatus::pass;
    report.lines.push_back(std::move(line));
  }
  return report;
}

Rational population_loss(const HypothesisPattern& h, const ExampleDistribution& D) {
  Rational loss = 0;
  for (const auto& [z, w] : D) {
    if (h.at(z.point) != z.label) loss += w;
  }
  return loss;
}

SmallPopErrResult small_pop_err_check(const ConceptClass& cls, const PatternDistribution& mu_star,
                                      const Rational& omega_star, std::size_t m, const ExampleDistribution& D,
                                      const Rational& theta) {
  if (sgn(theta) < 0 || theta > 1) throw Error(ErrorKind::invalid_params, "theta must lie in [0,1]");
  Rational total = 0;
  for (const auto& [z, w] : D) {
    if (z.point.id >= cls.universe_size()) throw Error(ErrorKind::index_out_of_range, "example point outside X");
    if (sgn(w) < 0) throw Error(ErrorKind::invalid_params, "negative mass in D");
    total += w;
  }
  if (total != 1) throw Error(ErrorKind::invalid_params, "D has total mass " + to_string(total));
  bool realizable = std::any_of(cls.rows().begin(), cls.rows().end(),
                                [&](const HypothesisPattern& h) { return sgn(population_loss(h, D)) == 0; });
  if (!realizable) throw Error(ErrorKind::not_realizable_distribution, "no hypothesis has zero loss");

  SmallPopErrResult r;
  r.probability = 0;
  for (const auto& [h, w] : mu_star.atoms) {
    if (population_loss(h, D) <= theta) r.probability += w;
  }
  r.bound = 1 / omega_star - pow(Rational(1 - theta), m);
  r.passed = r.probability >= r.bound;
  return r;
}

SmallPopErrResult small_pop_err_check(const ConceptClass& cls, std::size_t m, const ExampleDistribution& D,
                                      const Rational& theta, const GraphLimits& limits) {
  ContradictionGraph g = ContradictionGraph::build(cls, m, limits);
  DualityCertificate cert = omega_star(g);
  return small_pop_err_check(cls, coloring_to_distribution(cert.dual), cert.value, m, D, theta);
}

AllGoodFrequency all_good_frequency(const Dataset& dataset, const WeakLearner& weak, const BoostConfig& config,
                                    std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) throw Error(ErrorKind::invalid_params, "need at least one trial");
  AllGoodFrequency f;
  f.trials = trials;
  f.log_bound = config.log_all_good_bound();
  PatternSampler sampler(weak.mu);
  ExpertGameOptions opts{config.T, config.gamma, false};
  for (std::uint64_t i = 0; i < trials; ++i) {
    std::mt19937_64 rng(seed ^ i);
    auto tr = run_expert_game_online(dataset, opts,
                                     [&](std::size_t, std::span<const double>) { return sampler(rng); });
    if (tr.all_gamma_good()) ++f.successes;
  }
  std::tie(f.ci_lo, f.ci_hi) = clopper_pearson(f.successes, f.trials);
  f.passed = !(f.ci_hi <= 0 || std::log(f.ci_hi) < f.log_bound);
  return f;
}

}  // namespace cliquedim
