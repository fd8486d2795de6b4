#include "cliquedim/generators.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "cliquedim/error.hpp"

namespace cliquedim {

namespace {

constexpr std::size_t kMaxEnumerableUniverse = 20;

std::size_t require_universe(const GeneratorParams& p, std::size_t max_n) {
  if (p.universe_size == 0 || p.universe_size > max_n) {
    throw Error(ErrorKind::invalid_params, "universe_size must be in [1, " + std::to_string(max_n) + "], got " +
                                               std::to_string(p.universe_size));
  }
  return p.universe_size;
}

ConceptClass from_strings(std::size_t n, const std::vector<std::string>& rows) {
  std::vector<HypothesisPattern> patterns;
  for (const auto& r : rows) patterns.push_back(HypothesisPattern::from_string(r));
  return ConceptClass(n, std::move(patterns));
}

}  // namespace

Family parse_family(std::string_view name) {
  if (name == "full") return Family::full;
  if (name == "singleton") return Family::singleton;
  if (name == "thresholds") return Family::thresholds;
  if (name == "parities") return Family::parities;
  if (name == "paper_example_sec6") return Family::paper_example_sec6;
  if (name == "random") return Family::random;
  if (name == "disjoint_pairs") return Family::disjoint_pairs;
  throw Error(ErrorKind::invalid_params, "unknown family '" + std::string(name) + "'");
}

std::string family_name(Family family) {
  switch (family) {
    case Family::full: return "full";
    case Family::singleton: return "singleton";
    case Family::thresholds: return "thresholds";
    case Family::parities: return "parities";
    case Family::paper_example_sec6: return "paper_example_sec6";
    case Family::random: return "random";
    case Family::disjoint_pairs: return "disjoint_pairs";
  }
  return "?";
}

ConceptClass generate(Family family, const GeneratorParams& params) {
  switch (family) {
    case Family::full: {
      std::size_t n = require_universe(params, kMaxEnumerableUniverse);
      std::vector<HypothesisPattern> rows;
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) rows.emplace_back(n, b);
      return ConceptClass(n, std::move(rows));
    }
    case Family::singleton: {
      std::size_t n = require_universe(params, kMaxUniverse);
      return ConceptClass(n, {HypothesisPattern(n, 0)});
    }
    case Family::thresholds: {
      std::size_t n = require_universe(params, kMaxUniverse);
      std::vector<HypothesisPattern> rows;
      for (std::size_t i = 0; i <= n; ++i) {
        rows.emplace_back(n, i == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << i) - 1);
      }
      return ConceptClass(n, std::move(rows));
    }
    case Family::parities: {
      std::size_t n = require_universe(params, kMaxEnumerableUniverse);
      // Point i is the vector bin(i + 1) in {0,1}^k.
      int k = std::bit_width(n);
      std::set<std::uint64_t> seen;
      std::vector<HypothesisPattern> rows;
      for (std::uint64_t a = 0; a < (std::uint64_t{1} << k); ++a) {
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (std::popcount(a & (i + 1)) % 2) bits |= std::uint64_t{1} << i;
        }
        if (seen.insert(bits).second) rows.emplace_back(n, bits);
      }
      return ConceptClass(n, std::move(rows));
    }
    case Family::paper_example_sec6: {
      if (params.universe_size != 0 && params.universe_size != 4) {
        throw Error(ErrorKind::invalid_params, "paper_example_sec6 is defined over exactly 4 points");
      }
      return from_strings(4, {"0001", "0110", "0111", "1010", "1001", "1110", "1111", "1101"});
    }
    case Family::random: {
      std::size_t n = require_universe(params, kMaxEnumerableUniverse);
      std::uint64_t space = std::uint64_t{1} << n;
      if (params.class_size == 0 || params.class_size > space) {
        throw Error(ErrorKind::invalid_params, "class_size must be in [1, 2^n]");
      }
      std::mt19937_64 rng(params.seed);
      std::uniform_int_distribution<std::uint64_t> pick(0, space - 1);
      std::set<std::uint64_t> chosen;
      while (chosen.size() < params.class_size) chosen.insert(pick(rng));
      std::vector<HypothesisPattern> rows;
      for (auto b : chosen) rows.emplace_back(n, b);
      return ConceptClass(n, std::move(rows));
    }
    case Family::disjoint_pairs: {
      std::size_t n = require_universe(params, kMaxEnumerableUniverse);
      if (n % 2) throw Error(ErrorKind::invalid_params, "disjoint_pairs needs an even universe");
      std::size_t pairs = n / 2;
      std::vector<HypothesisPattern> rows;
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << pairs); ++b) {
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < pairs; ++i) {
          if ((b >> i) & 1U) bits |= std::uint64_t{3} << (2 * i);
        }
        rows.emplace_back(n, bits);
      }
      return ConceptClass(n, std::move(rows));
    }
  }
  throw Error(ErrorKind::invalid_params, "unknown family");
}

std::vector<Dataset> sec6_highlighted_clique() {
  auto ds = [](std::initializer_list<std::pair<std::uint32_t, std::uint8_t>> items) {
    std::vector<LabeledExample> v;
    for (auto [p, l] : items) v.push_back({Point{p}, l});
    return Dataset(std::move(v));
  };
  return {
      ds({{0, 0}, {1, 0}, {2, 0}}), ds({{0, 0}, {1, 1}, {3, 0}}),
      ds({{0, 0}, {2, 1}, {3, 1}}), ds({{1, 0}, {2, 1}, {3, 0}}),
      ds({{0, 1}, {1, 0}, {2, 0}}), ds({{0, 1}, {1, 1}, {3, 0}}),
      ds({{0, 1}, {2, 1}, {3, 1}}), ds({{1, 1}, {2, 0}, {3, 1}}),
  };
}

std::vector<NamedClass> default_corpus() {
  std::vector<NamedClass> corpus;
  auto add = [&](Family f, std::size_t n, std::string name) {
    corpus.push_back({std::move(name), generate(f, {.universe_size = n})});
  };
  add(Family::singleton, 2, "singleton_n2");
  for (std::size_t n = 1; n <= 3; ++n) add(Family::full, n, "full_n" + std::to_string(n));
  for (std::size_t n = 3; n <= 5; ++n) add(Family::thresholds, n, "thresholds_n" + std::to_string(n));
  add(Family::parities, 3, "parities_n3");
  add(Family::disjoint_pairs, 2, "disjoint_pairs_n2");
  add(Family::disjoint_pairs, 4, "disjoint_pairs_n4");
  corpus.push_back({"paper_example_sec6", generate(Family::paper_example_sec6, {})});
  const std::uint64_t master_seed = 0;
  for (std::uint64_t i = 0; i < 10; ++i) {
    std::size_t n = 2 + i % 3;
    std::size_t k = std::min<std::size_t>((std::size_t{1} << n) - 1, 2 + i % 5);
    GeneratorParams p{.universe_size = n, .class_size = k, .seed = master_seed ^ i};
    corpus.push_back({"random_s" + std::to_string(i) + "_n" + std::to_string(n) + "_k" + std::to_string(k),
                      generate(Family::random, p)});
  }
  return corpus;
}

}  // namespace cliquedim
