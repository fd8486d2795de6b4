#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cliquedim/concept_class.hpp"

namespace cliquedim {

enum class Family {
  full,                // all 2^n labelings
  singleton,           // the all-zero labeling only
  thresholds,          // 1^i 0^(n-i) for i = 0..n
  parities,            // parity functions over the n nonzero vectors of {0,1}^k, k = bit_width(n)
  paper_example_sec6,  // the 8-row class over 4 points with CD = 3 and LD = 2
  random,              // class_size distinct uniformly random rows
  disjoint_pairs,      // every labeling constant on each pair {2i, 2i+1}
};

struct GeneratorParams {
  std::size_t universe_size = 0;
  std::size_t class_size = 0;  // random only
  std::uint64_t seed = 0;      // random only
};

Family parse_family(std::string_view name);
std::string family_name(Family family);

/// Deterministic for fixed params. Throws Error(invalid_params).
ConceptClass generate(Family family, const GeneratorParams& params);

/// The eight highlighted size-3 datasets of the 4-point example class, one per
/// row, which pairwise contradict.
std::vector<Dataset> sec6_highlighted_clique();

struct NamedClass {
  std::string name;
  ConceptClass cls;
};

/// Verification corpus: singleton, full n=1..3, thresholds n=3..5, parities
/// n=3, disjoint pairs n=2 and n=4, the 4-point example class and ten random
/// classes derived from master seed 0.
std::vector<NamedClass> default_corpus();

}  // namespace cliquedim
