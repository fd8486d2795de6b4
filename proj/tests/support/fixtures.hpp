#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cliquedim/concept_class.hpp"
#include "cliquedim/generators.hpp"

#include "oracles.hpp"

namespace fixtures {

inline cliquedim::ConceptClass make_class(std::size_t n, std::initializer_list<const char*> rows) {
  std::vector<cliquedim::HypothesisPattern> hs;
  for (const char* r : rows) hs.push_back(cliquedim::HypothesisPattern::from_string(r));
  return cliquedim::ConceptClass(n, std::move(hs));
}

inline cliquedim::ConceptClass make_class(std::size_t n, const std::vector<std::string>& rows) {
  std::vector<cliquedim::HypothesisPattern> hs;
  for (const auto& r : rows) hs.push_back(cliquedim::HypothesisPattern::from_string(r));
  return cliquedim::ConceptClass(n, std::move(hs));
}

inline cliquedim::Dataset make_dataset(std::initializer_list<std::pair<std::uint32_t, int>> examples) {
  std::vector<cliquedim::LabeledExample> ex;
  for (auto [p, y] : examples) ex.push_back({cliquedim::Point{p}, static_cast<std::uint8_t>(y)});
  return cliquedim::Dataset(std::move(ex));
}

inline cliquedim::ConceptClass equality_class() { return make_class(2, {"00", "11"}); }

inline cliquedim::ConceptClass worked_example() {
  return cliquedim::generate(cliquedim::Family::paper_example_sec6, {});
}

inline cliquedim::ConceptClass family(cliquedim::Family f, std::size_t n) {
  return cliquedim::generate(f, {.universe_size = n});
}

inline std::vector<std::uint64_t> row_bits(const cliquedim::ConceptClass& cls) {
  std::vector<std::uint64_t> out;
  for (const auto& h : cls.rows()) out.push_back(h.bits());
  return out;
}

/// Every nonempty class over n points, as row masks over {0,1}^n.
inline std::vector<cliquedim::ConceptClass> all_classes(std::size_t n) {
  std::vector<cliquedim::ConceptClass> out;
  const std::uint64_t patterns = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << patterns); ++mask) {
    std::vector<cliquedim::HypothesisPattern> rows;
    for (std::uint64_t h = 0; h < patterns; ++h) {
      if (mask >> h & 1) rows.emplace_back(n, h);
    }
    out.emplace_back(n, std::move(rows));
  }
  return out;
}

}  // namespace fixtures
