#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cliquedim/dimensions.hpp"
#include "cliquedim/generators.hpp"
#include "cliquedim/report.hpp"

namespace cliquedim {

/// For each m <= m_max: omega_star's certificate validates, survives a
/// write/parse round trip and revalidates, and the uniform coloring covers.
CheckReport duality_checks(const ConceptClass& cls, std::size_t m_max, const DimensionOptions& options = {});

/// Exact small-population-error check for theta in {0, 1/4, 1/2, 1} with D
/// the empirical distribution of every realizable dataset of size m <= m_max.
CheckReport small_pop_err_checks(const ConceptClass& cls, std::size_t m_max, const DimensionOptions& options = {});

/// Polynomial side of the integral dichotomy (omega_m <= (2m+1)^LD for
/// m > LD) and the fractional observation that separation persists.
CheckReport dichotomy_checks(const ConceptClass& cls, std::size_t m_max, const DimensionOptions& options = {});

/// check_inequalities + duality_checks + small_pop_err_checks per class,
/// then the numeric lemma checks once. Entry names are prefixed by class name.
CheckReport verify_lemmas(const std::vector<NamedClass>& corpus, std::size_t m_max,
                          const DimensionOptions& options = {});

CheckReport verify_dichotomy(const std::vector<NamedClass>& corpus, std::size_t m_max,
                             const DimensionOptions& options = {});

}  // namespace cliquedim
