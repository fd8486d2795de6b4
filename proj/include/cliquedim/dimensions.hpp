#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cliquedim/clique.hpp"
#include "cliquedim/concept_class.hpp"
#include "cliquedim/contradiction_graph.hpp"
#include "cliquedim/mistake_tree.hpp"
#include "cliquedim/report.hpp"
#include "cliquedim/simplex.hpp"

namespace cliquedim {

struct VcResult {
  std::size_t dimension = 0;
  std::vector<Point> shattered;  // a witness set of that size
};

/// Largest shattered point set, searched by increasing size (shattering is
/// hereditary, so the search stops at the first size with no witness).
VcResult vc_dimension(const ConceptClass& cls);

struct LittlestoneResult {
  std::size_t dimension = 0;
  MistakeTree tree;  // complete, depth = dimension, shattered by the class
};

/// Memoized on the canonical class key. Throws Error(empty_class).
class LittlestoneSolver {
 public:
  std::size_t dimension(const ConceptClass& cls);
  /// A complete shattered tree of the given depth; requires depth <= dimension(cls).
  MistakeTree witness(const ConceptClass& cls, std::size_t depth);

 private:
  std::map<std::string, std::size_t> memo_;
};

LittlestoneResult littlestone_dimension(const ConceptClass& cls);

enum class Exactness { exact, lower_bound };

const char* to_string(Exactness e);

struct DimensionOptions {
  GraphLimits limits;
  CliqueSearchOptions clique;
  SimplexOptions simplex;
};

/// How a single m was decided for "omega_m = 2^m" (or its fractional twin).
struct MDecision {
  std::size_t m = 0;
  Decision full = Decision::unknown;  // yes: the graph holds 2^m pairwise contradicting datasets
  std::string provenance;             // tree, search, lp, class-size, budget, resource:<dim>
};

struct DimensionValue {
  std::size_t value = 0;
  Exactness exactness = Exactness::lower_bound;
  std::string provenance;
  std::vector<MDecision> decisions;
};

/// CD within [1, m_max]: m <= LD passes through the Littlestone tree, m with
/// 2^m > |H| fails outright (omega_m <= |H|), anything else is decided by
/// has_clique_of_size(G_m, 2^m). Every m is tested; exactness needs every m
/// decided and a proof that all m > m_max fail: 2^(m_max+1) > |H|, or
/// m_max >= polynomial_cutoff(LD).
DimensionValue clique_dimension(const ConceptClass& cls, std::size_t m_max, const DimensionOptions& options = {});

/// CD* within [1, m_max] by exact LPs. Exact when every m is decided and
/// either 2^(m_max+1) > |H| (omega*_m <= |H|) or a separating m0 exists and
/// m_max reaches the boosting cutoff beyond which m^alpha/(eps-2gamma)^2 < 2^m.
DimensionValue fractional_clique_dimension(const ConceptClass& cls, std::size_t m_max,
                                           const DimensionOptions& options = {});

/// Smallest M past which m^alpha / margin^2 < 2^m for all m >= M (floating
/// point, with slack); nullopt when margin <= 0.
std::optional<std::size_t> boosting_cutoff(double alpha, double margin);

struct DimensionRow {
  std::size_t m = 0;
  std::optional<std::size_t> num_vertices;
  std::optional<std::size_t> omega;
  bool omega_exact = false;
  std::optional<Rational> omega_star;
};

struct DimensionReport {
  std::size_t m_max = 0;
  std::size_t vc = 0;
  std::size_t ld = 0;
  DimensionValue cd;
  DimensionValue cd_star;
  std::vector<DimensionRow> rows;

  /// Columns m,num_vertices,omega,omega_exact,omega_star_num,omega_star_den,two_pow_m
  /// followed by a `# summary` block.
  std::string to_csv() const;
};

/// One row per m in [1, m_max]: omega_m by branch and bound, omega*_m by LP.
std::vector<DimensionRow> dimension_table(const ConceptClass& cls, std::size_t m_max,
                                          const DimensionOptions& options = {});

DimensionReport compute_dimensions(const ConceptClass& cls, std::size_t m_max, const DimensionOptions& options = {});

/// vc <= ld <= cd, omega_m <= omega*_m <= 2^m, omega_m <= (2m+1)^LD, the CD
/// bound max(2 LD log2 LD, 300) when cd is exact and LD >= 2, the Littlestone
/// witness as a clique in G_LD, and the fractional dichotomy observation.
CheckReport check_inequalities(const DimensionReport& report, const ConceptClass& cls,
                               const DimensionOptions& options = {});
CheckReport check_inequalities(const ConceptClass& cls, std::size_t m_max, const DimensionOptions& options = {});

}  // namespace cliquedim
