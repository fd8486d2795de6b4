#include <bit>
#include <algorithm>
#include <map>

#include "cliquedim/clique.hpp"
#include "cliquedim/error.hpp"

namespace cliquedim {

namespace {

struct WorkingDataset {
  std::vector<LabeledExample> examples;  // sorted multiset
  std::uint64_t care = 0;
  std::uint64_t value = 0;

  void refresh_masks() {
    care = 0;
    value = 0;
    for (const auto& e : examples) {
      care |= std::uint64_t{1} << e.point.id;
      if (e.label) value |= std::uint64_t{1} << e.point.id;
    }
  }
  bool contradicts(const WorkingDataset& o) const { return ((value ^ o.value) & care & o.care) != 0; }
};

}  // namespace

BalancedPointReport find_balanced_point(const Clique& clique) {
  const std::size_t c = clique.size();
  if (c < 2) {
    throw Error(ErrorKind::degenerate_clique, "need at least two members, got " + std::to_string(c));
  }
  const ContradictionGraph& g = clique.graph();
  const auto& members = clique.members();
  const std::size_t m = g.m();

  BalancedPointReport report;
  report.threshold = Rational(static_cast<long>(c - 1), static_cast<unsigned long>(2 * m));
  report.threshold.canonicalize();
  // count < (c-1)/(2m)  <=>  2m * count < c - 1
  auto below_threshold = [&](std::size_t count) { return 2 * m * count < c - 1; };

  std::vector<WorkingDataset> work(c);
  for (std::size_t i = 0; i < c; ++i) {
    auto ex = g.vertices()[members[i]].examples();
    work[i].examples.assign(ex.begin(), ex.end());
    work[i].refresh_masks();
  }
  std::vector<std::vector<bool>> alive(c, std::vector<bool>(c, false));
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = i + 1; j < c; ++j) {
      alive[i][j] = alive[j][i] = true;
      ++report.initial_edges;
    }
  }

  for (;;) {
    std::map<LabeledExample, std::size_t> holders;
    for (const auto& w : work) {
      for (std::size_t k = 0; k < w.examples.size(); ++k) {
        if (k == 0 || !(w.examples[k] == w.examples[k - 1])) ++holders[w.examples[k]];
      }
    }
    bool deleted = false;
    for (std::size_t s = 0; s < c && !deleted; ++s) {
      auto& ex = work[s].examples;
      for (std::size_t k = 0; k < ex.size(); ++k) {
        LabeledExample opposite{ex[k].point, static_cast<std::uint8_t>(1 - ex[k].label)};
        auto it = holders.find(opposite);
        std::size_t count = it == holders.end() ? 0 : it->second;
        if (!below_threshold(count)) continue;
        ex.erase(ex.begin() + static_cast<std::ptrdiff_t>(k));
        work[s].refresh_masks();
        ++report.example_deletions;
        std::size_t dropped = 0;
        for (std::size_t j = 0; j < c; ++j) {
          if (alive[s][j] && !work[s].contradicts(work[j])) {
            alive[s][j] = alive[j][s] = false;
            ++dropped;
          }
        }
        report.edge_deletions += dropped;
        report.max_edge_deletions_per_step = std::max(report.max_edge_deletions_per_step, dropped);
        deleted = true;
        break;
      }
    }
    if (!deleted) break;
  }

  bool found = false;
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = i + 1; j < c; ++j) {
      if (!alive[i][j]) continue;
      ++report.surviving_edges;
      if (!found) {
        found = true;
        report.surviving_edge = {members[i], members[j]};
        std::uint64_t diff = (work[i].value ^ work[j].value) & work[i].care & work[j].care;
        report.point = Point{static_cast<std::uint32_t>(std::countr_zero(diff))};
      }
    }
  }
  if (!found) throw Error(ErrorKind::not_clique, "elimination removed every edge; the input was not a clique");

  for (auto v : members) {
    const Dataset& d = g.vertices()[v];
    if (d.contains({report.point, 0})) ++report.count_zero;
    if (d.contains({report.point, 1})) ++report.count_one;
  }
  return report;
}

}  // namespace cliquedim
