#include "cliquedim/contradiction_graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <map>
#include <sstream>

#include "cliquedim/error.hpp"

namespace cliquedim {

namespace {

// Depth-first enumeration of nondecreasing sequences over the 2n labeled
// example types (point-major, label-minor), pruning prefixes no row realizes.
class VertexEnumerator {
 public:
  VertexEnumerator(const ConceptClass& cls, std::size_t m, std::size_t cap, std::vector<Dataset>& out)
      : m_(m), cap_(cap), out_(out) {
    std::size_t n = cls.universe_size();
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint8_t b = 0; b < 2; ++b) {
        VertexSet rows(cls.size());
        for (std::size_t r = 0; r < cls.size(); ++r) {
          if (cls.rows()[r].at(Point{x}) == b) rows.set(r);
        }
        types_.push_back({Point{x}, b});
        type_rows_.push_back(std::move(rows));
      }
    }
    VertexSet all(cls.size());
    all.set();
    prefix_.reserve(m);
    descend(0, all);
  }

 private:
  void descend(std::size_t first_type, const VertexSet& alive) {
    if (prefix_.size() == m_) {
      if (out_.size() >= cap_) {
        throw ResourceLimitError("vertices", "more than " + std::to_string(cap_) + " realizable datasets");
      }
      out_.push_back(Dataset(prefix_));
      return;
    }
    for (std::size_t t = first_type; t < types_.size(); ++t) {
      VertexSet next = alive & type_rows_[t];
      if (next.none()) continue;
      prefix_.push_back(types_[t]);
      descend(t, next);
      prefix_.pop_back();
    }
  }

  std::size_t m_;
  std::size_t cap_;
  std::vector<Dataset>& out_;
  std::vector<LabeledExample> types_;
  std::vector<VertexSet> type_rows_;
  std::vector<LabeledExample> prefix_;
};

void check_pattern_cap(const ContradictionGraph& g) {
  std::size_t n = g.concept_class().universe_size();
  if (n > g.limits().pattern_universe_cap) {
    throw ResourceLimitError("patterns", "2^" + std::to_string(n) + " labelings exceed the cap 2^" +
                                             std::to_string(g.limits().pattern_universe_cap));
  }
}

}  // namespace

ContradictionGraph ContradictionGraph::build(const ConceptClass& cls, std::size_t m, const GraphLimits& limits) {
  if (m == 0) throw Error(ErrorKind::invalid_params, "dataset length m must be at least 1");
  if (cls.is_empty()) throw Error(ErrorKind::empty_class, "cannot build a contradiction graph of an empty class");
  ContradictionGraph g(cls, m, limits);
  VertexEnumerator(cls, m, limits.vertex_cap, g.vertices_);
  return g;
}

const Dataset& ContradictionGraph::vertex(std::size_t i) const {
  if (i >= vertices_.size()) {
    throw Error(ErrorKind::index_out_of_range, "vertex " + std::to_string(i) + " of " + std::to_string(vertices_.size()));
  }
  return vertices_[i];
}

bool ContradictionGraph::is_edge(std::size_t i, std::size_t j) const {
  return vertex(i).contradicts(vertex(j));
}

std::optional<std::size_t> ContradictionGraph::find(const Dataset& dataset) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), dataset);
  if (it == vertices_.end() || !(*it == dataset)) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t ContradictionGraph::num_edges() const {
  std::size_t e = 0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
      if (vertices_[i].contradicts(vertices_[j])) ++e;
    }
  }
  return e;
}

Graph ContradictionGraph::adjacency() const {
  Graph graph(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
      if (vertices_[i].contradicts(vertices_[j])) graph.add_edge(i, j);
    }
  }
  return graph;
}

VertexSet consistent_vertices(const ContradictionGraph& g, const HypothesisPattern& h) {
  VertexSet members(g.num_vertices());
  auto verts = g.vertices();
  for (std::size_t v = 0; v < verts.size(); ++v) {
    if (is_consistent(h, verts[v])) members.set(v);
  }
  return members;
}

std::vector<IndependentSet> independent_sets(const ContradictionGraph& g, const IndependentSetOptions& options) {
  check_pattern_cap(g);
  std::size_t n = g.concept_class().universe_size();
  std::vector<HypothesisPattern> patterns;
  patterns.reserve(std::size_t{1} << n);
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) patterns.emplace_back(n, b);
  std::sort(patterns.begin(), patterns.end());

  std::map<VertexSet, std::size_t> seen;
  std::vector<IndependentSet> family;
  for (const auto& h : patterns) {
    VertexSet members = consistent_vertices(g, h);
    if (seen.emplace(members, family.size()).second) family.push_back({h, std::move(members)});
  }
  if (!options.prune_nonmaximal) return family;

  std::vector<std::size_t> order(family.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return family[a].members.count() > family[b].members.count();
  });
  std::vector<bool> keep(family.size(), false);
  std::vector<std::size_t> kept;
  for (auto i : order) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [&](std::size_t k) {
      return family[i].members.is_subset_of(family[k].members);
    });
    if (!dominated) {
      keep[i] = true;
      kept.push_back(i);
    }
  }
  std::vector<IndependentSet> maximal;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (keep[i]) maximal.push_back(std::move(family[i]));
  }
  return maximal;
}

HypothesisPattern witness_hypothesis(const ContradictionGraph& g, const VertexSet& members) {
  if (members.size() != g.num_vertices()) {
    throw Error(ErrorKind::index_out_of_range, "vertex set size does not match the graph");
  }
  std::uint64_t care = 0;
  std::uint64_t value = 0;
  for (auto v = members.find_first(); v != VertexSet::npos; v = members.find_next(v)) {
    const Dataset& d = g.vertices()[v];
    std::uint64_t clash = (value ^ d.value_mask()) & care & d.care_mask();
    if (clash) {
      int x = std::countr_zero(clash);
      throw Error(ErrorKind::not_independent,
                  "member " + d.render() + " contradicts an earlier member at point " + std::to_string(x));
    }
    care |= d.care_mask();
    value |= d.value_mask();
  }
  return HypothesisPattern(g.concept_class().universe_size(), value);
}

std::string export_edge_list(const ContradictionGraph& g, bool verbose) {
  std::ostringstream out;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  auto verts = g.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (verts[i].contradicts(verts[j])) edges.emplace_back(i, j);
    }
  }
  out << "p " << verts.size() << " " << edges.size() << "\n";
  if (verbose) {
    for (std::size_t i = 0; i < verts.size(); ++i) out << "v " << i << " " << verts[i].render() << "\n";
  }
  for (auto [i, j] : edges) out << "e " << i << " " << j << "\n";
  return out.str();
}

std::string isomorphism_fingerprint(const ContradictionGraph& g) {
  Graph adj = g.adjacency();
  const std::size_t n = adj.num_vertices();
  std::vector<std::size_t> color(n);
  for (std::size_t i = 0; i < n; ++i) color[i] = adj.degree(i);

  std::uint64_t hash = 14695981039346656037ull;
  auto mix = [&hash](std::size_t v) {
    for (int b = 0; b < 8; ++b) {
      hash ^= (v >> (8 * b)) & 0xff;
      hash *= 1099511628211ull;
    }
  };

  // Colours are ranks of sorted signatures, so they never depend on vertex order.
  using Signature = std::vector<std::size_t>;
  std::size_t classes = 0;
  std::size_t rounds = 0;
  for (;;) {
    std::vector<Signature> sig(n);
    for (std::size_t i = 0; i < n; ++i) {
      sig[i].push_back(color[i]);
      const VertexSet& nb = adj.neighbors(i);
      for (auto j = nb.find_first(); j != VertexSet::npos; j = nb.find_next(j)) sig[i].push_back(color[j]);
      std::sort(sig[i].begin() + 1, sig[i].end());
    }
    std::vector<Signature> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (const auto& s : distinct) {
      mix(s.size());
      for (std::size_t v : s) mix(v);
    }
    for (std::size_t i = 0; i < n; ++i) {
      color[i] = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), sig[i]) - distinct.begin());
    }
    ++rounds;
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }

  std::vector<std::size_t> size(classes, 0), degree(classes, 0);
  for (std::size_t i = 0; i < n; ++i) {
    ++size[color[i]];
    degree[color[i]] = adj.degree(i);
  }
  std::ostringstream out;
  out << "fingerprint " << n << " " << adj.num_edges() << " " << rounds << " " << classes << "\n";
  for (std::size_t c = 0; c < classes; ++c) out << "c " << size[c] << " " << degree[c] << "\n";
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(hash));
  out << "hash " << hex << "\n";
  return out.str();
}

}  // namespace cliquedim
