#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cliquedim {

using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Undirected simple graph stored as adjacency bitsets.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

  std::size_t num_vertices() const noexcept { return adj_.size(); }
  std::size_t num_edges() const;

  void add_edge(std::size_t i, std::size_t j) {
    adj_[i].set(j);
    adj_[j].set(i);
  }
  bool has_edge(std::size_t i, std::size_t j) const { return adj_[i].test(j); }
  const VertexSet& neighbors(std::size_t i) const { return adj_[i]; }
  std::size_t degree(std::size_t i) const { return adj_[i].count(); }

 private:
  std::vector<VertexSet> adj_;
};

inline std::size_t Graph::num_edges() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

}  // namespace cliquedim
