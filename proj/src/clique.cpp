#include "cliquedim/clique.hpp"

#include <algorithm>
#include <numeric>

#include "cliquedim/error.hpp"

namespace cliquedim {

Clique::Clique(const ContradictionGraph& graph, std::vector<std::size_t> members)
    : graph_(&graph), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (std::size_t a = 0; a < members_.size(); ++a) {
    for (std::size_t b = a + 1; b < members_.size(); ++b) {
      if (!graph.is_edge(members_[a], members_[b])) {
        throw Error(ErrorKind::not_clique, "vertices " + std::to_string(members_[a]) + " and " +
                                               std::to_string(members_[b]) + " do not contradict");
      }
    }
  }
  if (members_.size() == 1) graph.vertex(members_[0]);
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const Graph& graph, std::size_t target, const CliqueSearchOptions& options)
      : target_(target), budget_(options.node_budget) {
    std::size_t n = graph.num_vertices();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return graph.degree(a) > graph.degree(b); });
    std::vector<std::size_t> position(n);
    for (std::size_t p = 0; p < n; ++p) position[order_[p]] = p;
    adj_.assign(n, VertexSet(n));
    for (std::size_t p = 0; p < n; ++p) {
      const VertexSet& nb = graph.neighbors(order_[p]);
      for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u)) adj_[p].set(position[u]);
    }
  }

  void run() {
    VertexSet all(adj_.size());
    all.set();
    if (adj_.empty()) return;
    expand(all);
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }

  std::vector<std::size_t> best() const {
    std::vector<std::size_t> out;
    for (auto p : best_) out.push_back(order_[p]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  bool done() const { return exhausted_ || (target_ > 0 && best_.size() >= target_); }

  void expand(VertexSet candidates) {
    if (done()) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    std::vector<std::size_t> verts;
    std::vector<std::size_t> colors;
    VertexSet uncolored = candidates;
    std::size_t color = 0;
    while (uncolored.any()) {
      ++color;
      VertexSet q = uncolored;
      for (auto v = q.find_first(); v != VertexSet::npos; v = q.find_first()) {
        q.reset(v);
        q -= adj_[v];
        uncolored.reset(v);
        verts.push_back(v);
        colors.push_back(color);
      }
    }
    for (std::size_t i = verts.size(); i-- > 0;) {
      std::size_t bound = std::max(best_.size(), target_ > 0 ? target_ - 1 : 0);
      if (current_.size() + colors[i] <= bound) return;
      std::size_t v = verts[i];
      current_.push_back(v);
      VertexSet next = candidates & adj_[v];
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      candidates.reset(v);
      if (done()) return;
    }
  }

  std::size_t target_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<std::size_t> order_;
  std::vector<VertexSet> adj_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

}  // namespace

CliqueSearchResult max_clique(const Graph& graph, const CliqueSearchOptions& options) {
  BranchAndBound bb(graph, 0, options);
  bb.run();
  return {bb.best(), !bb.exhausted(), bb.nodes()};
}

CliqueDecision has_clique_of_size(const Graph& graph, std::size_t k, const CliqueSearchOptions& options) {
  if (k == 0) return {Decision::yes, {}, 0};
  if (k > graph.num_vertices()) return {Decision::no, {}, 0};
  BranchAndBound bb(graph, k, options);
  bb.run();
  auto best = bb.best();
  if (best.size() >= k) {
    best.resize(k);
    return {Decision::yes, best, bb.nodes()};
  }
  return {bb.exhausted() ? Decision::unknown : Decision::no, {}, bb.nodes()};
}

MaxCliqueResult max_clique(const ContradictionGraph& g, const CliqueSearchOptions& options) {
  auto r = max_clique(g.adjacency(), options);
  return {Clique(g, std::move(r.members)), r.exact, r.nodes};
}

CliqueDecision has_clique_of_size(const ContradictionGraph& g, std::size_t k, const CliqueSearchOptions& options) {
  if (k > g.concept_class().size() && k > 0) return {Decision::no, {}, 0};
  return has_clique_of_size(g.adjacency(), k, options);
}

void for_each_maximal_clique(const Graph& graph, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::size_t n = graph.num_vertices();
  if (n == 0) return;
  std::vector<std::size_t> r;
  bool stop = false;
  std::function<void(VertexSet, VertexSet)> rec = [&](VertexSet p, VertexSet x) {
    if (stop) return;
    if (p.none() && x.none()) {
      if (!visit(r)) stop = true;
      return;
    }
    // Pivot: vertex of P u X with most neighbours in P.
    VertexSet px = p | x;
    std::size_t pivot = VertexSet::npos;
    std::size_t best = 0;
    for (auto u = px.find_first(); u != VertexSet::npos; u = px.find_next(u)) {
      std::size_t c = (p & graph.neighbors(u)).count();
      if (pivot == VertexSet::npos || c > best) {
        pivot = u;
        best = c;
      }
    }
    VertexSet branch = p - graph.neighbors(pivot);
    for (auto v = branch.find_first(); v != VertexSet::npos; v = branch.find_next(v)) {
      r.push_back(v);
      rec(p & graph.neighbors(v), x & graph.neighbors(v));
      r.pop_back();
      if (stop) return;
      p.reset(v);
      x.set(v);
    }
  };
  VertexSet all(n);
  all.set();
  rec(all, VertexSet(n));
}

TreeFromCliqueResult tree_from_clique(const Clique& clique) {
  const ContradictionGraph& g = clique.graph();
  std::function<MistakeTree(std::vector<std::size_t>)> rec = [&](std::vector<std::size_t> members) -> MistakeTree {
    if (members.size() <= 1) return MistakeTree::leaf(std::move(members));
    BalancedPointReport report = find_balanced_point(Clique(g, members));
    std::vector<std::size_t> zero, one;
    for (auto v : members) {
      const Dataset& d = g.vertices()[v];
      if (d.contains({report.point, 0})) zero.push_back(v);
      if (d.contains({report.point, 1})) one.push_back(v);
    }
    return MistakeTree::node(report.point, rec(std::move(zero)), rec(std::move(one)));
  };
  TreeFromCliqueResult result;
  result.tree = rec(clique.members());
  result.depth = result.tree.min_leaf_depth();
  result.complete = result.tree.truncated(result.depth);
  return result;
}

Clique clique_from_tree(const MistakeTree& tree, const ContradictionGraph& g) {
  if (!tree.is_complete()) {
    throw Error(ErrorKind::not_complete, "leaves at depths " + std::to_string(tree.min_leaf_depth()) + ".." +
                                             std::to_string(tree.max_leaf_depth()));
  }
  if (tree.max_leaf_depth() != g.m()) {
    throw Error(ErrorKind::invalid_params, "tree depth " + std::to_string(tree.max_leaf_depth()) +
                                               " differs from graph m=" + std::to_string(g.m()));
  }
  std::vector<std::size_t> members;
  for (auto& path : tree.branches()) {
    auto d = Dataset::try_make(path);
    if (!d) throw Error(ErrorKind::not_shattered, "a branch labels one point both ways");
    check_points(g.concept_class(), *d);
    auto idx = g.find(*d);
    if (!idx) throw Error(ErrorKind::not_shattered, "branch " + d->render() + " is not realizable");
    members.push_back(*idx);
  }
  std::size_t expected = members.size();
  Clique c(g, std::move(members));
  if (c.size() != expected) throw Error(ErrorKind::not_clique, "two branches yield the same dataset");
  return c;
}

}  // namespace cliquedim
