#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cliquedim/concept_class.hpp"

namespace cliquedim {

/// Binary tree whose internal nodes carry a point, with the 0-edge to child[0]
/// and the 1-edge to child[1]. Leaves extracted from cliques remember the
/// surviving clique members (vertex indices); abstract leaves hold none.
class MistakeTree {
 public:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  struct Node {
    std::optional<Point> point;
    std::array<std::size_t, 2> child{kNone, kNone};
    std::vector<std::size_t> members;

    bool is_leaf() const noexcept { return !point.has_value(); }
    bool operator==(const Node&) const = default;
  };

  /// A single leaf.
  MistakeTree() : nodes_(1) {}

  static MistakeTree leaf(std::vector<std::size_t> members = {});
  static MistakeTree node(Point point, const MistakeTree& zero, const MistakeTree& one);

  std::size_t root() const noexcept { return 0; }
  const Node& at(std::size_t i) const { return nodes_.at(i); }
  std::size_t num_nodes() const noexcept { return nodes_.size(); }

  std::size_t min_leaf_depth() const;
  std::size_t max_leaf_depth() const;
  /// All leaves at the same depth.
  bool is_complete() const { return min_leaf_depth() == max_leaf_depth(); }

  /// Labeled root-to-leaf paths, 0-branches before 1-branches.
  std::vector<std::vector<LabeledExample>> branches() const;
  /// Leaf members along each branch, in branches() order.
  std::vector<std::vector<std::size_t>> leaf_members() const;

  /// Cuts every branch at `depth`; nodes at that depth become abstract leaves.
  MistakeTree truncated(std::size_t depth) const;

  bool operator==(const MistakeTree&) const = default;

 private:
  std::size_t append(const MistakeTree& sub);
  std::vector<Node> nodes_;
};

/// Every root-to-leaf path is a dataset realized by some row of the class.
bool is_shattered_by(const MistakeTree& tree, const ConceptClass& cls);

/// Pre-order: `n <point>` per internal node (0-child first), `l` per leaf.
std::string write_tree(const MistakeTree& tree);
/// Throws Error(parse_error). '#' lines are comments.
MistakeTree parse_tree(std::string_view text);

}  // namespace cliquedim
