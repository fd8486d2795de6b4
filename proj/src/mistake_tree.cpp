#include "cliquedim/mistake_tree.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "cliquedim/error.hpp"

namespace cliquedim {

MistakeTree MistakeTree::leaf(std::vector<std::size_t> members) {
  MistakeTree t;
  t.nodes_[0].members = std::move(members);
  return t;
}

std::size_t MistakeTree::append(const MistakeTree& sub) {
  std::size_t offset = nodes_.size();
  for (Node n : sub.nodes_) {
    for (auto& c : n.child) {
      if (c != kNone) c += offset;
    }
    nodes_.push_back(std::move(n));
  }
  return offset;
}

MistakeTree MistakeTree::node(Point point, const MistakeTree& zero, const MistakeTree& one) {
  MistakeTree t;
  t.nodes_[0].point = point;
  std::size_t z = t.append(zero);
  std::size_t o = t.append(one);
  t.nodes_[0].child = {z, o};
  return t;
}

std::size_t MistakeTree::min_leaf_depth() const {
  std::function<std::size_t(std::size_t)> rec = [&](std::size_t i) -> std::size_t {
    const Node& n = nodes_[i];
    if (n.is_leaf()) return 0;
    return 1 + std::min(rec(n.child[0]), rec(n.child[1]));
  };
  return rec(0);
}

std::size_t MistakeTree::max_leaf_depth() const {
  std::function<std::size_t(std::size_t)> rec = [&](std::size_t i) -> std::size_t {
    const Node& n = nodes_[i];
    if (n.is_leaf()) return 0;
    return 1 + std::max(rec(n.child[0]), rec(n.child[1]));
  };
  return rec(0);
}

std::vector<std::vector<LabeledExample>> MistakeTree::branches() const {
  std::vector<std::vector<LabeledExample>> out;
  std::vector<LabeledExample> path;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    const Node& n = nodes_[i];
    if (n.is_leaf()) {
      out.push_back(path);
      return;
    }
    for (std::uint8_t b = 0; b < 2; ++b) {
      path.push_back({*n.point, b});
      rec(n.child[b]);
      path.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<std::vector<std::size_t>> MistakeTree::leaf_members() const {
  std::vector<std::vector<std::size_t>> out;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    const Node& n = nodes_[i];
    if (n.is_leaf()) {
      out.push_back(n.members);
      return;
    }
    rec(n.child[0]);
    rec(n.child[1]);
  };
  rec(0);
  return out;
}

MistakeTree MistakeTree::truncated(std::size_t depth) const {
  std::function<MistakeTree(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t d) {
    const Node& n = nodes_[i];
    if (n.is_leaf()) return leaf(n.members);
    if (d == depth) return leaf();
    return node(*n.point, rec(n.child[0], d + 1), rec(n.child[1], d + 1));
  };
  return rec(0, 0);
}

bool is_shattered_by(const MistakeTree& tree, const ConceptClass& cls) {
  for (auto& path : tree.branches()) {
    auto d = Dataset::try_make(path);
    if (!d) return false;
    for (const auto& e : path) {
      if (e.point.id >= cls.universe_size()) return false;
    }
    if (!is_realizable(cls, *d)) return false;
  }
  return true;
}

std::string write_tree(const MistakeTree& tree) {
  std::ostringstream out;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    const auto& n = tree.at(i);
    if (n.is_leaf()) {
      out << "l\n";
      return;
    }
    out << "n " << n.point->id << "\n";
    rec(n.child[0]);
    rec(n.child[1]);
  };
  rec(tree.root());
  return out.str();
}

MistakeTree parse_tree(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    lines.push_back(line.substr(start));
  }
  std::size_t pos = 0;
  std::function<MistakeTree()> rec = [&]() -> MistakeTree {
    if (pos >= lines.size()) throw Error(ErrorKind::parse_error, "tree ended early");
    std::istringstream ls(lines[pos++]);
    std::string tag;
    ls >> tag;
    if (tag == "l") return MistakeTree::leaf();
    long long p = -1;
    if (tag != "n" || !(ls >> p) || p < 0 || p >= static_cast<long long>(kMaxUniverse)) {
      throw Error(ErrorKind::parse_error, "bad tree line '" + lines[pos - 1] + "'");
    }
    MistakeTree zero = rec();
    MistakeTree one = rec();
    return MistakeTree::node(Point{static_cast<std::uint32_t>(p)}, zero, one);
  };
  MistakeTree t = rec();
  if (pos != lines.size()) throw Error(ErrorKind::parse_error, "trailing lines after tree");
  return t;
}

}  // namespace cliquedim
