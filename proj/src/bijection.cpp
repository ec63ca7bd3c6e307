#include "motzkin/bijection.hpp"

#include <cstdint>
#include <utility>
#include <vector>

#include "motzkin/errors.hpp"

namespace motzkin {

MotzkinPath tree_to_path(const Tree012& tree) {
  std::vector<Step> steps;
  steps.reserve(tree.edge_count());
  for (Edge e : preorder_edges(tree)) {
    switch (e) {
      case Edge::Single: steps.push_back(Step::F); break;
      case Edge::Left: steps.push_back(Step::U); break;
      case Edge::Right: steps.push_back(Step::D); break;
    }
  }
  return MotzkinPath(LatticePath(std::move(steps)));
}

Tree012 path_to_tree(const MotzkinPath& path) {
  // Read the path as T := empty | F T | U T D T. Step i creates pre-order
  // node i+1, and the step after a node's creation decides its outdegree:
  // F opens a single child, U a left child, and D (closing the innermost
  // left subtree) or the end of input leaves the node a leaf. No stack is
  // needed; the Motzkin invariant guarantees the sequence is a tree.
  const auto steps = path.path().steps();
  std::vector<std::uint8_t> degrees;
  degrees.reserve(steps.size() + 1);
  for (std::size_t i = 0; i <= steps.size(); ++i) {
    std::uint8_t degree = 0;
    if (i < steps.size()) {
      if (steps[i] == Step::F) degree = 1;
      if (steps[i] == Step::U) degree = 2;
    }
    degrees.push_back(degree);
  }
  return Tree012::from_degrees(std::move(degrees));
}

Tree012 path_to_tree(const LatticePath& path) { return path_to_tree(MotzkinPath(path)); }

GrandMotzkinPath super_tree_to_grand(const SuperTree& tree) {
  std::vector<MotzkinPath> segments;
  segments.reserve(tree.arity());
  for (const auto& child : tree.children()) segments.push_back(tree_to_path(child));
  return grand_compose(tree.k(), std::span<const MotzkinPath>(segments));
}

SuperTree grand_to_super_tree(const GrandMotzkinPath& path) {
  const auto parts = grand_decompose(path);
  std::vector<Tree012> children;
  children.reserve(parts.segments.size());
  for (const auto& seg : parts.segments) children.push_back(path_to_tree(seg));
  return SuperTree(std::move(children));
}

SuperTree grand_to_super_tree(const LatticePath& path) {
  return grand_to_super_tree(GrandMotzkinPath(path));
}

}  // namespace motzkin
