#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "motzkin/paths.hpp"

namespace motzkin {

// Rooted ordered tree in which every node has 0, 1 or 2 children.
//
// Stored as the outdegree of every node in pre-order. That sequence
// determines an ordered tree uniquely, keeps copies flat, and lets every
// traversal here run without recursion.
class Tree012 {
 public:
  // A single node.
  Tree012();

  // Throws DomainError unless `degrees` is the pre-order outdegree sequence
  // of a tree with all outdegrees <= 2.
  static Tree012 from_degrees(std::vector<std::uint8_t> degrees);

  static Tree012 leaf() { return Tree012(); }
  static Tree012 unary(const Tree012& child);
  static Tree012 binary(const Tree012& left, const Tree012& right);

  std::span<const std::uint8_t> degrees() const noexcept { return degrees_; }
  std::size_t node_count() const noexcept { return degrees_.size(); }
  std::size_t edge_count() const noexcept { return degrees_.size() - 1; }
  std::uint8_t root_degree() const noexcept { return degrees_.front(); }

  // Subtrees hanging off the root, in order.
  std::vector<Tree012> children() const;

  bool operator==(const Tree012&) const = default;

 private:
  explicit Tree012(std::vector<std::uint8_t> degrees, int /*unchecked*/)
      : degrees_(std::move(degrees)) {}

  std::vector<std::uint8_t> degrees_;
};

// A super-root with an odd number 2k+1 of ordered Tree012 children.
class SuperTree {
 public:
  // Throws DomainError on an even number of children.
  explicit SuperTree(std::vector<Tree012> children);

  std::span<const Tree012> children() const noexcept { return children_; }
  std::size_t arity() const noexcept { return children_.size(); }
  int k() const noexcept { return static_cast<int>(children_.size() / 2); }
  // Super-root included.
  std::size_t node_count() const noexcept;

  bool operator==(const SuperTree&) const = default;

 private:
  std::vector<Tree012> children_;
};

// tree := "(" tree{0..2} ")"
// ParseError on unbalanced or foreign characters, OutdegreeError at the
// opening parenthesis of a third child.
Tree012 parse_tree(std::string_view text);
// Same grammar, but the root takes any odd number of children.
SuperTree parse_super_tree(std::string_view text);

std::string serialize(const Tree012& tree);
std::string serialize(const SuperTree& tree);

enum class Edge : std::uint8_t { Single, Left, Right };

// Edges in the order pre-order traversal first reaches them. An only child
// hangs on a Single edge; a binary node has a Left then a Right edge.
std::vector<Edge> preorder_edges(const Tree012& tree);

// Ordered by serialized text.
std::vector<Tree012> enumerate_trees(int nodes, int bound = kDefaultEnumerationBound);
std::vector<SuperTree> enumerate_super_trees(int nodes, int bound = kDefaultEnumerationBound);

}  // namespace motzkin
