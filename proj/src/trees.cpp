#include "motzkin/trees.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "motzkin/errors.hpp"

namespace motzkin {

namespace {

// One past the last pre-order index of the subtree rooted at `begin`.
std::size_t subtree_end(std::span<const std::uint8_t> degrees, std::size_t begin) {
  std::size_t open = 1;
  std::size_t i = begin;
  while (open > 0) {
    open = open - 1 + degrees[i];
    ++i;
  }
  return i;
}

template <typename Degree>
std::string serialize_degrees(std::span<const Degree> degrees) {
  std::string out;
  out.reserve(2 * degrees.size());
  // Children still to be emitted for every open node.
  std::vector<std::size_t> pending;
  for (auto d : degrees) {
    out.push_back('(');
    if (d > 0) {
      pending.push_back(d);
      continue;
    }
    out.push_back(')');
    while (!pending.empty() && --pending.back() == 0) {
      pending.pop_back();
      out.push_back(')');
    }
  }
  return out;
}

// Pre-order outdegrees of a parenthesized tree. The root may have up to
// `root_limit` children, every other node up to two.
std::vector<std::size_t> parse_degrees(std::string_view text, std::size_t root_limit) {
  if (text.empty()) throw ParseError(0, "empty tree text");
  std::vector<std::size_t> degrees;
  std::vector<std::size_t> open;  // indices into degrees
  bool closed = false;
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (closed) {
      throw ParseError(pos, "trailing characters after the root closes at index " +
                                std::to_string(pos));
    }
    if (c == '(') {
      if (!open.empty()) {
        const std::size_t parent = open.back();
        const std::size_t limit = parent == 0 ? root_limit : 2;
        if (++degrees[parent] > limit) {
          throw OutdegreeError(pos, "node has more than " + std::to_string(limit) +
                                        " children; extra child opens at index " +
                                        std::to_string(pos));
        }
      } else if (!degrees.empty()) {
        throw ParseError(pos, "more than one root; second opens at index " + std::to_string(pos));
      }
      open.push_back(degrees.size());
      degrees.push_back(0);
    } else if (c == ')') {
      if (open.empty()) {
        throw ParseError(pos, "unbalanced ')' at index " + std::to_string(pos));
      }
      open.pop_back();
      closed = open.empty();
    } else {
      throw ParseError(pos, "invalid character '" + std::string(1, c) + "' at index " +
                                std::to_string(pos));
    }
  }
  if (!open.empty()) {
    throw ParseError(text.size(), "unbalanced: " + std::to_string(open.size()) +
                                      " unclosed '(' at end of input");
  }
  return degrees;
}

std::vector<Tree012> sorted_by_text(std::vector<Tree012> trees) {
  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(trees.size());
  for (std::size_t i = 0; i < trees.size(); ++i) keys.emplace_back(serialize(trees[i]), i);
  std::sort(keys.begin(), keys.end());
  std::vector<Tree012> out;
  out.reserve(trees.size());
  for (const auto& [_, i] : keys) out.push_back(std::move(trees[i]));
  return out;
}

void check_nodes(int nodes, int minimum, int bound) {
  if (nodes < minimum) {
    throw DomainError("node count must be at least " + std::to_string(minimum) + ", got " +
                      std::to_string(nodes));
  }
  if (nodes > bound) {
    throw ResourceError("enumeration of " + std::to_string(nodes) +
                        " nodes exceeds the bound " + std::to_string(bound));
  }
}

// trees_by_size[s] = every Tree012 with s nodes, in construction order.
std::vector<std::vector<Tree012>> trees_up_to(int nodes) {
  std::vector<std::vector<Tree012>> by_size(static_cast<std::size_t>(nodes) + 1);
  if (nodes >= 1) by_size[1].push_back(Tree012::leaf());
  for (std::size_t s = 2; s <= static_cast<std::size_t>(nodes); ++s) {
    auto& out = by_size[s];
    for (const auto& t : by_size[s - 1]) out.push_back(Tree012::unary(t));
    for (std::size_t left = 1; left + 1 < s; ++left) {
      for (const auto& l : by_size[left]) {
        for (const auto& r : by_size[s - 1 - left]) out.push_back(Tree012::binary(l, r));
      }
    }
  }
  return by_size;
}

}  // namespace

Tree012::Tree012() : degrees_{0} {}

Tree012 Tree012::from_degrees(std::vector<std::uint8_t> degrees) {
  std::size_t open = 1;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] > 2) {
      throw DomainError("outdegree " + std::to_string(degrees[i]) + " at pre-order index " +
                        std::to_string(i));
    }
    if (open == 0) throw DomainError("degree sequence continues past a complete tree");
    open = open - 1 + degrees[i];
  }
  if (degrees.empty() || open != 0) throw DomainError("degree sequence is not a complete tree");
  return Tree012(std::move(degrees), 0);
}

Tree012 Tree012::unary(const Tree012& child) {
  std::vector<std::uint8_t> d;
  d.reserve(child.node_count() + 1);
  d.push_back(1);
  d.insert(d.end(), child.degrees_.begin(), child.degrees_.end());
  return Tree012(std::move(d), 0);
}

Tree012 Tree012::binary(const Tree012& left, const Tree012& right) {
  std::vector<std::uint8_t> d;
  d.reserve(left.node_count() + right.node_count() + 1);
  d.push_back(2);
  d.insert(d.end(), left.degrees_.begin(), left.degrees_.end());
  d.insert(d.end(), right.degrees_.begin(), right.degrees_.end());
  return Tree012(std::move(d), 0);
}

std::vector<Tree012> Tree012::children() const {
  std::vector<Tree012> out;
  std::size_t begin = 1;
  for (std::uint8_t c = 0; c < root_degree(); ++c) {
    const std::size_t end = subtree_end(degrees_, begin);
    out.push_back(Tree012(std::vector<std::uint8_t>(degrees_.begin() + static_cast<std::ptrdiff_t>(begin),
                                                    degrees_.begin() + static_cast<std::ptrdiff_t>(end)),
                          0));
    begin = end;
  }
  return out;
}

SuperTree::SuperTree(std::vector<Tree012> children) : children_(std::move(children)) {
  if (children_.size() % 2 == 0) {
    throw DomainError("super-root needs an odd number of children, got " +
                      std::to_string(children_.size()));
  }
}

std::size_t SuperTree::node_count() const noexcept {
  return std::accumulate(children_.begin(), children_.end(), std::size_t{1},
                         [](std::size_t acc, const Tree012& t) { return acc + t.node_count(); });
}

Tree012 parse_tree(std::string_view text) {
  const auto raw = parse_degrees(text, 2);
  return Tree012::from_degrees(std::vector<std::uint8_t>(raw.begin(), raw.end()));
}

SuperTree parse_super_tree(std::string_view text) {
  const auto raw = parse_degrees(text, text.size());
  const std::span<const std::size_t> all(raw);
  std::vector<std::uint8_t> rest(all.begin() + 1, all.end());
  std::vector<Tree012> children;
  std::size_t begin = 0;
  for (std::size_t c = 0; c < raw.front(); ++c) {
    const std::size_t end = subtree_end(rest, begin);
    children.push_back(Tree012::from_degrees(
        std::vector<std::uint8_t>(rest.begin() + static_cast<std::ptrdiff_t>(begin),
                                  rest.begin() + static_cast<std::ptrdiff_t>(end))));
    begin = end;
  }
  return SuperTree(std::move(children));
}

std::string serialize(const Tree012& tree) { return serialize_degrees(tree.degrees()); }

std::string serialize(const SuperTree& tree) {
  std::string out = "(";
  for (const auto& c : tree.children()) out += serialize(c);
  out.push_back(')');
  return out;
}

std::vector<Edge> preorder_edges(const Tree012& tree) {
  struct Frame {
    std::uint8_t degree;
    std::uint8_t seen;
  };
  const auto degrees = tree.degrees();
  std::vector<Edge> out;
  out.reserve(tree.edge_count());
  std::vector<Frame> stack;
  if (degrees[0] > 0) stack.push_back({degrees[0], 0});
  for (std::size_t i = 1; i < degrees.size(); ++i) {
    Frame& parent = stack.back();
    out.push_back(parent.degree == 1 ? Edge::Single : (parent.seen == 0 ? Edge::Left : Edge::Right));
    if (++parent.seen == parent.degree) stack.pop_back();
    if (degrees[i] > 0) stack.push_back({degrees[i], 0});
  }
  return out;
}

std::vector<Tree012> enumerate_trees(int nodes, int bound) {
  check_nodes(nodes, 1, bound);
  auto by_size = trees_up_to(nodes);
  return sorted_by_text(std::move(by_size[static_cast<std::size_t>(nodes)]));
}

std::vector<SuperTree> enumerate_super_trees(int nodes, int bound) {
  check_nodes(nodes, 2, bound);
  const auto by_size = trees_up_to(nodes - 1);

  // Every ordered forest whose sizes sum to nodes - 1 with an odd number of trees.
  std::vector<std::pair<std::string, SuperTree>> found;
  std::vector<Tree012> forest;
  auto go = [&](auto& self, int remaining) -> void {
    if (remaining == 0) {
      if (forest.size() % 2 == 1) {
        SuperTree st(forest);
        found.emplace_back(serialize(st), std::move(st));
      }
      return;
    }
    for (int size = 1; size <= remaining; ++size) {
      for (const auto& t : by_size[static_cast<std::size_t>(size)]) {
        forest.push_back(t);
        self(self, remaining - size);
        forest.pop_back();
      }
    }
  };
  go(go, nodes - 1);

  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SuperTree> out;
  out.reserve(found.size());
  for (auto& [_, st] : found) out.push_back(std::move(st));
  return out;
}

}  // namespace motzkin
