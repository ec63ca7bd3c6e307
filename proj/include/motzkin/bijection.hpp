#pragma once

#include "motzkin/paths.hpp"
#include "motzkin/trees.hpp"

namespace motzkin {

// Pre-order edge encoding: Single -> F, Left -> U, Right -> D.
MotzkinPath tree_to_path(const Tree012& tree);

// Inverse of tree_to_path.
Tree012 path_to_tree(const MotzkinPath& path);
// DomainError if `path` is not a Motzkin path.
Tree012 path_to_tree(const LatticePath& path);

// Encodes each child and glues the pieces with grand_compose.
// The result has node_count() - 2 steps.
GrandMotzkinPath super_tree_to_grand(const SuperTree& tree);

// k is read off the path as -min_level.
SuperTree grand_to_super_tree(const GrandMotzkinPath& path);
SuperTree grand_to_super_tree(const LatticePath& path);

}  // namespace motzkin
