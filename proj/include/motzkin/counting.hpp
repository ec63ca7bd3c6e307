#pragma once

#include <vector>

#include "motzkin/bigint.hpp"

namespace motzkin {

// Row n of the trinomial triangle: values[k] = [z^k](1 + z + z^2)^n,
// k = 0..2n.
struct TrinomialRow {
  int n = 0;
  std::vector<BigCount> values;
};

// Rows are memoized process-wide behind a mutex; safe to call concurrently.
TrinomialRow trinomial_row(int n);

// [z^k](1 + z + z^2)^n, zero for k outside [0, 2n].
BigCount trinomial(int n, int k);

// Convolution recurrence M_{n+1} = M_n + sum_{i<n} M_i M_{n-1-i}.
BigCount motzkin_number(int n);
std::vector<BigCount> motzkin_numbers(int up_to);

// Paths of length n ending at 0 with no sign constraint: the central
// trinomial coefficient.
BigCount grand_count(int n);

// Nonnegative paths of length n ending at level k: [z^n] z^k M^(k+1).
BigCount level_count(int n, int k);

// Ordered forests of j {0,1,2}-trees with n nodes in total, i.e. [z^n] Q^j,
// as trinomial(n-1, n-j) - trinomial(n-1, n-j-2). Requires n, j >= 1.
BigCount forest_count(int n, int j);

// Super-trees with `nodes` nodes (super-root included); nodes >= 2.
BigCount super_tree_count(int nodes);

}  // namespace motzkin
