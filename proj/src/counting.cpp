#include "motzkin/counting.hpp"

#include <cstddef>
#include <mutex>
#include <stdexcept>
#include <string>

#include "motzkin/errors.hpp"
#include "motzkin/series.hpp"

namespace motzkin {

namespace {

void check_nonnegative(int value, const char* what) {
  if (value < 0) {
    throw DomainError(std::string(what) + " must be nonnegative, got " + std::to_string(value));
  }
}

class TrinomialCache {
 public:
  TrinomialRow row(int n) {
    std::lock_guard lock(mutex_);
    extend_to(n);
    return {n, rows_[static_cast<std::size_t>(n)]};
  }

  BigCount at(int n, int k) {
    std::lock_guard lock(mutex_);
    extend_to(n);
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  std::mutex mutex_;
  std::vector<std::vector<BigCount>> rows_;

  // Caller holds mutex_.
  void extend_to(int n) {
    if (rows_.empty()) rows_.push_back({BigCount(1)});
    while (rows_.size() <= static_cast<std::size_t>(n)) {
      const auto& prev = rows_.back();
      std::vector<BigCount> next(prev.size() + 2, BigCount(0));
      // next[k] = prev[k] + prev[k-1] + prev[k-2]
      for (std::size_t k = 0; k < prev.size(); ++k) {
        next[k] += prev[k];
        next[k + 1] += prev[k];
        next[k + 2] += prev[k];
      }
      rows_.push_back(std::move(next));
    }
  }
};

TrinomialCache& cache() {
  static TrinomialCache instance;
  return instance;
}

}  // namespace

TrinomialRow trinomial_row(int n) {
  check_nonnegative(n, "trinomial row");
  return cache().row(n);
}

BigCount trinomial(int n, int k) {
  check_nonnegative(n, "trinomial row");
  if (k < 0 || k > 2 * n) return 0;
  return cache().at(n, k);
}

std::vector<BigCount> motzkin_numbers(int up_to) {
  check_nonnegative(up_to, "n");
  std::vector<BigCount> m(static_cast<std::size_t>(up_to) + 1);
  m[0] = 1;
  for (std::size_t n = 0; n + 1 < m.size(); ++n) {
    BigCount next = m[n];
    for (std::size_t i = 0; i + 1 <= n; ++i) next += m[i] * m[n - 1 - i];
    m[n + 1] = next;
  }
  return m;
}

BigCount motzkin_number(int n) { return motzkin_numbers(n).back(); }

BigCount grand_count(int n) {
  check_nonnegative(n, "n");
  return trinomial(n, n);
}

BigCount level_count(int n, int k) {
  check_nonnegative(n, "n");
  check_nonnegative(k, "k");
  if (k > n) return 0;
  // [z^n] z^k M^(k+1) = [z^(n-k)] M^(k+1)
  const int rest = n - k;
  return power(motzkin_series(rest), k + 1)[rest];
}

BigCount forest_count(int n, int j) {
  if (n < 1 || j < 1) {
    throw DomainError("forest_count needs n >= 1 and j >= 1, got n=" + std::to_string(n) +
                      ", j=" + std::to_string(j));
  }
  BigCount value = trinomial(n - 1, n - j) - trinomial(n - 1, n - j - 2);
  if (value < 0) throw std::logic_error("negative forest count");
  return value;
}

BigCount super_tree_count(int nodes) {
  if (nodes < 2) {
    throw DomainError("a super-tree has at least 2 nodes, got " + std::to_string(nodes));
  }
  return grand_count(nodes - 2);
}

}  // namespace motzkin
