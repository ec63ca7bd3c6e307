#include "motzkin/sampling.hpp"

#include <string>
#include <utility>

#include "motzkin/bijection.hpp"
#include "motzkin/errors.hpp"

namespace motzkin {

BigInt RandomSource::uniform_below(const BigInt& bound) {
  if (bound <= 0) throw DomainError("uniform_below needs a positive bound, got " + bound.str());
  if (bound == 1) return 0;
  const BigInt top = bound - 1;
  const std::size_t bits = boost::multiprecision::msb(top) + 1;
  const std::size_t words = (bits + 63) / 64;
  const std::size_t spare = words * 64 - bits;
  for (;;) {
    BigInt candidate = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t word = next_word();
      if (w == 0 && spare > 0) word >>= spare;
      candidate = (candidate << 64) | word;
    }
    if (candidate < bound) return candidate;
  }
}

SuffixCountTable::SuffixCountTable(int length, Variant variant)
    : length_(length), variant_(variant), offset_(variant == Variant::Grand ? length + 1 : 1) {
  if (length < 0) throw DomainError("path length must be nonnegative, got " + std::to_string(length));
  // Levels -1 and length+1 are padding so the recurrence never goes out of range.
  const auto width = static_cast<std::size_t>(offset_ + length + 2);
  const int lowest = variant == Variant::Grand ? -length : 0;
  rows_.assign(static_cast<std::size_t>(length) + 1, std::vector<BigCount>(width, BigCount(0)));
  rows_[0][static_cast<std::size_t>(offset_)] = 1;
  for (std::size_t s = 1; s < rows_.size(); ++s) {
    const auto& prev = rows_[s - 1];
    auto& row = rows_[s];
    for (int level = lowest; level <= length; ++level) {
      const auto i = static_cast<std::size_t>(level + offset_);
      // prev at index i-1 is level-1; in the Motzkin variant that is the
      // padding cell below zero and stays 0.
      row[i] = prev[i + 1] + prev[i] + prev[i - 1];
    }
  }
}

const BigCount& SuffixCountTable::completions(int remaining, int level) const {
  if (remaining < 0 || remaining > length_) return zero_;
  const int lowest = variant_ == Variant::Grand ? -length_ : 0;
  if (level < lowest || level > length_) return zero_;
  return rows_[static_cast<std::size_t>(remaining)][static_cast<std::size_t>(level + offset_)];
}

PathSampler::PathSampler(int length, SuffixCountTable::Variant variant) : table_(length, variant) {}

LatticePath PathSampler::sample(RandomSource& rng) const {
  const int n = table_.length();
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(n));
  int level = 0;
  for (int remaining = n; remaining > 0; --remaining) {
    BigInt r = rng.uniform_below(table_.completions(remaining, level));
    for (Step s : {Step::U, Step::F, Step::D}) {
      const BigCount& weight = table_.completions(remaining - 1, level + displacement(s));
      if (r < weight) {
        steps.push_back(s);
        level += displacement(s);
        break;
      }
      r -= weight;
    }
  }
  return LatticePath(std::move(steps));
}

MotzkinPath sample_motzkin(int n, RandomSource& rng) {
  return MotzkinPath(PathSampler(n, SuffixCountTable::Variant::Motzkin).sample(rng));
}

GrandMotzkinPath sample_grand(int n, RandomSource& rng) {
  return GrandMotzkinPath(PathSampler(n, SuffixCountTable::Variant::Grand).sample(rng));
}

Tree012 sample_tree(int nodes, RandomSource& rng) {
  if (nodes < 1) throw DomainError("a tree has at least 1 node, got " + std::to_string(nodes));
  return path_to_tree(sample_motzkin(nodes - 1, rng));
}

SuperTree sample_super_tree(int nodes, RandomSource& rng) {
  if (nodes < 2) throw DomainError("a super-tree has at least 2 nodes, got " + std::to_string(nodes));
  return grand_to_super_tree(sample_grand(nodes - 2, rng));
}

}  // namespace motzkin
