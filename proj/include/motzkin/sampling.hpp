#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "motzkin/bigint.hpp"
#include "motzkin/paths.hpp"
#include "motzkin/trees.hpp"

namespace motzkin {

// Seeded 64-bit generator. One owner at a time; concurrent samplers each
// need their own source.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_word() { return engine_(); }

  // Exactly uniform on [0, bound), by rejection on blocks of random bits.
  // DomainError unless bound > 0.
  BigInt uniform_below(const BigInt& bound);

 private:
  std::mt19937_64 engine_;
};

// completions(s, l): ways to finish a path with s steps left from level l.
// The Motzkin variant forbids negative levels; the Grand variant does not.
// Both require the path to end at level 0.
class SuffixCountTable {
 public:
  enum class Variant { Motzkin, Grand };

  SuffixCountTable(int length, Variant variant);

  int length() const noexcept { return length_; }
  Variant variant() const noexcept { return variant_; }
  // Zero outside the reachable range.
  const BigCount& completions(int remaining, int level) const;

 private:
  int length_;
  Variant variant_;
  int offset_;  // index of level 0 within a row
  std::vector<std::vector<BigCount>> rows_;
  BigCount zero_ = 0;
};

// Walks a SuffixCountTable, picking each step with probability proportional
// to the number of completions it leaves. Immutable after construction, so
// one sampler can serve several threads that each own a RandomSource.
class PathSampler {
 public:
  PathSampler(int length, SuffixCountTable::Variant variant);

  LatticePath sample(RandomSource& rng) const;
  const SuffixCountTable& table() const noexcept { return table_; }

 private:
  SuffixCountTable table_;
};

MotzkinPath sample_motzkin(int n, RandomSource& rng);
GrandMotzkinPath sample_grand(int n, RandomSource& rng);
// Uniform via the size-preserving bijections.
Tree012 sample_tree(int nodes, RandomSource& rng);
SuperTree sample_super_tree(int nodes, RandomSource& rng);

}  // namespace motzkin
