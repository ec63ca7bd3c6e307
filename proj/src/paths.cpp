#include "motzkin/paths.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

#include "motzkin/errors.hpp"

namespace motzkin {

namespace {

// Enumeration and comparison order: U < F < D.
constexpr int rank(Step s) noexcept {
  switch (s) {
    case Step::U: return 0;
    case Step::F: return 1;
    case Step::D: return 2;
  }
  return 3;
}

constexpr Step kStepsInOrder[] = {Step::U, Step::F, Step::D};

void check_length(int n, int bound) {
  if (n < 0) throw DomainError("path length must be nonnegative, got " + std::to_string(n));
  if (n > bound) {
    throw ResourceError("enumeration of length " + std::to_string(n) +
                        " exceeds the bound " + std::to_string(bound));
  }
}

// Depth-first generation in U < F < D order. `admissible(level, remaining)`
// prunes prefixes that either break the shape constraint or can no longer
// reach the target.
template <typename Admissible, typename Emit>
void backtrack(int n, Admissible admissible, Emit emit) {
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(n));
  auto go = [&](auto& self, int level) -> void {
    const int remaining = n - static_cast<int>(steps.size());
    if (remaining == 0) {
      emit(LatticePath(steps));
      return;
    }
    for (Step s : kStepsInOrder) {
      const int next = level + displacement(s);
      if (!admissible(next, remaining - 1)) continue;
      steps.push_back(s);
      self(self, next);
      steps.pop_back();
    }
  };
  if (admissible(0, n)) go(go, 0);
}

}  // namespace

LatticePath::LatticePath() : levels_{0} {}

LatticePath::LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {
  levels_.reserve(steps_.size() + 1);
  levels_.push_back(0);
  int level = 0;
  for (Step s : steps_) {
    level += displacement(s);
    levels_.push_back(level);
    min_level_ = std::min(min_level_, level);
    max_level_ = std::max(max_level_, level);
  }
}

LatticePath LatticePath::subpath(std::size_t begin, std::size_t end) const {
  return LatticePath(std::vector<Step>(steps_.begin() + static_cast<std::ptrdiff_t>(begin),
                                       steps_.begin() + static_cast<std::ptrdiff_t>(end)));
}

std::string LatticePath::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(to_char(s));
  return out;
}

std::strong_ordering LatticePath::operator<=>(const LatticePath& other) const {
  return std::lexicographical_compare_three_way(
      steps_.begin(), steps_.end(), other.steps_.begin(), other.steps_.end(),
      [](Step a, Step b) { return rank(a) <=> rank(b); });
}

LatticePath parse_path(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'U': steps.push_back(Step::U); break;
      case 'F': steps.push_back(Step::F); break;
      case 'D': steps.push_back(Step::D); break;
      default:
        throw ParseError(i, "invalid step character '" + std::string(1, text[i]) +
                                "' at index " + std::to_string(i));
    }
  }
  return LatticePath(std::move(steps));
}

bool is_motzkin(const LatticePath& path) noexcept {
  return path.min_level() >= 0 && path.final_level() == 0;
}

bool is_grand(const LatticePath& path) noexcept { return path.final_level() == 0; }

MotzkinPath::MotzkinPath(LatticePath path) : path_(std::move(path)) {
  if (!is_motzkin(path_)) {
    throw DomainError("not a Motzkin path: '" + path_.to_string() + "'");
  }
}

MotzkinPath MotzkinPath::parse(std::string_view text) { return MotzkinPath(parse_path(text)); }

GrandMotzkinPath::GrandMotzkinPath(LatticePath path) : path_(std::move(path)) {
  if (!is_grand(path_)) {
    throw DomainError("not a Grand Motzkin path (ends at level " +
                      std::to_string(path_.final_level()) + "): '" + path_.to_string() + "'");
  }
}

GrandMotzkinPath GrandMotzkinPath::parse(std::string_view text) {
  return GrandMotzkinPath(parse_path(text));
}

PathClass classify(const LatticePath& path) noexcept {
  if (path.final_level() != 0) return {PathClass::Kind::EndsAtLevel, path.final_level()};
  if (path.min_level() < 0) return {PathClass::Kind::GrandOnly, 0};
  return {PathClass::Kind::Motzkin, 0};
}

std::vector<MotzkinPath> enumerate_motzkin(int n, int bound) {
  check_length(n, bound);
  std::vector<MotzkinPath> out;
  backtrack(
      n, [](int level, int remaining) { return level >= 0 && level <= remaining; },
      [&](LatticePath p) { out.emplace_back(std::move(p)); });
  return out;
}

std::vector<GrandMotzkinPath> enumerate_grand(int n, int bound) {
  check_length(n, bound);
  std::vector<GrandMotzkinPath> out;
  backtrack(
      n, [](int level, int remaining) { return std::abs(level) <= remaining; },
      [&](LatticePath p) { out.emplace_back(std::move(p)); });
  return out;
}

std::vector<LatticePath> enumerate_ending_at(int n, int k, int bound) {
  if (k < 0) throw DomainError("target level must be nonnegative, got " + std::to_string(k));
  check_length(n, bound);
  std::vector<LatticePath> out;
  backtrack(
      n, [k](int level, int remaining) { return level >= 0 && std::abs(level - k) <= remaining; },
      [&](LatticePath p) { out.push_back(std::move(p)); });
  return out;
}

GrandDecomposition grand_decompose(const LatticePath& path) {
  if (!is_grand(path)) {
    throw DomainError("cannot decompose a path ending at level " +
                      std::to_string(path.final_level()));
  }
  const int k = -path.min_level();
  GrandDecomposition out;
  out.k = k;
  if (k == 0) {
    out.segments.emplace_back(path);
    return out;
  }

  const auto levels = path.levels();
  const std::size_t n = path.length();
  // first[i] / last[i]: first and last position at level -i.
  std::vector<std::size_t> first(static_cast<std::size_t>(k) + 1, n + 1);
  std::vector<std::size_t> last(static_cast<std::size_t>(k) + 1, 0);
  for (std::size_t pos = 0; pos <= n; ++pos) {
    if (levels[pos] > 0) continue;
    const auto depth = static_cast<std::size_t>(-levels[pos]);
    if (first[depth] == n + 1) first[depth] = pos;
    last[depth] = pos;
  }

  out.segments.reserve(2 * static_cast<std::size_t>(k) + 1);
  // Descent: the step arriving at first[i] is the forced D.
  for (std::size_t i = 1; i <= static_cast<std::size_t>(k); ++i) {
    out.segments.emplace_back(path.subpath(first[i - 1], first[i] - 1));
  }
  const auto ku = static_cast<std::size_t>(k);
  out.segments.emplace_back(path.subpath(first[ku], last[ku]));
  // Ascent: the step leaving last[i] is the forced U.
  for (std::size_t i = ku; i >= 1; --i) {
    out.segments.emplace_back(path.subpath(last[i] + 1, last[i - 1]));
  }
  return out;
}

GrandDecomposition grand_decompose(const GrandMotzkinPath& path) {
  return grand_decompose(path.path());
}

GrandMotzkinPath grand_compose(int k, std::span<const MotzkinPath> segments) {
  if (k < 0) throw DomainError("k must be nonnegative, got " + std::to_string(k));
  const std::size_t expected = 2 * static_cast<std::size_t>(k) + 1;
  if (segments.size() != expected) {
    throw ArityError("grand_compose with k=" + std::to_string(k) + " needs " +
                     std::to_string(expected) + " segments, got " +
                     std::to_string(segments.size()));
  }
  std::vector<Step> steps;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (i > 0) steps.push_back(i <= static_cast<std::size_t>(k) ? Step::D : Step::U);
    const auto seg = segments[i].path().steps();
    steps.insert(steps.end(), seg.begin(), seg.end());
  }
  return GrandMotzkinPath(LatticePath(std::move(steps)));
}

GrandMotzkinPath grand_compose(int k, std::span<const LatticePath> segments) {
  std::vector<MotzkinPath> checked;
  checked.reserve(segments.size());
  for (const auto& s : segments) checked.emplace_back(s);
  return grand_compose(k, std::span<const MotzkinPath>(checked));
}

}  // namespace motzkin
