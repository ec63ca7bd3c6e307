#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace motzkin {

enum class Step : char { U = 'U', F = 'F', D = 'D' };

constexpr int displacement(Step s) noexcept {
  switch (s) {
    case Step::U: return 1;
    case Step::F: return 0;
    case Step::D: return -1;
  }
  return 0;
}

constexpr char to_char(Step s) noexcept { return static_cast<char>(s); }

// Exhaustive enumerators refuse lengths above this unless told otherwise.
inline constexpr int kDefaultEnumerationBound = 16;

// A finite sequence of U/F/D steps starting at level 0. No sign or endpoint
// constraint; see MotzkinPath and GrandMotzkinPath for those.
class LatticePath {
 public:
  LatticePath();
  explicit LatticePath(std::vector<Step> steps);

  std::span<const Step> steps() const noexcept { return steps_; }
  std::size_t length() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }
  Step operator[](std::size_t i) const noexcept { return steps_[i]; }

  // levels()[i] is the height after i steps; size is length() + 1.
  std::span<const int> levels() const noexcept { return levels_; }
  int final_level() const noexcept { return levels_.back(); }
  int min_level() const noexcept { return min_level_; }
  int max_level() const noexcept { return max_level_; }

  // Steps [begin, end) as a path of its own (levels re-based at 0).
  LatticePath subpath(std::size_t begin, std::size_t end) const;

  std::string to_string() const;

  bool operator==(const LatticePath& other) const { return steps_ == other.steps_; }
  std::strong_ordering operator<=>(const LatticePath& other) const;

 private:
  std::vector<Step> steps_;
  std::vector<int> levels_;
  int min_level_ = 0;
  int max_level_ = 0;
};

// Accepts only U, F and D; the empty string is the empty path.
// Throws ParseError naming the offending index and character.
LatticePath parse_path(std::string_view text);

bool is_motzkin(const LatticePath& path) noexcept;
bool is_grand(const LatticePath& path) noexcept;

// Nonnegative, ends at level 0.
class MotzkinPath {
 public:
  MotzkinPath() = default;
  // Throws DomainError when the invariant fails.
  explicit MotzkinPath(LatticePath path);

  static MotzkinPath parse(std::string_view text);

  const LatticePath& path() const noexcept { return path_; }
  std::size_t length() const noexcept { return path_.length(); }
  std::string to_string() const { return path_.to_string(); }

  auto operator<=>(const MotzkinPath&) const = default;
  bool operator==(const MotzkinPath&) const = default;

 private:
  LatticePath path_;
};

// Ends at level 0; may go negative.
class GrandMotzkinPath {
 public:
  GrandMotzkinPath() = default;
  explicit GrandMotzkinPath(LatticePath path);
  GrandMotzkinPath(const MotzkinPath& m) : path_(m.path()) {}  // NOLINT: every Motzkin path is grand

  static GrandMotzkinPath parse(std::string_view text);

  const LatticePath& path() const noexcept { return path_; }
  std::size_t length() const noexcept { return path_.length(); }
  std::string to_string() const { return path_.to_string(); }

  auto operator<=>(const GrandMotzkinPath&) const = default;
  bool operator==(const GrandMotzkinPath&) const = default;

 private:
  LatticePath path_;
};

struct PathClass {
  enum class Kind { Motzkin, GrandOnly, EndsAtLevel };
  Kind kind;
  int level;  // final level; nonzero only for EndsAtLevel

  bool operator==(const PathClass&) const = default;
};

PathClass classify(const LatticePath& path) noexcept;

std::vector<MotzkinPath> enumerate_motzkin(int n, int bound = kDefaultEnumerationBound);
std::vector<GrandMotzkinPath> enumerate_grand(int n, int bound = kDefaultEnumerationBound);
// Nonnegative paths of length n that end at level k.
std::vector<LatticePath> enumerate_ending_at(int n, int k, int bound = kDefaultEnumerationBound);

// A grand path with minimum level -k cut into 2k+1 Motzkin pieces:
// k pieces before the forced down-steps of the first descent, the piece
// between the first and last visit to -k, and k pieces after the forced
// up-steps of the final ascent.
struct GrandDecomposition {
  int k = 0;
  std::vector<MotzkinPath> segments;

  bool operator==(const GrandDecomposition&) const = default;
};

GrandDecomposition grand_decompose(const GrandMotzkinPath& path);
GrandDecomposition grand_decompose(const LatticePath& path);

// w_0 D w_1 D ... D w_k U w_{k+1} U ... U w_{2k}.
GrandMotzkinPath grand_compose(int k, std::span<const MotzkinPath> segments);
// Same, validating each segment; DomainError on a non-Motzkin segment.
GrandMotzkinPath grand_compose(int k, std::span<const LatticePath> segments);

}  // namespace motzkin
