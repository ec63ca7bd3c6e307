#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace motzkin {

struct CheckResult {
  std::string id;    // "C1".."C7" for the acceptance criteria, "P-..." for module properties
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  // Largest path length swept exhaustively; the other sweeps derive from it.
  int max_n = 12;
  std::uint64_t seed = 20240601;
};

// Sweep sizes derived from max_n. At max_n = 12 these are the sizes the
// acceptance criteria name.
struct VerifyBounds {
  int motzkin_length;   // max_n
  int grand_length;     // max_n - 2
  int tree_nodes;       // max_n + 1
  int super_nodes;      // max_n
  int image_length;     // max_n - 3
  int series_order;     // max(30, max_n)
  int forest_nodes;     // max(20, max_n)
  int trinomial_rows;   // max(40, max_n)
  int enumeration_bound;

  static VerifyBounds from_max_n(int max_n);
};

struct VerifyReport {
  VerifyBounds bounds;
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

inline constexpr int kMinVerifyN = 4;
inline constexpr int kMaxVerifyN = 16;

// Runs every acceptance criterion and module property. DomainError when
// max_n is outside [kMinVerifyN, kMaxVerifyN].
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace motzkin
