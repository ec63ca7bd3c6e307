#include "motzkin/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "motzkin/bijection.hpp"
#include "motzkin/counting.hpp"
#include "motzkin/errors.hpp"
#include "motzkin/parallel.hpp"
#include "motzkin/paths.hpp"
#include "motzkin/sampling.hpp"
#include "motzkin/series.hpp"
#include "motzkin/trees.hpp"

namespace motzkin {

namespace {

// Records the first failed expectation of a check.
class Check {
 public:
  Check(std::string id, std::string name) : result_{std::move(id), std::move(name), true, {}} {}

  bool expect(bool condition, const std::string& what) {
    if (!condition && result_.passed) {
      result_.passed = false;
      result_.detail = what;
    }
    return condition;
  }

  CheckResult finish(std::string summary) {
    if (result_.passed) result_.detail = std::move(summary);
    return std::move(result_);
  }

 private:
  CheckResult result_;
};

std::string str(int v) { return std::to_string(v); }

// Every string of length n over {U, F, D}.
std::vector<std::string> all_step_strings(int n) {
  std::vector<std::string> out{""};
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> next;
    next.reserve(out.size() * 3);
    for (const auto& s : out) {
      for (char c : {'U', 'F', 'D'}) next.push_back(s + c);
    }
    out = std::move(next);
  }
  return out;
}

// Heights computed straight from the characters, independent of LatticePath.
struct RawProfile {
  int final_level = 0;
  int min_level = 0;
};

RawProfile raw_profile(const std::string& s) {
  RawProfile p;
  for (char c : s) {
    p.final_level += c == 'U' ? 1 : (c == 'D' ? -1 : 0);
    p.min_level = std::min(p.min_level, p.final_level);
  }
  return p;
}

template <typename T>
std::vector<std::string> texts(const std::vector<T>& items) {
  std::vector<std::string> out;
  out.reserve(items.size());
  for (const auto& x : items) out.push_back(x.to_string());
  return out;
}

CheckResult check_length_four(const VerifyBounds& b) {
  Check c("C1", "The 9 Motzkin paths of length 4");
  const auto paths = enumerate_motzkin(4, b.enumeration_bound);
  c.expect(paths.size() == 9, "expected 9 paths, got " + std::to_string(paths.size()));
  const auto emitted = texts(paths);
  const std::set<std::string> unique(emitted.begin(), emitted.end());
  c.expect(unique.size() == emitted.size(), "duplicate paths emitted");
  for (const auto& p : paths) {
    c.expect(p.length() == 4 && is_motzkin(p.path()), "invalid path " + p.to_string());
  }
  std::set<std::string> oracle;
  for (const auto& s : all_step_strings(4)) {
    const auto prof = raw_profile(s);
    if (prof.min_level >= 0 && prof.final_level == 0) oracle.insert(s);
  }
  c.expect(unique == oracle, "emitted set differs from the brute-force filter of 3^4 strings");
  return c.finish("9 distinct paths, set equals brute-force filter of 81 strings");
}

CheckResult check_counts_vs_enumeration(const VerifyBounds& b) {
  Check c("C2", "Counting vs. enumeration");
  for (int n = 0; n <= b.motzkin_length; ++n) {
    const auto got = enumerate_motzkin(n, b.enumeration_bound).size();
    c.expect(BigCount(got) == motzkin_number(n), "Motzkin n=" + str(n) + ": enumerated " +
                                                     std::to_string(got) + ", counted " +
                                                     motzkin_number(n).str());
  }
  for (int n = 0; n <= b.grand_length; ++n) {
    const auto got = enumerate_grand(n, b.enumeration_bound).size();
    c.expect(BigCount(got) == grand_count(n) && grand_count(n) == trinomial(n, n),
             "Grand n=" + str(n) + ": enumerated " + std::to_string(got));
  }
  return c.finish("Motzkin n<=" + str(b.motzkin_length) + ", Grand n<=" + str(b.grand_length));
}

CheckResult check_bijections(const VerifyBounds& b) {
  Check c("C3", "Bijection round-trips and surjectivity");
  for (int n = 0; n <= b.motzkin_length; ++n) {
    const auto paths = enumerate_motzkin(n, b.enumeration_bound);
    const auto bad = first_failure(std::span<const MotzkinPath>(paths), [](const MotzkinPath& p) {
      return tree_to_path(path_to_tree(p)) == p;
    });
    c.expect(bad == kNoFailure, "path->tree->path fails at " +
                                    (bad == kNoFailure ? std::string() : paths[bad].to_string()));
  }
  for (int nodes = 1; nodes <= b.tree_nodes; ++nodes) {
    const auto trees = enumerate_trees(nodes, b.enumeration_bound);
    const auto bad = first_failure(std::span<const Tree012>(trees), [](const Tree012& t) {
      return path_to_tree(tree_to_path(t)) == t;
    });
    c.expect(bad == kNoFailure,
             "tree->path->tree fails at " + (bad == kNoFailure ? std::string() : serialize(trees[bad])));
  }
  for (int n = 0; n <= b.grand_length; ++n) {
    const auto paths = enumerate_grand(n, b.enumeration_bound);
    const auto bad = first_failure(std::span<const GrandMotzkinPath>(paths),
                                   [](const GrandMotzkinPath& p) {
                                     return super_tree_to_grand(grand_to_super_tree(p)) == p;
                                   });
    c.expect(bad == kNoFailure, "grand->super->grand fails at " +
                                    (bad == kNoFailure ? std::string() : paths[bad].to_string()));
  }
  for (int nodes = 2; nodes <= b.super_nodes; ++nodes) {
    const auto trees = enumerate_super_trees(nodes, b.enumeration_bound);
    const auto bad = first_failure(std::span<const SuperTree>(trees), [](const SuperTree& t) {
      return grand_to_super_tree(super_tree_to_grand(t)) == t;
    });
    c.expect(bad == kNoFailure, "super->grand->super fails at " +
                                    (bad == kNoFailure ? std::string() : serialize(trees[bad])));
  }
  for (int n = 0; n <= b.image_length; ++n) {
    std::vector<MotzkinPath> image;
    for (const auto& t : enumerate_trees(n + 1, b.enumeration_bound)) image.push_back(tree_to_path(t));
    std::sort(image.begin(), image.end());
    c.expect(image == enumerate_motzkin(n, b.enumeration_bound),
             "tree_to_path image differs from the Motzkin set at n=" + str(n));
  }
  return c.finish("Motzkin<->tree length<=" + str(b.motzkin_length) + ", trees<=" +
                  str(b.tree_nodes) + " nodes, Grand<->super length<=" + str(b.grand_length) +
                  ", super<=" + str(b.super_nodes) + " nodes, image n<=" + str(b.image_length));
}

CheckResult check_decomposition(const VerifyBounds& b) {
  Check c("C4", "Grand decomposition law and node-count law");
  for (int n = 0; n <= b.grand_length; ++n) {
    const auto paths = enumerate_grand(n, b.enumeration_bound);
    const auto bad = first_failure(std::span<const GrandMotzkinPath>(paths), [](const GrandMotzkinPath& p) {
      const auto d = grand_decompose(p);
      const int k = -p.path().min_level();
      if (d.k != k || d.segments.size() != 2 * static_cast<std::size_t>(k) + 1) return false;
      std::size_t total = 0;
      for (const auto& s : d.segments) {
        if (!is_motzkin(s.path())) return false;
        total += s.length();
      }
      if (total + 2 * static_cast<std::size_t>(k) != p.length()) return false;
      if (grand_compose(d.k, std::span<const MotzkinPath>(d.segments)) != p) return false;
      return grand_to_super_tree(p).node_count() == p.length() + 2;
    });
    c.expect(bad == kNoFailure,
             "decomposition law fails at " + (bad == kNoFailure ? std::string() : paths[bad].to_string()));
  }
  return c.finish("all Grand paths of length<=" + str(b.grand_length));
}

CheckResult check_series_identities(const VerifyBounds& b) {
  Check c("C5", "Generating-function identities at order " + str(b.series_order));
  const int N = b.series_order;
  const IntSeries z = IntSeries::variable(N);
  const IntSeries one = IntSeries::one(N);
  const IntSeries m = motzkin_series(N);
  const IntSeries q = q_series(N);
  const IntSeries g = grand_series(N);
  const IntSeries v = subst_v(N);

  c.expect((one + z * m + z * z * m * m - m).is_zero(), "1 + zM + z^2M^2 - M != 0");
  c.expect(q == truncate(shift(m, 1), N), "Q != zM");
  c.expect((z + z * q + z * q * q - q).is_zero(), "z + zQ + zQ^2 - Q != 0");
  const IntSeries radicand({1, -2, -3}, N);
  c.expect(radicand * g * g == one, "(1 - 2z - 3z^2) G^2 != 1");
  c.expect(compose(q, v) == IntSeries::variable(N), "Q(z(v)) != v");
  c.expect(compose(g, v) * IntSeries({1, 0, -1}, N) == IntSeries({1, 1, 1}, N),
           "G(z(v)) (1 - v^2) != 1 + v + v^2");

  IntSeries sum(N);
  for (int k = 0; 2 * k <= N; ++k) sum = sum + truncate(shift(power(m, 2 * k + 1), 2 * k), N);
  c.expect(sum == g, "G != sum_k z^2k M^(2k+1)");

  for (int n = 0; n <= N; ++n) {
    c.expect(g[n] == trinomial(n, n), "[z^" + str(n) + "] G != trinomial(n, n)");
  }
  const int F = b.forest_nodes;
  const IntSeries qf = q_series(F);
  IntSeries qj = IntSeries::one(F);
  for (int j = 1; j <= F; ++j) {
    qj = qj * qf;
    for (int n = j; n <= F; ++n) {
      c.expect(qj[n] == trinomial(n - 1, n - j) - trinomial(n - 1, n - j - 2),
               "[z^" + str(n) + "] Q^" + str(j) + " disagrees with the trinomial difference");
    }
  }
  return c.finish("7 residual identities exact; [z^n]G n<=" + str(N) + "; [z^n]Q^j 1<=j<=n<=" + str(F));
}

CheckResult check_level_counts(const VerifyBounds& b) {
  Check c("C6", "Level-k counts");
  for (int n = 0; n <= b.grand_length; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto got = enumerate_ending_at(n, k, b.enumeration_bound).size();
      c.expect(BigCount(got) == level_count(n, k),
               "n=" + str(n) + " k=" + str(k) + ": enumerated " + std::to_string(got) +
                   ", [z^n] z^k M^(k+1) = " + level_count(n, k).str());
    }
  }
  c.expect(level_count(4, 2) == 9, "level_count(4, 2) != 9");
  return c.finish("0<=k<=n<=" + str(b.grand_length) + "; level_count(4,2)=9");
}

CheckResult check_sampler(std::uint64_t seed) {
  Check c("C7", "Sampler uniformity and determinism");
  constexpr int kSamples = 90000;
  constexpr long kExpected = 10000;
  constexpr long kTolerance = 600;
  const PathSampler sampler(4, SuffixCountTable::Variant::Motzkin);
  RandomSource rng(seed);
  std::map<std::string, long> freq;
  for (const auto& p : enumerate_motzkin(4)) freq[p.to_string()] = 0;
  bool valid = true;
  for (int i = 0; i < kSamples; ++i) {
    const auto p = sampler.sample(rng);
    auto it = freq.find(p.to_string());
    if (it == freq.end()) {
      valid = false;
      continue;
    }
    ++it->second;
  }
  c.expect(valid, "sampler produced a path outside the Motzkin set");
  long worst = 0;
  for (const auto& [path, count] : freq) {
    worst = std::max(worst, std::abs(count - kExpected));
    c.expect(std::abs(count - kExpected) <= kTolerance,
             path + " drawn " + std::to_string(count) + " times");
  }
  RandomSource a(seed), b(seed);
  bool same = true;
  for (int i = 0; i < 1000 && same; ++i) same = sampler.sample(a) == sampler.sample(b);
  c.expect(same, "same seed produced different samples");
  return c.finish(std::to_string(kSamples) + " samples, max deviation " + std::to_string(worst) +
                  " (tolerance " + std::to_string(kTolerance) + "); same seed reproduces");
}

CheckResult check_classify(const VerifyBounds& b) {
  Check c("P-paths", "classify agrees with the level-profile predicate");
  std::size_t total = 0;
  for (int n = 0; n <= b.grand_length; ++n) {
    const auto strings = all_step_strings(n);
    total += strings.size();
    const auto bad = first_failure(std::span<const std::string>(strings), [](const std::string& s) {
      const auto prof = raw_profile(s);
      PathClass want{PathClass::Kind::EndsAtLevel, prof.final_level};
      if (prof.final_level == 0) {
        want = prof.min_level < 0 ? PathClass{PathClass::Kind::GrandOnly, 0}
                                  : PathClass{PathClass::Kind::Motzkin, 0};
      }
      return classify(parse_path(s)) == want;
    });
    c.expect(bad == kNoFailure, "misclassified " + (bad == kNoFailure ? std::string() : strings[bad]));
  }
  return c.finish(std::to_string(total) + " strings of length<=" + str(b.grand_length));
}

CheckResult check_trees(const VerifyBounds& b) {
  Check c("P-trees", "tree text round-trip, tree counts, pre-order edge count");
  for (int nodes = 1; nodes <= 7; ++nodes) {
    for (const auto& t : enumerate_trees(nodes)) {
      const auto text = serialize(t);
      c.expect(parse_tree(text) == t && serialize(parse_tree(text)) == text, "text round-trip " + text);
      c.expect(preorder_edges(t).size() == t.edge_count(), "edge count " + text);
    }
  }
  for (int nodes = 2; nodes <= 7; ++nodes) {
    for (const auto& st : enumerate_super_trees(nodes)) {
      const auto text = serialize(st);
      c.expect(parse_super_tree(text) == st, "super-tree text round-trip " + text);
    }
  }
  const int tree_n = b.grand_length;
  for (int n = 0; n <= tree_n; ++n) {
    c.expect(BigCount(enumerate_trees(n + 1, b.enumeration_bound).size()) == motzkin_number(n),
             "|trees(" + str(n + 1) + ")| != M_" + str(n));
  }
  for (int n = 0; n <= b.image_length; ++n) {
    c.expect(BigCount(enumerate_super_trees(n + 2, b.enumeration_bound).size()) == grand_count(n),
             "|super-trees(" + str(n + 2) + ")| != grand_count(" + str(n) + ")");
  }
  return c.finish("text identity <=7 nodes; tree counts n<=" + str(tree_n) + "; super-tree counts n<=" +
                  str(b.image_length));
}

CheckResult check_step_statistics(const VerifyBounds& b) {
  Check c("P-bijection", "step statistics match edge kinds");
  for (int nodes = 1; nodes <= b.tree_nodes; ++nodes) {
    const auto trees = enumerate_trees(nodes, b.enumeration_bound);
    const auto bad = first_failure(std::span<const Tree012>(trees), [](const Tree012& t) {
      std::size_t single = 0, left = 0, right = 0;
      for (Edge e : preorder_edges(t)) {
        single += e == Edge::Single;
        left += e == Edge::Left;
        right += e == Edge::Right;
      }
      std::size_t f = 0, u = 0, d = 0;
      const auto p = tree_to_path(t);
      for (Step s : p.path().steps()) {
        f += s == Step::F;
        u += s == Step::U;
        d += s == Step::D;
      }
      return p.length() == t.edge_count() && f == single && u == left && d == right && u == d;
    });
    c.expect(bad == kNoFailure, "statistics law fails at " +
                                    (bad == kNoFailure ? std::string() : serialize(trees[bad])));
  }
  return c.finish("all trees with <=" + str(b.tree_nodes) + " nodes");
}

CheckResult check_series_algebra(const VerifyBounds& b) {
  Check c("P-series", "series arithmetic laws");
  const int N = b.series_order;
  const IntSeries m = motzkin_series(N);
  const IntSeries g = grand_series(N);
  const IntSeries v = subst_v(N);
  c.expect(m * g == g * m, "mul not commutative");
  c.expect((m * g) * v == m * (g * v), "mul not associative");
  c.expect(mul(m, g) == mul_serial(m, g), "parallel and serial products differ");
  c.expect(compose(g, IntSeries::variable(N)) == g, "compose(f, z) != f");
  c.expect(mul(IntSeries({1, 1, 1}, N), invert_unit(IntSeries({1, 1, 1}, N))) == IntSeries::one(N),
           "(1 + v + v^2) * inverse != 1");
  c.expect(power(m, 0) == IntSeries::one(N), "power(a, 0) != 1");
  return c.finish("commutativity, associativity, serial/parallel product, identity substitution, inverse");
}

CheckResult check_counting(const VerifyBounds& b) {
  Check c("P-counting", "counting identities");
  for (int n = 0; n <= b.trinomial_rows; ++n) {
    const auto row = trinomial_row(n);
    BigCount sum = 0;
    for (std::size_t k = 0; k < row.values.size(); ++k) {
      sum += row.values[k];
      c.expect(row.values[k] == row.values[row.values.size() - 1 - k],
               "trinomial row " + str(n) + " not symmetric");
    }
    c.expect(sum == boost::multiprecision::pow(BigCount(3), static_cast<unsigned>(n)),
             "trinomial row " + str(n) + " sum != 3^n");
  }
  const IntSeries m = motzkin_series(b.series_order);
  const IntSeries g = grand_series(b.series_order);
  for (int n = 0; n <= b.series_order; ++n) {
    c.expect(motzkin_number(n) == m[n], "motzkin_number(" + str(n) + ") != [z^n] M");
    c.expect(grand_count(n) == g[n], "grand_count(" + str(n) + ") != [z^n] G");
  }
  for (int n = 0; n <= b.forest_nodes; ++n) {
    for (int k = 0; k <= n; ++k) {
      c.expect(level_count(n, k) == trinomial(n, n - k) - trinomial(n, n - k - 2),
               "level_count(" + str(n) + ", " + str(k) + ") != trinomial difference");
    }
  }
  for (int n = 0; n <= b.motzkin_length; ++n) {
    BigCount odd = 0;
    for (int j = 1; j <= n + 1; j += 2) odd += forest_count(n + 1, j);
    c.expect(super_tree_count(n + 2) == grand_count(n) && odd == grand_count(n),
             "super_tree_count(" + str(n + 2) + ") mismatch");
  }
  for (int n = 1; n <= b.forest_nodes; ++n) {
    c.expect(forest_count(n, n) == 1, "forest_count(n, n) != 1");
    c.expect(forest_count(n, n + 1) == 0, "forest_count(n, n+1) != 0");
  }
  return c.finish("trinomial rows<=" + str(b.trinomial_rows) + "; series agreement n<=" +
                  str(b.series_order) + "; level/forest n<=" + str(b.forest_nodes));
}

CheckResult check_sampled_objects(std::uint64_t seed) {
  Check c("P-sampling", "sampled objects are valid");
  RandomSource rng(seed + 1);
  for (int n = 0; n <= 12; ++n) {
    for (int i = 0; i < 50; ++i) {
      c.expect(is_motzkin(sample_motzkin(n, rng).path()), "Motzkin sample invalid");
      c.expect(sample_grand(n, rng).path().final_level() == 0, "grand sample invalid");
      c.expect(sample_tree(n + 1, rng).node_count() == static_cast<std::size_t>(n + 1), "tree sample size");
      c.expect(sample_super_tree(n + 2, rng).node_count() == static_cast<std::size_t>(n + 2),
               "super-tree sample size");
    }
  }
  return c.finish("Motzkin, Grand, tree and super-tree samples up to length 12");
}

}  // namespace

VerifyBounds VerifyBounds::from_max_n(int max_n) {
  VerifyBounds b{};
  b.motzkin_length = max_n;
  b.grand_length = std::max(0, max_n - 2);
  b.tree_nodes = max_n + 1;
  b.super_nodes = std::max(2, max_n);
  b.image_length = std::max(0, max_n - 3);
  b.series_order = std::max(30, max_n);
  b.forest_nodes = std::max(20, max_n);
  b.trinomial_rows = std::max(40, max_n);
  b.enumeration_bound = std::max(kDefaultEnumerationBound, max_n + 1);
  return b;
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.max_n < kMinVerifyN || options.max_n > kMaxVerifyN) {
    throw DomainError("--max-n must lie in [" + std::to_string(kMinVerifyN) + ", " +
                      std::to_string(kMaxVerifyN) + "], got " + std::to_string(options.max_n));
  }
  VerifyReport report{VerifyBounds::from_max_n(options.max_n), {}};
  const auto& b = report.bounds;
  const std::vector<std::pair<const char*, std::function<CheckResult()>>> checks = {
      {"C1", [&] { return check_length_four(b); }},
      {"C2", [&] { return check_counts_vs_enumeration(b); }},
      {"C3", [&] { return check_bijections(b); }},
      {"C4", [&] { return check_decomposition(b); }},
      {"C5", [&] { return check_series_identities(b); }},
      {"C6", [&] { return check_level_counts(b); }},
      {"C7", [&] { return check_sampler(options.seed); }},
      {"P-paths", [&] { return check_classify(b); }},
      {"P-trees", [&] { return check_trees(b); }},
      {"P-bijection", [&] { return check_step_statistics(b); }},
      {"P-series", [&] { return check_series_algebra(b); }},
      {"P-counting", [&] { return check_counting(b); }},
      {"P-sampling", [&] { return check_sampled_objects(options.seed); }},
  };
  for (const auto& [id, run] : checks) {
    try {
      report.checks.push_back(run());
    } catch (const std::exception& e) {
      report.checks.push_back({id, "check raised an exception", false, e.what()});
    }
  }
  return report;
}

}  // namespace motzkin
