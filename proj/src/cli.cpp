#include "motzkin/cli.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "motzkin/bijection.hpp"
#include "motzkin/counting.hpp"
#include "motzkin/errors.hpp"
#include "motzkin/paths.hpp"
#include "motzkin/sampling.hpp"
#include "motzkin/trees.hpp"
#include "motzkin/verify.hpp"

namespace motzkin::cli {

namespace {

using nlohmann::json;

// Argument problems found after CLI11 has accepted the command line.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Config {
  bool json = false;
  std::optional<int> max_n;
  std::uint64_t seed = 1;
  int count = 1;
};

// Plain output writes the empty path as "-" so every line is non-empty.
std::string path_text(const std::string& s) { return s.empty() ? "-" : s; }

LatticePath read_path(const std::string& text) { return parse_path(text == "-" ? "" : text); }

int to_int(const std::string& text, const char* what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || v < INT32_MIN || v > INT32_MAX) {
    throw UsageError(std::string(what) + " must be an integer, got '" + text + "'");
  }
  return static_cast<int>(v);
}

void expect_args(const std::vector<std::string>& args, std::size_t n, const std::string& usage) {
  if (args.size() != n) throw UsageError("usage: " + usage);
}

class Runner {
 public:
  Runner(const Config& config, std::ostream& out) : config_(config), out_(out) {}

  int count(const std::string& kind, const std::vector<std::string>& args) {
    BigCount value;
    if (kind == "motzkin") {
      expect_args(args, 1, "count motzkin N");
      value = motzkin_number(non_negative(args[0], "N"));
    } else if (kind == "grand") {
      expect_args(args, 1, "count grand N");
      value = grand_count(non_negative(args[0], "N"));
    } else if (kind == "trinomial") {
      expect_args(args, 2, "count trinomial N K");
      value = trinomial(non_negative(args[0], "N"), to_int(args[1], "K"));
    } else if (kind == "level") {
      expect_args(args, 2, "count level N K");
      value = level_count(non_negative(args[0], "N"), non_negative(args[1], "K"));
    } else if (kind == "forest") {
      expect_args(args, 2, "count forest N J");
      value = forest_count(to_int(args[0], "N"), to_int(args[1], "J"));
    } else if (kind == "super-tree") {
      expect_args(args, 1, "count super-tree NODES");
      value = super_tree_count(to_int(args[0], "NODES"));
    } else {
      throw UsageError("unknown count kind '" + kind + "'");
    }
    if (config_.json) {
      out_ << json{{"value", value.str()}}.dump() << '\n';
    } else {
      out_ << value << '\n';
    }
    return kExitOk;
  }

  int enumerate(const std::string& kind, const std::string& size_text) {
    const int size = to_int(size_text, "N");
    const int bound = config_.max_n.value_or(kDefaultEnumerationBound);
    std::vector<std::string> items;
    if (kind == "motzkin") {
      for (const auto& p : enumerate_motzkin(size, bound)) items.push_back(p.to_string());
    } else if (kind == "grand") {
      for (const auto& p : enumerate_grand(size, bound)) items.push_back(p.to_string());
    } else if (kind == "trees") {
      for (const auto& t : enumerate_trees(size, bound)) items.push_back(serialize(t));
    } else if (kind == "super-trees") {
      for (const auto& t : enumerate_super_trees(size, bound)) items.push_back(serialize(t));
    } else {
      throw UsageError("unknown enumerate kind '" + kind + "'");
    }
    emit_list(items, kind == "motzkin" || kind == "grand");
    return kExitOk;
  }

  int convert(const std::string& direction, const std::string& text) {
    std::string result;
    bool is_path = false;
    if (direction == "path-to-tree") {
      result = serialize(path_to_tree(read_path(text)));
    } else if (direction == "tree-to-path") {
      result = tree_to_path(parse_tree(text)).to_string();
      is_path = true;
    } else if (direction == "grand-to-tree") {
      result = serialize(grand_to_super_tree(read_path(text)));
    } else if (direction == "tree-to-grand") {
      result = super_tree_to_grand(parse_super_tree(text)).to_string();
      is_path = true;
    } else {
      throw UsageError("unknown conversion '" + direction + "'");
    }
    if (config_.json) {
      out_ << json{{"result", result}}.dump() << '\n';
    } else {
      out_ << (is_path ? path_text(result) : result) << '\n';
    }
    return kExitOk;
  }

  int decompose(const std::string& text) {
    const auto parts = grand_decompose(read_path(text));
    std::vector<std::string> segments;
    for (const auto& s : parts.segments) segments.push_back(s.to_string());
    if (config_.json) {
      out_ << json{{"k", parts.k}, {"segments", segments}}.dump() << '\n';
    } else {
      out_ << "k=" << parts.k << '\n';
      for (const auto& s : segments) out_ << path_text(s) << '\n';
    }
    return kExitOk;
  }

  int sample(const std::string& kind, const std::string& size_text) {
    const int size = to_int(size_text, "N");
    if (config_.count < 0) throw UsageError("--count must be nonnegative");
    RandomSource rng(config_.seed);
    std::vector<std::string> items;
    items.reserve(static_cast<std::size_t>(config_.count));
    if (kind == "motzkin" || kind == "grand") {
      if (size < 0) throw DomainError("path length must be nonnegative, got " + size_text);
      const PathSampler sampler(size, kind == "motzkin" ? SuffixCountTable::Variant::Motzkin
                                                        : SuffixCountTable::Variant::Grand);
      for (int i = 0; i < config_.count; ++i) items.push_back(sampler.sample(rng).to_string());
    } else if (kind == "tree") {
      for (int i = 0; i < config_.count; ++i) items.push_back(serialize(sample_tree(size, rng)));
    } else if (kind == "super-tree") {
      for (int i = 0; i < config_.count; ++i) items.push_back(serialize(sample_super_tree(size, rng)));
    } else {
      throw UsageError("unknown sample kind '" + kind + "'");
    }
    emit_list(items, kind == "motzkin" || kind == "grand");
    return kExitOk;
  }

  int verify() {
    VerifyOptions options;
    options.max_n = config_.max_n.value_or(options.max_n);
    if (options.max_n < kMinVerifyN || options.max_n > kMaxVerifyN) {
      throw UsageError("--max-n must lie in [" + std::to_string(kMinVerifyN) + ", " +
                       std::to_string(kMaxVerifyN) + "]");
    }
    const auto report = run_verification(options);
    std::size_t passed = 0;
    for (const auto& c : report.checks) passed += c.passed;
    if (config_.json) {
      json checks = json::array();
      for (const auto& c : report.checks) {
        checks.push_back({{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      }
      out_ << json{{"max_n", options.max_n}, {"passed", report.all_passed()}, {"checks", checks}}.dump()
           << '\n';
    } else {
      out_ << "verify --max-n " << options.max_n << '\n';
      for (const auto& c : report.checks) {
        out_ << (c.passed ? "PASS " : "FAIL ") << c.id << "  " << c.name << ": " << c.detail << '\n';
      }
      out_ << passed << "/" << report.checks.size() << " checks passed\n";
    }
    return report.all_passed() ? kExitOk : kExitDomainError;
  }

 private:
  static int non_negative(const std::string& text, const char* what) {
    const int v = to_int(text, what);
    if (v < 0) throw DomainError(std::string(what) + " must be nonnegative, got " + text);
    return v;
  }

  void emit_list(const std::vector<std::string>& items, bool paths) {
    if (config_.json) {
      out_ << json(items).dump() << '\n';
      return;
    }
    for (const auto& s : items) out_ << (paths ? path_text(s) : s) << '\n';
  }

  const Config& config_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Motzkin paths, {0,1,2}-trees and their bijections", "motzkin"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Config config;
  app.add_flag("--json", config.json, "Structured JSON output");
  app.add_option("--max-n", config.max_n, "Enumeration bound, or verification size for `verify`");
  app.add_option("--seed", config.seed, "Sampling seed (64-bit unsigned)");
  app.add_option("--count", config.count, "Number of samples")->check(CLI::NonNegativeNumber);

  std::string kind;
  std::string text;
  std::vector<std::string> numbers;

  auto* count = app.add_subcommand("count", "Exact counts: motzkin N | grand N | trinomial N K | level N K | forest N J | super-tree NODES");
  count->add_option("kind", kind)->required();
  count->add_option("args", numbers)->required();

  auto* enumerate = app.add_subcommand("enumerate", "List all objects: motzkin N | grand N | trees NODES | super-trees NODES");
  enumerate->add_option("kind", kind)->required();
  enumerate->add_option("n", text)->required();

  auto* convert = app.add_subcommand("convert", "path-to-tree | tree-to-path | grand-to-tree | tree-to-grand");
  convert->add_option("direction", kind)->required();
  convert->add_option("object", text)->required();

  auto* decompose = app.add_subcommand("decompose", "Split a Grand Motzkin path into 2k+1 Motzkin segments");
  decompose->add_option("path", text)->required();

  auto* sample = app.add_subcommand("sample", "Uniform samples: motzkin N | grand N | tree NODES | super-tree NODES");
  sample->add_option("kind", kind)->required();
  sample->add_option("n", text)->required();

  app.add_subcommand("verify", "Run the full identity and bijection suite");

  // CLI11 reads argv back to front from a reversed vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Runner runner(config, out);
  try {
    if (count->parsed()) return runner.count(kind, numbers);
    if (enumerate->parsed()) return runner.enumerate(kind, text);
    if (convert->parsed()) return runner.convert(kind, text);
    if (decompose->parsed()) return runner.decompose(text);
    if (sample->parsed()) return runner.sample(kind, text);
    return runner.verify();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const motzkin::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
}

}  // namespace motzkin::cli
