#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "motzkin/counting.hpp"
#include "motzkin/errors.hpp"
#include "motzkin/paths.hpp"
#include "oracles.hpp"

namespace {

using namespace motzkin;

template <typename T>
std::vector<std::string> texts(const std::vector<T>& items) {
  std::vector<std::string> out;
  for (const auto& x : items) out.push_back(x.to_string());
  return out;
}

TEST(ParsePath, EmptyAndLevels) {
  const auto empty = parse_path("");
  EXPECT_EQ(empty.length(), 0u);
  EXPECT_EQ(empty.levels().size(), 1u);
  EXPECT_EQ(empty.final_level(), 0);

  const auto p = parse_path("UFD");
  EXPECT_EQ(std::vector<int>(p.levels().begin(), p.levels().end()), (std::vector<int>{0, 1, 1, 0}));
  EXPECT_EQ(p.to_string(), "UFD");
}

TEST(ParsePath, RejectsForeignCharacterWithPosition) {
  try {
    parse_path("UX");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 1u);
    EXPECT_NE(std::string(e.what()).find('X'), std::string::npos);
  }
  EXPECT_THROW(parse_path("u"), ParseError);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(parse_path("UFD")), (PathClass{PathClass::Kind::Motzkin, 0}));
  EXPECT_EQ(classify(parse_path("DU")), (PathClass{PathClass::Kind::GrandOnly, 0}));
  EXPECT_EQ(classify(parse_path("U")), (PathClass{PathClass::Kind::EndsAtLevel, 1}));
  EXPECT_EQ(classify(parse_path("DDF")), (PathClass{PathClass::Kind::EndsAtLevel, -2}));
  EXPECT_EQ(classify(parse_path("")), (PathClass{PathClass::Kind::Motzkin, 0}));
}

TEST(Classify, AgreesWithBruteForceUpToTen) {
  for (int n = 0; n <= 10; ++n) {
    for (const auto& s : oracle::all_strings(n)) {
      const auto prof = oracle::profile(s);
      const auto got = classify(parse_path(s));
      if (prof.final_level != 0) {
        ASSERT_EQ(got, (PathClass{PathClass::Kind::EndsAtLevel, prof.final_level})) << s;
      } else if (prof.min_level < 0) {
        ASSERT_EQ(got.kind, PathClass::Kind::GrandOnly) << s;
      } else {
        ASSERT_EQ(got.kind, PathClass::Kind::Motzkin) << s;
      }
    }
  }
}

TEST(PathTypes, Invariants) {
  EXPECT_NO_THROW(MotzkinPath::parse("UUDD"));
  EXPECT_THROW(MotzkinPath::parse("DU"), DomainError);
  EXPECT_THROW(MotzkinPath::parse("U"), DomainError);
  EXPECT_NO_THROW(GrandMotzkinPath::parse("DU"));
  EXPECT_THROW(GrandMotzkinPath::parse("UF"), DomainError);
  const GrandMotzkinPath widened = MotzkinPath::parse("UD");
  EXPECT_EQ(widened.to_string(), "UD");
}

TEST(PathOrder, UBeforeFBeforeD) {
  EXPECT_LT(parse_path("U"), parse_path("F"));
  EXPECT_LT(parse_path("F"), parse_path("D"));
  EXPECT_LT(parse_path("UD"), parse_path("FF"));
  EXPECT_LT(parse_path(""), parse_path("U"));
}

TEST(EnumerateMotzkin, SmallCases) {
  EXPECT_EQ(texts(enumerate_motzkin(0)), std::vector<std::string>{""});
  EXPECT_EQ(enumerate_motzkin(4).size(), 9u);
  EXPECT_EQ(enumerate_motzkin(5).size(), 21u);
}

TEST(EnumerateMotzkin, MatchesFilteredStringsInOrder) {
  for (int n = 0; n <= 9; ++n) {
    EXPECT_EQ(texts(enumerate_motzkin(n)), oracle::filter(n, oracle::motzkin)) << "n=" << n;
  }
}

TEST(EnumerateMotzkin, CountsMatchMotzkinNumbers) {
  for (int n = 0; n <= 12; ++n) {
    EXPECT_EQ(BigCount(enumerate_motzkin(n).size()), motzkin_number(n)) << "n=" << n;
  }
}

TEST(EnumerateGrand, SmallCases) {
  EXPECT_EQ(texts(enumerate_grand(2)), (std::vector<std::string>{"UD", "FF", "DU"}));
  EXPECT_EQ(texts(enumerate_grand(0)), std::vector<std::string>{""});
  EXPECT_EQ(enumerate_grand(4).size(), 19u);
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(texts(enumerate_grand(n)), oracle::filter(n, oracle::grand)) << "n=" << n;
  }
  for (int n = 0; n <= 10; ++n) {
    EXPECT_EQ(BigCount(enumerate_grand(n).size()), grand_count(n)) << "n=" << n;
  }
}

TEST(EnumerateEndingAt, Examples) {
  EXPECT_EQ(texts(enumerate_ending_at(1, 1)), std::vector<std::string>{"U"});
  EXPECT_EQ(enumerate_ending_at(4, 2).size(), 9u);
  EXPECT_TRUE(enumerate_ending_at(2, 3).empty());
  EXPECT_THROW(enumerate_ending_at(3, -1), DomainError);
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto want = oracle::filter(n, [k](const std::string& s) { return oracle::ends_at(s, k); });
      ASSERT_EQ(texts(enumerate_ending_at(n, k)), want) << n << "," << k;
    }
  }
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      ASSERT_EQ(BigCount(enumerate_ending_at(n, k).size()), level_count(n, k)) << n << "," << k;
    }
  }
}

TEST(Enumerate, BoundIsEnforced) {
  EXPECT_THROW(enumerate_motzkin(17), ResourceError);
  EXPECT_THROW(enumerate_grand(17), ResourceError);
  EXPECT_THROW(enumerate_ending_at(17, 0), ResourceError);
  EXPECT_THROW(enumerate_motzkin(5, 4), ResourceError);
  EXPECT_NO_THROW(enumerate_motzkin(5, 5));
  EXPECT_THROW(enumerate_motzkin(-1), DomainError);
}

std::vector<std::string> segment_texts(const GrandDecomposition& d) {
  std::vector<std::string> out;
  for (const auto& s : d.segments) out.push_back(s.to_string());
  return out;
}

TEST(GrandDecompose, Examples) {
  auto d = grand_decompose(GrandMotzkinPath::parse("DU"));
  EXPECT_EQ(d.k, 1);
  EXPECT_EQ(segment_texts(d), (std::vector<std::string>{"", "", ""}));

  d = grand_decompose(GrandMotzkinPath::parse("FDUF"));
  EXPECT_EQ(d.k, 1);
  EXPECT_EQ(segment_texts(d), (std::vector<std::string>{"F", "", "F"}));

  d = grand_decompose(GrandMotzkinPath::parse("UFD"));
  EXPECT_EQ(d.k, 0);
  EXPECT_EQ(segment_texts(d), std::vector<std::string>{"UFD"});

  // Two dips to the minimum: the middle piece spans from the first to the
  // last visit of -1.
  d = grand_decompose(GrandMotzkinPath::parse("UDDUFDUUDDU"));
  EXPECT_EQ(d.k, 1);
  EXPECT_EQ(segment_texts(d), (std::vector<std::string>{"UD", "UFDUUDD", ""}));
}

TEST(GrandDecompose, RejectsNonGrand) {
  EXPECT_THROW(grand_decompose(parse_path("DUU")), DomainError);
}

TEST(GrandCompose, Examples) {
  const std::vector<MotzkinPath> one{MotzkinPath::parse("UFD")};
  EXPECT_EQ(grand_compose(0, std::span<const MotzkinPath>(one)).to_string(), "UFD");
  const std::vector<MotzkinPath> three{MotzkinPath::parse("F"), MotzkinPath(), MotzkinPath::parse("F")};
  EXPECT_EQ(grand_compose(1, std::span<const MotzkinPath>(three)).to_string(), "FDUF");
  const std::vector<MotzkinPath> five(5);
  EXPECT_EQ(grand_compose(2, std::span<const MotzkinPath>(five)).to_string(), "DDUU");
}

TEST(GrandCompose, Errors) {
  const std::vector<MotzkinPath> two(2);
  EXPECT_THROW(grand_compose(1, std::span<const MotzkinPath>(two)), ArityError);
  EXPECT_THROW(grand_compose(0, std::span<const MotzkinPath>(two)), ArityError);
  const std::vector<LatticePath> bad{parse_path("D"), parse_path(""), parse_path("")};
  EXPECT_THROW(grand_compose(1, std::span<const LatticePath>(bad)), DomainError);
}

TEST(GrandDecompose, RoundTripAndStructureUpToTen) {
  for (int n = 0; n <= 10; ++n) {
    for (const auto& p : enumerate_grand(n)) {
      const auto d = grand_decompose(p);
      ASSERT_EQ(d.k, -p.path().min_level());
      ASSERT_EQ(d.segments.size(), 2 * static_cast<std::size_t>(d.k) + 1);
      std::size_t total = 0;
      for (const auto& s : d.segments) {
        ASSERT_TRUE(oracle::motzkin(s.to_string()));
        total += s.length();
      }
      ASSERT_EQ(total + 2 * static_cast<std::size_t>(d.k), p.length());
      ASSERT_EQ(grand_compose(d.k, std::span<const MotzkinPath>(d.segments)), p) << p.to_string();
    }
  }
}

}  // namespace
