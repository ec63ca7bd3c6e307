#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "motzkin/bijection.hpp"
#include "motzkin/errors.hpp"
#include "oracles.hpp"

namespace {

using namespace motzkin;

TEST(TreeToPath, Examples) {
  EXPECT_EQ(tree_to_path(parse_tree("()")).to_string(), "");
  EXPECT_EQ(tree_to_path(parse_tree("(()())")).to_string(), "UD");
  EXPECT_EQ(tree_to_path(parse_tree("((())())")).to_string(), "UFD");
}

TEST(TreeToPath, MatchesRecursiveEncoding) {
  for (int nodes = 1; nodes <= 10; ++nodes) {
    for (const auto& ref : oracle::trees(nodes)) {
      ASSERT_EQ(tree_to_path(parse_tree(oracle::parens(ref))).to_string(), oracle::encode(ref))
          << oracle::parens(ref);
    }
  }
}

TEST(PathToTree, Examples) {
  EXPECT_EQ(serialize(path_to_tree(MotzkinPath())), "()");
  EXPECT_EQ(serialize(path_to_tree(MotzkinPath::parse("FF"))), "((()))");
  EXPECT_EQ(serialize(path_to_tree(MotzkinPath::parse("UFD"))), "((())())");
  EXPECT_THROW(path_to_tree(parse_path("DU")), DomainError);
  EXPECT_THROW(path_to_tree(parse_path("U")), DomainError);
}

TEST(PathToTree, DeepPathsDoNotRecurse) {
  const std::string deep = std::string(200000, 'U') + std::string(200000, 'D');
  const auto t = path_to_tree(MotzkinPath::parse(deep));
  EXPECT_EQ(t.node_count(), deep.size() + 1);
  EXPECT_EQ(tree_to_path(t).to_string(), deep);
  const std::string chain(300000, 'F');
  EXPECT_EQ(serialize(path_to_tree(MotzkinPath::parse(chain))).size(), 2 * (chain.size() + 1));
}

TEST(MotzkinBijection, RoundTrips) {
  for (int n = 0; n <= 12; ++n) {
    for (const auto& p : enumerate_motzkin(n)) ASSERT_EQ(tree_to_path(path_to_tree(p)), p);
  }
  for (int nodes = 1; nodes <= 13; ++nodes) {
    for (const auto& t : enumerate_trees(nodes)) ASSERT_EQ(path_to_tree(tree_to_path(t)), t);
  }
}

TEST(MotzkinBijection, ImageIsTheWholeMotzkinSet) {
  for (int n = 0; n <= 9; ++n) {
    std::vector<std::string> image;
    for (const auto& t : enumerate_trees(n + 1)) image.push_back(tree_to_path(t).to_string());
    std::sort(image.begin(), image.end(), oracle::step_less);
    EXPECT_EQ(image, oracle::filter(n, oracle::motzkin)) << n;
  }
}

TEST(MotzkinBijection, StepStatistics) {
  for (int nodes = 1; nodes <= 10; ++nodes) {
    for (const auto& t : enumerate_trees(nodes)) {
      const auto edges = preorder_edges(t);
      const auto path = tree_to_path(t).to_string();
      ASSERT_EQ(path.size(), t.node_count() - 1);
      ASSERT_EQ(std::count(path.begin(), path.end(), 'F'), std::count(edges.begin(), edges.end(), Edge::Single));
      ASSERT_EQ(std::count(path.begin(), path.end(), 'U'), std::count(edges.begin(), edges.end(), Edge::Left));
      ASSERT_EQ(std::count(path.begin(), path.end(), 'D'), std::count(edges.begin(), edges.end(), Edge::Right));
    }
  }
}

TEST(SuperTreeToGrand, Examples) {
  EXPECT_EQ(super_tree_to_grand(SuperTree({Tree012()})).to_string(), "");
  EXPECT_EQ(super_tree_to_grand(parse_super_tree("(()()())")).to_string(), "DU");
  EXPECT_EQ(super_tree_to_grand(parse_super_tree("((())()(()))")).to_string(), "FDUF");
}

TEST(GrandToSuperTree, Examples) {
  auto st = grand_to_super_tree(GrandMotzkinPath());
  EXPECT_EQ(serialize(st), "(())");
  EXPECT_EQ(st.node_count(), 2u);
  st = grand_to_super_tree(GrandMotzkinPath::parse("DU"));
  EXPECT_EQ(serialize(st), "(()()())");
  EXPECT_EQ(st.node_count(), 4u);
  st = grand_to_super_tree(GrandMotzkinPath::parse("FDUF"));
  EXPECT_EQ(serialize(st), "((())()(()))");
  EXPECT_EQ(st.node_count(), 6u);
  EXPECT_THROW(grand_to_super_tree(parse_path("DUU")), DomainError);
}

TEST(GrandBijection, RoundTripsAndSizeLaw) {
  for (int n = 0; n <= 10; ++n) {
    for (const auto& p : enumerate_grand(n)) {
      const auto st = grand_to_super_tree(p);
      ASSERT_EQ(st.node_count(), p.length() + 2);
      ASSERT_EQ(st.k(), -p.path().min_level());
      ASSERT_EQ(super_tree_to_grand(st), p);
    }
  }
  for (int nodes = 2; nodes <= 12; ++nodes) {
    for (const auto& st : enumerate_super_trees(nodes)) {
      const auto p = super_tree_to_grand(st);
      ASSERT_EQ(p.length(), st.node_count() - 2);
      ASSERT_EQ(grand_to_super_tree(p), st);
    }
  }
}

}  // namespace
