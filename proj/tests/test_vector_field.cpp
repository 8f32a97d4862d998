#include <gtest/gtest.h>

#include <set>

#include "qubitinv/vector_field.hpp"
#include "support.hpp"

using namespace qubitinv;

TEST(VectorField, CountMatchesBruteForce) {
  for (int n = 2; n <= 6; ++n)
    EXPECT_EQ(static_cast<long long>(enumerate(n).size()), oracle::count_loopless_maps(n)) << n;
}

TEST(VectorField, CountMatchesClosedForm) {
  // (n − 1)^n
  EXPECT_EQ(enumerate(2).size(), 1u);
  EXPECT_EQ(enumerate(3).size(), 8u);
  EXPECT_EQ(enumerate(4).size(), 81u);
  EXPECT_EQ(enumerate(5).size(), 1024u);
}

TEST(VectorField, EnumerationIsDistinctLooplessAndSorted) {
  const auto fields = enumerate(4);
  std::set<std::vector<int>> seen;
  for (const auto& f : fields) {
    for (int j = 1; j <= 4; ++j) EXPECT_NE(f.out(j), j);
    EXPECT_TRUE(seen.insert(f.targets()).second);
  }
  EXPECT_TRUE(std::is_sorted(fields.begin(), fields.end()));
  EXPECT_TRUE(enumerate(1).empty());
  EXPECT_ERROR_CODE(enumerate(9), ErrorCode::TooLarge);
}

TEST(VectorField, CycleAndParsing) {
  const VectorField c = cycle(3);
  EXPECT_EQ(c.describe(), "1>2,2>3,3>1");
  EXPECT_TRUE(is_permutation(c));
  EXPECT_EQ(c.incoming(1), 3);
  EXPECT_EQ(parse_gamma("cycle", 3), c);
  EXPECT_EQ(parse_gamma("3>1,1>2,2>3", 3), c);
  EXPECT_EQ(parse_gamma(c.describe(), 3), c);
  EXPECT_ERROR_CODE(cycle(1), ErrorCode::TooSmall);
}

TEST(VectorField, Validation) {
  EXPECT_ERROR_CODE(validate(3, {{1, 1}, {2, 3}, {3, 1}}), ErrorCode::NotAVectorField);
  EXPECT_ERROR_CODE(validate(3, {{1, 2}, {1, 3}, {3, 1}}), ErrorCode::NotAVectorField);
  EXPECT_ERROR_CODE(validate(3, {{1, 2}, {2, 3}}), ErrorCode::NotAVectorField);
  EXPECT_ERROR_CODE(validate(3, {{1, 4}, {2, 3}, {3, 1}}), ErrorCode::NotAVectorField);
  EXPECT_ERROR_CODE(parse_gamma("1-2", 2), ErrorCode::Parse);

  const VectorField star = validate(3, {{1, 2}, {2, 1}, {3, 1}});
  EXPECT_FALSE(is_permutation(star));
  EXPECT_EQ(star.in_degree(1), 2);
  EXPECT_EQ(star.in_degree(3), 0);
  EXPECT_ERROR_CODE(star.incoming(3), ErrorCode::NotPermutation);
}
