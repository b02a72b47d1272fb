#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "test_support.hpp"

namespace lieclass {
namespace {

using testing::all_types;
using testing::type_of;

std::set<std::vector<int>> as_set(const std::vector<Root>& roots) {
  std::set<std::vector<int>> s;
  for (const auto& r : roots) s.insert(r.coeffs);
  return s;
}

TEST(CartanMatrix, MatchesEuclideanSimpleRoots) {
  // Bourbaki realizations; F4 is scaled by 2 to stay integral.
  const std::vector<std::pair<std::string, std::vector<std::vector<int>>>> cases = {
      {"A2", {{1, -1, 0}, {0, 1, -1}}},
      {"B2", {{1, -1}, {0, 1}}},
      {"C2", {{1, -1}, {0, 2}}},
      {"B3", {{1, -1, 0}, {0, 1, -1}, {0, 0, 1}}},
      {"C3", {{1, -1, 0}, {0, 1, -1}, {0, 0, 2}}},
      {"D4", {{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}}},
      {"G2", {{1, -1, 0}, {-2, 1, 1}}},
      {"F4", {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}}},
  };
  for (const auto& [name, vectors] : cases)
    EXPECT_EQ(cartan_matrix(type_of(name)), oracle::cartan_from_vectors(vectors)) << name;
}

TEST(CartanMatrix, G2Explicit) {
  EXPECT_EQ(cartan_matrix(type_of("G2")), (IntMatrix{{2, -1}, {-3, 2}}));
}

TEST(CartanMatrix, DeterminantMatchesCenterOrder) {
  for (const auto& t : all_types(8)) {
    long long expected = 0;
    switch (t.series) {
      case Series::A: expected = t.rank + 1; break;
      case Series::B:
      case Series::C: expected = 2; break;
      case Series::D: expected = 4; break;
      case Series::E: expected = 9 - t.rank; break;
      case Series::F:
      case Series::G: expected = 1; break;
    }
    EXPECT_EQ(oracle::det(cartan_matrix(t)), expected) << t.to_string();
  }
}

TEST(CartanMatrix, DiagonalTwoAndSymmetricSparsity) {
  for (const auto& t : all_types(10)) {
    const auto a = cartan_matrix(t);
    for (int i = 0; i < t.rank; ++i) {
      EXPECT_EQ(a[i][i], 2);
      for (int j = 0; j < t.rank; ++j) {
        if (i == j) continue;
        EXPECT_LE(a[i][j], 0);
        EXPECT_EQ(a[i][j] == 0, a[j][i] == 0) << t.to_string();
      }
    }
  }
}

TEST(PositiveRoots, CountMatchesClosedFormUpToRankTwelve) {
  for (const auto& t : all_types(12))
    EXPECT_EQ(static_cast<std::int64_t>(positive_roots(t).size()), expected_positive_root_count(t)) << t.to_string();
}

TEST(PositiveRoots, AgreeWithReflectionClosure) {
  for (const auto& t : all_types(8))
    EXPECT_EQ(as_set(positive_roots(t)), oracle::positive_roots_by_reflection(cartan_matrix(t))) << t.to_string();
}

TEST(PositiveRoots, EnumerationOrderDoesNotMatter) {
  for (const auto& t : all_types(8))
    EXPECT_EQ(positive_roots(t, {}, EnumerationOrder::Forward), positive_roots(t, {}, EnumerationOrder::Reverse))
        << t.to_string();
}

TEST(PositiveRoots, SortedByHeightWithUniqueHighestRoot) {
  for (const auto& t : all_types(8)) {
    const auto roots = positive_roots(t);
    for (std::size_t i = 1; i < roots.size(); ++i) EXPECT_LE(roots[i - 1].height(), roots[i].height());
    ASSERT_GE(roots.size(), 1u);
    if (roots.size() > 1) {
      EXPECT_LT(roots[roots.size() - 2].height(), roots.back().height()) << t.to_string();
    }
  }
}

TEST(PositiveRoots, HighestRootHeightIsCoxeterMinusOne) {
  const std::vector<std::pair<std::string, int>> cases = {{"A5", 5}, {"B4", 7},  {"C4", 7},  {"D5", 7},
                                                          {"G2", 5}, {"F4", 11}, {"E6", 11}, {"E7", 17},
                                                          {"E8", 29}};
  for (const auto& [name, h] : cases) EXPECT_EQ(positive_roots(type_of(name)).back().height(), h) << name;
}

TEST(PositiveRoots, SupportIsConnected) {
  for (const auto& t : all_types(8)) {
    const auto a = cartan_matrix(t);
    for (const auto& r : positive_roots(t)) EXPECT_TRUE(support_is_connected(a, r)) << t.to_string();
  }
}

TEST(PositiveRoots, C2ListExplicit) {
  const auto roots = positive_roots(type_of("C2"));
  const std::vector<std::vector<int>> expected{{1, 0}, {0, 1}, {1, 1}, {2, 1}};
  ASSERT_EQ(roots.size(), expected.size());
  EXPECT_EQ(as_set(roots), (std::set<std::vector<int>>(expected.begin(), expected.end())));
}

TEST(RootSystem, NormsTakeAtMostTwoValuesWithCorrectRatio) {
  for (const auto& t : all_types(8)) {
    const RootSystem rs(t);
    std::set<int> norms;
    for (const auto& r : rs.positive_roots()) norms.insert(rs.norm(r));
    EXPECT_EQ(*norms.begin(), 1) << t.to_string();
    const bool laced = t.series == Series::A || t.series == Series::D || t.series == Series::E;
    if (laced || t.to_string() == "A1") {
      EXPECT_EQ(norms.size(), 1u) << t.to_string();
    } else {
      ASSERT_EQ(norms.size(), 2u) << t.to_string();
      EXPECT_EQ(*norms.rbegin(), t.series == Series::G ? 3 : 2) << t.to_string();
    }
  }
}

TEST(RootSystem, LongAndShortRootCounts) {
  // (long, short) positive root counts.
  const std::vector<std::tuple<std::string, int, int>> cases = {
      {"B3", 6, 3}, {"C3", 3, 6}, {"B4", 12, 4}, {"C4", 4, 12}, {"G2", 3, 3}, {"F4", 12, 12}};
  for (const auto& [name, nl, ns] : cases) {
    const RootSystem rs(type_of(name));
    int longs = 0, shorts = 0;
    for (const auto& r : rs.positive_roots()) (rs.norm(r) == 1 ? shorts : longs) += 1;
    EXPECT_EQ(longs, nl) << name;
    EXPECT_EQ(shorts, ns) << name;
  }
}

TEST(RootSystem, CorootsAreIntegralAndPairToTwo) {
  for (const auto& t : all_types(7)) {
    const RootSystem rs(t);
    for (const auto& r : rs.positive_roots()) {
      const auto cv = rs.coroot(r);
      int exact_check = 0;
      for (int i = 0; i < t.rank; ++i) exact_check += r.coeffs[i] * rs.simple_norm(i) - cv[i] * rs.norm(r);
      EXPECT_EQ(exact_check, 0) << t.to_string();
      // <beta, beta^vee> = sum_i c_i^vee <beta, alpha_i^vee> = 2
      int pairing = 0;
      for (int i = 0; i < t.rank; ++i) pairing += cv[i] * rs.pair_simple(r, i);
      EXPECT_EQ(pairing, 2) << t.to_string();
    }
  }
}

TEST(RootSystem, GroupDimensions) {
  const std::vector<std::pair<std::string, std::int64_t>> cases = {
      {"A1", 3},  {"A3", 15}, {"A8", 80}, {"B2", 10}, {"C2", 10},  {"B4", 36},  {"C5", 55},
      {"D4", 28}, {"D6", 66}, {"G2", 14}, {"F4", 52}, {"E6", 78}, {"E7", 133}, {"E8", 248}};
  for (const auto& [name, d] : cases) EXPECT_EQ(group_dimension(type_of(name)), d) << name;
}

TEST(DynkinType, ParseSyntaxOnly) {
  EXPECT_EQ(parse_dynkin("A3"), (DynkinType{Series::A, 3}));
  EXPECT_EQ(parse_dynkin("E8"), (DynkinType{Series::E, 8}));
  EXPECT_EQ(parse_dynkin("A0"), (DynkinType{Series::A, 0}));
  EXPECT_FALSE(parse_dynkin("H3"));
  EXPECT_FALSE(parse_dynkin("a3"));
  EXPECT_FALSE(parse_dynkin("A"));
  EXPECT_FALSE(parse_dynkin("A3x"));
  EXPECT_FALSE(parse_dynkin(""));
}

TEST(DynkinType, ValidateRejectsBadRanks) {
  for (const char* bad : {"A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "A13", "D13"})
    EXPECT_LIECLASS_ERROR(validate(type_of(bad)), errors::kInvalidRank);
  EXPECT_NO_THROW(validate(type_of("A12")));
  EXPECT_NO_THROW(validate(type_of("A20"), Limits{20}));
  EXPECT_LIECLASS_ERROR(cartan_matrix(type_of("A5"), Limits{4}), errors::kInvalidRank);
}

TEST(DynkinType, D3IsFlaggedAsAlias) {
  EXPECT_TRUE(alias_warning(type_of("D3")));
  EXPECT_FALSE(alias_warning(type_of("D4")));
  EXPECT_FALSE(alias_warning(type_of("B2")));
  EXPECT_EQ(positive_roots(type_of("D3")).size(), positive_roots(type_of("A3")).size());
}

}  // namespace
}  // namespace lieclass
