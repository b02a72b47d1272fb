#pragma once

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "lieclass/lieclass.hpp"

namespace lieclass::testing {

/// Every valid simple type up to the given classical rank, plus the exceptional ones
/// when their rank fits.
inline std::vector<DynkinType> all_types(int max_rank) {
  std::vector<DynkinType> out;
  for (int n = 1; n <= max_rank; ++n) {
    out.push_back({Series::A, n});
    if (n >= 2) out.push_back({Series::B, n});
    if (n >= 2) out.push_back({Series::C, n});
    if (n >= 3) out.push_back({Series::D, n});
  }
  if (max_rank >= 2) out.push_back({Series::G, 2});
  if (max_rank >= 4) out.push_back({Series::F, 4});
  for (int n = 6; n <= 8 && n <= max_rank; ++n) out.push_back({Series::E, n});
  return out;
}

inline DynkinType type_of(const std::string& s) { return *parse_dynkin(s); }

/// Random nonempty node subset of {1..rank}.
inline std::vector<int> random_nodes(std::mt19937& rng, int rank) {
  std::vector<int> nodes;
  while (nodes.empty()) {
    for (int i = 1; i <= rank; ++i)
      if (std::uniform_int_distribution<int>(0, 1)(rng)) nodes.push_back(i);
  }
  return nodes;
}

inline DominantWeight random_weight(std::mt19937& rng, const DynkinType& t, int max_coord) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(t.rank));
  for (auto& x : c) x = std::uniform_int_distribution<int>(0, max_coord)(rng);
  return DominantWeight::make(t, c);
}

}  // namespace lieclass::testing

/// Expects `stmt` to throw lieclass::Error with the given name.
#define EXPECT_LIECLASS_ERROR(stmt, expected_name)                                      \
  do {                                                                                  \
    try {                                                                               \
      (void)(stmt);                                                                     \
      ADD_FAILURE() << "expected " << (expected_name) << " from " #stmt;                \
    } catch (const ::lieclass::Error& e) {                                              \
      EXPECT_EQ(std::string(e.name()), std::string(expected_name)) << e.what();         \
    }                                                                                   \
  } while (0)
