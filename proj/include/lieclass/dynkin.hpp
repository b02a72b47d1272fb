#pragma once

/**
 * @file dynkin.hpp
 * @brief Simple Lie types (series letter plus rank) and their validation.
 *
 * Node numbering follows Bourbaki throughout:
 *
 *   A_n  1 - 2 - ... - n
 *   B_n  1 - 2 - ... - (n-1) => n        (node n short)
 *   C_n  1 - 2 - ... - (n-1) <= n        (node n long)
 *   D_n  1 - 2 - ... - (n-2) < (n-1), n  (branch at n-2)
 *   E_n  1 - 3 - 4 - 5 - ... - n, with 2 attached to 4
 *   F_4  1 - 2 => 3 - 4                  (nodes 1,2 long)
 *   G_2  1 <= 2                          (node 1 short)
 */

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "lieclass/error.hpp"

namespace lieclass {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct DynkinType {
  Series series = Series::A;
  int rank = 1;

  auto operator<=>(const DynkinType&) const = default;

  std::string to_string() const { return std::string(1, static_cast<char>(series)) + std::to_string(rank); }
};

/// Upper bound on the rank of the classical series A-D. E, F, G are fixed.
struct Limits {
  int max_classical_rank = 12;
};

inline bool is_classical(Series s) {
  return s == Series::A || s == Series::B || s == Series::C || s == Series::D;
}

/// Throws InvalidRank when the rank violates the series bounds
/// (A>=1, B>=2, C>=2, D>=3, E in {6,7,8}, F=4, G=2) or the classical cap.
inline void validate(const DynkinType& t, const Limits& limits = {}) {
  const int n = t.rank;
  bool ok = false;
  switch (t.series) {
    case Series::A: ok = n >= 1; break;
    case Series::B: ok = n >= 2; break;
    case Series::C: ok = n >= 2; break;
    case Series::D: ok = n >= 3; break;
    case Series::E: ok = n >= 6 && n <= 8; break;
    case Series::F: ok = n == 4; break;
    case Series::G: ok = n == 2; break;
  }
  if (!ok) throw Error(errors::kInvalidRank, "rank out of bounds for " + t.to_string());
  if (is_classical(t.series) && n > limits.max_classical_rank)
    throw Error(errors::kInvalidRank,
                t.to_string() + " exceeds the classical rank cap " + std::to_string(limits.max_classical_rank));
}

/// Parses "A3", "G2", "E8". Only the syntax is checked; rank bounds are left to validate().
inline std::optional<DynkinType> parse_dynkin(std::string_view text) {
  if (text.size() < 2) return std::nullopt;
  const char c = text[0];
  if (c < 'A' || c > 'G') return std::nullopt;
  int rank = 0;
  for (char d : text.substr(1)) {
    if (d < '0' || d > '9') return std::nullopt;
    rank = rank * 10 + (d - '0');
    if (rank > 1000) return std::nullopt;
  }
  return DynkinType{static_cast<Series>(c), rank};
}

/// Accepted-but-isomorphic inputs worth flagging. B2/C2 are distinct labelings
/// and not flagged; D3 is the A3 system with a different node order.
inline std::optional<std::string> alias_warning(const DynkinType& t) {
  if (t.series == Series::D && t.rank == 3)
    return std::string("D3 is isomorphic to A3 (D3 node 1 = A3 node 2)");
  return std::nullopt;
}

}  // namespace lieclass
