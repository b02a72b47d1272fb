#pragma once

/**
 * @file representations.hpp
 * @brief Dimensions of irreducible representations and of H^0(G/P, L).
 *
 * dim V_lambda = prod_{alpha > 0} <lambda + rho, alpha^vee> / <rho, alpha^vee>.
 * Pairings with coroots are integers, so numerator and denominator are exact
 * big integers and the quotient is checked to have no remainder.
 */

#include <optional>
#include <vector>

#include "lieclass/numeric.hpp"
#include "lieclass/parabolic.hpp"
#include "lieclass/weight.hpp"

namespace lieclass {

inline BigInt weyl_dim(const RootSystem& rs, const DominantWeight& w) {
  if (w.type() != rs.type())
    throw Error(errors::kArityMismatch, "weight of " + w.type().to_string() + " used with " + rs.type().to_string());
  BigInt num = 1, den = 1;
  for (const auto& root : rs.positive_roots()) {
    const auto cv = rs.coroot(root);
    BigInt shifted = 0;
    std::int64_t base = 0;
    for (int i = 0; i < rs.rank(); ++i) {
      shifted += BigInt(w.coords()[i] + 1) * cv[i];
      base += cv[i];
    }
    num *= shifted;
    den *= base;
  }
  BigInt quotient, remainder;
  boost::multiprecision::divide_qr(num, den, quotient, remainder);
  if (remainder != 0) throw std::logic_error("Weyl dimension product is not integral for " + w.to_string());
  return quotient;
}

inline BigInt weyl_dim(const DominantWeight& w, const Limits& limits = {}) {
  return weyl_dim(RootSystem(w.type(), limits), w);
}

struct MinIrrep {
  DominantWeight weight;
  BigInt dim;
  std::vector<int> nodes;  // all fundamental weights attaining the minimum
};

/// Smallest nontrivial irreducible representation. Since weyl_dim grows strictly
/// in each coordinate, the minimum over nonzero dominant weights sits at a
/// fundamental weight; ties go to the lowest node.
inline MinIrrep min_nontrivial_irrep(const RootSystem& rs) {
  std::optional<MinIrrep> best;
  for (int v = 1; v <= rs.rank(); ++v) {
    auto w = DominantWeight::fundamental(rs.type(), v);
    auto d = weyl_dim(rs, w);
    if (!best || d < best->dim) {
      best = MinIrrep{w, d, {v}};
    } else if (d == best->dim) {
      best->nodes.push_back(v);
    }
  }
  return *best;
}

inline MinIrrep min_nontrivial_irrep(const DynkinType& type, const Limits& limits = {}) {
  return min_nontrivial_irrep(RootSystem(type, limits));
}

/// Whether the smallest nontrivial irreducible representation has dimension r_G + 1.
inline bool check_rg_plus_one(const RootSystem& rs) { return min_nontrivial_irrep(rs).dim == r_min(rs).r + 1; }

inline bool check_rg_plus_one(const DynkinType& type, const Limits& limits = {}) {
  return check_rg_plus_one(RootSystem(type, limits));
}

inline void require_supported(const ParabolicMarking& m, const DominantWeight& w) {
  if (w.type() != m.type())
    throw Error(errors::kArityMismatch, "weight of " + w.type().to_string() + " on a marking of " + m.type().to_string());
  for (int i = 1; i <= m.type().rank; ++i)
    if (w.coords()[i - 1] != 0 && !m.contains(i))
      throw Error(errors::kUnsupportedWeight,
                  "weight " + w.to_string() + " has mass on unmarked node " + std::to_string(i));
}

/// dim H^0(G/P, L_w^k) = dim V_{k w}.
inline BigInt bwb_section_dim(const RootSystem& rs, const ParabolicMarking& m, const DominantWeight& w, std::int64_t k) {
  require_supported(m, w);
  if (k < 1) throw Error(errors::kParameterViolation, "power must be >= 1, got " + std::to_string(k));
  return weyl_dim(rs, w.scaled(k));
}

inline BigInt bwb_section_dim(const ParabolicMarking& m, const DominantWeight& w, std::int64_t k,
                              const Limits& limits = {}) {
  return bwb_section_dim(RootSystem(m.type(), limits), m, w, k);
}

}  // namespace lieclass
