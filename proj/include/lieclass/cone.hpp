#pragma once

/**
 * @file cone.hpp
 * @brief Invariants of the affine cone Spec(sum_k H^0(G/P, L^k)).
 *
 * For G/P with s marked nodes, H^2(G/P, Z) is taken with the basis of the s
 * fundamental weights on those nodes, so c_1 of a character bundle is its
 * coefficient vector. Callers passing arbitrary classes are responsible for the
 * simply-connected hypothesis on the base.
 */

#include <vector>

#include "lieclass/numeric.hpp"
#include "lieclass/representations.hpp"

namespace lieclass {

class ChernVector {
 public:
  /// Throws ZeroClass when every entry is zero.
  static ChernVector make(std::vector<BigInt> coeffs) {
    bool any = false;
    for (const auto& c : coeffs) any = any || c != 0;
    if (!any) throw Error(errors::kZeroClass, "c1 must be a nonzero class");
    return ChernVector(std::move(coeffs));
  }

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

 private:
  explicit ChernVector(std::vector<BigInt> c) : coeffs_(std::move(c)) {}
  std::vector<BigInt> coeffs_;
};

/// Order r of pi_1(L^*) = Z/rZ: the divisibility of c1(L) in H^2.
inline BigInt cone_cover_order(const ChernVector& c1) {
  BigInt g = 0;
  for (const auto& c : c1.coeffs()) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c));
  return g;
}

/// Entries k = 0..k_max of the Hilbert function of the cone ring; entry k is dim V_{k w}.
inline std::vector<BigInt> cone_hilbert_function(const RootSystem& rs, const ParabolicMarking& m,
                                                 const DominantWeight& w, std::int64_t k_max) {
  require_supported(m, w);
  if (k_max < 1) throw Error(errors::kParameterViolation, "k_max must be >= 1, got " + std::to_string(k_max));
  std::vector<BigInt> out{BigInt(1)};
  for (std::int64_t k = 1; k <= k_max; ++k) out.push_back(bwb_section_dim(rs, m, w, k));
  return out;
}

inline std::vector<BigInt> cone_hilbert_function(const ParabolicMarking& m, const DominantWeight& w,
                                                 std::int64_t k_max, const Limits& limits = {}) {
  return cone_hilbert_function(RootSystem(m.type(), limits), m, w, k_max);
}

}  // namespace lieclass
