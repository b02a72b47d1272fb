#pragma once

/**
 * @file parabolic.hpp
 * @brief Homogeneous varieties G/P from marked Dynkin nodes.
 *
 * A marking lists the nodes removed from the Levi factor. dim G/P is the number
 * of positive roots with a nonzero coefficient on some marked node, and the
 * Picard rank of G/P is the number of marked nodes.
 *
 * Named identifications are a fixed table, not inferred:
 *
 *   (A_{m-1},{1}) = (A_{m-1},{m-1})  P^{m-1}
 *   (B_n,{1})                        Q^{2n-1}
 *   (C_n,{1})                        P^{2n-1}
 *   (C_2,{2})                        Q^3      (Lagrangian Grassmannian of C^4)
 *   (D_n,{1})                        Q^{2n-2}
 *   (D_4,{3}) = (D_4,{4})            Q^6      (spinor varieties, triality)
 *   (G_2,{1})                        Q^5
 *   (A_3,{2})                        Gr(2,4) = Q^4
 *   (A_2,{1,2})                      full flag P(T P^2)
 *
 * Under Bourbaki numbering C_2 node 1 is the P^3 and node 2 the Q^3; texts that
 * number Sp(4) as B_2 swap the two labels.
 */

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "lieclass/root_system.hpp"
#include "lieclass/weight.hpp"

namespace lieclass {

class ParabolicMarking {
 public:
  /// Throws InvalidRank, EmptyMarking or NodeOutOfRange. Nodes are 1-based; duplicates are merged.
  static ParabolicMarking make(const DynkinType& type, std::vector<int> nodes) {
    validate(type, Limits{std::numeric_limits<int>::max()});
    if (nodes.empty()) throw Error(errors::kEmptyMarking, "a proper parabolic needs at least one marked node");
    for (int v : nodes)
      if (v < 1 || v > type.rank)
        throw Error(errors::kNodeOutOfRange,
                    "node " + std::to_string(v) + " outside 1.." + std::to_string(type.rank) + " for " + type.to_string());
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return ParabolicMarking(type, std::move(nodes));
  }

  const DynkinType& type() const noexcept { return type_; }
  const std::vector<int>& marked() const noexcept { return marked_; }
  bool is_maximal() const noexcept { return marked_.size() == 1; }
  bool contains(int node) const { return std::binary_search(marked_.begin(), marked_.end(), node); }

  bool operator==(const ParabolicMarking&) const = default;

  std::string nodes_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < marked_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(marked_[i]);
    }
    return s + "]";
  }

 private:
  ParabolicMarking(const DynkinType& type, std::vector<int> nodes) : type_(type), marked_(std::move(nodes)) {}

  DynkinType type_;
  std::vector<int> marked_;
};

struct Identification {
  enum class Kind { ProjSpace, Quadric, Grassmannian24, FullFlagSL3, Other };

  Kind kind = Kind::Other;
  int k = 0;  // dimension for ProjSpace/Quadric

  bool operator==(const Identification&) const = default;

  std::string name() const {
    switch (kind) {
      case Kind::ProjSpace: return "P^" + std::to_string(k);
      case Kind::Quadric: return "Q^" + std::to_string(k);
      case Kind::Grassmannian24: return "Gr(2,4)";
      case Kind::FullFlagSL3: return "P(T P2)";
      case Kind::Other: return "Other";
    }
    return "Other";
  }

  std::optional<int> dim() const {
    switch (kind) {
      case Kind::ProjSpace:
      case Kind::Quadric: return k;
      case Kind::Grassmannian24: return 4;
      case Kind::FullFlagSL3: return 3;
      case Kind::Other: return std::nullopt;
    }
    return std::nullopt;
  }
};

inline Identification identify(const ParabolicMarking& m) {
  using K = Identification::Kind;
  const auto& t = m.type();
  const int n = t.rank;
  const auto& nodes = m.marked();
  if (nodes.size() == 2 && t == DynkinType{Series::A, 2}) return {K::FullFlagSL3, 0};
  if (nodes.size() != 1) return {};
  const int v = nodes.front();
  switch (t.series) {
    case Series::A:
      if (v == 1 || v == n) return {K::ProjSpace, n};
      if (n == 3 && v == 2) return {K::Grassmannian24, 0};
      break;
    case Series::B:
      if (v == 1) return {K::Quadric, 2 * n - 1};
      break;
    case Series::C:
      if (v == 1) return {K::ProjSpace, 2 * n - 1};
      if (n == 2 && v == 2) return {K::Quadric, 3};
      break;
    case Series::D:
      if (v == 1) return {K::Quadric, 2 * n - 2};
      if (n == 4 && (v == 3 || v == 4)) return {K::Quadric, 6};
      break;
    case Series::G:
      if (v == 1) return {K::Quadric, 5};
      break;
    default:
      break;
  }
  return {};
}

struct HomogeneousVariety {
  ParabolicMarking marking;
  std::int64_t dim = 0;
  int picard_rank = 0;
  Identification identification;
};

inline std::int64_t codim_parabolic(const RootSystem& rs, const ParabolicMarking& m) {
  std::int64_t count = 0;
  for (const auto& root : rs.positive_roots()) {
    for (int v : m.marked()) {
      if (root.at(v) != 0) {
        ++count;
        break;
      }
    }
  }
  return count;
}

inline std::int64_t codim_parabolic(const ParabolicMarking& m, const Limits& limits = {}) {
  return codim_parabolic(RootSystem(m.type(), limits), m);
}

inline HomogeneousVariety homogeneous_variety(const RootSystem& rs, const ParabolicMarking& m) {
  return HomogeneousVariety{m, codim_parabolic(rs, m), static_cast<int>(m.marked().size()), identify(m)};
}

struct RMin {
  std::int64_t r = 0;
  std::vector<int> nodes;  // every single node attaining r, ascending
};

inline RMin r_min(const RootSystem& rs) {
  RMin out;
  out.r = -1;
  for (int v = 1; v <= rs.rank(); ++v) {
    const auto c = codim_parabolic(rs, ParabolicMarking::make(rs.type(), {v}));
    if (out.r < 0 || c < out.r) {
      out.r = c;
      out.nodes = {v};
    } else if (c == out.r) {
      out.nodes.push_back(v);
    }
  }
  return out;
}

inline RMin r_min(const DynkinType& type, const Limits& limits = {}) { return r_min(RootSystem(type, limits)); }

/// Minimum codimension over all 2^rank - 1 nonempty markings.
inline std::int64_t min_codim_over_all_markings(const RootSystem& rs) {
  const int n = rs.rank();
  std::int64_t best = -1;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> nodes;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) nodes.push_back(i + 1);
    const auto c = codim_parabolic(rs, ParabolicMarking::make(rs.type(), nodes));
    if (best < 0 || c < best) best = c;
  }
  return best;
}

inline std::vector<HomogeneousVariety> minimal_homogeneous_varieties(const RootSystem& rs) {
  std::vector<HomogeneousVariety> out;
  for (int v : r_min(rs).nodes) out.push_back(homogeneous_variety(rs, ParabolicMarking::make(rs.type(), {v})));
  return out;
}

inline std::vector<HomogeneousVariety> minimal_homogeneous_varieties(const DynkinType& type,
                                                                     const Limits& limits = {}) {
  return minimal_homogeneous_varieties(RootSystem(type, limits));
}

/// <sigma, alpha_i^vee> where sigma sums the positive roots meeting the marked node i.
/// This is the Fano index of G/P_i.
inline std::int64_t fano_index(const RootSystem& rs, const ParabolicMarking& m) {
  if (!m.is_maximal())
    throw Error(errors::kNotMaximalParabolic, "Fano index needs exactly one marked node, got " + m.nodes_string());
  const int node = m.marked().front();
  Root sigma{std::vector<int>(static_cast<std::size_t>(rs.rank()), 0)};
  for (const auto& root : rs.positive_roots())
    if (root.at(node) != 0)
      for (int j = 0; j < rs.rank(); ++j) sigma.coeffs[j] += root.coeffs[j];
  return rs.pair_simple(sigma, node - 1);
}

inline std::int64_t fano_index(const ParabolicMarking& m, const Limits& limits = {}) {
  return fano_index(RootSystem(m.type(), limits), m);
}

struct IntInterval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool operator==(const IntInterval&) const = default;
};

/// Admissible k for a conormal bundle O(k) of an exceptional G/P contracted to a point.
inline IntInterval admissible_conormal_range(const RootSystem& rs, const ParabolicMarking& m) {
  return {1, fano_index(rs, m) - 1};
}

inline IntInterval admissible_conormal_range(const ParabolicMarking& m, const Limits& limits = {}) {
  return admissible_conormal_range(RootSystem(m.type(), limits), m);
}

/// A character of P as a weight supported on the marked nodes.
struct CharacterWeight {
  DynkinType type;
  std::vector<std::int64_t> coords;
  bool dominant = true;

  /// Throws NonDominantWeight when the character has a negative coordinate.
  DominantWeight as_dominant() const { return DominantWeight::make(type, coords); }
};

inline CharacterWeight character_weight(const ParabolicMarking& m, const std::vector<std::int64_t>& values) {
  if (values.size() != m.marked().size())
    throw Error(errors::kArityMismatch, "marking " + m.nodes_string() + " takes " +
                                            std::to_string(m.marked().size()) + " values, got " +
                                            std::to_string(values.size()));
  CharacterWeight out{m.type(), std::vector<std::int64_t>(static_cast<std::size_t>(m.type().rank), 0), true};
  for (std::size_t i = 0; i < values.size(); ++i) {
    out.coords[static_cast<std::size_t>(m.marked()[i] - 1)] = values[i];
    if (values[i] < 0) out.dominant = false;
  }
  return out;
}

}  // namespace lieclass
