#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lieclass/dynkin.hpp"
#include "lieclass/error.hpp"

namespace lieclass {

/// Highest weight in fundamental-weight coordinates, all entries >= 0.
class DominantWeight {
 public:
  /// Throws ArityMismatch on wrong length and NonDominantWeight on a negative entry.
  static DominantWeight make(const DynkinType& type, std::vector<std::int64_t> coords) {
    if (static_cast<int>(coords.size()) != type.rank)
      throw Error(errors::kArityMismatch, "expected " + std::to_string(type.rank) + " coordinates for " +
                                              type.to_string() + ", got " + std::to_string(coords.size()));
    for (auto c : coords)
      if (c < 0) throw Error(errors::kNonDominantWeight, "negative coordinate " + std::to_string(c));
    return DominantWeight(type, std::move(coords));
  }

  static DominantWeight zero(const DynkinType& type) {
    return DominantWeight(type, std::vector<std::int64_t>(static_cast<std::size_t>(type.rank), 0));
  }

  /// The i-th fundamental weight, 1-based.
  static DominantWeight fundamental(const DynkinType& type, int node) {
    auto w = zero(type);
    w.coords_.at(static_cast<std::size_t>(node - 1)) = 1;
    return w;
  }

  const DynkinType& type() const noexcept { return type_; }
  const std::vector<std::int64_t>& coords() const noexcept { return coords_; }

  bool is_zero() const {
    for (auto c : coords_)
      if (c != 0) return false;
    return true;
  }

  DominantWeight scaled(std::int64_t k) const {
    auto w = *this;
    for (auto& c : w.coords_) c *= k;
    return w;
  }

  bool operator==(const DominantWeight&) const = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(coords_[i]);
    }
    return s + ")";
  }

 private:
  DominantWeight(const DynkinType& type, std::vector<std::int64_t> coords) : type_(type), coords_(std::move(coords)) {}

  DynkinType type_;
  std::vector<std::int64_t> coords_;
};

}  // namespace lieclass
