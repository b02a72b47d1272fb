#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lieclass/dynkin.hpp"
#include "lieclass/error.hpp"

namespace lieclass {

enum class Family { SL, Sp, Spin, G2 };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::SL: return "SL";
    case Family::Sp: return "Sp";
    case Family::Spin: return "Spin";
    case Family::G2: return "G2";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view s) {
  if (s == "SL") return Family::SL;
  if (s == "Sp") return Family::Sp;
  if (s == "Spin") return Family::Spin;
  if (s == "G2") return Family::G2;
  return std::nullopt;
}

/// A classical group by its natural parameter: SL(m), Sp(2s), Spin(m), or G2.
class GroupSpec {
 public:
  /// Throws InvalidGroup. Bounds: SL m>=2, Sp even >=4, Spin m>=5. G2 ignores the parameter.
  static GroupSpec make(Family family, std::int64_t param, const Limits& limits = {}) {
    switch (family) {
      case Family::SL:
        if (param < 2) throw Error(errors::kInvalidGroup, "SL(m) needs m >= 2");
        break;
      case Family::Sp:
        if (param < 4 || param % 2 != 0) throw Error(errors::kInvalidGroup, "Sp(2s) needs an even parameter >= 4");
        break;
      case Family::Spin:
        if (param < 5) throw Error(errors::kInvalidGroup, "Spin(m) needs m >= 5");
        break;
      case Family::G2:
        param = 0;
        break;
    }
    GroupSpec g(family, param);
    try {
      validate(g.dynkin(), limits);
    } catch (const Error&) {
      throw Error(errors::kInvalidGroup, g.to_string() + " is outside the supported rank range");
    }
    return g;
  }

  Family family() const noexcept { return family_; }
  std::int64_t param() const noexcept { return param_; }

  /// Spin(5) = Sp(4) and Spin(6) = SL(4); every other group is already canonical.
  GroupSpec canonical() const {
    if (family_ == Family::Spin && param_ == 5) return GroupSpec(Family::Sp, 4);
    if (family_ == Family::Spin && param_ == 6) return GroupSpec(Family::SL, 4);
    return *this;
  }

  DynkinType dynkin() const {
    const auto c = canonical();
    const int p = static_cast<int>(c.param_);
    switch (c.family_) {
      case Family::SL: return {Series::A, p - 1};
      case Family::Sp: return {Series::C, p / 2};
      case Family::Spin: return p % 2 ? DynkinType{Series::B, (p - 1) / 2} : DynkinType{Series::D, p / 2};
      case Family::G2: return {Series::G, 2};
    }
    return {};
  }

  std::string to_string() const {
    if (family_ == Family::G2) return "G2";
    return lieclass::to_string(family_) + "(" + std::to_string(param_) + ")";
  }

  bool operator==(const GroupSpec&) const = default;

 private:
  GroupSpec(Family f, std::int64_t p) : family_(f), param_(p) {}

  Family family_;
  std::int64_t param_;
};

}  // namespace lieclass
