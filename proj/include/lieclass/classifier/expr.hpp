#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lieclass {

/// Integer-affine expression in named variables, e.g. "n-1", "2n+1", "3".
/// Keeps the source text so serialization is byte-exact.
class AffineExpr {
 public:
  using Env = std::map<std::string, std::int64_t, std::less<>>;

  AffineExpr() = default;

  static AffineExpr constant(std::int64_t c) {
    AffineExpr e;
    e.constant_ = c;
    e.text_ = std::to_string(c);
    return e;
  }

  static std::optional<AffineExpr> parse(std::string_view s) {
    AffineExpr e;
    e.text_ = std::string(s);
    std::size_t i = 0;
    bool first = true;
    if (s.empty()) return std::nullopt;
    while (i < s.size()) {
      int sign = 1;
      if (s[i] == '+' || s[i] == '-') {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
      } else if (!first) {
        return std::nullopt;
      }
      first = false;
      std::int64_t coef = 0;
      bool has_digits = false;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        coef = coef * 10 + (s[i] - '0');
        has_digits = true;
        ++i;
      }
      std::string var;
      while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) var += s[i++];
      if (!has_digits && var.empty()) return std::nullopt;
      if (!has_digits) coef = 1;
      if (var.empty()) {
        e.constant_ += sign * coef;
      } else {
        e.terms_.emplace_back(var, sign * coef);
      }
    }
    return e;
  }

  std::optional<std::int64_t> eval(const Env& env) const {
    std::int64_t v = constant_;
    for (const auto& [name, coef] : terms_) {
      auto it = env.find(name);
      if (it == env.end()) return std::nullopt;
      v += coef * it->second;
    }
    return v;
  }

  const std::string& text() const noexcept { return text_; }

  bool operator==(const AffineExpr& o) const { return text_ == o.text_; }

 private:
  std::int64_t constant_ = 0;
  std::vector<std::pair<std::string, std::int64_t>> terms_;
  std::string text_ = "0";
};

/// Replaces every "{expr}" in a label by its value when the expression evaluates,
/// so "P^{n-1}" becomes "P^3" at n = 4. Unevaluable braces are left untouched.
inline std::string render_label(std::string_view label, const AffineExpr::Env& env) {
  std::string out;
  std::size_t i = 0;
  while (i < label.size()) {
    if (label[i] == '{') {
      const auto close = label.find('}', i);
      if (close != std::string_view::npos) {
        auto e = AffineExpr::parse(label.substr(i + 1, close - i - 1));
        if (e) {
          if (auto v = e->eval(env)) {
            out += std::to_string(*v);
            i = close + 1;
            continue;
          }
        }
      }
    }
    out += label[i++];
  }
  return out;
}

}  // namespace lieclass
