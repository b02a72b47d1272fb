#pragma once

/**
 * @file root_system.hpp
 * @brief Cartan matrices and positive roots with exact integer arithmetic.
 *
 * Convention: cartan[i][j] = <alpha_i, alpha_j^vee> = 2(alpha_i, alpha_j)/(alpha_j, alpha_j).
 * Roots are coefficient vectors over the simple roots, so the pairing of a root
 * beta with a simple coroot is sum_j beta_j * cartan[j][i].
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "lieclass/dynkin.hpp"

namespace lieclass {

using IntMatrix = std::vector<std::vector<int>>;

struct Root {
  std::vector<int> coeffs;

  auto operator<=>(const Root&) const = default;

  int height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

  /// Coefficient at a 1-based node index.
  int at(int node) const { return coeffs.at(static_cast<std::size_t>(node - 1)); }
};

inline IntMatrix cartan_matrix(const DynkinType& type, const Limits& limits = {}) {
  validate(type, limits);
  const int n = type.rank;
  IntMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) {  // simply-laced edge, 0-based
    a[i][j] = -1;
    a[j][i] = -1;
  };

  switch (type.series) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Series::B:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;
      a[n - 1][n - 2] = -1;
      break;
    case Series::C:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -1;
      a[n - 1][n - 2] = -2;
      break;
    case Series::D:
      for (int i = 0; i + 3 < n; ++i) link(i, i + 1);
      link(n - 3, n - 2);
      link(n - 3, n - 1);
      break;
    case Series::E:
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Series::F:
      link(0, 1);
      a[1][2] = -2;
      a[2][1] = -1;
      link(2, 3);
      break;
    case Series::G:
      a[0][1] = -1;
      a[1][0] = -3;
      break;
  }
  return a;
}

/// Order in which simple roots are tried while growing the positive roots.
enum class EnumerationOrder { Forward, Reverse };

namespace detail {

inline int pair_with_simple_coroot(const IntMatrix& cartan, const std::vector<int>& beta, int i) {
  int s = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) s += beta[j] * cartan[j][static_cast<std::size_t>(i)];
  return s;
}

}  // namespace detail

/// Positive roots by height, grown with simple-root strings: for a root beta
/// and simple alpha_i, beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0,
/// where p is the length of the string going down from beta.
inline std::vector<Root> positive_roots_from_cartan(const IntMatrix& cartan,
                                                    EnumerationOrder order = EnumerationOrder::Forward) {
  const int n = static_cast<int>(cartan.size());
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    known.insert(e);
    layer.push_back(e);
  }

  std::vector<int> simple_order(n);
  std::iota(simple_order.begin(), simple_order.end(), 0);
  if (order == EnumerationOrder::Reverse) std::reverse(simple_order.begin(), simple_order.end());

  std::vector<Root> out;
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& beta : layer) {
      out.push_back(Root{beta});
      for (int i : simple_order) {
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[i] -= 1;
          if (down[i] < 0 || !known.contains(down)) break;
          ++p;
        }
        // alpha_i itself: its string is {alpha_i}; 2 alpha_i is not a root.
        const bool is_simple_i = (beta[i] == 1 && std::accumulate(beta.begin(), beta.end(), 0) == 1);
        if (is_simple_i) continue;
        const int q = p - detail::pair_with_simple_coroot(cartan, beta, i);
        if (q > 0) {
          std::vector<int> up = beta;
          up[i] += 1;
          next.insert(up);
        }
      }
    }
    layer.clear();
    for (const auto& r : next)
      if (known.insert(r).second) layer.push_back(r);
  }
  std::sort(out.begin(), out.end(), [](const Root& x, const Root& y) {
    const int hx = x.height(), hy = y.height();
    if (hx != hy) return hx < hy;
    return x.coeffs > y.coeffs;
  });
  return out;
}

inline std::vector<Root> positive_roots(const DynkinType& type, const Limits& limits = {},
                                        EnumerationOrder order = EnumerationOrder::Forward) {
  return positive_roots_from_cartan(cartan_matrix(type, limits), order);
}

/// Closed-form count of positive roots.
inline std::int64_t expected_positive_root_count(const DynkinType& t) {
  const std::int64_t n = t.rank;
  switch (t.series) {
    case Series::A: return n * (n + 1) / 2;
    case Series::B:
    case Series::C: return n * n;
    case Series::D: return n * (n - 1);
    case Series::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Series::F: return 24;
    case Series::G: return 6;
  }
  return 0;
}

/// Immutable root-system data for one simple type.
class RootSystem {
 public:
  explicit RootSystem(const DynkinType& type, const Limits& limits = {})
      : type_(type), cartan_(cartan_matrix(type, limits)), roots_(positive_roots_from_cartan(cartan_)) {
    compute_norms();
  }

  const DynkinType& type() const noexcept { return type_; }
  int rank() const noexcept { return type_.rank; }
  const IntMatrix& cartan() const noexcept { return cartan_; }
  const std::vector<Root>& positive_roots() const noexcept { return roots_; }

  /// rho in fundamental-weight coordinates.
  std::vector<int> rho() const { return std::vector<int>(static_cast<std::size_t>(rank()), 1); }

  /// Squared length of simple root i (0-based), scaled so the shortest is 1.
  int simple_norm(int i) const { return simple_norm_[static_cast<std::size_t>(i)]; }

  /// Squared length of a root in the same scale (always a positive integer).
  int norm(const Root& r) const {
    // (beta, beta) = 1/2 sum_ij b_i b_j A_ij |alpha_j|^2
    int twice = 0;
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j) twice += r.coeffs[i] * r.coeffs[j] * cartan_[i][j] * simple_norm_[j];
    return twice / 2;
  }

  /// Coroot of a root in simple-coroot coordinates: alpha^vee = sum c_i |alpha_i|^2/|alpha|^2 alpha_i^vee.
  std::vector<int> coroot(const Root& r) const {
    const int nr = norm(r);
    std::vector<int> out(static_cast<std::size_t>(rank()));
    for (int i = 0; i < rank(); ++i) out[i] = r.coeffs[i] * simple_norm_[i] / nr;
    return out;
  }

  /// <beta, alpha_i^vee> for 0-based simple index i.
  int pair_simple(const Root& beta, int i) const { return detail::pair_with_simple_coroot(cartan_, beta.coeffs, i); }

  /// rank + 2 * (number of positive roots).
  std::int64_t group_dimension() const { return rank() + 2 * static_cast<std::int64_t>(roots_.size()); }

 private:
  void compute_norms() {
    // A_ij |alpha_j|^2 = A_ji |alpha_i|^2 along each edge; propagate from node 0.
    const int n = rank();
    std::vector<std::int64_t> num(n, 0), den(n, 1);
    num[0] = 1;
    std::vector<int> stack{0};
    std::vector<bool> seen(n, false);
    seen[0] = true;
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (seen[j] || cartan_[i][j] == 0) continue;
        // |alpha_j|^2 = A_ji / A_ij * |alpha_i|^2
        num[j] = num[i] * cartan_[j][i];
        den[j] = den[i] * cartan_[i][j];
        const std::int64_t g = std::gcd(num[j], den[j]);
        num[j] /= g;
        den[j] /= g;
        if (den[j] < 0) {
          num[j] = -num[j];
          den[j] = -den[j];
        }
        seen[j] = true;
        stack.push_back(j);
      }
    }
    std::int64_t l = 1;
    for (auto d : den) l = std::lcm(l, d);
    std::vector<std::int64_t> scaled(n);
    for (int i = 0; i < n; ++i) scaled[i] = num[i] * (l / den[i]);
    const std::int64_t lo = *std::min_element(scaled.begin(), scaled.end());
    simple_norm_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) simple_norm_[i] = static_cast<int>(scaled[i] / lo);
  }

  DynkinType type_;
  IntMatrix cartan_;
  std::vector<Root> roots_;
  std::vector<int> simple_norm_;
};

inline std::int64_t group_dimension(const DynkinType& type, const Limits& limits = {}) {
  return RootSystem(type, limits).group_dimension();
}

/// True when the nonzero coordinates of the root form a connected subgraph of the Dynkin diagram.
inline bool support_is_connected(const IntMatrix& cartan, const Root& r) {
  const int n = static_cast<int>(r.coeffs.size());
  std::vector<int> support;
  for (int i = 0; i < n; ++i)
    if (r.coeffs[i] != 0) support.push_back(i);
  if (support.empty()) return false;
  std::vector<bool> reached(n, false);
  std::vector<int> stack{support.front()};
  reached[support.front()] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (int j : support) {
      if (!reached[j] && cartan[i][j] != 0) {
        reached[j] = true;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count == support.size();
}

}  // namespace lieclass
