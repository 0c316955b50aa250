#pragma once

// Test-only reference computations. Each one takes a different route from the
// library code it is compared against: explicit cell sets instead of
// row formulas, Euler's pentagonal recurrence instead of the coin DP, and the
// Frobenius formula instead of rim-hook recursion.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "gblock/partition.hpp"

namespace oracle {

using gblock::Partition;
using Cell = std::pair<int, int>;  // 1-based (row, col)

inline std::set<Cell> cells(const Partition& p) {
  std::set<Cell> out;
  for (std::size_t i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p[i]; ++j) out.emplace(static_cast<int>(i), j);
  return out;
}

inline Partition from_cells(const std::set<Cell>& cs) {
  std::vector<Partition::Part> rows;
  for (auto [r, c] : cs) {
    if (static_cast<int>(rows.size()) < r) rows.resize(static_cast<std::size_t>(r), 0);
    rows[static_cast<std::size_t>(r - 1)] = std::max(rows[static_cast<std::size_t>(r - 1)], c);
  }
  return Partition::from_unsorted(rows);
}

// Counts arm and leg cells by scanning the diagram.
inline int hook_length(const Partition& p, int i, int j) {
  auto cs = cells(p);
  int arm = 0, leg = 0;
  for (auto [r, c] : cs) {
    if (r == i && c > j) ++arm;
    if (c == j && r > i) ++leg;
  }
  return arm + leg + 1;
}

struct Removal {
  Partition result;
  int leg;
};

// Rim hook of (i,j) as a cell set: cells weakly south-east of (i,j) whose
// south-east diagonal neighbour lies outside the diagram.
inline Removal remove_rim_hook(const Partition& p, int i, int j) {
  auto cs = cells(p);
  std::set<Cell> rim;
  for (auto [r, c] : cs)
    if (r >= i && c >= j && !cs.count({r + 1, c + 1})) rim.emplace(r, c);
  int top = i, bottom = i;
  for (auto [r, c] : rim) {
    top = std::min(top, r);
    bottom = std::max(bottom, r);
  }
  for (const auto& cell : rim) cs.erase(cell);
  return {from_cells(cs), bottom - top};
}

// Removal of a hook of length h by moving one bead down; leg counts the beads jumped.
inline std::optional<Removal> beta_remove(const Partition& p, std::size_t row, int h) {
  const std::size_t b = p.length() + static_cast<std::size_t>(h);
  std::vector<std::int64_t> beads;
  for (std::size_t k = 1; k <= b; ++k) beads.push_back(p[k] + static_cast<std::int64_t>(b - k));
  const std::int64_t from = beads[row - 1], to = from - h;
  if (to < 0 || std::find(beads.begin(), beads.end(), to) != beads.end()) return std::nullopt;
  int leg = 0;
  for (auto x : beads)
    if (x > to && x < from) ++leg;
  beads[row - 1] = to;
  std::sort(beads.begin(), beads.end(), std::greater<>());
  std::vector<Partition::Part> parts;
  for (std::size_t k = 0; k < b; ++k) parts.push_back(static_cast<Partition::Part>(beads[k] - (b - 1 - k)));
  return Removal{Partition::from_unsorted(parts), leg};
}

// Strips rim hooks of length e in diagram-scan order until none is left.
inline Partition greedy_core(Partition p, int e, bool reverse_scan = false) {
  while (true) {
    auto cs = cells(p);
    std::vector<Cell> order(cs.begin(), cs.end());
    if (reverse_scan) std::reverse(order.begin(), order.end());
    bool removed = false;
    for (auto [r, c] : order)
      if (hook_length(p, r, c) == e) {
        p = remove_rim_hook(p, r, c).result;
        removed = true;
        break;
      }
    if (!removed) return p;
  }
}

// Euler's pentagonal number recurrence.
inline std::uint64_t partition_count(int n) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    std::int64_t total = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      std::int64_t sign = (k % 2 == 1) ? 1 : -1;
      total += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) total += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = total;
  }
  return static_cast<std::uint64_t>(p[static_cast<std::size_t>(n)]);
}

// Number of ways to distribute the cycle lengths among ell variables so that
// variable i receives exactly target[i]: the coefficient of x^target in p_lambda.
inline std::int64_t power_sum_coefficient(const std::vector<int>& cycles, std::vector<int> target, std::size_t k = 0) {
  if (k == cycles.size()) return std::all_of(target.begin(), target.end(), [](int t) { return t == 0; }) ? 1 : 0;
  std::int64_t total = 0;
  for (auto& t : target) {
    if (t < cycles[k]) continue;
    t -= cycles[k];
    total += power_sum_coefficient(cycles, target, k + 1);
    t += cycles[k];
  }
  return total;
}

// Frobenius formula: chi^nu_lambda is the coefficient of x^{nu + delta} in
// a_delta * p_lambda, with a_delta the Vandermonde determinant.
inline std::int64_t frobenius_character(const Partition& nu, const Partition& lambda) {
  const std::size_t ell = std::max<std::size_t>(nu.length(), 1);
  std::vector<int> shifted(ell);
  for (std::size_t i = 0; i < ell; ++i) shifted[i] = nu[i + 1] + static_cast<int>(ell - 1 - i);
  std::vector<int> cycles(lambda.parts().begin(), lambda.parts().end());
  std::vector<int> perm(ell);
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t total = 0;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < ell; ++a)
      for (std::size_t b = a + 1; b < ell; ++b)
        if (perm[a] > perm[b]) ++inversions;
    // a_delta = sum_sigma sgn(sigma) x^{sigma(delta)}.
    std::vector<int> target(ell);
    bool feasible = true;
    for (std::size_t i = 0; i < ell; ++i) {
      target[i] = shifted[i] - static_cast<int>(ell - 1 - static_cast<std::size_t>(perm[i]));
      if (target[i] < 0) feasible = false;
    }
    if (!feasible) continue;
    std::int64_t c = power_sum_coefficient(cycles, target);
    total += (inversions % 2 == 0) ? c : -c;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace oracle
