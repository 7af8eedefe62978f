#pragma once

// Falsification screen for n in M(G): every irreducible module on a finite
// grid of dominant weights must have an invariant in its n-th tensor power.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "weylinv/character.hpp"
#include "weylinv/errors.hpp"
#include "weylinv/root_system.hpp"

namespace weylinv {

struct MembershipResult {
  bool holds = true;
  std::optional<Weight> witness;  ///< first weight whose n-th power has no invariant
  std::size_t checked = 0;
};

/// Nonzero dominant weights with every coordinate <= bound, ordered by
/// coordinate sum and then descending lexicographically, so varpi_1 comes
/// before varpi_2.
inline std::vector<Weight> dominant_grid(std::size_t rank, std::int64_t bound) {
  if (bound < 0) throw DomainError("coordinate bound must be non-negative");
  std::vector<Weight> out;
  Weight w(rank);
  for (;;) {
    if (!w.is_zero()) out.push_back(w);
    std::size_t i = 0;
    while (i < rank && w[i] == bound) w[i++] = 0;
    if (i == rank) break;
    ++w[i];
  }
  auto sum = [](const Weight& x) {
    std::int64_t s = 0;
    for (auto c : x) s += c;
    return s;
  };
  std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
    const auto sa = sum(a), sb = sum(b);
    if (sa != sb) return sa < sb;
    return a > b;
  });
  return out;
}

inline MembershipResult verify_membership(Family family, int rank, std::int64_t n, std::int64_t coordinate_bound,
                                          const OracleLimits& limits = {}, CharacterCache* cache = nullptr) {
  if (n < 1) throw DomainError("tensor power must be positive");
  const RootSystem rs(family, rank);
  MembershipResult result;
  for (const auto& lambda : dominant_grid(rs.dim(), coordinate_bound)) {
    ++result.checked;
    const std::vector<Weight> factors(static_cast<std::size_t>(n), lambda);
    if (invariant_dimension(rs, factors, limits, cache) == 0) {
      result.holds = false;
      result.witness = lambda;
      return result;
    }
  }
  return result;
}

}  // namespace weylinv
