#pragma once

// Balanced collections: multisets of Weyl group elements whose matrices sum
// to zero. A balanced collection of size m certifies m in M(G).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "weylinv/errors.hpp"
#include "weylinv/linalg.hpp"
#include "weylinv/root_system.hpp"
#include "weylinv/semigroup.hpp"
#include "weylinv/weyl.hpp"

namespace weylinv {

/// A named block of a concatenated collection.
struct CollectionPart {
  std::string generator;  ///< "coxeter-powers", "minus-identity", "order-three", "diagonal-four"
  std::size_t size = 0;
};

struct BalancedCollection {
  std::vector<WeylElement> elements;
  IntMatrix certificate;  ///< the matrix sum, zero for a valid collection
  std::vector<CollectionPart> parts;
};

inline IntMatrix matrix_sum(const std::vector<WeylElement>& elements) {
  if (elements.empty()) throw DomainError("a balanced collection needs at least one element");
  IntMatrix sum(elements.front().rank());
  for (const auto& w : elements) {
    if (w.rank() != sum.size()) throw DomainError("collection mixes elements of different ranks");
    sum += w.matrix();
  }
  return sum;
}

inline bool is_balanced(const std::vector<WeylElement>& elements) { return matrix_sum(elements).is_zero(); }

/// w^3 = Id, w != Id and 1 is not an eigenvalue of w. Then Id + w + w^2 = 0.
inline bool order3_balanced_check(const WeylElement& w) {
  const std::size_t n = w.rank();
  const IntMatrix id = IntMatrix::identity(n);
  if (w.is_identity()) return false;
  const IntMatrix w2 = w.matrix() * w.matrix();
  if (w2 * w.matrix() != id) return false;
  if (determinant(w.matrix() - id) == 0) return false;
  if (!(id + w.matrix() + w2).is_zero()) throw InternalError("order-three element without fixed vectors is not balanced");
  return true;
}

/// No real eigenvalue: neither 1 nor -1 is an eigenvalue.
inline bool has_no_real_eigenvalues(const WeylElement& w) {
  const IntMatrix id = IntMatrix::identity(w.rank());
  return determinant(w.matrix() - id) != 0 && determinant(w.matrix() + id) != 0;
}

namespace detail {

/// The four diagonal sign changes of D_r for odd r, in fundamental coordinates.
inline std::vector<WeylElement> d_odd_diagonal_elements(const RootSystem& rs) {
  const std::size_t r = rs.dim();
  const RationalMatrix eps = epsilon_images(rs);
  std::vector<std::vector<int>> signs(4, std::vector<int>(r, 1));
  for (std::size_t k = 0; k < r; ++k) {
    signs[0][k] = k == 0 ? 1 : -1;
    signs[1][k] = k == 1 ? 1 : -1;
    signs[2][k] = k <= 1 ? -1 : 1;
  }
  std::vector<WeylElement> out;
  for (const auto& s : signs) {
    IntMatrix m(r);
    for (std::size_t i = 0; i < r; ++i) {
      RationalVector column(r);
      for (std::size_t k = 0; k < r; ++k) column[k] = eps[k][i] * Rational(s[k]);
      const Weight image = from_epsilon(rs, column);
      for (std::size_t k = 0; k < r; ++k) m(k, i) = image[k];
    }
    out.emplace_back(std::move(m));
  }
  return out;
}

struct Generator {
  CollectionPart part;
  std::vector<WeylElement> elements;
};

inline std::vector<Generator> balanced_generators(const RootSystem& rs) {
  std::vector<Generator> gens;
  const WeylElement cox = coxeter_element(rs);
  const std::int64_t h = element_order(cox);
  const std::size_t n = rs.dim();

  if (rs.family() == Family::A) {
    Generator g{{"coxeter-powers", n + 1}, {}};
    for (std::size_t k = 1; k <= n + 1; ++k) g.elements.push_back(cox.pow(static_cast<std::int64_t>(k)));
    gens.push_back(std::move(g));
    return gens;
  }
  if (minus_identity_in_weyl(rs)) {
    gens.push_back({{"minus-identity", 2},
                    {WeylElement::identity(n), WeylElement(-IntMatrix::identity(n))}});
  }
  if (h % 3 == 0) {
    const WeylElement w = cox.pow(h / 3);
    if (order3_balanced_check(w)) gens.push_back({{"order-three", 3}, {WeylElement::identity(n), w, w * w}});
  }
  if (rs.family() == Family::D && n % 2 == 1) gens.push_back({{"diagonal-four", 4}, d_odd_diagonal_elements(rs)});
  return gens;
}

/// Split m into generator sizes, using the largest size as often as possible.
inline std::optional<std::vector<std::size_t>> split_into(std::int64_t m, std::vector<std::size_t> sizes) {
  if (m == 0) return std::vector<std::size_t>{};
  if (sizes.empty() || m < 0) return std::nullopt;
  std::sort(sizes.begin(), sizes.end());
  const std::size_t largest = sizes.back();
  sizes.pop_back();
  for (std::int64_t k = m / static_cast<std::int64_t>(largest); k >= 0; --k) {
    auto rest = split_into(m - k * static_cast<std::int64_t>(largest), sizes);
    if (rest) {
      rest->insert(rest->end(), static_cast<std::size_t>(k), largest);
      return rest;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// A balanced collection of exactly m elements built by concatenating the
/// generator collections of the type. Rejects m outside M(G).
inline BalancedCollection canonical_balanced_collection(const RootSystem& rs, std::int64_t m) {
  if (m < 1) throw DomainError("collection size must be positive");
  const SemigroupDescriptor s = m_of_simple(rs.type());
  if (!s.contains(m)) {
    const std::int64_t c = center_exponent(rs.family(), rs.rank());
    if (m % c != 0)
      throw DomainError(std::to_string(m) + " is not in M(" + rs.name() + ") = " + s.to_string() +
                        ": the centre has a cyclic subgroup of order " + std::to_string(c) +
                        ", which does not divide " + std::to_string(m));
    throw DomainError(std::to_string(m) + " is not in M(" + rs.name() + ") = " + s.to_string() +
                      ": below the minimal element " + std::to_string(s.min_element()));
  }

  const auto gens = detail::balanced_generators(rs);
  std::vector<std::size_t> sizes;
  for (const auto& g : gens) sizes.push_back(g.part.size);
  auto split = detail::split_into(m, sizes);
  if (!split) throw InternalError("no generator decomposition for " + std::to_string(m) + " in " + rs.name());

  BalancedCollection out;
  std::sort(split->begin(), split->end());
  for (std::size_t size : *split) {
    const auto& g = *std::find_if(gens.begin(), gens.end(), [&](const auto& x) { return x.part.size == size; });
    out.elements.insert(out.elements.end(), g.elements.begin(), g.elements.end());
    out.parts.push_back(g.part);
  }
  out.certificate = matrix_sum(out.elements);
  if (!out.certificate.is_zero()) throw InternalError("canonical collection for " + rs.name() + " is not balanced");
  return out;
}

enum class SearchStatus { Found, NoneExists, Unknown };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::NoneExists: return "none";
    case SearchStatus::Unknown: return "unknown";
  }
  return "?";
}

struct SearchResult {
  SearchStatus status = SearchStatus::Unknown;
  std::optional<BalancedCollection> collection;
  std::uint64_t nodes = 0;
  std::size_t group_order = 0;
  std::string reason;  ///< set when status is Unknown
};

inline constexpr std::uint64_t kDefaultSearchBudget = 20'000'000;

/// Exhaustive search for a balanced m-collection.
///
/// Existence is decided by meeting in the middle: the sets of all sums of
/// ceil(m/2) and floor(m/2) group elements are built and intersected with a
/// sign flip. If a collection exists, a depth-first search over
/// non-decreasing index sequences (elements sorted by matrix) returns the
/// lexicographically first one, pruned by membership in those sum sets.
inline SearchResult search_balanced(const RootSystem& rs, std::int64_t m,
                                    std::uint64_t budget = kDefaultSearchBudget) {
  if (m < 1) throw DomainError("collection size must be positive");
  SearchResult result;
  std::vector<WeylElement> group;
  try {
    group = enumerate_weyl_group(rs, static_cast<std::size_t>(std::min<std::uint64_t>(budget, kDefaultGroupBudget)));
  } catch (const BudgetExceeded& e) {
    result.reason = e.what();
    return result;
  }
  result.group_order = group.size();
  {
    std::vector<std::pair<std::size_t, std::size_t>> keyed;
    for (std::size_t i = 0; i < group.size(); ++i) keyed.emplace_back(weyl_length(rs, group[i]), i);
    std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first < b.first;
      return group[a.second].matrix() < group[b.second].matrix();
    });
    std::vector<WeylElement> sorted;
    for (const auto& [len, i] : keyed) sorted.push_back(group[i]);
    group = std::move(sorted);
  }

  const auto hi = static_cast<std::size_t>((m + 1) / 2);
  const auto lo = static_cast<std::size_t>(m / 2);
  using SumSet = std::unordered_set<IntMatrix, IntMatrixHash>;
  std::vector<SumSet> sums(hi + 1);
  sums[0].insert(IntMatrix(rs.dim()));
  for (std::size_t k = 1; k <= hi; ++k) {
    for (const auto& s : sums[k - 1])
      for (const auto& w : group) {
        sums[k].insert(s + w.matrix());
        if (++result.nodes > budget) {
          result.reason = "search budget of " + std::to_string(budget) + " nodes exhausted";
          return result;
        }
      }
  }

  bool exists = false;
  for (const auto& s : sums[hi])
    if (sums[lo].count(-s)) {
      exists = true;
      break;
    }
  if (!exists) {
    result.status = SearchStatus::NoneExists;
    return result;
  }

  std::vector<std::size_t> chosen;
  const auto total = static_cast<std::size_t>(m);
  auto dfs = [&](auto&& self, std::size_t start, const IntMatrix& partial) -> bool {
    const std::size_t remaining = total - chosen.size();
    if (remaining == 0) return partial.is_zero();
    if (remaining <= hi && !sums[remaining].count(-partial)) return false;
    for (std::size_t idx = start; idx < group.size(); ++idx) {
      if (++result.nodes > budget) throw BudgetExceeded("search budget exhausted");
      chosen.push_back(idx);
      if (self(self, idx, partial + group[idx].matrix())) return true;
      chosen.pop_back();
    }
    return false;
  };
  try {
    if (!dfs(dfs, 0, IntMatrix(rs.dim()))) throw InternalError("balanced collection exists but was not found");
  } catch (const BudgetExceeded&) {
    result.reason = "search budget of " + std::to_string(budget) + " nodes exhausted";
    return result;
  }

  BalancedCollection c;
  for (auto idx : chosen) c.elements.push_back(group[idx]);
  c.certificate = matrix_sum(c.elements);
  c.parts.push_back({"search", c.elements.size()});
  result.collection = std::move(c);
  result.status = SearchStatus::Found;
  return result;
}

}  // namespace weylinv
