#pragma once

// Formal characters of irreducible modules (Freudenthal), the Weyl dimension
// formula, tensor product decomposition and invariant dimensions.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "weylinv/errors.hpp"
#include "weylinv/linalg.hpp"
#include "weylinv/root_system.hpp"
#include "weylinv/weyl.hpp"

namespace weylinv {

using BigInt = boost::multiprecision::cpp_int;

/// Caps for the character oracle.
struct OracleLimits {
  /// Largest irreducible module whose character is materialised. For a
  /// two-factor tensor_decompose the product of both dimensions must fit.
  std::uint64_t max_dimension = 100'000;
  /// Largest number of distinct summands carried through an invariant fold.
  std::size_t max_summands = 2'000'000;
};

using WeightMultiplicities = std::map<Weight, std::int64_t>;

class FormalCharacter {
 public:
  FormalCharacter() = default;
  FormalCharacter(SimpleType type, Weight highest, WeightMultiplicities terms)
      : type_(type), highest_(std::move(highest)), terms_(std::move(terms)) {}

  const SimpleType& type() const { return type_; }
  const Weight& highest_weight() const { return highest_; }
  const WeightMultiplicities& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  std::int64_t multiplicity(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
  }

  std::uint64_t dimension() const {
    std::uint64_t d = 0;
    for (const auto& [w, m] : terms_) d += static_cast<std::uint64_t>(m);
    return d;
  }

  friend bool operator==(const FormalCharacter&, const FormalCharacter&) = default;

 private:
  SimpleType type_{Family::A, 1};
  Weight highest_;
  WeightMultiplicities terms_;
};

/// Thread-safe map from "family-rank-coords" to full characters.
class CharacterCache {
 public:
  static std::string key(const SimpleType& t, const Weight& lambda) {
    return std::string(1, family_letter(t.family)) + "-" + std::to_string(t.rank) + "-" + lambda.to_string();
  }

  std::optional<FormalCharacter> find(const std::string& k) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(k);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const FormalCharacter& ch) {
    std::unique_lock lock(mutex_);
    if (entries_.emplace(key(ch.type(), ch.highest_weight()), ch).second) dirty_ = true;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
  }

  /// Snapshot in key order.
  std::map<std::string, FormalCharacter> entries() const {
    std::shared_lock lock(mutex_);
    return entries_;
  }

  bool dirty() const {
    std::shared_lock lock(mutex_);
    return dirty_;
  }
  void mark_clean() {
    std::unique_lock lock(mutex_);
    dirty_ = false;
  }
  void clear() {
    std::unique_lock lock(mutex_);
    entries_.clear();
    dirty_ = false;
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, FormalCharacter> entries_;
  bool dirty_ = false;
};

inline void require_dominant(const RootSystem& rs, const Weight& lambda) {
  rs.check(lambda);
  if (!lambda.is_dominant())
    throw DomainError("weight (" + lambda.to_string() + ") is not dominant for " + rs.name());
}

/// Weyl dimension formula: prod over positive roots of <lambda+rho, a^vee> / <rho, a^vee>.
inline BigInt irrep_dimension(const RootSystem& rs, const Weight& lambda) {
  require_dominant(rs, lambda);
  const Weight lr = lambda + rs.rho();
  BigInt num = 1, den = 1;
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
    num *= rs.coroot_pairing(lr, k);
    den *= rs.coroot_pairing(rs.rho(), k);
  }
  if (num % den != 0) throw InternalError("Weyl dimension formula is not integral");
  return num / den;
}

namespace detail {

inline std::int64_t depth_below(const RootSystem& rs, const Weight& top, const Weight& w) {
  const Rational h = rs.height(top - w);
  if (h.denominator() != 1) throw InternalError("weight is not in the root lattice coset of the highest weight");
  return h.numerator();
}

inline void check_cap(const RootSystem& rs, const Weight& lambda, const OracleLimits& limits) {
  const BigInt d = irrep_dimension(rs, lambda);
  if (d > limits.max_dimension)
    throw BudgetExceeded("dim V(" + lambda.to_string() + ") = " + d.str() + " for " + rs.name() +
                         " exceeds the dimension cap " + std::to_string(limits.max_dimension));
}

/// Dominant weights mu <= lambda, sorted by increasing depth below lambda.
/// Every such mu is reached from lambda through dominant weights by
/// subtracting positive roots.
inline std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lambda) {
  std::map<Weight, std::int64_t> depth{{lambda, 0}};
  std::vector<Weight> frontier{lambda};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& mu : frontier)
      for (const auto& a : rs.positive_roots()) {
        Weight nu = mu - a.weight;
        if (!nu.is_dominant() || depth.count(nu)) continue;
        depth.emplace(nu, depth_below(rs, lambda, nu));
        next.push_back(std::move(nu));
      }
    frontier = std::move(next);
  }
  std::vector<std::pair<std::int64_t, Weight>> order;
  for (auto& [w, d] : depth) order.emplace_back(d, w);
  std::sort(order.begin(), order.end());
  std::vector<Weight> out;
  for (auto& [d, w] : order) out.push_back(std::move(w));
  return out;
}

inline std::int64_t lookup(const WeightMultiplicities& dominant, const RootSystem& rs, const Weight& w) {
  auto it = dominant.find(dominant_representative(rs, w).weight);
  return it == dominant.end() ? 0 : it->second;
}

}  // namespace detail

/// Multiplicities of the dominant weights of V(lambda), by Freudenthal's formula.
inline WeightMultiplicities dominant_multiplicities(const RootSystem& rs, const Weight& lambda,
                                                    const OracleLimits& limits = {}) {
  require_dominant(rs, lambda);
  detail::check_cap(rs, lambda, limits);
  const Weight lr = lambda + rs.rho();
  const std::int64_t top = rs.inner_scaled(lr, lr);
  WeightMultiplicities mult;
  for (const auto& mu : detail::dominant_weights_below(rs, lambda)) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (const auto& a : rs.positive_roots()) {
      Weight nu = mu + a.weight;
      for (;;) {
        const std::int64_t m = detail::lookup(mult, rs, nu);
        if (m == 0) break;
        sum += rs.inner_scaled(nu, a.weight) * m;
        nu += a.weight;
      }
    }
    const Weight mr = mu + rs.rho();
    const std::int64_t denom = top - rs.inner_scaled(mr, mr);
    if (denom <= 0 || (2 * sum) % denom != 0) throw InternalError("Freudenthal recursion failed at " + mu.to_string());
    const std::int64_t m = 2 * sum / denom;
    if (m > 0) mult[mu] = m;
  }
  return mult;
}

/// Full character of V(lambda). Uses and fills the cache when given.
inline FormalCharacter weight_multiplicities(const RootSystem& rs, const Weight& lambda,
                                             const OracleLimits& limits = {},
                                             CharacterCache* cache = nullptr) {
  require_dominant(rs, lambda);
  const std::string key = CharacterCache::key(rs.type(), lambda);
  if (cache)
    if (auto hit = cache->find(key)) return *hit;
  WeightMultiplicities terms;
  for (const auto& [mu, m] : dominant_multiplicities(rs, lambda, limits))
    for (auto& w : weyl_orbit(rs, mu)) terms.emplace(std::move(w), m);
  FormalCharacter ch(rs.type(), lambda, std::move(terms));
  if (cache) cache->insert(ch);
  return ch;
}

/// Summands of a completely reducible module: dominant weight -> multiplicity.
struct DecompositionResult {
  std::map<Weight, std::int64_t> summands;

  std::int64_t multiplicity(const Weight& w) const {
    auto it = summands.find(w);
    return it == summands.end() ? 0 : it->second;
  }
  bool contains(const Weight& w) const { return multiplicity(w) > 0; }

  BigInt dimension(const RootSystem& rs) const {
    BigInt d = 0;
    for (const auto& [w, m] : summands) d += irrep_dimension(rs, w) * m;
    return d;
  }

  friend bool operator==(const DecompositionResult&, const DecompositionResult&) = default;
};

/// V(lambda) (x) V(mu) by multiplying characters on dominant weights and
/// peeling off irreducible characters from the top.
inline DecompositionResult tensor_decompose(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                                            const OracleLimits& limits = {}, CharacterCache* cache = nullptr) {
  require_dominant(rs, lambda);
  require_dominant(rs, mu);
  const BigInt product = irrep_dimension(rs, lambda) * irrep_dimension(rs, mu);
  if (product > limits.max_dimension)
    throw BudgetExceeded("dim V(" + lambda.to_string() + ") * dim V(" + mu.to_string() + ") = " + product.str() +
                         " exceeds the dimension cap " + std::to_string(limits.max_dimension));

  const FormalCharacter small = weight_multiplicities(rs, mu, limits, cache);
  const WeightMultiplicities big = dominant_multiplicities(rs, lambda, limits);

  const Weight top = lambda + mu;
  const std::vector<Weight> candidates = detail::dominant_weights_below(rs, top);
  std::map<Weight, std::int64_t> residual;
  for (const auto& nu : candidates) {
    std::int64_t s = 0;
    for (const auto& [x, m] : small.terms()) s += m * detail::lookup(big, rs, nu - x);
    if (s != 0) residual[nu] = s;
  }

  DecompositionResult out;
  for (const auto& nu : candidates) {
    const std::int64_t c = residual.count(nu) ? residual[nu] : 0;
    if (c == 0) continue;
    if (c < 0) throw InternalError("negative residual multiplicity in tensor decomposition");
    out.summands[nu] = c;
    for (const auto& [w, m] : dominant_multiplicities(rs, nu, limits)) residual[w] -= c * m;
  }
  return out;
}

/// One step of the invariant fold: V(kappa) (x) V(lambda) by the
/// Racah-Speiser reflection rule, given the full character of V(lambda).
inline void racah_speiser_accumulate(const RootSystem& rs, const Weight& kappa, std::int64_t coefficient,
                                     const FormalCharacter& ch, std::map<Weight, std::int64_t>& out) {
  const Weight shift = kappa + rs.rho();
  for (const auto& [x, m] : ch.terms()) {
    const auto rep = dominant_representative(rs, shift + x);
    bool wall = false;
    for (auto c : rep.weight)
      if (c == 0) {
        wall = true;
        break;
      }
    if (wall) continue;
    std::int64_t term = 0;
    auto& slot = out[rep.weight - rs.rho()];
    if (__builtin_mul_overflow(m, coefficient, &term) ||
        __builtin_add_overflow(slot, rep.reflections % 2 == 0 ? term : -term, &slot))
      throw BudgetExceeded("tensor multiplicity overflows 64 bits");
  }
}

inline DecompositionResult tensor_decompose_racah_speiser(const RootSystem& rs, const Weight& lambda,
                                                          const Weight& mu, const OracleLimits& limits = {},
                                                          CharacterCache* cache = nullptr) {
  require_dominant(rs, lambda);
  const FormalCharacter ch = weight_multiplicities(rs, mu, limits, cache);
  std::map<Weight, std::int64_t> acc;
  racah_speiser_accumulate(rs, lambda, 1, ch, acc);
  DecompositionResult out;
  for (const auto& [w, m] : acc) {
    if (m < 0) throw InternalError("negative multiplicity after Racah-Speiser cancellation");
    if (m > 0) out.summands.emplace(w, m);
  }
  return out;
}

/// dim of the G-invariants in V(w_1) (x) ... (x) V(w_s).
///
/// Folds the factors left to right, keeping only summands kappa whose dual
/// is still dominated by the sum of the remaining weights; the answer is the
/// multiplicity of the dual of the last weight after the penultimate step.
inline std::int64_t invariant_dimension(const RootSystem& rs, std::span<const Weight> weights,
                                        const OracleLimits& limits = {}, CharacterCache* cache = nullptr) {
  for (const auto& w : weights) require_dominant(rs, w);
  if (weights.empty()) return 1;
  if (weights.size() == 1) return weights.front().is_zero() ? 1 : 0;

  const WeylElement w0 = longest_element(rs);
  auto dual = [&](const Weight& w) { return -w0.apply(w); };

  std::vector<Weight> suffix(weights.size() + 1, Weight(rs.dim()));
  for (std::size_t i = weights.size(); i-- > 0;) suffix[i] = suffix[i + 1] + weights[i];

  std::map<Weight, std::int64_t> state{{weights.front(), 1}};
  for (std::size_t k = 1; k + 1 < weights.size(); ++k) {
    detail::check_cap(rs, weights[k], limits);
    const FormalCharacter ch = weight_multiplicities(rs, weights[k], limits, cache);
    std::map<Weight, std::int64_t> next;
    for (const auto& [kappa, c] : state) racah_speiser_accumulate(rs, kappa, c, ch, next);
    state.clear();
    for (auto& [kappa, c] : next) {
      if (c < 0) throw InternalError("negative multiplicity in invariant fold");
      if (c == 0 || !rs.dominated_by(dual(kappa), suffix[k + 1])) continue;
      state.emplace(kappa, c);
    }
    if (state.size() > limits.max_summands)
      throw BudgetExceeded("invariant fold carries " + std::to_string(state.size()) +
                           " summands, above the cap " + std::to_string(limits.max_summands));
  }
  detail::check_cap(rs, weights.back(), limits);
  auto it = state.find(dual(weights.back()));
  return it == state.end() ? 0 : it->second;
}

inline std::int64_t invariant_dimension(const RootSystem& rs, const std::vector<Weight>& weights,
                                        const OracleLimits& limits = {}, CharacterCache* cache = nullptr) {
  return invariant_dimension(rs, std::span<const Weight>(weights), limits, cache);
}

}  // namespace weylinv
