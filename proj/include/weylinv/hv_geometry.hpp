#pragma once

// Orbit dimensions of tuples of weight vectors in a minuscule module V(lambda).
//
// The stabiliser of a tuple of weight vectors is regular: it is spanned by a
// subalgebra of the torus and the root spaces g_alpha that kill every vector
// of the tuple. For minuscule lambda, g_alpha kills v_mu iff mu + alpha is not
// a weight.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "weylinv/character.hpp"
#include "weylinv/errors.hpp"
#include "weylinv/linalg.hpp"
#include "weylinv/root_system.hpp"

namespace weylinv {

inline bool is_minuscule(const RootSystem& rs, const Weight& lambda, const OracleLimits& limits = {},
                         CharacterCache* cache = nullptr) {
  const FormalCharacter ch = weight_multiplicities(rs, lambda, limits, cache);
  for (const auto& [w, m] : ch.terms())
    if (m != 1) return false;
  return ch.size() == weyl_orbit(rs, lambda).size();
}

/// P(lambda) in canonical order; rejects non-minuscule lambda.
inline std::vector<Weight> minuscule_weights(const RootSystem& rs, const Weight& lambda) {
  require_dominant(rs, lambda);
  if (!is_minuscule(rs, lambda))
    throw DomainError("V(" + lambda.to_string() + ") of " + rs.name() + " is not minuscule");
  return weyl_orbit(rs, lambda);
}

struct TupleStabilizer {
  std::size_t span_rank = 0;         ///< rank of the span of the tuple's weights
  std::vector<Weight> stabilizer_roots;  ///< roots alpha with mu + alpha outside P for every mu
  std::size_t stabilizer_dimension = 0;  ///< (rank - span_rank) + |stabilizer_roots|
  std::size_t orbit_dimension = 0;       ///< dim G - stabilizer_dimension
};

inline std::size_t group_dimension(const RootSystem& rs) { return rs.dim() + 2 * rs.num_positive_roots(); }

namespace detail {

inline TupleStabilizer tuple_stabilizer(const RootSystem& rs, const std::set<Weight>& support,
                                        const std::vector<Weight>& tuple) {
  for (const auto& mu : tuple)
    if (!support.count(mu)) throw DomainError("weight (" + mu.to_string() + ") is not a weight of the module");
  TupleStabilizer s;
  s.span_rank = rational_rank(tuple);
  for (const auto& alpha : rs.roots()) {
    bool kills_all = true;
    for (const auto& mu : tuple)
      if (support.count(mu + alpha)) {
        kills_all = false;
        break;
      }
    if (kills_all) s.stabilizer_roots.push_back(alpha);
  }
  s.stabilizer_dimension = rs.dim() - s.span_rank + s.stabilizer_roots.size();
  s.orbit_dimension = group_dimension(rs) - s.stabilizer_dimension;
  return s;
}

}  // namespace detail

inline TupleStabilizer tuple_orbit_dimension(const RootSystem& rs, const Weight& lambda,
                                             const std::vector<Weight>& tuple) {
  for (const auto& mu : tuple) rs.check(mu);
  const auto weights = minuscule_weights(rs, lambda);
  return detail::tuple_stabilizer(rs, std::set<Weight>(weights.begin(), weights.end()), tuple);
}

/// dim X(lambda) = 1 + #{alpha : lambda + alpha in P(lambda)}.
inline std::size_t hv_dimension(const RootSystem& rs, const Weight& lambda) {
  const auto weights = minuscule_weights(rs, lambda);
  const std::set<Weight> support(weights.begin(), weights.end());
  std::size_t n = 1;
  for (const auto& alpha : rs.roots())
    if (support.count(lambda + alpha)) ++n;
  return n;
}

struct DenseOrbitResult {
  std::size_t hv_dimension = 0;
  std::size_t max_orbit_dimension = 0;  ///< over all pairs (lambda, mu)
  std::vector<Weight> witnesses;        ///< mu with orbit dimension 2 * hv_dimension
  std::optional<TupleStabilizer> stabilizer;  ///< of the first witness

  bool dense() const { return !witnesses.empty(); }
};

/// Searches P(lambda) in canonical order for mu such that (v_lambda, v_mu)
/// has an orbit of dimension 2 dim X(lambda). Only the first witness is
/// kept unless all_witnesses is set.
inline DenseOrbitResult find_dense_orbit_pair(const RootSystem& rs, const Weight& lambda, bool all_witnesses = false) {
  const auto weights = minuscule_weights(rs, lambda);
  const std::set<Weight> support(weights.begin(), weights.end());
  DenseOrbitResult out;
  out.hv_dimension = hv_dimension(rs, lambda);
  for (const auto& mu : weights) {
    const auto s = detail::tuple_stabilizer(rs, support, {lambda, mu});
    out.max_orbit_dimension = std::max(out.max_orbit_dimension, s.orbit_dimension);
    if (s.orbit_dimension != 2 * out.hv_dimension) continue;
    if (!out.stabilizer) out.stabilizer = s;
    if (all_witnesses || out.witnesses.empty()) out.witnesses.push_back(mu);
  }
  return out;
}

}  // namespace weylinv
