#pragma once

// Tensor-invariant semigroups M(G) of simply connected semisimple groups.
//
// Every M(G) that occurs is of the form {n : d | n, n >= t}; this normal form
// is closed under intersection, which is how products of simple factors are
// handled.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "weylinv/errors.hpp"
#include "weylinv/root_system.hpp"

namespace weylinv {

class SemigroupDescriptor {
 public:
  /// {n : d | n, n >= t}. The threshold is normalised to the least multiple
  /// of d that is >= t.
  SemigroupDescriptor(std::int64_t modulus, std::int64_t threshold) : modulus_(modulus) {
    if (modulus < 1) throw DomainError("semigroup modulus must be positive");
    if (threshold < 1) threshold = 1;
    threshold_ = ((threshold + modulus - 1) / modulus) * modulus;
  }

  static SemigroupDescriptor multiples_of(std::int64_t d) { return {d, d}; }
  static SemigroupDescriptor at_least(std::int64_t t) { return {1, t}; }
  /// M(G) of a reductive group with a central torus.
  static SemigroupDescriptor empty() {
    SemigroupDescriptor s(1, 1);
    s.empty_ = true;
    return s;
  }

  bool is_empty() const { return empty_; }
  std::int64_t modulus() const { return modulus_; }
  std::int64_t threshold() const { return threshold_; }

  bool contains(std::int64_t n) const { return !empty_ && n >= threshold_ && n % modulus_ == 0; }

  std::int64_t min_element() const {
    if (empty_) throw DomainError("the empty semigroup has no minimal element");
    return threshold_;
  }

  /// Minimal generating set of the numerical semigroup.
  std::vector<std::int64_t> generators() const {
    if (empty_) return {};
    std::vector<std::int64_t> gens;
    // Members >= 2t are sums of two members; members below 2t are not.
    for (std::int64_t n = threshold_; n < 2 * threshold_; n += modulus_) gens.push_back(n);
    return gens;
  }

  friend SemigroupDescriptor intersect(const SemigroupDescriptor& a, const SemigroupDescriptor& b) {
    if (a.empty_ || b.empty_) return empty();
    const std::int64_t d = std::lcm(a.modulus_, b.modulus_);
    return SemigroupDescriptor(d, std::max(a.threshold_, b.threshold_));
  }

  /// "3N", "{n>=2}", "{n in 6N | n>=12}" or "empty".
  std::string to_string() const {
    if (empty_) return "empty";
    if (threshold_ == modulus_) return std::to_string(modulus_) + "N";
    if (modulus_ == 1) return "{n>=" + std::to_string(threshold_) + "}";
    return "{n in " + std::to_string(modulus_) + "N | n>=" + std::to_string(threshold_) + "}";
  }

  friend bool operator==(const SemigroupDescriptor&, const SemigroupDescriptor&) = default;

 private:
  bool empty_ = false;
  std::int64_t modulus_ = 1;
  std::int64_t threshold_ = 1;
};

inline bool contains(const SemigroupDescriptor& s, std::int64_t n) { return s.contains(n); }
inline std::int64_t min_element(const SemigroupDescriptor& s) { return s.min_element(); }

/// A simply connected semisimple group as a list of simple factors.
struct GroupSpec {
  std::vector<SimpleType> factors;

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += 'x';
      out += factors[i].to_string();
    }
    return out;
  }
};

/// Largest order of a cyclic subgroup of the centre of the simply connected group.
inline std::int64_t center_exponent(Family family, int rank) {
  validate_simple_type(family, rank);
  switch (family) {
    case Family::A: return rank + 1;
    case Family::B:
    case Family::C: return 2;
    case Family::D: return rank % 2 == 0 ? 2 : 4;
    case Family::E: return rank == 6 ? 3 : rank == 7 ? 2 : 1;
    case Family::F:
    case Family::G: return 1;
  }
  throw InternalError("unreachable");
}

inline SemigroupDescriptor m_of_simple(Family family, int rank) {
  validate_simple_type(family, rank);
  switch (family) {
    case Family::A: return SemigroupDescriptor::multiples_of(rank + 1);  // SL_n, n = rank + 1
    case Family::B:                                                     // Spin_{2n+1}
    case Family::C: return SemigroupDescriptor::multiples_of(2);        // Sp_{2n}
    case Family::D:  // Spin_{4n+2} for odd rank, Spin_{4n+4} for even rank
      return SemigroupDescriptor::multiples_of(rank % 2 == 1 ? 4 : 2);
    case Family::E:
      if (rank == 6) return SemigroupDescriptor::multiples_of(3);
      if (rank == 7) return SemigroupDescriptor::multiples_of(2);
      return SemigroupDescriptor::at_least(2);
    case Family::F:
    case Family::G: return SemigroupDescriptor::at_least(2);
  }
  throw InternalError("unreachable");
}

inline SemigroupDescriptor m_of_simple(const SimpleType& t) { return m_of_simple(t.family, t.rank); }

inline SemigroupDescriptor m_of_semisimple(const GroupSpec& spec) {
  if (spec.factors.empty()) throw DomainError("group spec has no factors");
  SemigroupDescriptor s = m_of_simple(spec.factors.front());
  for (std::size_t i = 1; i < spec.factors.size(); ++i) s = intersect(s, m_of_simple(spec.factors[i]));
  return s;
}

}  // namespace weylinv
