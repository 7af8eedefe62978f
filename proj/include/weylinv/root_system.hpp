#pragma once

// Root systems of simple types A-G with data in the fundamental-weight basis.
//
// Conventions:
//   * cartan(i, j) = <alpha_i, alpha_j^vee>, so row i of the Cartan matrix is
//     the simple root alpha_i written in fundamental-weight coordinates.
//   * Simple roots are numbered as in the Onishchik-Vinberg tables; for the
//     classical series and F4, G2 this agrees with Bourbaki. E_r is the chain
//     1-2-...-(r-1) with node r attached to node r-3.
//   * The invariant form is normalised so that short roots have squared
//     length 2 (simply laced types: all roots).

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "weylinv/errors.hpp"
#include "weylinv/linalg.hpp"

namespace weylinv {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline char family_letter(Family f) { return static_cast<char>(f); }

inline Family parse_family(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: throw DomainError(std::string("unknown family '") + c + "'");
  }
}

inline constexpr int kMaxRank = 32;

/// A simple simply connected type such as E6.
struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  std::string to_string() const { return family_letter(family) + std::to_string(rank); }
  friend bool operator==(const SimpleType&, const SimpleType&) = default;
  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

/// Empty string when (family, rank) is a valid simple type, otherwise the reason.
inline std::string simple_type_problem(Family family, int rank) {
  const std::string name = family_letter(family) + std::to_string(rank);
  auto need = [&](bool ok, const char* allowed) {
    return ok ? std::string() : "rank out of range for " + name + " (" + allowed + ")";
  };
  switch (family) {
    case Family::A: return need(rank >= 1 && rank <= kMaxRank, "A needs 1 <= rank <= 32");
    case Family::B: return need(rank >= 2 && rank <= kMaxRank, "B needs 2 <= rank <= 32");
    case Family::C: return need(rank >= 2 && rank <= kMaxRank, "C needs 2 <= rank <= 32");
    case Family::D: return need(rank >= 3 && rank <= kMaxRank, "D needs 3 <= rank <= 32");
    case Family::E: return need(rank >= 6 && rank <= 8, "E needs rank 6, 7 or 8");
    case Family::F: return need(rank == 4, "F needs rank 4");
    case Family::G: return need(rank == 2, "G needs rank 2");
  }
  return "unknown family";
}

inline void validate_simple_type(Family family, int rank) {
  if (auto p = simple_type_problem(family, rank); !p.empty()) throw DomainError(p);
}

inline IntMatrix cartan_matrix(Family family, int rank) {
  validate_simple_type(family, rank);
  const auto n = static_cast<std::size_t>(rank);
  IntMatrix c = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) c(i, i) = 2;
  auto link = [&](std::size_t i, std::size_t j, std::int64_t cij, std::int64_t cji) {
    c(i, j) = cij;
    c(j, i) = cji;
  };
  switch (family) {
    case Family::A:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      break;
    case Family::B:  // alpha_r short
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 2, n - 1, -2, -1);
      break;
    case Family::C:  // alpha_r long
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 2, n - 1, -1, -2);
      break;
    case Family::D:
      for (std::size_t i = 0; i + 3 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 3, n - 2, -1, -1);
      link(n - 3, n - 1, -1, -1);
      break;
    case Family::E:
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 4, n - 1, -1, -1);
      break;
    case Family::F:  // alpha_1, alpha_2 long
      link(0, 1, -1, -1);
      link(1, 2, -2, -1);
      link(2, 3, -1, -1);
      break;
    case Family::G:  // alpha_1 short
      link(0, 1, -1, -3);
      break;
  }
  return c;
}

/// A positive root in three coordinate systems.
struct PositiveRoot {
  std::vector<std::int64_t> simple;  ///< in the basis of simple roots
  std::vector<std::int64_t> coroot;  ///< its coroot in the basis of simple coroots
  Weight weight;                     ///< fundamental-weight coordinates
  std::int64_t height = 0;
};

class RootSystem {
 public:
  RootSystem(Family family, int rank) : type_{family, rank}, cartan_(cartan_matrix(family, rank)) {
    const std::size_t n = cartan_.size();
    compute_symmetrizer();
    compute_positive_roots();

    const RationalMatrix cinv = inverse(cartan_);
    gram_.assign(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) gram_[i][j] = cinv[i][j] * Rational(symmetrizer_[j]);
    std::int64_t denom = 1;
    for (const auto& row : gram_)
      for (const auto& q : row) denom = std::lcm(denom, q.denominator());
    gram_scale_ = denom;
    scaled_gram_ = IntMatrix(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        scaled_gram_(i, j) = (gram_[i][j] * Rational(denom)).numerator();

    // delta = C^T c  =>  c = (C^T)^{-1} delta
    simple_coords_ = inverse(cartan_.transpose());
    height_row_.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) height_row_[k] += simple_coords_[i][k];
  }

  const SimpleType& type() const { return type_; }
  Family family() const { return type_.family; }
  int rank() const { return type_.rank; }
  std::size_t dim() const { return cartan_.size(); }
  std::string name() const { return type_.to_string(); }

  const IntMatrix& cartan() const { return cartan_; }
  const std::vector<PositiveRoot>& positive_roots() const { return positive_; }
  std::size_t num_positive_roots() const { return positive_.size(); }
  /// (alpha_i, alpha_i) / 2 for each simple root.
  const std::vector<std::int64_t>& symmetrizer() const { return symmetrizer_; }

  Weight simple_root(std::size_t i) const {
    Weight w(dim());
    for (std::size_t k = 0; k < dim(); ++k) w[k] = cartan_(i, k);
    return w;
  }

  std::vector<Weight> simple_roots() const {
    std::vector<Weight> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(simple_root(i));
    return out;
  }

  std::vector<Weight> fundamental_weights() const {
    std::vector<Weight> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(Weight::fundamental(dim(), i));
    return out;
  }

  /// All roots, positive and negative, in fundamental coordinates.
  std::vector<Weight> roots() const {
    std::vector<Weight> out;
    for (const auto& r : positive_) {
      out.push_back(r.weight);
      out.push_back(-r.weight);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Weight rho() const {
    Weight w(dim());
    for (std::size_t i = 0; i < dim(); ++i) w[i] = 1;
    return w;
  }

  /// Invariant form on weights.
  Rational inner(const Weight& a, const Weight& b) const {
    return Rational(inner_scaled(a, b), gram_scale_);
  }

  /// inner() multiplied by a fixed positive integer, for integer-only loops.
  std::int64_t inner_scaled(const Weight& a, const Weight& b) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (a[i] == 0) continue;
      std::int64_t t = 0;
      for (std::size_t j = 0; j < dim(); ++j) t += scaled_gram_(i, j) * b[j];
      s += a[i] * t;
    }
    return s;
  }

  /// <w, beta^vee> for the positive root with the given index.
  std::int64_t coroot_pairing(const Weight& w, std::size_t root_index) const {
    const auto& c = positive_.at(root_index).coroot;
    std::int64_t s = 0;
    for (std::size_t i = 0; i < dim(); ++i) s += c[i] * w[i];
    return s;
  }

  /// Simple reflection s_i(w) = w - w_i alpha_i.
  Weight reflect(const Weight& w, std::size_t i) const {
    check(w);
    Weight out = w;
    const std::int64_t k = w[i];
    if (k != 0)
      for (std::size_t j = 0; j < dim(); ++j) out[j] -= k * cartan_(i, j);
    return out;
  }

  /// Coordinates of a root-lattice element in the basis of simple roots.
  /// Returns rationals; non-integral entries mean the argument is not in the
  /// root lattice.
  RationalVector to_simple_root_coords(const Weight& w) const {
    check(w);
    RationalVector c(dim(), Rational(0));
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t k = 0; k < dim(); ++k) c[i] += simple_coords_[i][k] * Rational(w[k]);
    return c;
  }

  /// Height of a weight, i.e. the sum of its simple-root coordinates.
  Rational height(const Weight& w) const {
    check(w);
    Rational h(0);
    for (std::size_t k = 0; k < dim(); ++k) h += height_row_[k] * Rational(w[k]);
    return h;
  }

  /// True iff b - a is a non-negative integer combination of simple roots.
  bool dominated_by(const Weight& a, const Weight& b) const {
    for (const auto& c : to_simple_root_coords(b - a))
      if (c.denominator() != 1 || c.numerator() < 0) return false;
    return true;
  }

  void check(const Weight& w) const {
    if (w.size() != dim())
      throw DomainError("weight has length " + std::to_string(w.size()) + ", expected rank " +
                        std::to_string(dim()) + " for " + name());
  }

 private:
  void compute_symmetrizer() {
    const std::size_t n = cartan_.size();
    std::vector<Rational> d(n, Rational(0));
    d[0] = 1;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      const auto i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || cartan_(i, j) == 0 || d[j].numerator() != 0) continue;
        // C(i,j) d_j = C(j,i) d_i
        d[j] = d[i] * Rational(cartan_(j, i), cartan_(i, j));
        queue.push_back(j);
      }
    }
    Rational smallest = *std::min_element(d.begin(), d.end());
    std::int64_t lcm_den = 1;
    for (auto& x : d) {
      x /= smallest;
      lcm_den = std::lcm(lcm_den, x.denominator());
    }
    symmetrizer_.clear();
    for (auto& x : d) symmetrizer_.push_back((x * Rational(lcm_den)).numerator());
  }

  void compute_positive_roots() {
    const std::size_t n = cartan_.size();
    using Coords = std::vector<std::int64_t>;
    std::set<Coords> seen;
    std::deque<Coords> queue;
    for (std::size_t i = 0; i < n; ++i) {
      Coords e(n, 0);
      e[i] = 1;
      seen.insert(e);
      queue.push_back(e);
    }
    while (!queue.empty()) {
      Coords beta = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < n; ++i) {
        std::int64_t pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * cartan_(j, i);
        if (pairing == 0) continue;
        Coords gamma = beta;
        gamma[i] -= pairing;
        // s_i permutes the positive roots other than alpha_i
        if (gamma[i] < 0) continue;
        if (seen.insert(gamma).second) queue.push_back(gamma);
      }
    }

    for (const auto& s : seen) {
      PositiveRoot r;
      r.simple = s;
      r.weight = Weight(n);
      for (std::size_t k = 0; k < n; ++k) {
        std::int64_t v = 0;
        for (std::size_t j = 0; j < n; ++j) v += s[j] * cartan_(j, k);
        r.weight[k] = v;
      }
      // (beta, beta) = sum_{ij} s_i s_j C(i,j) d_j and beta^vee = beta / d_beta
      std::int64_t norm2 = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) norm2 += s[i] * s[j] * cartan_(i, j) * symmetrizer_[j];
      const std::int64_t d_beta = norm2 / 2;
      r.coroot.resize(n);
      for (std::size_t j = 0; j < n; ++j) {
        if ((s[j] * symmetrizer_[j]) % d_beta != 0) throw InternalError("non-integral coroot");
        r.coroot[j] = s[j] * symmetrizer_[j] / d_beta;
      }
      r.height = 0;
      for (auto x : s) r.height += x;
      positive_.push_back(std::move(r));
    }
    std::sort(positive_.begin(), positive_.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
      if (a.height != b.height) return a.height < b.height;
      return a.simple > b.simple;
    });
  }

  SimpleType type_;
  IntMatrix cartan_;
  std::vector<std::int64_t> symmetrizer_;
  std::vector<PositiveRoot> positive_;
  RationalMatrix gram_;
  IntMatrix scaled_gram_;
  std::int64_t gram_scale_ = 1;
  RationalMatrix simple_coords_;
  RationalVector height_row_;
};

inline RootSystem build_root_system(Family family, int rank) { return RootSystem(family, rank); }

inline bool is_dominant(const RootSystem& rs, const Weight& w) {
  rs.check(w);
  return w.is_dominant();
}

struct DominantRepresentative {
  Weight weight;
  std::size_t reflections = 0;  ///< length of the reflection word used; its parity is the sign
};

/// Moves w into the dominant chamber by simple reflections.
inline DominantRepresentative dominant_representative(const RootSystem& rs, Weight w) {
  rs.check(w);
  std::size_t count = 0;
  for (;;) {
    std::size_t i = 0;
    while (i < w.size() && w[i] >= 0) ++i;
    if (i == w.size()) break;
    w = rs.reflect(w, i);
    ++count;
  }
  return {std::move(w), count};
}

inline constexpr std::size_t kDefaultOrbitBudget = 1'000'000;

/// Weyl orbit of w, sorted in canonical (lexicographic) order.
inline std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w,
                                      std::size_t budget = kDefaultOrbitBudget) {
  rs.check(w);
  std::set<Weight> seen{w};
  std::deque<Weight> queue{w};
  while (!queue.empty()) {
    Weight cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < rs.dim(); ++i) {
      if (cur[i] == 0) continue;
      Weight next = rs.reflect(cur, i);
      if (seen.insert(next).second) {
        if (seen.size() > budget)
          throw BudgetExceeded("Weyl orbit exceeds budget of " + std::to_string(budget) + " weights");
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------
// epsilon coordinates (types A and D)

/// Image of each fundamental weight in epsilon coordinates; column i is varpi_i.
inline RationalMatrix epsilon_images(const RootSystem& rs) {
  const std::size_t r = rs.dim();
  if (rs.family() == Family::A) {
    const std::size_t n = r + 1;
    RationalMatrix m(n, RationalVector(r, Rational(0)));
    for (std::size_t i = 0; i < r; ++i) {
      const Rational shift(static_cast<std::int64_t>(i + 1), static_cast<std::int64_t>(n));
      for (std::size_t k = 0; k < n; ++k) m[k][i] = (k <= i ? Rational(1) : Rational(0)) - shift;
    }
    return m;
  }
  if (rs.family() == Family::D) {
    RationalMatrix m(r, RationalVector(r, Rational(0)));
    for (std::size_t i = 0; i + 2 < r; ++i)
      for (std::size_t k = 0; k <= i; ++k) m[k][i] = 1;
    for (std::size_t k = 0; k < r; ++k) {
      m[k][r - 2] = Rational(k + 1 == r ? -1 : 1, 2);
      m[k][r - 1] = Rational(1, 2);
    }
    return m;
  }
  throw DomainError("epsilon coordinates are only available for types A and D, not " + rs.name());
}

inline RationalVector to_epsilon(const RootSystem& rs, const Weight& w) {
  rs.check(w);
  const RationalMatrix m = epsilon_images(rs);
  RationalVector out(m.size(), Rational(0));
  for (std::size_t k = 0; k < m.size(); ++k)
    for (std::size_t i = 0; i < w.size(); ++i) out[k] += m[k][i] * Rational(w[i]);
  return out;
}

/// Inverse of to_epsilon. For type A any representative modulo (1,...,1) is
/// accepted. Throws if the vector is not an integral weight.
inline Weight from_epsilon(const RootSystem& rs, const RationalVector& eps) {
  const std::size_t r = rs.dim();
  RationalVector fund(r);
  if (rs.family() == Family::A) {
    if (eps.size() != r + 1) throw DomainError("type A epsilon vector must have rank+1 entries");
    for (std::size_t i = 0; i < r; ++i) fund[i] = eps[i] - eps[i + 1];
  } else if (rs.family() == Family::D) {
    if (eps.size() != r) throw DomainError("type D epsilon vector must have rank entries");
    for (std::size_t i = 0; i + 1 < r; ++i) fund[i] = eps[i] - eps[i + 1];
    fund[r - 1] = eps[r - 2] + eps[r - 1];
  } else {
    throw DomainError("epsilon coordinates are only available for types A and D, not " + rs.name());
  }
  Weight w(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (fund[i].denominator() != 1) throw DomainError("epsilon vector is not an integral weight");
    w[i] = fund[i].numerator();
  }
  return w;
}

/// Dominance in epsilon coordinates for D_r: mu_1 >= ... >= mu_{r-1} >= |mu_r|.
inline bool is_dominant_epsilon_d(const RationalVector& mu) {
  const std::size_t r = mu.size();
  for (std::size_t i = 0; i + 2 < r; ++i)
    if (mu[i] < mu[i + 1]) return false;
  if (r >= 2) {
    const Rational last = mu[r - 1].numerator() < 0 ? -mu[r - 1] : mu[r - 1];
    if (mu[r - 2] < last) return false;
  }
  return true;
}

}  // namespace weylinv
