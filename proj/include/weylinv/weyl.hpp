#pragma once

// Weyl group elements as integer matrices on the weight lattice (fundamental
// coordinates), Coxeter elements, orders and exponents.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "weylinv/errors.hpp"
#include "weylinv/linalg.hpp"
#include "weylinv/polynomial.hpp"
#include "weylinv/root_system.hpp"

namespace weylinv {

class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(IntMatrix matrix, std::optional<std::vector<int>> word = std::nullopt)
      : matrix_(std::move(matrix)), word_(std::move(word)) {}

  static WeylElement identity(std::size_t rank) {
    return WeylElement(IntMatrix::identity(rank), std::vector<int>{});
  }

  static WeylElement simple_reflection(const RootSystem& rs, std::size_t i) {
    if (i >= rs.dim()) throw DomainError("simple reflection index out of range");
    IntMatrix m = IntMatrix::identity(rs.dim());
    // s_i(w)_k = w_k - w_i * C(i, k)
    for (std::size_t k = 0; k < rs.dim(); ++k) m(k, i) -= rs.cartan()(i, k);
    return WeylElement(std::move(m), std::vector<int>{static_cast<int>(i)});
  }

  /// Product s_{word[0]} s_{word[1]} ... (the last letter acts first).
  static WeylElement from_word(const RootSystem& rs, const std::vector<int>& word) {
    WeylElement w = identity(rs.dim());
    for (int i : word) w = w * simple_reflection(rs, static_cast<std::size_t>(i));
    return w;
  }

  const IntMatrix& matrix() const { return matrix_; }
  const std::optional<std::vector<int>>& word() const { return word_; }
  std::size_t rank() const { return matrix_.size(); }
  bool is_identity() const { return matrix_ == IntMatrix::identity(matrix_.size()); }

  Weight apply(const Weight& w) const { return matrix_.apply(w); }

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    std::optional<std::vector<int>> word;
    if (a.word_ && b.word_) {
      word = *a.word_;
      word->insert(word->end(), b.word_->begin(), b.word_->end());
    }
    return WeylElement(a.matrix_ * b.matrix_, std::move(word));
  }

  WeylElement pow(std::int64_t k) const {
    if (k < 0) throw DomainError("negative powers are not supported");
    WeylElement result = identity(rank());
    for (std::int64_t i = 0; i < k; ++i) result = result * *this;
    return result;
  }

  /// Drop the word, e.g. when it has grown long and is no longer useful.
  WeylElement without_word() const { return WeylElement(matrix_); }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix_ == b.matrix_; }
  friend auto operator<=>(const WeylElement& a, const WeylElement& b) { return a.matrix_ <=> b.matrix_; }

 private:
  IntMatrix matrix_;
  std::optional<std::vector<int>> word_;
};

/// s_1 s_2 ... s_r in index order.
inline WeylElement coxeter_element(const RootSystem& rs) {
  std::vector<int> word(rs.dim());
  std::iota(word.begin(), word.end(), 0);
  return WeylElement::from_word(rs, word);
}

/// Number of positive roots sent to negative roots.
inline std::size_t weyl_length(const RootSystem& rs, const WeylElement& w) {
  std::set<Weight> positive;
  for (const auto& a : rs.positive_roots()) positive.insert(a.weight);
  std::size_t len = 0;
  for (const auto& a : rs.positive_roots()) len += positive.count(w.apply(a.weight)) ? 0 : 1;
  return len;
}

inline constexpr std::int64_t kMaxElementOrder = 1'000'000;

inline std::int64_t element_order(const WeylElement& w) {
  const IntMatrix id = IntMatrix::identity(w.rank());
  IntMatrix power = w.matrix();
  for (std::int64_t k = 1; k <= kMaxElementOrder; ++k) {
    if (power == id) return k;
    power = power * w.matrix();
  }
  throw InternalError("element order exceeds " + std::to_string(kMaxElementOrder) +
                      "; the matrix is not a Weyl group element");
}

inline std::int64_t coxeter_number(const RootSystem& rs) { return element_order(coxeter_element(rs)); }

/// Exponents m_1 <= ... <= m_r read off from the cyclotomic factorisation of
/// the characteristic polynomial of a Coxeter element.
inline std::vector<std::int64_t> exponents(const RootSystem& rs) {
  const WeylElement c = coxeter_element(rs);
  const std::int64_t h = element_order(c);
  const IntPoly chi = characteristic_polynomial(c.matrix());
  const auto factors = cyclotomic_factorization(chi, h);
  if (!factors)
    throw InternalError("characteristic polynomial of the Coxeter element of " + rs.name() +
                        " is not a product of cyclotomic polynomials");
  std::vector<std::int64_t> out;
  for (const auto& [d, mult] : *factors)
    for (int rep = 0; rep < mult; ++rep)
      for (std::int64_t j = 1; j <= d; ++j)
        if (std::gcd(j, d) == 1) out.push_back(j * (h / d));
  std::sort(out.begin(), out.end());

  // m_i + m_{r+1-i} = h and sum m_i = |positive roots| hold for every
  // irreducible Weyl group.
  if (out.size() != rs.dim()) throw InternalError("wrong number of exponents for " + rs.name());
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    sum += out[i];
    if (out[i] + out[out.size() - 1 - i] != h) throw InternalError("exponents are not symmetric");
  }
  if (sum != static_cast<std::int64_t>(rs.num_positive_roots()))
    throw InternalError("exponents do not sum to the number of positive roots");
  return out;
}

/// |W| = prod (m_i + 1).
inline std::uint64_t weyl_group_order(const RootSystem& rs) {
  std::uint64_t n = 1;
  for (auto m : exponents(rs)) n *= static_cast<std::uint64_t>(m + 1);
  return n;
}

/// Longest element w0, found by reflecting rho until it becomes antidominant.
inline WeylElement longest_element(const RootSystem& rs) {
  Weight w = rs.rho();
  std::vector<int> applied;
  for (;;) {
    std::size_t i = 0;
    while (i < w.size() && w[i] < 0) ++i;
    if (i == w.size()) break;
    w = rs.reflect(w, i);
    applied.push_back(static_cast<int>(i));
  }
  std::reverse(applied.begin(), applied.end());
  return WeylElement::from_word(rs, applied);
}

inline bool minus_identity_in_weyl(const RootSystem& rs) {
  return longest_element(rs).matrix() == -IntMatrix::identity(rs.dim());
}

inline constexpr std::size_t kDefaultGroupBudget = 100'000;

/// All elements of W by closure under right multiplication with simple
/// reflections, sorted by matrix. Words are dropped.
inline std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs,
                                                     std::size_t budget = kDefaultGroupBudget) {
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < rs.dim(); ++i) gens.push_back(WeylElement::simple_reflection(rs, i).matrix());
  std::unordered_set<IntMatrix, IntMatrixHash> seen;
  std::deque<IntMatrix> queue;
  const IntMatrix id = IntMatrix::identity(rs.dim());
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    IntMatrix cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      IntMatrix next = cur * g;
      if (seen.insert(next).second) {
        if (seen.size() > budget)
          throw BudgetExceeded("Weyl group of " + rs.name() + " exceeds enumeration budget of " +
                               std::to_string(budget));
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<IntMatrix> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<WeylElement> out;
  out.reserve(sorted.size());
  for (auto& m : sorted) out.emplace_back(std::move(m));
  return out;
}

/// -w0(lambda); fixed exactly when V(lambda) is self-conjugate.
inline Weight dual_weight(const RootSystem& rs, const Weight& lambda) {
  rs.check(lambda);
  return -longest_element(rs).apply(lambda);
}

}  // namespace weylinv
