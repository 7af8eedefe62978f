#pragma once

// Littlewood-Richardson rule for Spin_{2r} with rectangular shapes q*varpi_r,
// the closed-form decomposition of V(p varpi_{2n+1}) (x) V(q varpi_{2n+1}),
// and the invariant-free verdict for half-spin triples.
//
// Tableaux are q rows by r columns. Rows are listed from the top; columns
// ascend from bottom to top, so every row is entrywise <= the row above it.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weylinv/character.hpp"
#include "weylinv/errors.hpp"
#include "weylinv/linalg.hpp"
#include "weylinv/root_system.hpp"

namespace weylinv {

inline void require_spin_rank(int r) {
  if (r < 2 || r > kMaxRank) throw DomainError("Spin rank must satisfy 2 <= r <= 32, got " + std::to_string(r));
}

/// varpi_i -> eps_1+...+eps_i (i <= r-2), varpi_{r-1} -> (eps_1+...+eps_{r-1}-eps_r)/2,
/// varpi_r -> (eps_1+...+eps_r)/2. Valid for every r >= 2.
inline RationalVector d_to_epsilon(int r, const Weight& w) {
  require_spin_rank(r);
  const auto n = static_cast<std::size_t>(r);
  if (w.size() != n) throw DomainError("weight length does not match Spin rank");
  RationalVector eps(n, Rational(0));
  for (std::size_t i = 0; i + 2 < n; ++i)
    for (std::size_t k = 0; k <= i; ++k) eps[k] += Rational(w[i]);
  for (std::size_t k = 0; k < n; ++k) {
    eps[k] += Rational(k + 1 == n ? -w[n - 2] : w[n - 2], 2);
    eps[k] += Rational(w[n - 1], 2);
  }
  return eps;
}

inline Weight d_from_epsilon(int r, const RationalVector& eps) {
  require_spin_rank(r);
  const auto n = static_cast<std::size_t>(r);
  if (eps.size() != n) throw DomainError("epsilon vector length does not match Spin rank");
  Weight w(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational c = i + 1 < n ? eps[i] - eps[i + 1] : eps[n - 2] + eps[n - 1];
    if (c.denominator() != 1) throw DomainError("epsilon vector is not an integral weight");
    w[i] = c.numerator();
  }
  return w;
}

/// Young diagram attached to a dominant weight of Spin_{2r}.
struct SpinShape {
  int rank = 0;
  Weight source;
  std::vector<std::int64_t> rows;  ///< c_1 >= c_2 >= ..., trailing zeros dropped
  /// (q, r) when source = q varpi_r: the working tableau is q rows by r columns.
  std::optional<std::pair<std::int64_t, int>> rectangle;
};

inline SpinShape shape_of_weight(int r, const Weight& lambda) {
  require_spin_rank(r);
  const auto n = static_cast<std::size_t>(r);
  if (lambda.size() != n) throw DomainError("weight length does not match Spin rank");
  if (!lambda.is_dominant()) throw DomainError("weight (" + lambda.to_string() + ") is not dominant");
  SpinShape s{r, lambda, {}, std::nullopt};
  const std::int64_t tail = lambda[n - 2] + lambda[n - 1];
  for (std::size_t p = 0; p < n; ++p) {
    std::int64_t c = 0;
    if (p + 2 < n) {
      for (std::size_t i = p; i + 2 < n; ++i) c += 2 * lambda[i];
      c += tail;
    } else if (p + 2 == n) {
      c = tail;
    } else {
      c = lambda[n - 1];
    }
    s.rows.push_back(c);
  }
  while (!s.rows.empty() && s.rows.back() == 0) s.rows.pop_back();
  bool only_last = true;
  for (std::size_t i = 0; i + 1 < n; ++i) only_last = only_last && lambda[i] == 0;
  if (only_last) s.rectangle = std::make_pair(lambda[n - 1], r);
  return s;
}

struct SpinTableau {
  int rank = 0;
  std::vector<std::vector<int>> rows;  ///< top row first

  friend bool operator==(const SpinTableau&, const SpinTableau&) = default;
  friend auto operator<=>(const SpinTableau&, const SpinTableau&) = default;
};

/// The row that keeps `kept` from 1..r and pads with 2r+1-j for the removed j.
inline std::vector<int> spin_row(int r, const std::vector<int>& kept) {
  require_spin_rank(r);
  std::vector<bool> in(static_cast<std::size_t>(r) + 1, false);
  for (int i : kept) {
    if (i < 1 || i > r) throw DomainError("kept index out of range 1.." + std::to_string(r));
    in[static_cast<std::size_t>(i)] = true;
  }
  std::vector<int> row;
  for (int i = 1; i <= r; ++i)
    if (in[static_cast<std::size_t>(i)]) row.push_back(i);
  for (int j = r; j >= 1; --j)
    if (!in[static_cast<std::size_t>(j)]) row.push_back(2 * r + 1 - j);
  return row;
}

/// All rows allowed in a standard tableau of width r, in lexicographic order.
inline std::vector<std::vector<int>> spin_rows(int r) {
  require_spin_rank(r);
  if (r > 20) throw BudgetExceeded("too many Spin rows to enumerate for rank " + std::to_string(r));
  std::vector<std::vector<int>> rows;
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    std::vector<int> kept;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) kept.push_back(i + 1);
    if ((r - static_cast<int>(kept.size())) % 2 != 0) continue;
    rows.push_back(spin_row(r, kept));
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

/// The five standardness conditions for a rectangular tableau.
inline bool is_standard(const SpinTableau& t) {
  const int r = t.rank;
  if (r < 2) return false;
  for (std::size_t k = 0; k < t.rows.size(); ++k) {
    const auto& row = t.rows[k];
    if (row.size() != static_cast<std::size_t>(r)) return false;
    int big = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] < 1 || row[j] > 2 * r) return false;
      if (j && row[j] <= row[j - 1]) return false;
      if (std::find(row.begin(), row.end(), 2 * r + 1 - row[j]) != row.end()) return false;
      if (row[j] > r) ++big;
      if (k && row[j] > t.rows[k - 1][j]) return false;
    }
    if (big % 2 != 0) return false;
  }
  return true;
}

inline constexpr std::uint64_t kDefaultTableauBudget = 5'000'000;

/// All standard tableaux of the q x r rectangle, in row-lexicographic order.
inline std::vector<SpinTableau> enumerate_standard_tableaux(int r, std::int64_t q,
                                                            std::uint64_t budget = kDefaultTableauBudget) {
  require_spin_rank(r);
  if (q < 0) throw DomainError("number of rows must be non-negative");
  const auto rows = spin_rows(r);
  std::vector<SpinTableau> out;
  SpinTableau cur{r, {}};
  auto below = [](const std::vector<int>& lower, const std::vector<int>& upper) {
    for (std::size_t j = 0; j < lower.size(); ++j)
      if (lower[j] > upper[j]) return false;
    return true;
  };
  auto dfs = [&](auto&& self) -> void {
    if (static_cast<std::int64_t>(cur.rows.size()) == q) {
      if (out.size() >= budget)
        throw BudgetExceeded("more than " + std::to_string(budget) + " standard tableaux");
      out.push_back(cur);
      return;
    }
    for (const auto& row : rows) {
      if (!cur.rows.empty() && !below(row, cur.rows.back())) continue;
      cur.rows.push_back(row);
      self(self);
      cur.rows.pop_back();
    }
  };
  dfs(dfs);
  return out;
}

/// v(T) restricted to the top m rows (all rows when m is omitted), in
/// epsilon coordinates.
inline RationalVector tableau_weight(const SpinTableau& t, std::optional<std::size_t> m = std::nullopt) {
  const int r = t.rank;
  require_spin_rank(r);
  const std::size_t used = std::min(m.value_or(t.rows.size()), t.rows.size());
  std::vector<std::int64_t> count(2 * static_cast<std::size_t>(r) + 1, 0);
  for (std::size_t k = 0; k < used; ++k)
    for (int x : t.rows[k]) {
      if (x < 1 || x > 2 * r) throw DomainError("tableau entry out of range");
      ++count[static_cast<std::size_t>(x)];
    }
  RationalVector v(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i)
    v[static_cast<std::size_t>(i - 1)] =
        Rational(count[static_cast<std::size_t>(i)] - count[static_cast<std::size_t>(2 * r + 1 - i)], 2);
  return v;
}

/// 2 lambda + 2 v_m(T) is dominant for every m = 1..rows.
inline bool is_lambda_dominant(const Weight& lambda, const SpinTableau& t) {
  const RationalVector base = d_to_epsilon(t.rank, lambda);
  for (std::size_t m = 1; m <= t.rows.size(); ++m) {
    const RationalVector v = tableau_weight(t, m);
    RationalVector mu(base.size());
    for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = Rational(2) * (base[i] + v[i]);
    if (!is_dominant_epsilon_d(mu)) return false;
  }
  return true;
}

/// V(p varpi_r) (x) V(q varpi_r) as the sum of V(p varpi_r + v(T)) over
/// p varpi_r-dominant standard tableaux of the q x r rectangle.
inline DecompositionResult lr_tensor_decompose(int r, std::int64_t p, std::int64_t q,
                                               std::uint64_t budget = kDefaultTableauBudget) {
  require_spin_rank(r);
  if (q < 0) throw DomainError("q must be non-negative");
  if (p < q) throw DomainError("lr_tensor_decompose needs p >= q, got p = " + std::to_string(p) +
                               ", q = " + std::to_string(q));
  Weight lambda(static_cast<std::size_t>(r));
  lambda[static_cast<std::size_t>(r) - 1] = p;
  const RationalVector base = d_to_epsilon(r, lambda);
  DecompositionResult out;
  for (const auto& t : enumerate_standard_tableaux(r, q, budget)) {
    if (!is_lambda_dominant(lambda, t)) continue;
    RationalVector v = tableau_weight(t);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += base[i];
    ++out.summands[d_from_epsilon(r, v)];
  }
  return out;
}

/// Sum over s = 0..q and multisets i_1 <= ... <= i_s of odd numbers <= 2n-1 of
/// V((p+q-2s) varpi_{2n+1} + varpi_{i_1} + ... + varpi_{i_s}).
inline DecompositionResult half_spin_closed_form(int n, std::int64_t p, std::int64_t q) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (q < 0) throw DomainError("q must be non-negative");
  if (p < q) throw DomainError("half_spin_closed_form needs p >= q, got p = " + std::to_string(p) +
                               ", q = " + std::to_string(q));
  const auto r = static_cast<std::size_t>(2 * n + 1);
  DecompositionResult out;
  std::vector<int> multiset;
  auto emit = [&] {
    Weight w(r);
    w[r - 1] = p + q - 2 * static_cast<std::int64_t>(multiset.size());
    for (int i : multiset) ++w[static_cast<std::size_t>(i - 1)];
    if (++out.summands[w] != 1) throw InternalError("closed form produced a repeated summand");
  };
  auto rec = [&](auto&& self, int smallest) -> void {
    emit();
    if (static_cast<std::int64_t>(multiset.size()) == q) return;
    for (int i = smallest; i <= 2 * n - 1; i += 2) {
      multiset.push_back(i);
      self(self, i);
      multiset.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

struct InvariantFreeVerdict {
  bool invariant_free = false;
  std::int64_t p = 0, q = 0, t = 0;            ///< sorted, p >= q >= t
  Rational min_first_coordinate;              ///< over all candidate weights kappa + v(T)
  std::string reason;
  std::optional<std::int64_t> oracle_invariants;  ///< set when the oracle check ran
};

/// (p varpi, q varpi, t varpi) for Spin_{4n+2}, varpi = varpi_{2n+1}.
///
/// Every summand kappa of V(p varpi) (x) V(q varpi) has first epsilon
/// coordinate (p+q)/2, and every tableau of the t-row rectangle contributes at
/// least -t/2 there, so kappa + v(T) = 0 is impossible.
inline InvariantFreeVerdict is_invariant_free_triple(int n, std::int64_t p, std::int64_t q, std::int64_t t,
                                                     bool oracle_check = false, const OracleLimits& limits = {}) {
  if (n < 1) throw DomainError("n must be at least 1");
  std::vector<std::int64_t> v{p, q, t};
  std::sort(v.rbegin(), v.rend());
  if (v[2] < 1) throw DomainError("triple entries must be positive");
  InvariantFreeVerdict out;
  out.p = v[0];
  out.q = v[1];
  out.t = v[2];
  const int r = 2 * n + 1;

  std::optional<Rational> kappa_min;
  for (const auto& [kappa, m] : half_spin_closed_form(n, out.p, out.q).summands) {
    const Rational e1 = d_to_epsilon(r, kappa)[0];
    if (!kappa_min || e1 < *kappa_min) kappa_min = e1;
  }
  Rational row_min(0);
  for (const auto& row : spin_rows(r)) {
    const Rational e1 = tableau_weight(SpinTableau{r, {row}})[0];
    if (e1 < row_min) row_min = e1;
  }
  out.min_first_coordinate = *kappa_min + Rational(out.t) * row_min;
  out.invariant_free = out.min_first_coordinate > Rational(0);
  out.reason = "first epsilon-coordinate of every candidate weight kappa + v(T) is at least " +
               to_string(out.min_first_coordinate) + (out.invariant_free ? " > 0" : " <= 0") +
               ", so the zero weight " + (out.invariant_free ? "cannot occur" : "is not excluded");
  if (!out.invariant_free) throw InternalError("first-coordinate bound failed for a half-spin triple");

  if (oracle_check) {
    const RootSystem rs(Family::D, r);
    Weight w(static_cast<std::size_t>(r));
    std::vector<Weight> factors;
    for (auto k : v) {
      w[static_cast<std::size_t>(r) - 1] = k;
      factors.push_back(w);
    }
    out.oracle_invariants = invariant_dimension(rs, factors, limits);
  }
  return out;
}

}  // namespace weylinv
