#pragma once

// Integer polynomials: characteristic polynomials of integer matrices and
// cyclotomic factorisation.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "weylinv/errors.hpp"
#include "weylinv/linalg.hpp"

namespace weylinv {

/// Coefficients from the constant term upwards; no trailing zeros except for
/// the zero polynomial, which is empty.
using IntPoly = std::vector<std::int64_t>;

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

/// Exact division by a monic divisor; nullopt when the remainder is nonzero.
inline std::optional<IntPoly> poly_divide_exact(IntPoly num, const IntPoly& den) {
  if (den.empty() || den.back() != 1) throw InternalError("poly_divide_exact needs a monic divisor");
  trim(num);
  if (num.size() < den.size()) {
    if (num.empty()) return IntPoly{};
    return std::nullopt;
  }
  IntPoly q(num.size() - den.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::int64_t c = num[k + den.size() - 1];
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
  }
  trim(num);
  if (!num.empty()) return std::nullopt;
  trim(q);
  return q;
}

/// The d-th cyclotomic polynomial, via (x^d - 1) / prod_{e | d, e < d} Phi_e.
inline IntPoly cyclotomic_polynomial(std::int64_t d) {
  if (d < 1) throw DomainError("cyclotomic index must be positive");
  IntPoly p(static_cast<std::size_t>(d) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(d)] = 1;
  for (std::int64_t e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    auto q = poly_divide_exact(p, cyclotomic_polynomial(e));
    if (!q) throw InternalError("cyclotomic recursion failed");
    p = *q;
  }
  return p;
}

/// det(x I - m) by the Faddeev-LeVerrier recursion in exact big integers.
inline IntPoly characteristic_polynomial(const IntMatrix& m) {
  using boost::multiprecision::cpp_int;
  const std::size_t n = m.size();
  using BigMatrix = std::vector<std::vector<cpp_int>>;
  BigMatrix a(n, std::vector<cpp_int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);

  std::vector<cpp_int> coeff(n + 1);
  coeff[n] = 1;
  BigMatrix mk(n, std::vector<cpp_int>(n));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    BigMatrix next(n, std::vector<cpp_int>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        cpp_int s = 0;
        for (std::size_t l = 0; l < n; ++l) s += a[i][l] * mk[l][j];
        next[i][j] = s;
      }
    for (std::size_t i = 0; i < n; ++i) next[i][i] += coeff[n - k + 1];
    mk = std::move(next);
    cpp_int trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace += a[i][l] * mk[l][i];
    const cpp_int kk = static_cast<long long>(k);
    if (trace % kk != 0) throw InternalError("Faddeev-LeVerrier division was not exact");
    coeff[n - k] = -trace / kk;
  }

  IntPoly out;
  for (const auto& c : coeff) {
    if (c > std::numeric_limits<std::int64_t>::max() || c < std::numeric_limits<std::int64_t>::min())
      throw InternalError("characteristic polynomial coefficient overflows 64 bits");
    out.push_back(static_cast<std::int64_t>(c));
  }
  return out;
}

/// Factor p completely into cyclotomic polynomials Phi_d with d dividing
/// `period`. Returns d -> multiplicity, or nullopt if p has another factor.
inline std::optional<std::map<std::int64_t, int>> cyclotomic_factorization(IntPoly p,
                                                                           std::int64_t period) {
  std::map<std::int64_t, int> out;
  for (std::int64_t d = 1; d <= period; ++d) {
    if (period % d != 0) continue;
    const IntPoly phi = cyclotomic_polynomial(d);
    while (true) {
      auto q = poly_divide_exact(p, phi);
      if (!q) break;
      p = std::move(*q);
      ++out[d];
    }
  }
  if (p != IntPoly{1}) return std::nullopt;
  return out;
}

inline std::string poly_to_string(const IntPoly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    const std::int64_t c = p[k];
    if (c == 0) continue;
    const std::int64_t a = c < 0 ? -c : c;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    if (a != 1 || k == 0) out += std::to_string(a);
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace weylinv
