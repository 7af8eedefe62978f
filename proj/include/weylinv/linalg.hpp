#pragma once

// Exact integer/rational vectors and matrices used throughout the library.
// Everything here is small (rank <= 8), so the implementations favour
// clarity over asymptotics.

#include <boost/rational.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "weylinv/errors.hpp"

namespace weylinv {

using Rational = boost::rational<std::int64_t>;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// An integral weight stored in the fundamental-weight basis.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : coords_(rank, 0) {}
  explicit Weight(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  static Weight fundamental(std::size_t rank, std::size_t index) {
    Weight w(rank);
    w.coords_.at(index) = 1;
    return w;
  }

  std::size_t size() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<std::int64_t>& coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const {
    for (auto c : coords_)
      if (c != 0) return false;
    return true;
  }

  bool is_dominant() const {
    for (auto c : coords_)
      if (c < 0) return false;
    return true;
  }

  Weight& operator+=(const Weight& o) {
    check_same(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check_same(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) {
    for (auto& c : a.coords_) c = -c;
    return a;
  }
  friend Weight operator*(std::int64_t k, Weight a) {
    for (auto& c : a.coords_) c *= k;
    return a;
  }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(coords_[i]);
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Weight& w) {
    return os << '(' << w.to_string() << ')';
  }

 private:
  void check_same(const Weight& o) const {
    if (o.size() != size()) throw DomainError("weight length mismatch");
  }

  std::vector<std::int64_t> coords_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto c : w) h = (h ^ static_cast<std::size_t>(c)) * 0x100000001b3ull;
    return h;
  }
};

/// Dense square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}
  IntMatrix(std::size_t n, std::vector<std::int64_t> data) : n_(n), data_(std::move(data)) {
    if (data_.size() != n * n) throw DomainError("matrix data has wrong size");
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t size() const { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const std::vector<std::int64_t>& data() const { return data_; }

  bool is_zero() const {
    for (auto x : data_)
      if (x != 0) return false;
    return true;
  }

  IntMatrix transpose() const {
    IntMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntMatrix& operator+=(const IntMatrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  IntMatrix& operator-=(const IntMatrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator-(IntMatrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    a.check_same(b);
    IntMatrix c(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        const auto aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  /// Matrix times column vector.
  Weight apply(const Weight& v) const {
    if (v.size() != n_) throw DomainError("weight length does not match matrix size");
    Weight out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j) * v[j];
      out[i] = s;
    }
    return out;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix& a, const IntMatrix& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

  std::vector<std::vector<std::int64_t>> rows() const {
    std::vector<std::vector<std::int64_t>> out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      out[i].assign(data_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                    data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
    return out;
  }

 private:
  void check_same(const IntMatrix& o) const {
    if (o.n_ != n_) throw DomainError("matrix size mismatch");
  }

  std::size_t n_ = 0;
  std::vector<std::int64_t> data_;
};

struct IntMatrixHash {
  std::size_t operator()(const IntMatrix& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto x : m.data()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
    return h;
  }
};

inline RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(m.size(), RationalVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r[i][j] = Rational(m(i, j));
  return r;
}

/// Exact determinant by fraction-free Gaussian elimination over Q.
inline Rational determinant(RationalMatrix a) {
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].numerator() == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].numerator() == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

inline std::int64_t determinant(const IntMatrix& m) {
  const Rational d = determinant(to_rational(m));
  return d.numerator();
}

inline RationalMatrix inverse(const IntMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = to_rational(m);
  RationalMatrix inv(n, RationalVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].numerator() == 0) ++pivot;
    if (pivot == n) throw DomainError("matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] /= p;
      inv[col][c] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].numerator() == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

/// Rank over Q of a list of integer vectors of common length.
inline std::size_t rational_rank(std::span<const Weight> vectors) {
  if (vectors.empty()) return 0;
  const std::size_t cols = vectors.front().size();
  RationalMatrix a;
  for (const auto& v : vectors) {
    RationalVector row(cols);
    for (std::size_t j = 0; j < cols; ++j) row[j] = Rational(v[j]);
    a.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < a.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][col].numerator() == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (a[r][col].numerator() == 0) continue;
      const Rational f = a[r][col] / a[rank][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace weylinv
