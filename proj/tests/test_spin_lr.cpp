#include <gtest/gtest.h>

#include "support.hpp"

using namespace weylinv;

namespace {

Weight top(int r, std::int64_t p) {
  Weight w(static_cast<std::size_t>(r));
  w[static_cast<std::size_t>(r) - 1] = p;
  return w;
}

RationalVector half(std::initializer_list<std::int64_t> xs) {
  RationalVector v;
  for (auto x : xs) v.emplace_back(x, 2);
  return v;
}

}  // namespace

TEST(SpinShape, Examples) {
  EXPECT_EQ(shape_of_weight(3, Weight{1, 0, 0}).rows, (std::vector<std::int64_t>{2}));
  EXPECT_EQ(shape_of_weight(5, Weight{0, 0, 0, 1, 1}).rows, (std::vector<std::int64_t>{2, 2, 2, 2, 1}));
  const auto s = shape_of_weight(3, Weight{0, 0, 2});
  ASSERT_TRUE(s.rectangle.has_value());
  EXPECT_EQ(*s.rectangle, std::make_pair(std::int64_t{2}, 3));
  EXPECT_FALSE(shape_of_weight(3, Weight{1, 0, 0}).rectangle.has_value());
  EXPECT_THROW(shape_of_weight(3, Weight{-1, 0, 0}), DomainError);
}

TEST(SpinShape, EpsilonConversion) {
  EXPECT_EQ(d_to_epsilon(3, Weight{0, 0, 1}), half({1, 1, 1}));
  EXPECT_EQ(d_to_epsilon(3, Weight{1, 0, 0}), half({2, 0, 0}));
  EXPECT_EQ(d_from_epsilon(3, half({1, -1, -1})), (Weight{1, 0, -1}));
  for (int r = 3; r <= 6; ++r) {
    const RootSystem rs(Family::D, r);
    const auto w = Weight(std::vector<std::int64_t>(static_cast<std::size_t>(r), 1));
    EXPECT_EQ(d_to_epsilon(r, w), to_epsilon(rs, w));
    EXPECT_EQ(d_from_epsilon(r, d_to_epsilon(r, w)), w);
  }
}

TEST(SpinTableaux, Rows) {
  EXPECT_EQ(spin_row(3, {1}), (std::vector<int>{1, 4, 5}));
  EXPECT_EQ(spin_row(3, {1, 2, 3}), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(spin_rows(3).size(), 4u);
  EXPECT_EQ(spin_rows(5).size(), 16u);
}

TEST(SpinTableaux, Enumeration) {
  EXPECT_EQ(enumerate_standard_tableaux(3, 1).size(), 4u);
  EXPECT_EQ(enumerate_standard_tableaux(2, 1).size(), 2u);
  for (const auto& t : enumerate_standard_tableaux(3, 3)) {
    EXPECT_TRUE(is_standard(t));
    for (const auto& row : t.rows) {
      EXPECT_TRUE(std::is_sorted(row.begin(), row.end()));
      int big = 0;
      for (int x : row) {
        EXPECT_LE(x, 6);
        big += x > 3 ? 1 : 0;
        EXPECT_EQ(std::count(row.begin(), row.end(), 7 - x), 0);
      }
      EXPECT_EQ(big % 2, 0);
    }
  }
  EXPECT_THROW(enumerate_standard_tableaux(5, 6, 10), BudgetExceeded);
}

TEST(SpinTableaux, Weights) {
  EXPECT_EQ(tableau_weight(SpinTableau{3, {{1, 2, 3}}}), half({1, 1, 1}));
  EXPECT_EQ(tableau_weight(SpinTableau{3, {{1, 2, 3}, {1, 2, 3}}}), half({2, 2, 2}));
  EXPECT_EQ(tableau_weight(SpinTableau{3, {{1, 4, 5}}}), half({1, -1, -1}));
  EXPECT_EQ(tableau_weight(SpinTableau{3, {{1, 4, 5}, {1, 2, 3}}}, 1), half({1, -1, -1}));
}

TEST(SpinTableaux, RowWeightsAreHalfSpinWeights) {
  for (int r = 2; r <= 6; ++r) {
    std::set<RationalVector> ws;
    for (const auto& row : spin_rows(r)) ws.insert(tableau_weight(SpinTableau{r, {row}}));
    if (r < 3) continue;
    const RootSystem rs(Family::D, r);
    std::set<RationalVector> expected;
    for (const auto& w : weyl_orbit(rs, top(r, 1))) expected.insert(to_epsilon(rs, w));
    EXPECT_EQ(ws, expected) << r;
  }
}

TEST(SpinTableaux, Dominance) {
  for (std::int64_t p = 1; p <= 3; ++p) EXPECT_TRUE(is_lambda_dominant(top(3, p), SpinTableau{3, {{1, 2, 3}}}));
  EXPECT_FALSE(is_lambda_dominant(top(3, 1), SpinTableau{3, {spin_row(3, {2})}}));
  EXPECT_TRUE(is_lambda_dominant(top(3, 2), SpinTableau{3, {{1, 4, 5}, {1, 2, 3}}}));
}

TEST(SpinLr, Examples) {
  using M = std::map<Weight, std::int64_t>;
  EXPECT_EQ(lr_tensor_decompose(3, 1, 1).summands, (M{{Weight{0, 0, 2}, 1}, {Weight{1, 0, 0}, 1}}));
  EXPECT_EQ(lr_tensor_decompose(3, 2, 1).summands, (M{{Weight{0, 0, 3}, 1}, {Weight{1, 0, 1}, 1}}));
  EXPECT_EQ(lr_tensor_decompose(5, 1, 1).summands,
            (M{{Weight{0, 0, 0, 0, 2}, 1}, {Weight{1, 0, 0, 0, 0}, 1}, {Weight{0, 0, 1, 0, 0}, 1}}));
  EXPECT_EQ(half_spin_closed_form(1, 1, 1).summands, (M{{Weight{0, 0, 2}, 1}, {Weight{1, 0, 0}, 1}}));
  EXPECT_EQ(half_spin_closed_form(1, 3, 2).summands,
            (M{{Weight{0, 0, 5}, 1}, {Weight{1, 0, 3}, 1}, {Weight{2, 0, 1}, 1}}));
  EXPECT_EQ(half_spin_closed_form(2, 1, 1).summands,
            (M{{Weight{0, 0, 0, 0, 2}, 1}, {Weight{1, 0, 0, 0, 0}, 1}, {Weight{0, 0, 1, 0, 0}, 1}}));
  EXPECT_THROW(lr_tensor_decompose(3, 1, 2), DomainError);
  EXPECT_THROW(half_spin_closed_form(0, 1, 1), DomainError);
}

TEST(SpinLr, EnumerationMatchesClosedForm) {
  for (int n = 1; n <= 2; ++n)
    for (std::int64_t p = 0; p <= 6; ++p)
      for (std::int64_t q = 0; q <= p && p + q <= 6; ++q) {
        const auto lr = lr_tensor_decompose(2 * n + 1, p, q);
        const auto cf = half_spin_closed_form(n, p, q);
        EXPECT_EQ(lr, cf) << "n=" << n << " p=" << p << " q=" << q;
        for (const auto& [w, m] : lr.summands) EXPECT_EQ(m, 1);
        const RootSystem rs(Family::D, 2 * n + 1);
        EXPECT_EQ(lr.dimension(rs), irrep_dimension(rs, top(2 * n + 1, p)) * irrep_dimension(rs, top(2 * n + 1, q)));
      }
}

TEST(SpinLr, MatchesCharacterOracleOnD3) {
  const RootSystem rs(Family::D, 3);
  for (std::int64_t p = 0; p <= 5; ++p)
    for (std::int64_t q = 0; q <= p && p + q <= 5; ++q)
      EXPECT_EQ(lr_tensor_decompose(3, p, q), tensor_decompose(rs, top(3, p), top(3, q))) << p << " " << q;
}

TEST(SpinLr, MatchesCharacterOracleOnD4) {
  // Even rank is outside the closed form but the tableau rule still applies.
  const RootSystem rs(Family::D, 4);
  for (std::int64_t p = 0; p <= 3; ++p)
    for (std::int64_t q = 0; q <= p && p + q <= 4; ++q)
      EXPECT_EQ(lr_tensor_decompose(4, p, q), tensor_decompose(rs, top(4, p), top(4, q))) << p << " " << q;
}

TEST(SpinLr, DominantRowsRemoveTrailingNumbers) {
  // Each row of a dominant tableau keeps 1..i and removes i+1..r with i odd.
  for (int n = 1; n <= 2; ++n) {
    const int r = 2 * n + 1;
    for (std::int64_t p = 1; p <= 4; ++p)
      for (std::int64_t q = 1; q <= p; ++q) {
        std::size_t dominant = 0;
        for (const auto& t : enumerate_standard_tableaux(r, q)) {
          if (!is_lambda_dominant(top(r, p), t)) continue;
          ++dominant;
          std::vector<int> starts;
          for (const auto& row : t.rows) {
            int k = r + 1;
            for (int j = 1; j <= r; ++j)
              if (std::find(row.begin(), row.end(), j) == row.end()) {
                k = j;
                break;
              }
            std::vector<int> kept;
            for (int j = 1; j < k; ++j) kept.push_back(j);
            EXPECT_EQ(row, spin_row(r, kept));
            if (k <= r) {
              EXPECT_EQ((k - 1) % 2, 1);
              starts.push_back(k - 1);
            }
          }
          // Rows are listed top first; lower rows remove fewer numbers.
          EXPECT_TRUE(std::is_sorted(starts.begin(), starts.end()));
        }
        EXPECT_EQ(dominant, half_spin_closed_form(n, p, q).summands.size());
      }
  }
}

TEST(InvariantFree, SmallParameters) {
  const RootSystem rs(Family::D, 3);
  for (std::int64_t p = 1; p <= 3; ++p)
    for (std::int64_t q = 1; q <= 3; ++q)
      for (std::int64_t t = 1; t <= 3; ++t)
        EXPECT_EQ(invariant_dimension(rs, {top(3, p), top(3, q), top(3, t)}), 0) << p << q << t;
}

TEST(InvariantFree, Verdicts) {
  const auto v = is_invariant_free_triple(1, 1, 1, 1, true);
  EXPECT_TRUE(v.invariant_free);
  ASSERT_TRUE(v.oracle_invariants.has_value());
  EXPECT_EQ(*v.oracle_invariants, 0);
  EXPECT_EQ(v.min_first_coordinate, Rational(1, 2));
  EXPECT_NE(v.reason.find("first epsilon-coordinate"), std::string::npos);

  const auto w = is_invariant_free_triple(1, 1, 2, 3, true);
  EXPECT_TRUE(w.invariant_free);
  EXPECT_EQ(w.p, 3);
  EXPECT_EQ(w.t, 1);
  EXPECT_EQ(*w.oracle_invariants, 0);

  const auto x = is_invariant_free_triple(2, 1, 1, 1, true);
  EXPECT_TRUE(x.invariant_free);
  EXPECT_EQ(*x.oracle_invariants, 0);
  EXPECT_THROW(is_invariant_free_triple(1, 0, 1, 1), DomainError);
}

TEST(InvariantFree, FirstCoordinateBound) {
  for (int n = 1; n <= 3; ++n)
    for (std::int64_t p = 1; p <= 5; ++p)
      for (std::int64_t q = 1; q <= p; ++q)
        for (std::int64_t t = 1; t <= q; ++t) {
          const auto v = is_invariant_free_triple(n, p, q, t);
          EXPECT_TRUE(v.invariant_free);
          EXPECT_EQ(v.min_first_coordinate, Rational(p + q - t, 2));
        }
}
