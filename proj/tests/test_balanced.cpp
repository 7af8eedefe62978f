#include <gtest/gtest.h>

#include "support.hpp"

using namespace weylinv;
using weylinv::testing::simple_types_up_to;

namespace {

WeylElement neg_id(std::size_t n) { return WeylElement(-IntMatrix::identity(n)); }

}  // namespace

TEST(Balanced, Examples) {
  const RootSystem b2(Family::B, 2);
  EXPECT_TRUE(is_balanced({WeylElement::identity(2), neg_id(2)}));

  const RootSystem a3(Family::A, 3);
  const auto eps = coxeter_element(a3);
  EXPECT_TRUE(is_balanced({eps, eps.pow(2), eps.pow(3), eps.pow(4)}));
  EXPECT_FALSE(is_balanced({eps, eps.pow(2), eps.pow(3)}));
  EXPECT_FALSE(is_balanced({WeylElement::identity(2)}));
  EXPECT_THROW(is_balanced({}), DomainError);
}

TEST(Balanced, DOddDiagonalElements) {
  const RootSystem d5(Family::D, 5);
  const auto diag = detail::d_odd_diagonal_elements(d5);
  ASSERT_EQ(diag.size(), 4u);
  EXPECT_TRUE(is_balanced(diag));
  EXPECT_TRUE(diag[3].is_identity());
  const auto group = enumerate_weyl_group(RootSystem(Family::D, 3));
  for (const auto& w : detail::d_odd_diagonal_elements(RootSystem(Family::D, 3)))
    EXPECT_TRUE(std::binary_search(group.begin(), group.end(), w));
  // diag(1,-1,-1,-1,-1) acts on epsilon coordinates as a sign change.
  const RationalVector e = to_epsilon(d5, diag[0].apply(Weight::fundamental(5, 0)));
  EXPECT_EQ(e, (RationalVector{1, 0, 0, 0, 0}));
  const RationalVector e2 = to_epsilon(d5, diag[0].apply(Weight::fundamental(5, 1)));
  EXPECT_EQ(e2, (RationalVector{1, -1, 0, 0, 0}));
}

TEST(Balanced, CanonicalExamples) {
  const RootSystem a3(Family::A, 3);
  const auto c = canonical_balanced_collection(a3, 4);
  const auto eps = coxeter_element(a3);
  ASSERT_EQ(c.elements.size(), 4u);
  for (std::int64_t k = 1; k <= 4; ++k) EXPECT_EQ(c.elements[static_cast<std::size_t>(k - 1)], eps.pow(k));

  const RootSystem e6(Family::E, 6);
  const auto c6 = canonical_balanced_collection(e6, 3);
  const auto eps6 = coxeter_element(e6);
  EXPECT_EQ(c6.elements, (std::vector<WeylElement>{WeylElement::identity(6), eps6.pow(4), eps6.pow(8)}));

  const RootSystem g2(Family::G, 2);
  const auto c5 = canonical_balanced_collection(g2, 5);
  ASSERT_EQ(c5.parts.size(), 2u);
  EXPECT_EQ(c5.parts[0].generator, "minus-identity");
  EXPECT_EQ(c5.parts[1].generator, "order-three");
  EXPECT_EQ(c5.elements.size(), 5u);
  EXPECT_TRUE(is_balanced(c5.elements));
  EXPECT_TRUE(c5.certificate.is_zero());
}

TEST(Balanced, CanonicalRejections) {
  try {
    canonical_balanced_collection(RootSystem(Family::E, 6), 2);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("order 3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(canonical_balanced_collection(RootSystem(Family::G, 2), 1), DomainError);
  EXPECT_THROW(canonical_balanced_collection(RootSystem(Family::D, 5), 6), DomainError);
  EXPECT_THROW(canonical_balanced_collection(RootSystem(Family::A, 2), 0), DomainError);
}

TEST(Balanced, CanonicalForAllTableTypes) {
  for (const auto& t : weylinv::testing::table_types()) {
    const RootSystem rs(t.family, t.rank);
    const auto s = m_of_simple(t);
    for (std::int64_t m = 1; m <= 16; ++m) {
      if (!s.contains(m)) {
        EXPECT_THROW(canonical_balanced_collection(rs, m), DomainError) << t.to_string() << " " << m;
        continue;
      }
      const auto c = canonical_balanced_collection(rs, m);
      EXPECT_EQ(c.elements.size(), static_cast<std::size_t>(m));
      EXPECT_TRUE(is_balanced(c.elements)) << t.to_string() << " " << m;
    }
  }
}

TEST(Balanced, SplitInto) {
  EXPECT_EQ(detail::split_into(5, {2, 3}), (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(detail::split_into(8, {4, 2}), (std::vector<std::size_t>{4, 4}));
  EXPECT_EQ(detail::split_into(1, {2, 3}), std::nullopt);
  EXPECT_EQ(detail::split_into(7, {2, 3}), (std::vector<std::size_t>{2, 2, 3}));
}

TEST(Search, Examples) {
  const auto a2 = search_balanced(RootSystem(Family::A, 2), 3);
  EXPECT_EQ(a2.status, SearchStatus::Found);
  ASSERT_TRUE(a2.collection.has_value());
  EXPECT_TRUE(is_balanced(a2.collection->elements));

  EXPECT_EQ(search_balanced(RootSystem(Family::A, 2), 2).status, SearchStatus::NoneExists);

  const auto b2 = search_balanced(RootSystem(Family::B, 2), 2);
  ASSERT_EQ(b2.status, SearchStatus::Found);
  auto elems = b2.collection->elements;
  std::sort(elems.begin(), elems.end());
  auto expected = std::vector<WeylElement>{WeylElement::identity(2), neg_id(2)};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(elems, expected);
}

TEST(Search, BudgetIsUnknown) {
  const auto r = search_balanced(RootSystem(Family::B, 3), 7, 1000);
  EXPECT_EQ(r.status, SearchStatus::Unknown);
  EXPECT_FALSE(r.reason.empty());
  EXPECT_FALSE(r.collection.has_value());
  EXPECT_EQ(search_balanced(RootSystem(Family::E, 8), 2, 1000).status, SearchStatus::Unknown);
}

TEST(Search, CanonicalOrderFirst) {
  const RootSystem rs(Family::A, 1);
  const auto r = search_balanced(rs, 4);
  ASSERT_EQ(r.status, SearchStatus::Found);
  EXPECT_EQ(r.collection->elements, (std::vector<WeylElement>{WeylElement::identity(1), WeylElement::identity(1),
                                                              neg_id(1), neg_id(1)}));
  const RootSystem b2(Family::B, 2);
  const auto s = search_balanced(b2, 4);
  ASSERT_EQ(s.status, SearchStatus::Found);
  const auto& e = s.collection->elements;
  for (std::size_t i = 1; i < e.size(); ++i) {
    const auto a = std::make_pair(weyl_length(b2, e[i - 1]), e[i - 1].matrix());
    const auto b = std::make_pair(weyl_length(b2, e[i]), e[i].matrix());
    EXPECT_LE(a, b);
  }
}

TEST(Search, LengthMatchesReducedWords) {
  const RootSystem rs(Family::B, 3);
  EXPECT_EQ(weyl_length(rs, WeylElement::identity(3)), 0u);
  EXPECT_EQ(weyl_length(rs, longest_element(rs)), rs.num_positive_roots());
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(weyl_length(rs, WeylElement::simple_reflection(rs, i)), 1u);
}

TEST(Search, IffMembershipUpTo12) {
  for (const auto& t : simple_types_up_to(3)) {
    const RootSystem rs(t.family, t.rank);
    for (std::int64_t m = 1; m <= 12; ++m) {
      const auto r = search_balanced(rs, m);
      ASSERT_NE(r.status, SearchStatus::Unknown) << t.to_string() << " m=" << m << " " << r.reason;
      EXPECT_EQ(r.status == SearchStatus::Found, m_of_simple(t).contains(m)) << t.to_string() << " m=" << m;
      if (r.collection) {
        EXPECT_EQ(r.collection->elements.size(), static_cast<std::size_t>(m));
        EXPECT_TRUE(is_balanced(r.collection->elements));
      }
    }
  }
}
