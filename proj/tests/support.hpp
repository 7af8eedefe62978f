#pragma once

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls the library's Weyl-group, character or exponent code;
// only RootSystem data (Cartan matrix, positive roots) is shared.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "weylinv/weylinv.hpp"

namespace weylinv::testing {

/// Every simple type with rank <= max_rank.
std::vector<SimpleType> simple_types_up_to(int max_rank);

/// A1-A7, B2-B8, C2-C8, D3-D8, E6-E8, F4, G2.
std::vector<SimpleType> table_types();

/// |W| as the size of the orbit of rho, computed from the Cartan matrix.
std::uint64_t weyl_order_by_rho_orbit(const RootSystem& rs);

/// Exponents as the partition dual to the root-height distribution.
std::vector<std::int64_t> exponents_from_heights(const RootSystem& rs);

/// Positive roots by reflection closure of the simple roots in simple-root
/// coordinates.
std::size_t positive_roots_by_closure(const RootSystem& rs);

/// Kostant's multiplicity formula: sum over W of sign(w) P(w(lambda+rho) - (mu+rho)).
class KostantOracle {
 public:
  explicit KostantOracle(const RootSystem& rs);
  std::int64_t multiplicity(const Weight& lambda, const Weight& mu);
  /// Full character of V(lambda); weights enumerated from lambda downwards.
  std::map<Weight, std::int64_t> character(const Weight& lambda);

 private:
  std::int64_t partition(const std::vector<std::int64_t>& v, std::size_t from);

  const RootSystem& rs_;
  std::vector<std::vector<std::int64_t>> positive_;
  std::map<std::pair<std::vector<std::int64_t>, std::size_t>, std::int64_t> memo_;
};

/// Multiply two characters as weight multisets.
std::map<Weight, std::int64_t> character_product(const std::map<Weight, std::int64_t>& a,
                                                 const std::map<Weight, std::int64_t>& b);

Weight random_dominant(std::size_t rank, std::int64_t max_coord, std::mt19937_64& rng);

/// Simple-root coordinates, which must be integral.
std::vector<std::int64_t> integral_root_coords(const RootSystem& rs, const Weight& w);

}  // namespace weylinv::testing
