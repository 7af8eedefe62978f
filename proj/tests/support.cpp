#include "support.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace weylinv::testing {

std::vector<SimpleType> simple_types_up_to(int max_rank) {
  std::vector<SimpleType> out;
  for (char f : std::string("ABCDEFG"))
    for (int r = 1; r <= max_rank; ++r)
      if (simple_type_problem(parse_family(f), r).empty()) out.push_back({parse_family(f), r});
  return out;
}

std::vector<SimpleType> table_types() {
  std::vector<SimpleType> out;
  for (int r = 1; r <= 7; ++r) out.push_back({Family::A, r});
  for (int r = 2; r <= 8; ++r) out.push_back({Family::B, r});
  for (int r = 2; r <= 8; ++r) out.push_back({Family::C, r});
  for (int r = 3; r <= 8; ++r) out.push_back({Family::D, r});
  for (int r = 6; r <= 8; ++r) out.push_back({Family::E, r});
  out.push_back({Family::F, 4});
  out.push_back({Family::G, 2});
  return out;
}

namespace {

Weight reflect_fundamental(const IntMatrix& cartan, const Weight& w, std::size_t i) {
  Weight out = w;
  for (std::size_t j = 0; j < w.size(); ++j) out[j] -= w[i] * cartan(i, j);
  return out;
}

std::vector<std::vector<std::int64_t>> roots_by_closure(const IntMatrix& cartan) {
  const std::size_t n = cartan.size();
  std::set<std::vector<std::int64_t>> seen;
  std::deque<std::vector<std::int64_t>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto b = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing += b[j] * cartan(j, i);
      auto c = b;
      c[i] -= pairing;
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  std::vector<std::vector<std::int64_t>> positive;
  for (const auto& b : seen)
    if (std::all_of(b.begin(), b.end(), [](std::int64_t x) { return x >= 0; })) positive.push_back(b);
  return positive;
}

Weight rho_of(std::size_t n) { return Weight(std::vector<std::int64_t>(n, 1)); }

}  // namespace

std::uint64_t weyl_order_by_rho_orbit(const RootSystem& rs) {
  std::set<Weight> seen{rho_of(rs.dim())};
  std::deque<Weight> queue{rho_of(rs.dim())};
  while (!queue.empty()) {
    Weight w = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < rs.dim(); ++i) {
      Weight x = reflect_fundamental(rs.cartan(), w, i);
      if (seen.insert(x).second) queue.push_back(x);
    }
  }
  return seen.size();
}

std::size_t positive_roots_by_closure(const RootSystem& rs) { return roots_by_closure(rs.cartan()).size(); }

std::vector<std::int64_t> exponents_from_heights(const RootSystem& rs) {
  std::map<std::int64_t, std::int64_t> by_height;
  for (const auto& b : roots_by_closure(rs.cartan())) {
    std::int64_t h = 0;
    for (auto x : b) h += x;
    ++by_height[h];
  }
  std::vector<std::int64_t> out;
  const std::int64_t top = by_height.rbegin()->first;
  for (std::int64_t m = 1; m <= top; ++m) {
    const std::int64_t here = by_height[m];
    const std::int64_t next = by_height.count(m + 1) ? by_height[m + 1] : 0;
    for (std::int64_t k = 0; k < here - next; ++k) out.push_back(m);
  }
  return out;
}

std::vector<std::int64_t> integral_root_coords(const RootSystem& rs, const Weight& w) {
  std::vector<std::int64_t> out;
  for (const auto& q : rs.to_simple_root_coords(w)) {
    if (q.denominator() != 1) throw std::logic_error("weight is not in the root lattice");
    out.push_back(q.numerator());
  }
  return out;
}

KostantOracle::KostantOracle(const RootSystem& rs) : rs_(rs), positive_(roots_by_closure(rs.cartan())) {}

std::int64_t KostantOracle::partition(const std::vector<std::int64_t>& v, std::size_t from) {
  if (from == positive_.size())
    return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; }) ? 1 : 0;
  auto key = std::make_pair(v, from);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  std::int64_t total = 0;
  std::vector<std::int64_t> cur = v;
  for (;;) {
    total += partition(cur, from + 1);
    bool ok = true;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      cur[i] -= positive_[from][i];
      if (cur[i] < 0) ok = false;
    }
    if (!ok) break;
  }
  memo_[key] = total;
  return total;
}

std::int64_t KostantOracle::multiplicity(const Weight& lambda, const Weight& mu) {
  const Weight rho = rho_of(rs_.dim());
  const Weight start = lambda + rho;
  const Weight target = mu + rho;
  std::map<Weight, int> parity{{start, 0}};
  std::deque<Weight> queue{start};
  while (!queue.empty()) {
    Weight w = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < rs_.dim(); ++i) {
      Weight x = reflect_fundamental(rs_.cartan(), w, i);
      if (parity.emplace(x, 1 - parity[w]).second) queue.push_back(x);
    }
  }
  std::int64_t total = 0;
  for (const auto& [x, sign] : parity) {
    std::vector<std::int64_t> c;
    try {
      c = integral_root_coords(rs_, x - target);
    } catch (const std::logic_error&) {
      return 0;
    }
    if (std::any_of(c.begin(), c.end(), [](std::int64_t v) { return v < 0; })) continue;
    total += (sign == 0 ? 1 : -1) * partition(c, 0);
  }
  return total;
}

std::map<Weight, std::int64_t> KostantOracle::character(const Weight& lambda) {
  std::map<Weight, std::int64_t> out;
  std::set<Weight> visited{lambda};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    Weight w = queue.front();
    queue.pop_front();
    const std::int64_t m = multiplicity(lambda, w);
    if (m == 0) continue;
    out[w] = m;
    for (std::size_t i = 0; i < rs_.dim(); ++i) {
      Weight x = w - rs_.simple_root(i);
      if (visited.insert(x).second) queue.push_back(x);
    }
  }
  return out;
}

std::map<Weight, std::int64_t> character_product(const std::map<Weight, std::int64_t>& a,
                                                 const std::map<Weight, std::int64_t>& b) {
  std::map<Weight, std::int64_t> out;
  for (const auto& [x, m] : a)
    for (const auto& [y, n] : b) out[x + y] += m * n;
  return out;
}

Weight random_dominant(std::size_t rank, std::int64_t max_coord, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> d(0, max_coord);
  Weight w(rank);
  for (std::size_t i = 0; i < rank; ++i) w[i] = d(rng);
  return w;
}

}  // namespace weylinv::testing
