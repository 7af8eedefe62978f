#pragma once

// Command dispatch for the weylinv tool. Kept in a header so tests can drive
// run() directly; tools/weylinv.cpp only forwards argv.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "weylinv/cache_io.hpp"
#include "weylinv/weylinv.hpp"

namespace weylinv::cli {

using json = nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitInternal = 3;

struct Options {
  bool text = false;
  bool stable = false;
  std::optional<std::uint64_t> budget;
  std::int64_t bound = 2;
  std::string cache_path;
  bool all_witnesses = false;
  bool epsilon = false;
  bool check = false;
  std::uint64_t max_dimension = OracleLimits{}.max_dimension;
};

struct Request {
  std::string command;
  std::string spec;
  std::vector<std::string> args;
  Options options;
};

struct Response {
  json input = json::object();
  json result;
  json certificate;  ///< omitted when null
  int exit_code = kExitOk;
};

struct Outcome {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// Thrown for malformed command lines (wrong argument count and the like).
class UsageError : public DomainError {
 public:
  using DomainError::DomainError;
};

// ---------------------------------------------------------------------------
// JSON helpers

inline json to_json(const Weight& w) { return json(w.coords()); }

inline json to_json(const BigInt& n) {
  if (n >= 0 && n <= std::numeric_limits<std::uint64_t>::max()) return json(static_cast<std::uint64_t>(n));
  return json(n.str());
}

inline json to_json(const IntMatrix& m) { return json(m.rows()); }

inline json to_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

inline json weight_list(const std::map<Weight, std::int64_t>& terms) {
  json out = json::array();
  for (const auto& [w, m] : terms) out.push_back(json::array({to_json(w), m}));
  return out;
}

inline json weight_array(const std::vector<Weight>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(to_json(w));
  return out;
}

// ---------------------------------------------------------------------------
// argument helpers

struct Context {
  const Request& req;
  GroupSpec spec;
  OracleLimits limits;
  CharacterCache* cache;
};

inline void expect_args(const Context& c, std::size_t lo, std::size_t hi, const char* usage) {
  const auto n = c.req.args.size();
  if (n < lo || n > hi) throw UsageError("usage: " + c.req.command + " " + usage);
}

inline const SimpleType& single_factor(const Context& c) {
  if (c.spec.factors.size() != 1)
    throw UsageError("command '" + c.req.command + "' needs a single simple factor, got " + c.spec.to_string());
  return c.spec.factors.front();
}

inline RootSystem single_root_system(const Context& c) {
  const auto& t = single_factor(c);
  return RootSystem(t.family, t.rank);
}

inline std::int64_t parse_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("expected an integer for ") + what + ", got '" + s + "'");
  }
}

inline Weight weight_arg(const RootSystem& rs, const std::string& s) {
  Weight w = parse_weight(s);
  rs.check(w);
  return w;
}

/// Single factor: the value itself. Several factors: [{"type", "value"}].
inline json per_factor(const Context& c, const std::function<json(const RootSystem&)>& fn) {
  if (c.spec.factors.size() == 1) {
    const auto& t = c.spec.factors.front();
    return fn(RootSystem(t.family, t.rank));
  }
  json out = json::array();
  for (const auto& t : c.spec.factors)
    out.push_back({{"type", t.to_string()}, {"value", fn(RootSystem(t.family, t.rank))}});
  return out;
}

inline std::int64_t spin_odd_n(const RootSystem& rs) {
  if (rs.family() != Family::D || rs.rank() % 2 == 0)
    throw DomainError("command needs a type D_{2n+1}, got " + rs.name());
  return (rs.rank() - 1) / 2;
}

inline json collection_json(const BalancedCollection& c) {
  json elements = json::array();
  for (const auto& w : c.elements) elements.push_back(to_json(w.matrix()));
  return {{"elements", elements}, {"sum", to_json(c.certificate)}};
}

inline json parts_json(const std::vector<CollectionPart>& parts) {
  json out = json::array();
  for (const auto& p : parts) out.push_back({{"generator", p.generator}, {"size", p.size}});
  return out;
}

// ---------------------------------------------------------------------------
// commands

using Handler = std::function<void(Context&, Response&)>;

struct CommandInfo {
  const char* name;
  const char* args;
  const char* help;
  Handler handler;
};

inline void cmd_root_system(Context& c, Response& r) {
  expect_args(c, 0, 0, "SPEC");
  r.result = per_factor(c, [](const RootSystem& rs) {
    json roots = json::array();
    for (const auto& a : rs.positive_roots()) roots.push_back(a.simple);
    return json{{"type", rs.name()},
                {"rank", rs.rank()},
                {"cartan", to_json(rs.cartan())},
                {"symmetrizer", rs.symmetrizer()},
                {"num_positive_roots", rs.num_positive_roots()},
                {"positive_roots", roots},
                {"group_dimension", group_dimension(rs)}};
  });
}

inline void cmd_order(Context& c, Response& r) {
  expect_args(c, 0, 0, "SPEC");
  r.result = per_factor(c, [](const RootSystem& rs) { return json(coxeter_number(rs)); });
  r.certificate = per_factor(c, [](const RootSystem& rs) {
    return json{{"coxeter_word", *coxeter_element(rs).word()},
                {"times_rank_equals_roots", coxeter_number(rs) * rs.rank() ==
                                                2 * static_cast<std::int64_t>(rs.num_positive_roots())}};
  });
}

inline void cmd_exponents(Context& c, Response& r) {
  expect_args(c, 0, 0, "SPEC");
  r.result = per_factor(c, [](const RootSystem& rs) { return json(exponents(rs)); });
  r.certificate = per_factor(c, [](const RootSystem& rs) {
    return json{{"characteristic_polynomial", poly_to_string(characteristic_polynomial(coxeter_element(rs).matrix()))},
                {"coxeter_order", coxeter_number(rs)}};
  });
}

inline void cmd_weyl_order(Context& c, Response& r) {
  expect_args(c, 0, 0, "SPEC");
  BigInt total = 1;
  json factors = json::array();
  for (const auto& t : c.spec.factors) {
    const RootSystem rs(t.family, t.rank);
    const auto n = weyl_group_order(rs);
    total *= n;
    factors.push_back({{"type", t.to_string()}, {"order", n}, {"exponents", exponents(rs)}});
  }
  r.result = to_json(total);
  r.certificate = {{"factors", factors}};
}

inline void cmd_balanced(Context& c, Response& r) {
  expect_args(c, 1, 1, "SPEC M");
  const std::int64_t m = parse_int(c.req.args[0], "M");
  r.input["m"] = m;
  std::vector<BalancedCollection> per;
  json parts = json::array();
  for (const auto& t : c.spec.factors) {
    per.push_back(canonical_balanced_collection(RootSystem(t.family, t.rank), m));
    parts.push_back({{"type", t.to_string()}, {"parts", parts_json(per.back().parts)}});
  }
  // Block-diagonal combination of the factor collections.
  std::size_t n = 0;
  for (const auto& p : per) n += p.certificate.size();
  std::vector<WeylElement> combined;
  for (std::size_t k = 0; k < static_cast<std::size_t>(m); ++k) {
    IntMatrix mat(n);
    std::size_t off = 0;
    for (const auto& p : per) {
      const auto& e = p.elements[k].matrix();
      for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = 0; j < e.size(); ++j) mat(off + i, off + j) = e(i, j);
      off += e.size();
    }
    combined.emplace_back(std::move(mat));
  }
  BalancedCollection all{combined, matrix_sum(combined), {}};
  r.result = {{"size", m}, {"balanced", all.certificate.is_zero()}, {"parts", c.spec.factors.size() == 1
                                                                                   ? parts_json(per.front().parts)
                                                                                   : parts}};
  r.certificate = collection_json(all);
}

inline void cmd_search_balanced(Context& c, Response& r) {
  expect_args(c, 1, 1, "SPEC M");
  const RootSystem rs = single_root_system(c);
  const std::int64_t m = parse_int(c.req.args[0], "M");
  const std::uint64_t budget = c.req.options.budget.value_or(kDefaultSearchBudget);
  r.input["m"] = m;
  r.input["budget"] = budget;
  const auto res = search_balanced(rs, m, budget);
  r.result = {{"status", to_string(res.status)},
              {"nodes", res.nodes},
              {"group_order", res.group_order},
              {"in_M", m_of_simple(rs.type()).contains(m)}};
  if (res.status == SearchStatus::Unknown) {
    r.result["reason"] = res.reason;
    r.exit_code = kExitBudget;
  }
  if (res.collection) r.certificate = collection_json(*res.collection);
}

inline void cmd_minus_id(Context& c, Response& r) {
  expect_args(c, 0, 0, "SPEC");
  bool all = true;
  json factors = json::array();
  for (const auto& t : c.spec.factors) {
    const RootSystem rs(t.family, t.rank);
    const bool v = minus_identity_in_weyl(rs);
    all = all && v;
    factors.push_back({{"type", t.to_string()}, {"minus_identity", v},
                       {"longest_element", to_json(longest_element(rs).matrix())}});
  }
  r.result = all;
  r.certificate = {{"factors", factors}};
}

inline void cmd_mg(Context& c, Response& r) {
  expect_args(c, 0, 0, "SPEC");
  const auto s = m_of_semisimple(c.spec);
  std::int64_t center = 1;
  json factors = json::array();
  for (const auto& t : c.spec.factors) {
    const auto e = center_exponent(t.family, t.rank);
    center = std::lcm(center, e);
    factors.push_back({{"type", t.to_string()}, {"M", m_of_simple(t).to_string()}, {"center_exponent", e}});
  }
  r.result = {{"M", s.to_string()}, {"m", s.min_element()}};
  r.certificate = {{"center", center}, {"generators", s.generators()}, {"factors", factors}};
}

inline void cmd_center_bound(Context& c, Response& r) {
  expect_args(c, 0, 0, "SPEC");
  std::int64_t center = 1;
  json factors = json::array();
  for (const auto& t : c.spec.factors) {
    const auto e = center_exponent(t.family, t.rank);
    center = std::lcm(center, e);
    factors.push_back({{"type", t.to_string()}, {"center_exponent", e}});
  }
  r.result = center;
  r.certificate = {{"factors", factors}};
}

inline void cmd_verify_mg(Context& c, Response& r) {
  expect_args(c, 1, 1, "SPEC N");
  const auto& t = single_factor(c);
  const std::int64_t n = parse_int(c.req.args[0], "N");
  r.input["n"] = n;
  r.input["bound"] = c.req.options.bound;
  const auto res = verify_membership(t.family, t.rank, n, c.req.options.bound, c.limits, c.cache);
  r.result = {{"holds", res.holds},
              {"checked", res.checked},
              {"in_M", m_of_simple(t).contains(n)},
              {"witness", res.witness ? to_json(*res.witness) : json(nullptr)}};
}

inline void cmd_dims(Context& c, Response& r) {
  expect_args(c, 1, 1, "SPEC WEIGHT");
  const RootSystem rs = single_root_system(c);
  r.result = to_json(irrep_dimension(rs, weight_arg(rs, c.req.args[0])));
}

inline void cmd_weights(Context& c, Response& r) {
  expect_args(c, 1, 1, "SPEC WEIGHT");
  const RootSystem rs = single_root_system(c);
  const auto ch = weight_multiplicities(rs, weight_arg(rs, c.req.args[0]), c.limits, c.cache);
  r.result = {{"dimension", ch.dimension()}, {"num_weights", ch.size()}, {"weights", weight_list(ch.terms())}};
  if (c.req.options.epsilon) {
    json eps = json::array();
    for (const auto& [w, m] : ch.terms()) eps.push_back(to_json(to_epsilon(rs, w)));
    r.result["epsilon"] = eps;
  }
}

inline void cmd_tensor(Context& c, Response& r) {
  expect_args(c, 2, 2, "SPEC WEIGHT WEIGHT");
  const RootSystem rs = single_root_system(c);
  const Weight a = weight_arg(rs, c.req.args[0]), b = weight_arg(rs, c.req.args[1]);
  const auto dec = tensor_decompose(rs, a, b, c.limits, c.cache);
  const BigInt product = irrep_dimension(rs, a) * irrep_dimension(rs, b);
  r.result = {{"summands", weight_list(dec.summands)}, {"dimension", to_json(product)}};
  r.certificate = {{"sum_of_dimensions", to_json(dec.dimension(rs))}, {"product_of_dimensions", to_json(product)}};
}

inline void cmd_invariant_dim(Context& c, Response& r) {
  expect_args(c, 1, 64, "SPEC WEIGHT...");
  const RootSystem rs = single_root_system(c);
  std::vector<Weight> ws;
  for (const auto& s : c.req.args) ws.push_back(weight_arg(rs, s));
  r.result = invariant_dimension(rs, ws, c.limits, c.cache);
}

inline void cmd_dual(Context& c, Response& r) {
  expect_args(c, 1, 1, "SPEC WEIGHT");
  const RootSystem rs = single_root_system(c);
  const Weight w = weight_arg(rs, c.req.args[0]);
  if (!w.is_dominant()) throw DomainError("weight (" + w.to_string() + ") is not dominant");
  const Weight d = dual_weight(rs, w);
  r.result = {{"dual", to_json(d)}, {"self_conjugate", d == w}};
}

inline void cmd_spin_shape(Context& c, Response& r) {
  expect_args(c, 1, 1, "D<r> WEIGHT");
  const RootSystem rs = single_root_system(c);
  if (rs.family() != Family::D) throw DomainError("spin-shape needs a type D spec, got " + rs.name());
  const auto s = shape_of_weight(rs.rank(), weight_arg(rs, c.req.args[0]));
  r.result = {{"partition", s.rows},
              {"rectangle", s.rectangle ? json{{"rows", s.rectangle->first}, {"columns", s.rectangle->second}}
                                        : json(nullptr)}};
}

inline void cmd_spin_tableaux(Context& c, Response& r) {
  expect_args(c, 1, 2, "D<r> Q [P]");
  const RootSystem rs = single_root_system(c);
  if (rs.family() != Family::D) throw DomainError("spin-tableaux needs a type D spec, got " + rs.name());
  const std::int64_t q = parse_int(c.req.args[0], "Q");
  std::optional<Weight> lambda;
  if (c.req.args.size() == 2) {
    lambda = Weight(rs.dim());
    (*lambda)[rs.dim() - 1] = parse_int(c.req.args[1], "P");
    r.input["p"] = (*lambda)[rs.dim() - 1];
  }
  r.input["q"] = q;
  json list = json::array();
  for (const auto& t : enumerate_standard_tableaux(rs.rank(), q, c.req.options.budget.value_or(kDefaultTableauBudget))) {
    if (lambda && !is_lambda_dominant(*lambda, t)) continue;
    list.push_back({{"rows", t.rows}, {"weight", to_json(tableau_weight(t))}});
  }
  r.result = {{"count", list.size()}, {"tableaux", list}};
}

inline void cmd_spin_lr(Context& c, Response& r) {
  expect_args(c, 2, 2, "D<r> P Q");
  const RootSystem rs = single_root_system(c);
  if (rs.family() != Family::D) throw DomainError("spin-lr needs a type D spec, got " + rs.name());
  const auto p = parse_int(c.req.args[0], "P"), q = parse_int(c.req.args[1], "Q");
  r.input["p"] = p;
  r.input["q"] = q;
  const auto dec = lr_tensor_decompose(rs.rank(), p, q, c.req.options.budget.value_or(kDefaultTableauBudget));
  r.result = {{"summands", weight_list(dec.summands)}};
}

inline void cmd_spin_closed(Context& c, Response& r) {
  expect_args(c, 2, 2, "D<2n+1> P Q");
  const RootSystem rs = single_root_system(c);
  const auto n = spin_odd_n(rs);
  const auto p = parse_int(c.req.args[0], "P"), q = parse_int(c.req.args[1], "Q");
  r.input["p"] = p;
  r.input["q"] = q;
  r.result = {{"summands", weight_list(half_spin_closed_form(static_cast<int>(n), p, q).summands)}};
}

inline void cmd_invariant_free_triple(Context& c, Response& r) {
  expect_args(c, 3, 3, "D<2n+1> P Q T");
  const RootSystem rs = single_root_system(c);
  const auto n = spin_odd_n(rs);
  const auto p = parse_int(c.req.args[0], "P"), q = parse_int(c.req.args[1], "Q"), t = parse_int(c.req.args[2], "T");
  const auto v = is_invariant_free_triple(static_cast<int>(n), p, q, t, c.req.options.check, c.limits);
  r.result = {{"invariant_free", v.invariant_free}, {"reason", v.reason}};
  r.certificate = {{"sorted", {v.p, v.q, v.t}}, {"min_first_coordinate", to_string(v.min_first_coordinate)}};
  if (v.oracle_invariants) r.certificate["oracle_invariants"] = *v.oracle_invariants;
}

inline void cmd_minuscule(Context& c, Response& r) {
  expect_args(c, 1, 1, "SPEC WEIGHT");
  const RootSystem rs = single_root_system(c);
  const Weight w = weight_arg(rs, c.req.args[0]);
  r.result = is_minuscule(rs, w, c.limits, c.cache);
}

inline void cmd_hv_dim(Context& c, Response& r) {
  expect_args(c, 1, 1, "SPEC WEIGHT");
  const RootSystem rs = single_root_system(c);
  r.result = hv_dimension(rs, weight_arg(rs, c.req.args[0]));
}

inline void cmd_hv_tuple(Context& c, Response& r) {
  expect_args(c, 2, 64, "SPEC WEIGHT MU...");
  const RootSystem rs = single_root_system(c);
  const Weight lambda = weight_arg(rs, c.req.args[0]);
  std::vector<Weight> tuple;
  for (std::size_t i = 1; i < c.req.args.size(); ++i) tuple.push_back(weight_arg(rs, c.req.args[i]));
  const auto s = tuple_orbit_dimension(rs, lambda, tuple);
  r.result = {{"orbit_dim", s.orbit_dimension}, {"stabilizer_dim", s.stabilizer_dimension}, {"span_rank", s.span_rank}};
  r.certificate = {{"stabilizer_roots", weight_array(s.stabilizer_roots)}, {"group_dim", group_dimension(rs)}};
}

inline void cmd_hv_pair(Context& c, Response& r) {
  expect_args(c, 1, 1, "SPEC WEIGHT");
  const RootSystem rs = single_root_system(c);
  const auto res = find_dense_orbit_pair(rs, weight_arg(rs, c.req.args[0]), c.req.options.all_witnesses);
  r.result = {{"dense_orbit", res.dense()},
              {"orbit_dim", res.dense() ? 2 * res.hv_dimension : res.max_orbit_dimension},
              {"hv_dim", res.hv_dimension}};
  r.certificate = {{"witness", res.dense() ? to_json(res.witnesses.front()) : json(nullptr)},
                   {"stabilizer_roots", res.stabilizer ? weight_array(res.stabilizer->stabilizer_roots) : json(nullptr)}};
  if (c.req.options.all_witnesses) r.certificate["witnesses"] = weight_array(res.witnesses);
}

inline void cmd_self_conjugate(Context& c, Response& r) {
  expect_args(c, 0, 0, "SPEC");
  bool all = true;
  json factors = json::array();
  for (const auto& t : c.spec.factors) {
    const bool v = minus_identity_in_weyl(RootSystem(t.family, t.rank));
    all = all && v;
    factors.push_back({{"type", t.to_string()}, {"minus_identity", v}});
  }
  r.result = {{"all_self_conjugate", all}, {"factors", factors}};
}

inline const std::vector<CommandInfo>& commands() {
  static const std::vector<CommandInfo> table = {
      {"root-system", "SPEC", "Cartan matrix and positive roots", cmd_root_system},
      {"order", "SPEC", "order of the Coxeter element", cmd_order},
      {"exponents", "SPEC", "exponents of the Weyl group", cmd_exponents},
      {"weyl-order", "SPEC", "order of the Weyl group", cmd_weyl_order},
      {"balanced", "SPEC M", "canonical balanced collection of size M", cmd_balanced},
      {"search-balanced", "SPEC M", "exhaustive search for a balanced collection of size M", cmd_search_balanced},
      {"minus-id", "SPEC", "whether -Id lies in the Weyl group", cmd_minus_id},
      {"mg", "SPEC", "the semigroup M(G) and its minimum", cmd_mg},
      {"center-bound", "SPEC", "largest cyclic subgroup order of the centre", cmd_center_bound},
      {"verify-mg", "SPEC N", "check N against the character oracle on a weight grid", cmd_verify_mg},
      {"dims", "SPEC WEIGHT", "dimension of V(WEIGHT)", cmd_dims},
      {"weights", "SPEC WEIGHT", "character of V(WEIGHT)", cmd_weights},
      {"tensor", "SPEC WEIGHT WEIGHT", "decompose a tensor product", cmd_tensor},
      {"invariant-dim", "SPEC WEIGHT...", "dimension of invariants in a tensor product", cmd_invariant_dim},
      {"dual", "SPEC WEIGHT", "highest weight of the dual module", cmd_dual},
      {"spin-shape", "D<r> WEIGHT", "Young diagram of a Spin weight", cmd_spin_shape},
      {"spin-tableaux", "D<r> Q [P]", "standard tableaux of the Q x r rectangle", cmd_spin_tableaux},
      {"spin-lr", "D<r> P Q", "V(P w_r) (x) V(Q w_r) by tableaux", cmd_spin_lr},
      {"spin-closed", "D<2n+1> P Q", "closed-form half-spin decomposition", cmd_spin_closed},
      {"invariant-free-triple", "D<2n+1> P Q T", "invariant-free verdict for a half-spin triple",
       cmd_invariant_free_triple},
      {"minuscule", "SPEC WEIGHT", "whether V(WEIGHT) is minuscule", cmd_minuscule},
      {"hv-dim", "SPEC WEIGHT", "dimension of the HV-variety", cmd_hv_dim},
      {"hv-tuple", "SPEC WEIGHT MU...", "orbit dimension of a tuple of weight vectors", cmd_hv_tuple},
      {"hv-pair", "SPEC WEIGHT", "search for a dense orbit on X x X", cmd_hv_pair},
      {"self-conjugate", "SPEC", "whether every module is self-conjugate", cmd_self_conjugate},
  };
  return table;
}

// ---------------------------------------------------------------------------
// output

inline void render_text(const json& v, const std::string& indent, std::ostream& os) {
  for (const auto& [key, value] : v.items()) {
    if (value.is_object()) {
      os << indent << key << ":\n";
      render_text(value, indent + "  ", os);
    } else if (value.is_string()) {
      os << indent << key << ": " << value.get<std::string>() << "\n";
    } else {
      os << indent << key << ": " << value.dump() << "\n";
    }
  }
}

inline std::string render(const json& doc, bool text) {
  if (!text) return doc.dump(2) + "\n";
  std::ostringstream os;
  render_text(doc, "", os);
  return os.str();
}

// ---------------------------------------------------------------------------
// entry point

/// Runs one command line (without the program name). `env_cache` is the
/// WEYLINV_CACHE default for --cache.
inline Outcome run(const std::vector<std::string>& argv, const std::string& env_cache = "") {
  Outcome outcome;
  std::ostringstream out, err;

  CLI::App app{"Tensor-invariant semigroups, balanced Weyl collections and related computations", "weylinv"};
  app.fallthrough();
  app.require_subcommand(1);
  Options opt;
  opt.cache_path = env_cache;
  app.add_flag("--json", "JSON output (default)");
  app.add_flag("--text", opt.text, "plain text output");
  app.add_flag("--stable", opt.stable, "report elapsed_ms as 0 for byte-identical output");
  app.add_option("--budget", opt.budget, "node budget for searches and enumerations");
  app.add_option("--bound", opt.bound, "coordinate bound for verify-mg")->check(CLI::NonNegativeNumber);
  app.add_option("--cache", opt.cache_path, "character cache file (default: $WEYLINV_CACHE)");
  app.add_flag("--all-witnesses", opt.all_witnesses, "report every witness");
  app.add_flag("--epsilon", opt.epsilon, "also print epsilon coordinates (types A and D)");
  app.add_flag("--check", opt.check, "cross-check with the character oracle");
  app.add_option("--max-dim", opt.max_dimension, "dimension cap of the character oracle");

  std::string spec;
  std::vector<std::string> args;
  for (const auto& info : commands()) {
    auto* sub = app.add_subcommand(info.name, info.help);
    sub->add_option("spec", spec, "group spec, e.g. A2 or A1xE6")->required();
    sub->add_option("args", args, info.args);
  }

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    outcome.exit_code = app.exit(e, out, err) == 0 ? kExitOk : kExitDomain;
    outcome.out = out.str();
    outcome.err = err.str();
    return outcome;
  }

  Request req{app.get_subcommands().front()->get_name(), spec, args, opt};
  json doc{{"command", req.command}, {"input", {{"spec", spec}, {"args", args}}}};
  const auto start = std::chrono::steady_clock::now();

  CharacterCache cache;
  auto fail = [&](const char* kind, const std::string& message, int code) {
    doc["error"] = {{"kind", kind}, {"message", message}};
    err << "weylinv: " << message << "\n";
    outcome.exit_code = code;
  };

  try {
    if (!opt.cache_path.empty()) load_cache(opt.cache_path, cache);
    Context ctx{req, parse_group_spec(spec), OracleLimits{}, &cache};
    ctx.limits.max_dimension = opt.max_dimension;
    Response resp;
    const auto& info = *std::find_if(commands().begin(), commands().end(),
                                     [&](const CommandInfo& i) { return req.command == i.name; });
    info.handler(ctx, resp);
    for (auto& [k, v] : resp.input.items()) doc["input"][k] = v;
    doc["result"] = resp.result;
    if (!resp.certificate.is_null()) doc["certificate"] = resp.certificate;
    outcome.exit_code = resp.exit_code;
    if (!opt.cache_path.empty() && cache.dirty()) {
      try {
        save_cache(opt.cache_path, cache);
      } catch (const Error& e) {
        err << "weylinv: warning: " << e.what() << "\n";
      }
    }
  } catch (const BudgetExceeded& e) {
    fail("budget", e.what(), kExitBudget);
  } catch (const InternalError& e) {
    fail("internal", e.what(), kExitInternal);
  } catch (const UsageError& e) {
    fail("usage", e.what(), kExitDomain);
  } catch (const Error& e) {
    fail("domain", e.what(), kExitDomain);
  }

  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  doc["elapsed_ms"] = opt.stable ? 0.0 : std::round(elapsed * 1000.0) / 1000.0;
  out << render(doc, opt.text);
  outcome.out = out.str();
  outcome.err = err.str();
  return outcome;
}

}  // namespace weylinv::cli
