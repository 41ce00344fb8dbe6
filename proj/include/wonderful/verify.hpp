#pragma once

// Exhaustive self-check: every identity the engine relies on, evaluated per
// simple type. Used by `wonderful verify`.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "wonderful/curves.hpp"
#include "wonderful/reference.hpp"
#include "wonderful/tables.hpp"
#include "wonderful/weyl.hpp"
#include "wonderful/wonderful.hpp"

namespace wonderful::verify {

struct Check {
  std::string type;
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;
  std::string provenance;
};

struct Options {
  int max_rank = 8;
  std::size_t oracle_cap = kDefaultOracleCap;
  bool all = false;         // include the Weyl oracle and randomized properties
  int random_samples = 100;
  std::uint64_t seed = 20240521;
};

namespace detail {

inline Weight random_weight(std::mt19937_64& rng, std::size_t rank, Int lo, Int hi) {
  std::uniform_int_distribution<Int> dist(lo, hi);
  std::vector<Int> v(rank);
  for (Int& x : v) x = dist(rng);
  return Weight(std::move(v));
}

inline Cocharacter random_cocharacter(std::mt19937_64& rng, std::size_t rank, Int lo, Int hi) {
  std::uniform_int_distribution<Int> dist(lo, hi);
  std::vector<Int> v(rank);
  for (Int& x : v) x = dist(rng);
  return Cocharacter(std::move(v));
}

class Recorder {
 public:
  Recorder(std::vector<Check>& out, std::string type) : out_(out), type_(std::move(type)) {}

  void check(const std::string& name, const std::string& provenance, const std::function<std::string()>& body) {
    Check c{type_, name, false, false, {}, provenance};
    try {
      c.detail = body();
      c.passed = c.detail.empty();
    } catch (const std::exception& e) {
      c.detail = std::string("exception: ") + e.what();
    }
    out_.push_back(std::move(c));
  }

  void skip(const std::string& name, const std::string& provenance, std::string why) {
    out_.push_back({type_, name, true, true, std::move(why), provenance});
  }

 private:
  std::vector<Check>& out_;
  std::string type_;
};

inline std::string fail_if(bool bad, const std::string& msg) { return bad ? msg : std::string(); }

}  // namespace detail

/// The root system of B2 is that of C2 with the diagram flipped.
inline bool is_type_a_or_c(const SimpleType& t) {
  return t.family() == Family::A || t.family() == Family::C || (t.family() == Family::B && t.rank() == 2);
}

inline void verify_type(const SimpleType& type, const Options& opt, std::vector<Check>& out) {
  using detail::fail_if;
  detail::Recorder rec(out, type.name());
  RootDatum d = build(type);
  const std::size_t l = d.rank();
  std::mt19937_64 rng(opt.seed ^ (static_cast<std::uint64_t>(type.letter()) << 8) ^ static_cast<std::uint64_t>(l));

  rec.check("positive_root_count", "derived", [&] {
    return fail_if(d.positive_roots().size() != classical_positive_root_count(type),
                   std::to_string(d.positive_roots().size()) + " positive roots");
  });
  rec.check("cartan_shape", "derived", [&] {
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j)
        if ((i == j && d.cartan(i, j) != 2) || (i != j && d.cartan(i, j) > 0)) return std::string("bad entry");
    return std::string();
  });
  rec.check("root_coroot_pairing_is_2", "derived", [&] {
    for (const Root& a : d.positive_roots())
      if (root_coroot_pairing(d, a, d.coroot(a)) != 2) return "<a,a^> != 2 for " + a.str();
    return std::string();
  });
  rec.check("cartan_recovered_from_pairing", "derived", [&] {
    for (std::size_t i = 1; i <= l; ++i)
      for (std::size_t j = 1; j <= l; ++j)
        if (root_coroot_pairing(d, d.simple_root(i), d.simple_coroot(j)) != d.cartan(i - 1, j - 1))
          return std::string("mismatch");
    return std::string();
  });
  rec.check("rho_pairs_to_one", "derived", [&] {
    for (std::size_t i = 1; i <= l; ++i)
      if (pairing_with_coroot(d, d.rho(), d.simple_coroot(i)) != 1) return std::string("<rho, a_i^> != 1");
    return std::string();
  });
  rec.check("highest_roots_dominant", "derived", [&] {
    Int long_norm = *std::max_element(d.simple_norms().begin(), d.simple_norms().end());
    Int short_norm = *std::min_element(d.simple_norms().begin(), d.simple_norms().end());
    int dominant_long = 0, dominant_short = 0;
    for (const Root& a : d.positive_roots()) {
      if (!is_dominant(d.to_weight(a))) continue;
      if (d.norm(a) == long_norm) ++dominant_long;
      if (d.norm(a) == short_norm && short_norm != long_norm) ++dominant_short;
    }
    if (dominant_long != 1 || !is_dominant(d.to_weight(d.theta())) || d.norm(d.theta()) != long_norm)
      return std::string("theta is not the unique dominant long root");
    if (d.has_two_root_lengths() && (dominant_short != 1 || !is_dominant(d.to_weight(*d.theta_short()))))
      return std::string("theta_s is not the unique dominant short root");
    return std::string();
  });
  rec.check("theta_coroot_coefficients_positive", "rem:lines", [&] {
    return fail_if(!d.theta_coroot().all_positive(), "theta^ = (" + d.theta_coroot().str() + ")");
  });
  rec.check("theta_coroot_indivisible", "lem:add", [&] {
    // A1: theta^ = 2 varpi^, the only exception.
    Int expected = reference::in_stated_range(type) ? 1 : 2;
    return fail_if(d.to_cocharacter(d.theta_coroot()).content() != expected, "theta^ has content " +
                   std::to_string(d.to_cocharacter(d.theta_coroot()).content()));
  });
  rec.check("pairing_below_theta_at_most_one", "lem:roots", [&] {
    Int m = max_pairing_below_theta(d);
    return fail_if(m > 1, "max <alpha, theta^> = " + std::to_string(m));
  });
  if (reference::in_stated_range(type)) {
    rec.check("unit_pairing_indices", "lem:roots", [&] {
      auto u = theta_unit_indices(d);
      return fail_if(!reference::unit_pairing_set_matches(type, u), "unexpected index set");
    });
    rec.check("kappa_offset", "lem:dim", [&] {
      Int off = pairing_with_coroot(d, d.kappa(), d.theta_coroot()) - dim_projectivized_min_orbit(d);
      return fail_if(off != reference::kappa_offset(type), "offset " + std::to_string(off));
    });
    rec.check("vmrt_report", "lem:dim", [&] {
      VmrtReport v = vmrt_report(d);
      if (type.family() == Family::A)
        return fail_if(v.dim_Kx != 2 * type.rank(), "dim K_x = " + std::to_string(v.dim_Kx));
      return fail_if(v.dim_Kx != v.dim_P_Omin, "dim K_x != dim P(O_min)");
    });
  } else {
    rec.skip("unit_pairing_indices", "lem:roots", "stated for rank >= 2 only");
    rec.skip("kappa_offset", "lem:dim", "stated for rank >= 2 only");
    rec.skip("vmrt_report", "lem:dim", "rank-one case has X = P^3");
  }
  rec.check("min_orbit_dimension_routes_agree", "lem:dim", [&] {
    MinOrbitDimensions m = min_orbit_dimensions(d);
    return fail_if(m.root_sum != m.two_rho || m.two_rho != m.non_orthogonal, "routes disagree");
  });
  rec.check("min_degree_bound", "rem:lines", [&] {
    Int v = min_degree_bound(d, d.rho());
    bool equal = v == static_cast<Int>(l);
    return fail_if(equal != is_type_a_or_c(type), "<rho, theta^> = " + std::to_string(v));
  });
  rec.check("line_weights_match_reference", "rem:lines", [&] {
    auto c = contraction_table(d);
    auto expected = reference::expand_pattern(reference::line_weight_row(type).pattern, type.rank());
    if (c.line_weights != expected) return std::string("line weights differ");
    bool subset = std::includes(c.line_weights.begin(), c.line_weights.end(), c.minuscule_weights.begin(),
                                c.minuscule_weights.end());
    if (type.is_simply_laced()) return fail_if(c.minuscule_weights != c.line_weights, "minuscule != line");
    return fail_if(!subset || c.minuscule_weights.size() >= c.line_weights.size(), "minuscule not a proper subset");
  });
  if (d.has_two_root_lengths()) {
    auto ref = reference::short_root_row(type);
    if (ref && type.rank() >= ref->min_rank) {
      rec.check("short_root_table", "rem:short", [&] {
        std::vector<Int> degrees = additive_boundary_degrees(d, HighestRoot::theta_short);
        std::vector<Int> expected(l, 0);
        expected[static_cast<std::size_t>(ref->index - 1)] = ref->value;
        if (degrees != expected) return std::string("pairings differ");
        if (additive_infinity_orbit(d, HighestRoot::theta_short) != OrbitLabel(l, {ref->orbit}))
          return std::string("orbit differs");
        return fail_if(Cocharacter(degrees).content() != ref->divisibility, "divisibility differs");
      });
    } else {
      rec.skip("short_root_table", "rem:short", "rank below the stated range");
    }
  }
  rec.check("orbit_poset_is_boolean_lattice", "derived", [&] {
    const std::size_t n = std::min<std::size_t>(l, 5);
    std::vector<OrbitLabel> labels;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> s;
      for (std::size_t b = 0; b < n; ++b)
        if (mask & (1u << b)) s.push_back(static_cast<int>(b + 1));
      labels.emplace_back(l, s);
    }
    for (std::size_t a = 0; a < labels.size(); ++a)
      for (std::size_t b = 0; b < labels.size(); ++b) {
        bool subset = (a & b) == a;
        if (orbit_closure_contains(labels[a], labels[b]) != subset) return std::string("order differs from inclusion");
      }
    return std::string();
  });

  LongestElement w0 = longest_element(d);
  rec.check("w0_opposition_stabilizes_simple_roots", "derived", [&] {
    for (std::size_t i = 1; i <= l; ++i) {
      Weight image = -w0_on_weight(w0, d.to_weight(d.simple_root(i)));
      bool found = false;
      for (std::size_t j = 1; j <= l; ++j) found = found || image == d.to_weight(d.simple_root(j));
      if (!found) return "-w0 alpha_" + std::to_string(i) + " is not simple";
    }
    return std::string();
  });
  rec.check("w0_negates_theta_coroot", "lem:add", [&] {
    Cocharacter t = d.to_cocharacter(d.theta_coroot());
    return fail_if(w0_on_cocharacter(w0, t) != -t, "w0 theta^ != -theta^");
  });

  if (!opt.all) return;

  rec.check("w0_involution_random", "derived", [&] {
    for (int k = 0; k < 1000; ++k) {
      Weight lam = detail::random_weight(rng, l, -20, 20);
      if (w0_on_weight(w0, w0_on_weight(w0, lam)) != lam) return "not involutive at " + lam.str();
    }
    return std::string();
  });
  rec.check("w0_pairing_compatibility", "derived", [&] {
    for (int k = 0; k < opt.random_samples; ++k) {
      Weight lam = detail::random_weight(rng, l, -9, 9);
      Cocharacter eta = detail::random_cocharacter(rng, l, -9, 9);
      if (pairing(d, w0_on_weight(w0, lam), w0_on_cocharacter(w0, eta)) != pairing(d, lam, eta))
        return "fails at " + lam.str() + " / " + eta.str();
    }
    return std::string();
  });
  rec.check("lambda_minus_w0_lambda_in_root_lattice", "lem:mult", [&] {
    for (int k = 0; k < opt.random_samples; ++k) {
      Weight lam = detail::random_weight(rng, l, -9, 9);
      d.weight_to_root(lam - w0_on_weight(w0, lam));
    }
    return std::string();
  });
  rec.check("dominant_word_length_bounded", "derived", [&] {
    for (int k = 0; k < opt.random_samples; ++k) {
      Weight lam = detail::random_weight(rng, l, -9, 9);
      auto [dom, word] = dominant_representative(d, lam);
      if (!is_dominant(dom) || word.size() > d.positive_roots().size() || apply_word(d, word, lam) != dom)
        return "fails at " + lam.str();
    }
    return std::string();
  });
  rec.check("degree_consistency_theta", "lem:add", [&] {
    Cocharacter t = d.to_cocharacter(d.theta_coroot());
    for (int k = 0; k < opt.random_samples; ++k) {
      Weight lam = detail::random_weight(rng, l, 0, 9);
      if (mult_degree(d, w0, lam, t) != 2 * additive_degree(d, lam, HighestRoot::theta))
        return "fails at " + lam.str();
    }
    return std::string();
  });
  rec.check("mult_degree_nonnegative", "lem:mult", [&] {
    for (int k = 0; k < opt.random_samples; ++k) {
      Weight lam = detail::random_weight(rng, l, 0, 5);
      Cocharacter eta = detail::random_cocharacter(rng, l, 0, 5);
      Int deg = mult_degree(d, w0, lam, eta);
      if (deg < 0) return "negative at " + lam.str();
      if ((deg == 0) != (lam.is_zero() || eta.is_zero())) return "zero pattern wrong at " + lam.str() + " / " + eta.str();
    }
    return std::string();
  });
  rec.check("mult_limit_orbits_follow_opposition", "lem:mult", [&] {
    for (int k = 0; k < opt.random_samples; ++k) {
      Cocharacter eta = detail::random_cocharacter(rng, l, 0, 3);
      auto [at0, atinf] = mult_limit_orbits(d, eta);
      std::vector<int> permuted;
      for (int i : at0.subset()) permuted.push_back(w0.opposition[static_cast<std::size_t>(i - 1)]);
      if (atinf != OrbitLabel(l, permuted)) return "fails at " + eta.str();
    }
    return std::string();
  });

  if (weyl_group_order(type) > opt.oracle_cap) {
    rec.skip("w0_matches_enumeration_oracle", "derived",
             "|W| = " + std::to_string(weyl_group_order(type)) + " exceeds oracle cap " + std::to_string(opt.oracle_cap));
    return;
  }
  rec.check("w0_matches_enumeration_oracle", "derived", [&] {
    WeylGroupEnumeration g = enumerate_weyl_group(d, opt.oracle_cap);
    if (g.size() != weyl_group_order(type)) return "enumerated " + std::to_string(g.size()) + " elements";
    WeylElement longest = g.longest(d);
    if (longest.matrix != w0.on_weights) return std::string("oracle w0 differs from the dominance w0");
    return fail_if(!(w0.on_weights * w0.on_weights == IntMatrix::identity(l)), "w0^2 != 1");
  });
}

inline std::vector<Check> run(const Options& opt) {
  std::vector<Check> out;
  for (const SimpleType& t : types_up_to_rank(opt.max_rank)) verify_type(t, opt, out);
  return out;
}

}  // namespace wonderful::verify
