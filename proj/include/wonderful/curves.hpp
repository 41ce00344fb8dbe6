#pragma once

// Intersection numbers of Picard classes L(lambda) with two kinds of
// rational curves through the identity of the wonderful compactification X:
//
//  * C_eta, the closure of a dominant indivisible one-parameter subgroup
//    eta of T. deg L(lambda)|C_eta = <lambda - w0 lambda, eta>; the limits
//    eta(0), eta(infinity) lie in O_I, O_J with I the support of eta and
//    J = {j : <w0 alpha_j, eta> != 0}.
//
//  * C_alpha, the closure of the root subgroup U_alpha for alpha = theta or
//    theta_s. L(lambda) . C_alpha = <lambda, alpha^>, and the point at
//    infinity lies on exactly the boundary divisors D_i = L(alpha_i) with
//    non-zero degree.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wonderful/orbit_label.hpp"
#include "wonderful/root_system.hpp"
#include "wonderful/weyl.hpp"

namespace wonderful {

enum class HighestRoot { theta, theta_short };

inline std::string to_string(HighestRoot h) { return h == HighestRoot::theta ? "theta" : "theta-short"; }

inline HighestRoot parse_highest_root(const std::string& s) {
  if (s == "theta") return HighestRoot::theta;
  if (s == "theta-short" || s == "theta_short") return HighestRoot::theta_short;
  throw ParseError("expected 'theta' or 'theta-short', got '" + s + "'");
}

inline void require_dominant(const Cocharacter& eta) {
  if (!is_dominant(eta))
    throw NotDominant("cocharacter (" + eta.str() +
                      ") is not dominant; conjugate it first with dominant_representative");
}

inline void require_indivisible(const Cocharacter& eta) {
  if (!is_indivisible(eta)) {
    Int g = eta.content();
    std::string hint = g == 0 ? "the zero cocharacter has no curve" : "divide all coordinates by " + std::to_string(g);
    throw NotIndivisible("cocharacter (" + eta.str() + ") is divisible: " + hint);
  }
}

/// Closure of a dominant indivisible one-parameter subgroup.
class MultCurve {
 public:
  static MultCurve make(const RootDatum& d, Cocharacter eta) {
    d.check_rank(eta.rank());
    require_dominant(eta);
    require_indivisible(eta);
    return MultCurve(std::move(eta));
  }
  const Cocharacter& eta() const noexcept { return eta_; }

 private:
  explicit MultCurve(Cocharacter eta) : eta_(std::move(eta)) {}
  Cocharacter eta_;
};

/// Closure of the root subgroup of theta or theta_s of one simple factor.
struct AddCurve {
  HighestRoot which = HighestRoot::theta;
  Root root;
  std::size_t factor = 0;

  static AddCurve make(const RootDatum& d, HighestRoot which, std::size_t factor = 0) {
    if (which == HighestRoot::theta) return {which, d.theta(), factor};
    if (!d.theta_short())
      throw NoShortRoot(d.type().name() + " is simply laced and has no highest short root");
    return {which, *d.theta_short(), factor};
  }
};

using Curve = std::variant<MultCurve, AddCurve>;

/// theta^ or theta_s^ in the simple-coroot basis.
inline Coroot highest_coroot(const RootDatum& d, HighestRoot which) {
  if (which == HighestRoot::theta) return d.theta_coroot();
  auto cv = d.theta_short_coroot();
  if (!cv) throw NoShortRoot(d.type().name() + " is simply laced and has no highest short root");
  return *cv;
}

// ---------------------------------------------------------------------------
// Multiplicative curves

inline Int mult_degree(const RootDatum& d, const LongestElement& w0, const Weight& lambda, const Cocharacter& eta) {
  d.check_rank(lambda.rank());
  d.check_rank(eta.rank());
  require_dominant(eta);
  Root diff = d.weight_to_root(lambda - w0_on_weight(w0, lambda));
  Int s = 0;
  for (std::size_t i = 0; i < d.rank(); ++i) s = checked::add(s, checked::mul(diff[i], eta[i]));
  return s;
}

inline Int mult_degree(const RootDatum& d, const Weight& lambda, const Cocharacter& eta) {
  d.check_rank(lambda.rank());
  d.check_rank(eta.rank());
  require_dominant(eta);
  return mult_degree(d, longest_element(d), lambda, eta);
}

/// Orbits containing eta(0) and eta(infinity).
inline std::pair<OrbitLabel, OrbitLabel> mult_limit_orbits(const RootDatum& d, const Cocharacter& eta) {
  d.check_rank(eta.rank());
  require_dominant(eta);
  LongestElement w0 = longest_element(d);
  OrbitLabel at_zero(d.rank(), eta.support());
  std::vector<int> j_set;
  for (std::size_t j = 1; j <= d.rank(); ++j) {
    Root image = d.weight_to_root(w0_on_weight(w0, d.to_weight(d.simple_root(j))));
    Int s = 0;
    for (std::size_t i = 0; i < d.rank(); ++i) s = checked::add(s, checked::mul(image[i], eta[i]));
    if (s != 0) j_set.push_back(static_cast<int>(j));
  }
  return {std::move(at_zero), OrbitLabel(d.rank(), std::move(j_set))};
}

/// C_eta is smooth iff some <alpha_i, eta> equals 1.
inline bool mult_is_smooth(const RootDatum& d, const Cocharacter& eta) {
  d.check_rank(eta.rank());
  require_dominant(eta);
  require_indivisible(eta);
  return std::any_of(eta.begin(), eta.end(), [](Int c) { return c == 1; });
}

// ---------------------------------------------------------------------------
// Additive curves

inline Int additive_degree(const RootDatum& d, const Weight& lambda, HighestRoot which) {
  return pairing_with_coroot(d, lambda, highest_coroot(d, which));
}

/// Intersection numbers D_i . C_alpha = <alpha_i, alpha^>.
inline std::vector<Int> additive_boundary_degrees(const RootDatum& d, HighestRoot which) {
  return d.to_cocharacter(highest_coroot(d, which)).values();
}

inline OrbitLabel additive_infinity_orbit(const RootDatum& d, HighestRoot which) {
  return OrbitLabel(d.rank(), d.to_cocharacter(highest_coroot(d, which)).support());
}

/// One C_theta per simple factor; these are the irreducible B-stable curves
/// through the identity.
inline std::vector<AddCurve> b_stable_curves(const std::vector<SimpleType>& factors) {
  if (factors.empty()) throw EmptyProduct("a semisimple type needs at least one simple factor");
  std::vector<AddCurve> out;
  for (std::size_t k = 0; k < factors.size(); ++k) out.push_back(AddCurve::make(build(factors[k]), HighestRoot::theta, k));
  return out;
}

// ---------------------------------------------------------------------------
// Reports

struct CurveReport {
  std::map<Weight, Int> degrees;       // fundamental weights, plus any extra query weight
  std::vector<Int> boundary_degrees;   // D_i . C for i = 1..rank
  OrbitLabel orbit_at_zero;
  OrbitLabel orbit_at_infinity;
  bool smooth = false;
  bool indivisible = true;
  Int anticanonical_degree = 0;
};

inline CurveReport curve_report(const RootDatum& d, const Curve& curve,
                                const std::optional<Weight>& extra = std::nullopt) {
  CurveReport r;
  std::vector<Weight> weights;
  for (std::size_t i = 1; i <= d.rank(); ++i) weights.push_back(d.fundamental_weight(i));
  if (extra) {
    d.check_rank(extra->rank());
    weights.push_back(*extra);
  }

  if (const auto* m = std::get_if<MultCurve>(&curve)) {
    const Cocharacter& eta = m->eta();
    LongestElement w0 = longest_element(d);
    for (const Weight& w : weights) r.degrees[w] = mult_degree(d, w0, w, eta);
    for (std::size_t i = 1; i <= d.rank(); ++i)
      r.boundary_degrees.push_back(mult_degree(d, w0, d.to_weight(d.simple_root(i)), eta));
    std::tie(r.orbit_at_zero, r.orbit_at_infinity) = mult_limit_orbits(d, eta);
    r.smooth = mult_is_smooth(d, eta);
    r.indivisible = is_indivisible(eta);
    r.anticanonical_degree = mult_degree(d, w0, d.kappa(), eta);
  } else {
    const auto& a = std::get<AddCurve>(curve);
    Coroot cv = highest_coroot(d, a.which);
    for (const Weight& w : weights) r.degrees[w] = pairing_with_coroot(d, w, cv);
    r.boundary_degrees = additive_boundary_degrees(d, a.which);
    r.orbit_at_zero = OrbitLabel::open(d.rank());  // U_alpha passes through the identity
    r.orbit_at_infinity = additive_infinity_orbit(d, a.which);
    r.smooth = true;
    r.indivisible = d.to_cocharacter(cv).content() == 1;
    r.anticanonical_degree = pairing_with_coroot(d, d.kappa(), cv);
  }
  return r;
}

}  // namespace wonderful
