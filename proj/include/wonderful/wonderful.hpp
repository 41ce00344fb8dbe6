#pragma once

// Discrete invariants of the wonderful compactification X of an adjoint
// simple group: Picard classes, the anticanonical class, dimensions of the
// family of minimal rational curves, line-covered contractions and the
// degree comparison across the factors of a product.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wonderful/curves.hpp"
#include "wonderful/orbit_label.hpp"
#include "wonderful/reference.hpp"
#include "wonderful/root_system.hpp"

namespace wonderful {

/// L_X(lambda). The assignment lambda -> L_X(lambda) identifies the weight
/// lattice with Pic(X).
struct PicardClass {
  Weight weight;

  bool globally_generated() const { return is_dominant(weight); }
  bool ample() const { return is_regular_dominant(weight); }
  friend bool operator==(const PicardClass&, const PicardClass&) = default;
};

/// -K_X = L_X(kappa) with kappa = 2 rho + sum of the simple roots.
inline PicardClass anticanonical(const RootDatum& d) { return {d.kappa()}; }

/// {i : <alpha_i, theta^> = 1}, 1-based.
inline std::vector<int> theta_unit_indices(const RootDatum& d) {
  std::vector<int> out;
  Cocharacter c = d.to_cocharacter(d.theta_coroot());
  for (std::size_t i = 0; i < d.rank(); ++i)
    if (c[i] == 1) out.push_back(static_cast<int>(i + 1));
  return out;
}

/// Largest <alpha, theta^> over positive roots alpha != theta.
inline Int max_pairing_below_theta(const RootDatum& d) {
  Coroot tv = d.theta_coroot();
  Int best = 0;
  for (const Root& a : d.positive_roots())
    if (a != d.theta()) best = std::max(best, root_coroot_pairing(d, a, tv));
  return best;
}

/// The three combinatorial routes to dim P(O_min).
struct MinOrbitDimensions {
  Int root_sum;          // (sum over R+ of <alpha, theta^>) - 1
  Int two_rho;           // <2 rho, theta^> - 1
  Int non_orthogonal;    // #{alpha in R+ : <alpha, theta^> != 0}
};

inline MinOrbitDimensions min_orbit_dimensions(const RootDatum& d) {
  Coroot tv = d.theta_coroot();
  Int sum = 0, count = 0;
  for (const Root& a : d.positive_roots()) {
    Int p = root_coroot_pairing(d, a, tv);
    sum = checked::add(sum, p);
    if (p != 0) ++count;
  }
  return {sum - 1, checked::mul(2, pairing_with_coroot(d, d.rho(), tv)) - 1, count};
}

/// dim P(O_min) = dim G/P_theta. Throws InvariantViolation if the routes disagree.
inline Int dim_projectivized_min_orbit(const RootDatum& d) {
  MinOrbitDimensions m = min_orbit_dimensions(d);
  if (m.root_sum != m.two_rho || m.root_sum != m.non_orthogonal)
    throw InvariantViolation("dim P(O_min) routes disagree for " + d.type().name() + ": " +
                             std::to_string(m.root_sum) + ", " + std::to_string(m.two_rho) + ", " +
                             std::to_string(m.non_orthogonal));
  return m.root_sum;
}

enum class VmrtFamily { adjoint_variety, segre_projection, P3_full };

inline std::string to_string(VmrtFamily f) {
  switch (f) {
    case VmrtFamily::adjoint_variety: return "adjoint_variety";
    case VmrtFamily::segre_projection: return "segre_projection";
    case VmrtFamily::P3_full: return "P3_full";
  }
  return "?";
}

struct VmrtReport {
  Int kappa_theta = 0;   // <kappa, theta^> = -K_X . C_theta
  Int dim_Kx = 0;
  Int dim_P_Omin = 0;
  Int offset = 0;        // dim_Kx - dim_P_Omin
  std::optional<int> i0;
  VmrtFamily family = VmrtFamily::adjoint_variety;
};

inline VmrtReport vmrt_report(const RootDatum& d) {
  const SimpleType& t = d.type();
  VmrtReport r;
  r.kappa_theta = pairing_with_coroot(d, d.kappa(), d.theta_coroot());
  r.dim_Kx = r.kappa_theta - 2;
  r.dim_P_Omin = dim_projectivized_min_orbit(d);
  r.offset = r.dim_Kx - r.dim_P_Omin;

  if (t.family() == Family::A) {
    if (t.rank() == 1) {
      r.family = VmrtFamily::P3_full;  // X = P^3, K_x = P^2; the dichotomy is not asserted here
    } else {
      r.family = VmrtFamily::segre_projection;
      if (r.offset != 1 || r.dim_Kx != 2 * t.rank())
        throw InvariantViolation("type A VMRT dimension mismatch for " + t.name());
    }
  } else {
    r.family = VmrtFamily::adjoint_variety;
    auto units = theta_unit_indices(d);
    if (units.size() != 1 || r.offset != 0)
      throw InvariantViolation("VMRT of " + t.name() + " is not the adjoint variety dimension");
    r.i0 = units.front();
  }
  return r;
}

/// L . C_theta = <lambda, theta^> for an ample L = L_X(lambda); this is the
/// minimum of L . C over curves C through the identity and is at least rank.
inline Int min_degree_bound(const RootDatum& d, const Weight& lambda) {
  d.check_rank(lambda.rank());
  if (!is_regular_dominant(lambda))
    throw NotAmple("weight (" + lambda.str() + ") is not regular dominant, so L_X(lambda) is not ample");
  Int v = pairing_with_coroot(d, lambda, d.theta_coroot());
  if (v < static_cast<Int>(d.rank()))
    throw InvariantViolation("degree bound below the rank for " + d.type().name());
  return v;
}

/// Fundamental weights whose contraction X_lambda is covered by lines.
struct ContractionTable {
  SimpleType type;
  std::vector<int> line_weights;       // {i : m_i = 1}, theta^ = sum m_i alpha_i^
  std::vector<int> minuscule_weights;  // {i : coefficient of alpha_i^ in theta_s^ is 1}
  std::map<int, bool> normal;          // reference data, keyed by line weight
  std::map<int, bool> smooth;          // reference data, keyed by line weight
};

inline ContractionTable contraction_table(const RootDatum& d) {
  ContractionTable t{d.type(), {}, {}, {}, {}};
  Coroot theta_v = d.theta_coroot();
  // In simply-laced types theta_s coincides with theta.
  Coroot short_v = d.theta_short_coroot().value_or(theta_v);
  for (std::size_t i = 0; i < d.rank(); ++i) {
    int label = static_cast<int>(i + 1);
    if (theta_v[i] == 1) t.line_weights.push_back(label);
    if (short_v[i] == 1) t.minuscule_weights.push_back(label);
  }
  for (int i : t.line_weights) {
    t.normal[i] = !reference::flagged(reference::kNonNormal, d.type(), i);
    t.smooth[i] = reference::flagged(reference::kSmooth, d.type(), i);
  }
  return t;
}

/// Factors attaining min_k <lambda_k, theta_k^>: the factors that can carry
/// a minimal family for this polarization. A tie yields several indices.
inline std::vector<std::size_t> minimal_family_product(const std::vector<SimpleType>& factors,
                                                       const std::vector<Weight>& polarization,
                                                       std::vector<Int>* degrees_out = nullptr) {
  if (factors.empty()) throw EmptyProduct("a semisimple type needs at least one simple factor");
  if (factors.size() != polarization.size())
    throw RankMismatch(std::to_string(factors.size()) + " factors but " + std::to_string(polarization.size()) +
                       " weights");
  std::vector<Int> deg;
  for (std::size_t k = 0; k < factors.size(); ++k) deg.push_back(min_degree_bound(build(factors[k]), polarization[k]));
  Int best = *std::min_element(deg.begin(), deg.end());
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < deg.size(); ++k)
    if (deg[k] == best) out.push_back(k);
  if (degrees_out) *degrees_out = std::move(deg);
  return out;
}

}  // namespace wonderful
