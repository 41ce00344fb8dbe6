#pragma once

// Classification tables recomputed from root data and diffed against the
// reference rows. A non-empty diff means the engine disagrees with the
// published data.

#include <string>
#include <vector>

#include "json.hpp"
#include "wonderful/curves.hpp"
#include "wonderful/reference.hpp"
#include "wonderful/wonderful.hpp"

namespace wonderful::tables {

using nlohmann::json;

struct Table {
  std::string name;
  json rows = json::array();
  json reference = json::array();
  std::vector<std::string> diff;
};

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> n{"lemma-dim", "lemma-roots", "remark-lines", "remark-short"};
  return n;
}

inline json indices(const std::vector<int>& v) { return json(v); }

inline Table remark_lines(int max_rank) {
  Table t{"remark-lines", json::array(), json::array(), {}};
  for (const auto& row : reference::kLineWeights)
    t.reference.push_back({{"family", std::string(1, static_cast<char>(row.family))},
                           {"rank", row.rank},
                           {"pattern", std::string(row.pattern)},
                           {"display", std::string(row.display)}});
  for (const SimpleType& type : types_up_to_rank(max_rank)) {
    RootDatum d = build(type);
    ContractionTable c = contraction_table(d);
    const auto& ref = reference::line_weight_row(type);
    auto expected = reference::expand_pattern(ref.pattern, type.rank());
    bool lines_ok = c.line_weights == expected;
    bool subset = std::includes(c.line_weights.begin(), c.line_weights.end(), c.minuscule_weights.begin(),
                                c.minuscule_weights.end());
    bool minuscule_ok = type.is_simply_laced() ? c.minuscule_weights == c.line_weights
                                               : subset && c.minuscule_weights.size() < c.line_weights.size();
    json normal = json::object(), smooth = json::object();
    for (auto [i, f] : c.normal) normal[std::to_string(i)] = f;
    for (auto [i, f] : c.smooth) smooth[std::to_string(i)] = f;
    t.rows.push_back({{"id", type.name() + "/remark-lines"},
                      {"type", type.name()},
                      {"line_weights", indices(c.line_weights)},
                      {"minuscule_weights", indices(c.minuscule_weights)},
                      {"reference", std::string(ref.display)},
                      {"reference_line_weights", indices(expected)},
                      {"normal_reference", normal},
                      {"smooth_reference", smooth},
                      {"match", lines_ok && minuscule_ok},
                      {"provenance", "rem:lines"}});
    if (!lines_ok) t.diff.push_back(type.name() + ": line weights differ from '" + std::string(ref.display) + "'");
    if (!minuscule_ok) t.diff.push_back(type.name() + ": minuscule weights do not relate to line weights as expected");
  }
  return t;
}

inline Table remark_short(int max_rank) {
  Table t{"remark-short", json::array(), json::array(), {}};
  for (const auto& row : reference::kShortRoots)
    t.reference.push_back({{"family", std::string(1, static_cast<char>(row.family))},
                           {"rank", row.rank},
                           {"min_rank", row.min_rank},
                           {"index", row.index},
                           {"value", row.value},
                           {"orbit", row.orbit},
                           {"divisibility", row.divisibility},
                           {"display", std::string(row.display)}});
  for (const SimpleType& type : types_up_to_rank(max_rank)) {
    RootDatum d = build(type);
    if (!d.has_two_root_lengths()) continue;
    auto ref = reference::short_root_row(type);
    std::vector<Int> degrees = additive_boundary_degrees(d, HighestRoot::theta_short);
    OrbitLabel orbit = additive_infinity_orbit(d, HighestRoot::theta_short);
    Int divisibility = Cocharacter(degrees).content();
    bool in_range = ref && type.rank() >= ref->min_rank;
    bool match = false;
    if (ref) {
      std::vector<Int> expected(d.rank(), 0);
      expected[static_cast<std::size_t>(ref->index - 1)] = ref->value;
      match = degrees == expected && orbit == OrbitLabel(d.rank(), {ref->orbit}) &&
              divisibility == ref->divisibility;
    }
    t.rows.push_back({{"id", type.name() + "/remark-short"},
                      {"type", type.name()},
                      {"theta_short", d.theta_short()->values()},
                      {"theta_short_coroot", d.theta_short_coroot()->values()},
                      {"pairings", degrees},
                      {"infinity_orbit", indices(orbit.subset())},
                      {"divisibility", divisibility},
                      {"in_stated_range", in_range},
                      {"match", match},
                      {"provenance", in_range ? "rem:short" : "derived"}});
    if (in_range && !match) t.diff.push_back(type.name() + ": short-root data differ from '" + std::string(ref->display) + "'");
  }
  return t;
}

inline Table lemma_roots(int max_rank) {
  Table t{"lemma-roots", json::array(), json::array(), {}};
  t.reference.push_back({{"family", "A"}, {"rule", "{1,l} for l >= 2"}});
  t.reference.push_back({{"family", "other"}, {"rule", "a single index i0"}});
  t.reference.push_back({{"family", "all"}, {"rule", "<alpha, theta^> in {0,1} for alpha != theta"}});
  for (const SimpleType& type : types_up_to_rank(max_rank)) {
    RootDatum d = build(type);
    auto units = theta_unit_indices(d);
    Int max_below = max_pairing_below_theta(d);
    bool in_range = reference::in_stated_range(type);
    bool match = max_below <= 1 && reference::unit_pairing_set_matches(type, units);
    t.rows.push_back({{"id", type.name() + "/lemma-roots"},
                      {"type", type.name()},
                      {"theta", d.theta().values()},
                      {"theta_coroot", d.theta_coroot().values()},
                      {"unit_indices", indices(units)},
                      {"max_pairing_below_theta", max_below},
                      {"in_stated_range", in_range},
                      {"match", match},
                      {"provenance", "lem:roots"}});
    if (in_range && !match) t.diff.push_back(type.name() + ": highest coroot pairings violate the reference rule");
    if (!in_range && max_below > 1) t.diff.push_back(type.name() + ": <alpha, theta^> > 1 for some alpha != theta");
  }
  return t;
}

inline Table lemma_dim(int max_rank) {
  Table t{"lemma-dim", json::array(), json::array(), {}};
  t.reference.push_back({{"family", "A"}, {"kappa_minus_dim", 3}, {"sum_simple_theta", 2}});
  t.reference.push_back({{"family", "other"}, {"kappa_minus_dim", 2}, {"sum_simple_theta", 1}});
  for (const SimpleType& type : types_up_to_rank(max_rank)) {
    RootDatum d = build(type);
    Coroot tv = d.theta_coroot();
    Int kappa_theta = pairing_with_coroot(d, d.kappa(), tv);
    MinOrbitDimensions dims = min_orbit_dimensions(d);
    Root simple_sum(std::vector<Int>(d.rank(), 1));
    Int sum_simple = root_coroot_pairing(d, simple_sum, tv);
    Int offset = kappa_theta - dims.two_rho;
    bool in_range = reference::in_stated_range(type);
    int expected = reference::kappa_offset(type);
    bool match = offset == expected && sum_simple == expected - 1 && dims.root_sum == dims.two_rho &&
                 dims.root_sum == dims.non_orthogonal;
    t.rows.push_back({{"id", type.name() + "/lemma-dim"},
                      {"type", type.name()},
                      {"kappa", d.kappa().values()},
                      {"kappa_theta", kappa_theta},
                      {"dim_P_Omin", dims.two_rho},
                      {"dim_P_Omin_root_sum", dims.root_sum},
                      {"dim_P_Omin_non_orthogonal", dims.non_orthogonal},
                      {"kappa_minus_dim", offset},
                      {"sum_simple_theta", sum_simple},
                      {"dim_Kx", kappa_theta - 2},
                      {"in_stated_range", in_range},
                      {"match", match},
                      {"provenance", "lem:dim"}});
    if (in_range && !match) t.diff.push_back(type.name() + ": <kappa, theta^> - dim P(O_min) = " + std::to_string(offset));
  }
  return t;
}

/// Throws UnknownTable for names outside `names()`.
inline Table emit_table(const std::string& name, int max_rank) {
  if (name == "remark-lines") return remark_lines(max_rank);
  if (name == "remark-short") return remark_short(max_rank);
  if (name == "lemma-roots") return lemma_roots(max_rank);
  if (name == "lemma-dim") return lemma_dim(max_rank);
  std::string known;
  for (const auto& n : names()) known += (known.empty() ? "" : ", ") + n;
  throw UnknownTable("unknown table '" + name + "' (known: " + known + ")");
}

}  // namespace wonderful::tables
