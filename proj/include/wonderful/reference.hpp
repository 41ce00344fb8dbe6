#pragma once

// Published reference data that the engine reproduces or attaches to its
// output. The line-weight, short-root, roots and dimension tables are
// recomputed and diffed against these rows. The normality and smoothness
// flags for the line-covered contractions come from an external
// classification and are shipped as-is, without independent verification.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wonderful/root_system.hpp"

namespace wonderful::reference {

inline constexpr std::string_view kVersion = "1";

/// Index patterns: "all", "none", or comma separated entries where "l"
/// stands for the rank and "l-1" for rank minus one.
inline std::vector<int> expand_pattern(std::string_view pattern, int rank) {
  std::vector<int> out;
  if (pattern == "none") return out;
  if (pattern == "all") {
    for (int i = 1; i <= rank; ++i) out.push_back(i);
    return out;
  }
  std::size_t pos = 0;
  while (pos <= pattern.size()) {
    std::size_t next = pattern.find(',', pos);
    if (next == std::string_view::npos) next = pattern.size();
    std::string_view tok = pattern.substr(pos, next - pos);
    if (tok == "l") out.push_back(rank);
    else if (tok == "l-1") out.push_back(rank - 1);
    else out.push_back(std::stoi(std::string(tok)));
    pos = next + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Fundamental weights varpi_i whose coefficient m_i in the highest coroot
/// is 1, by type. rank == 0 means the row covers the whole family.
struct LineWeightRow {
  Family family;
  int rank;
  std::string_view pattern;
  std::string_view display;
};

inline constexpr std::array<LineWeightRow, 9> kLineWeights{{
    {Family::A, 0, "all", "A_l : all"},
    {Family::B, 0, "1,l", "B_l : w1, wl"},
    {Family::C, 0, "all", "C_l : all"},
    {Family::D, 0, "1,l-1,l", "D_l : w1, w(l-1), wl"},
    {Family::E, 6, "1,6", "E_6 : w1, w6"},
    {Family::E, 7, "7", "E_7 : w7"},
    {Family::E, 8, "none", "E_8 : none"},
    {Family::F, 4, "4", "F_4 : w4"},
    {Family::G, 2, "1", "G_2 : w1"},
}};

inline const LineWeightRow& line_weight_row(const SimpleType& t) {
  for (const auto& row : kLineWeights)
    if (row.family == t.family() && (row.rank == 0 || row.rank == t.rank())) return row;
  throw InvariantViolation("no line-weight reference row for " + t.name());
}

struct IndexedFlag {
  Family family;
  std::string_view index;  // pattern token, e.g. "1" or "l"
};

/// Line-covered contractions X_lambda that are not normal.
inline constexpr std::array<IndexedFlag, 2> kNonNormal{{{Family::B, "1"}, {Family::C, "l"}}};

/// The only line-covered contractions X_lambda that are smooth.
inline constexpr std::array<IndexedFlag, 4> kSmooth{
    {{Family::A, "1"}, {Family::A, "l"}, {Family::B, "l"}, {Family::G, "1"}}};

template <std::size_t N>
bool flagged(const std::array<IndexedFlag, N>& table, const SimpleType& t, int index) {
  for (const auto& f : table)
    if (f.family == t.family() && expand_pattern(f.index, t.rank()).front() == index) return true;
  return false;
}

/// Highest short coroot data for the non-simply-laced families.
struct ShortRootRow {
  Family family;
  int rank;      // 0: whole family
  int min_rank;  // smallest rank the row is stated for
  int index;     // the only simple root with <alpha_i, theta_s^> != 0
  int value;     // <alpha_index, theta_s^>
  int orbit;     // y_s lies in O_{orbit}
  int divisibility;
  std::string_view display;
};

inline constexpr std::array<ShortRootRow, 4> kShortRoots{{
    {Family::B, 0, 3, 1, 2, 1, 2, "B_l (l>=3): <a1,ts^>=2, others 0, y_s in O_1, ts^ = 2 eta"},
    {Family::C, 0, 3, 2, 1, 2, 1, "C_l (l>=3): <a2,ts^>=1, others 0, y_s in O_2"},
    {Family::F, 4, 4, 4, 1, 4, 1, "F_4: <a4,ts^>=1, others 0, y_s in O_4"},
    {Family::G, 2, 2, 1, 1, 1, 1, "G_2: <a1,ts^>=1, <a2,ts^>=0, y_s in O_1"},
}};

inline std::optional<ShortRootRow> short_root_row(const SimpleType& t) {
  for (const auto& row : kShortRoots)
    if (row.family == t.family() && (row.rank == 0 || row.rank == t.rank())) return row;
  return std::nullopt;
}

/// {i : <alpha_i, theta^> = 1}: {1, l} in type A (l >= 2), one index otherwise.
inline bool unit_pairing_set_matches(const SimpleType& t, const std::vector<int>& indices) {
  if (t.family() == Family::A) return indices == std::vector<int>{1, t.rank()};
  return indices.size() == 1;
}

/// <kappa, theta^> - dim P(O_min): 3 in type A (l >= 2), 2 otherwise.
inline int kappa_offset(const SimpleType& t) { return t.family() == Family::A ? 3 : 2; }

/// Rank range in which the identities above are stated.
inline bool in_stated_range(const SimpleType& t) { return !(t.family() == Family::A && t.rank() == 1); }

}  // namespace wonderful::reference
