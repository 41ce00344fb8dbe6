#pragma once

// Command-line front end. Every command writes one report document to the
// output stream as JSON (default) or TSV.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wonderful/curves.hpp"
#include "wonderful/tables.hpp"
#include "wonderful/verify.hpp"
#include "wonderful/weyl.hpp"
#include "wonderful/wonderful.hpp"

namespace wonderful::cli {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Usage problem detected after argument parsing.
class UsageError : public Error {
 public:
  UsageError(const std::string& what, std::string example) : Error("UsageError", what), example_(std::move(example)) {}
  const std::string& example() const noexcept { return example_; }

 private:
  std::string example_;
};

// ---------------------------------------------------------------------------
// Input parsing

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

/// "A2xG2" -> {A2, G2}.
inline std::vector<SimpleType> parse_product(const std::string& text) {
  std::vector<SimpleType> out;
  std::string norm = text;
  for (char& ch : norm)
    if (ch == 'X') ch = 'x';
  for (const std::string& atom : split(norm, 'x')) out.push_back(SimpleType::parse(atom));
  return out;
}

/// "1,-2,0" -> {1,-2,0}; the empty string parses to the empty list.
inline std::vector<Int> parse_ints(const std::string& text) {
  std::vector<Int> out;
  if (text.empty()) return out;
  for (const std::string& tok : split(text, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("'" + tok + "' is not an integer in '" + text + "'");
    }
    if (used != tok.size()) throw ParseError("'" + tok + "' is not an integer in '" + text + "'");
    out.push_back(v);
  }
  return out;
}

inline OrbitLabel parse_orbit(const std::string& text, std::size_t rank) {
  std::string t = text;
  if (!t.empty() && t.front() == '{' && t.back() == '}') t = t.substr(1, t.size() - 2);
  if (t == "none") t.clear();
  std::vector<int> idx;
  for (Int v : parse_ints(t)) idx.push_back(static_cast<int>(v));
  return OrbitLabel(rank, std::move(idx));
}

template <class Tag>
Coords<Tag> parse_coords(const std::string& text, const RootDatum& d, const std::string& flag) {
  auto v = parse_ints(text);
  if (v.size() != d.rank())
    throw RankMismatch(flag + " needs " + std::to_string(d.rank()) + " comma-separated integers for " +
                       d.type().name() + ", got " + std::to_string(v.size()));
  return Coords<Tag>(std::move(v));
}

// ---------------------------------------------------------------------------
// Output

struct Document {
  std::string command;
  json query = json::object();
  json results = json::array();
  json extra = json::object();

  void add(json record) { results.push_back(std::move(record)); }

  json to_json() const {
    json doc = extra;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["query"] = query;
    doc["results"] = results;
    json prov = json::object();
    for (const auto& r : results)
      if (r.contains("id") && r.contains("provenance")) prov[r["id"].get<std::string>()] = r["provenance"];
    doc["provenance"] = prov;
    return doc;
  }
};

inline std::string tsv_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  for (char& ch : s)
    if (ch == '\t' || ch == '\n') ch = ' ';
  return s;
}

inline void write_tsv(const Document& doc, std::ostream& out) {
  std::set<std::string> keys;
  for (const auto& r : doc.results)
    for (const auto& [k, v] : r.items()) keys.insert(k);
  std::string sep;
  for (const auto& k : keys) {
    out << sep << k;
    sep = "\t";
  }
  out << '\n';
  for (const auto& r : doc.results) {
    sep.clear();
    for (const auto& k : keys) {
      out << sep << (r.contains(k) ? tsv_cell(r[k]) : "");
      sep = "\t";
    }
    out << '\n';
  }
}

inline void write(const Document& doc, const std::string& format, std::ostream& out) {
  if (format == "tsv") write_tsv(doc, out);
  else out << doc.to_json().dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// Commands

inline json roots_record(const RootDatum& d, std::size_t factor) {
  LongestElement w0 = longest_element(d);
  json roots = json::array();
  for (const Root& a : d.positive_roots())
    roots.push_back({{"root", a.values()},
                     {"height", height(a)},
                     {"weight", d.to_weight(a).values()},
                     {"coroot", d.coroot(a).values()},
                     {"long", d.norm(a) == d.norm(d.theta())}});
  json cartan = json::array();
  for (std::size_t i = 0; i < d.rank(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < d.rank(); ++j) row.push_back(d.cartan(i, j));
    cartan.push_back(row);
  }
  json r = {{"id", d.type().name() + "/roots/" + std::to_string(factor)},
            {"factor", factor},
            {"type", d.type().name()},
            {"rank", d.rank()},
            {"cartan", cartan},
            {"positive_root_count", d.positive_roots().size()},
            {"positive_roots", roots},
            {"theta", d.theta().values()},
            {"theta_coroot", d.theta_coroot().values()},
            {"rho", d.rho().values()},
            {"kappa", d.kappa().values()},
            {"w0_opposition", w0.opposition},
            {"weyl_group_order", weyl_group_order(d.type())},
            {"provenance", "derived"}};
  if (d.theta_short()) {
    r["theta_short"] = d.theta_short()->values();
    r["theta_short_coroot"] = d.theta_short_coroot()->values();
  } else {
    r["theta_short"] = nullptr;
    r["theta_short_coroot"] = nullptr;
  }
  return r;
}

inline json report_record(const RootDatum& d, const CurveReport& rep) {
  json degrees = json::object();
  for (const auto& [w, deg] : rep.degrees) degrees[w.str()] = deg;
  return {{"degrees", degrees},
          {"boundary_degrees", rep.boundary_degrees},
          {"orbit_at_zero", rep.orbit_at_zero.subset()},
          {"orbit_at_infinity", rep.orbit_at_infinity.subset()},
          {"smooth", rep.smooth},
          {"indivisible", rep.indivisible},
          {"anticanonical_degree", rep.anticanonical_degree},
          {"type", d.type().name()}};
}

inline json vmrt_record(const RootDatum& d, std::size_t factor) {
  VmrtReport v = vmrt_report(d);
  return {{"id", d.type().name() + "/vmrt/" + std::to_string(factor)},
          {"factor", factor},
          {"type", d.type().name()},
          {"kappa_theta", v.kappa_theta},
          {"dim_Kx", v.dim_Kx},
          {"dim_P_Omin", v.dim_P_Omin},
          {"offset", v.offset},
          {"i0", v.i0 ? json(*v.i0) : json(nullptr)},
          {"family_description", to_string(v.family)},
          {"in_stated_range", reference::in_stated_range(d.type())},
          {"provenance", "lem:dim"}};
}

struct Args {
  std::string format = "json";
  std::string type;
  std::string mult;
  std::string additive;
  std::string weight;
  std::string contains;
  std::string in;
  std::string table;
  int max_rank = 8;
  bool all = false;
  std::size_t oracle_cap = 0;
};

inline int cmd_roots(const Args& a, Document& doc) {
  doc.query = {{"type", a.type}};
  auto factors = parse_product(a.type);
  for (std::size_t k = 0; k < factors.size(); ++k) doc.add(roots_record(build(factors[k]), k));
  return kOk;
}

inline int cmd_curve(const Args& a, Document& doc) {
  const std::string example = "wonderful curve --type G2 --additive theta-short --weight 2,-1";
  doc.query = {{"type", a.type}, {"mult", a.mult}, {"additive", a.additive}, {"weight", a.weight}};
  if (a.mult.empty() == a.additive.empty()) throw UsageError("exactly one of --mult or --additive is required", example);
  auto factors = parse_product(a.type);

  if (!a.mult.empty()) {
    if (factors.size() != 1)
      throw UsageError("--mult takes a simple type, got the product " + a.type, "wonderful curve --type A3 --mult 1,0,1");
    RootDatum d = build(factors.front());
    auto eta = parse_coords<CocharacterTag>(a.mult, d, "--mult");
    std::optional<Weight> extra;
    if (!a.weight.empty()) extra = parse_coords<WeightTag>(a.weight, d, "--weight");
    CurveReport rep = curve_report(d, MultCurve::make(d, eta), extra);
    json r = report_record(d, rep);
    r["id"] = d.type().name() + "/curve/mult/" + eta.str();
    r["curve"] = "multiplicative";
    r["eta"] = eta.values();
    if (extra) r["degree"] = rep.degrees.at(*extra);
    r["provenance"] = "lem:mult";
    doc.add(r);
    return kOk;
  }

  HighestRoot which = parse_highest_root(a.additive);
  std::vector<std::string> weights;
  if (!a.weight.empty()) {
    weights = split(a.weight, ';');
    if (weights.size() != factors.size())
      throw UsageError("--weight needs one ';'-separated coordinate list per factor (" +
                           std::to_string(factors.size()) + ")",
                       "wonderful curve --type A2xG2 --additive theta --weight '1,1;1,1'");
  }
  for (std::size_t k = 0; k < factors.size(); ++k) {
    RootDatum d = build(factors[k]);
    AddCurve c = AddCurve::make(d, which, k);
    std::optional<Weight> extra;
    if (!weights.empty()) extra = parse_coords<WeightTag>(weights[k], d, "--weight");
    CurveReport rep = curve_report(d, c, extra);
    json r = report_record(d, rep);
    r["id"] = d.type().name() + "/curve/" + to_string(which) + "/" + std::to_string(k);
    r["curve"] = "additive";
    r["factor"] = k;
    r["root"] = c.root.values();
    r["coroot"] = highest_coroot(d, which).values();
    r["which"] = to_string(which);
    if (extra) r["degree"] = rep.degrees.at(*extra);
    bool outside = which == HighestRoot::theta_short && factors[k].rank() == 2 &&
                   (factors[k].family() == Family::B || factors[k].family() == Family::C);
    r["in_stated_range"] = !outside;
    r["provenance"] = which == HighestRoot::theta ? "lem:add" : (outside ? "derived" : "rem:short");
    doc.add(r);
  }
  return kOk;
}

inline int cmd_vmrt(const Args& a, Document& doc) {
  doc.query = {{"type", a.type}, {"weight", a.weight}};
  auto factors = parse_product(a.type);
  std::vector<Weight> polarization;
  std::vector<std::string> weights = a.weight.empty() ? std::vector<std::string>{} : split(a.weight, ';');
  if (!weights.empty() && weights.size() != factors.size())
    throw UsageError("--weight needs one ';'-separated coordinate list per factor",
                     "wonderful vmrt A2xG2 --weight '1,1;1,1'");
  for (std::size_t k = 0; k < factors.size(); ++k) {
    RootDatum d = build(factors[k]);
    doc.add(vmrt_record(d, k));
    polarization.push_back(weights.empty() ? d.rho() : parse_coords<WeightTag>(weights[k], d, "--weight"));
  }
  std::vector<Int> degrees;
  auto argmin = minimal_family_product(factors, polarization, &degrees);
  json pol = json::array();
  for (const auto& w : polarization) pol.push_back(w.values());
  doc.add({{"id", a.type + "/minimal-family"},
           {"type", a.type},
           {"polarization", pol},
           {"degrees", degrees},
           {"minimal_factors", argmin},
           {"unique", argmin.size() == 1},
           {"provenance", "prop:prod"}});
  return kOk;
}

inline int cmd_orbits(const Args& a, Document& doc) {
  doc.query = {{"type", a.type}, {"contains", a.contains}, {"in", a.in}};
  auto factors = parse_product(a.type);
  std::size_t rank = 0;
  for (const auto& f : factors) rank += static_cast<std::size_t>(f.rank());
  OrbitLabel lhs = parse_orbit(a.contains, rank);
  OrbitLabel rhs = parse_orbit(a.in, rank);
  doc.add({{"id", a.type + "/orbits/" + lhs.str() + "/" + rhs.str()},
           {"type", a.type},
           {"closure_of", lhs.subset()},
           {"orbit", rhs.subset()},
           {"closure_of_codimension", lhs.codimension()},
           {"orbit_codimension", rhs.codimension()},
           {"contains", orbit_closure_contains(lhs, rhs)},
           {"provenance", "sec:orbits"}});
  return kOk;
}

inline int cmd_table(const Args& a, Document& doc) {
  doc.query = {{"table", a.table}, {"max_rank", a.max_rank}};
  tables::Table t = tables::emit_table(a.table, a.max_rank);
  doc.results = t.rows;
  doc.extra["reference"] = t.reference;
  doc.extra["reference_version"] = std::string(reference::kVersion);
  doc.extra["diff"] = t.diff;
  return t.diff.empty() ? kOk : kVerificationFailed;
}

inline int cmd_verify(const Args& a, Document& doc) {
  verify::Options opt;
  opt.max_rank = a.max_rank;
  opt.all = a.all;
  opt.oracle_cap = a.oracle_cap ? a.oracle_cap : oracle_cap_from_env();
  doc.query = {{"all", a.all}, {"max_rank", a.max_rank}, {"oracle_cap", opt.oracle_cap}};
  auto checks = verify::run(opt);
  json per_type = json::object();
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& c : checks) {
    doc.add({{"id", c.type + "/" + c.name},
             {"type", c.type},
             {"check", c.name},
             {"status", c.skipped ? "skipped" : c.passed ? "pass" : "fail"},
             {"detail", c.detail},
             {"provenance", c.provenance}});
    json& s = per_type[c.type];
    if (s.is_null()) s = {{"pass", 0}, {"fail", 0}, {"skipped", 0}};
    const char* key = c.skipped ? "skipped" : c.passed ? "pass" : "fail";
    s[key] = s[key].get<int>() + 1;
    (c.skipped ? skipped : c.passed ? passed : failed) += 1;
  }
  // Each table also carries its reference diff.
  json table_diffs = json::object();
  for (const auto& name : tables::names()) {
    auto t = tables::emit_table(name, a.max_rank);
    table_diffs[name] = t.diff;
    failed += t.diff.size();
  }
  doc.extra["summary"] = {{"pass", passed}, {"fail", failed}, {"skipped", skipped}, {"per_type", per_type}};
  doc.extra["table_diffs"] = table_diffs;
  return failed == 0 ? kOk : kVerificationFailed;
}

/// Runs one command. Never throws.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of minimal rational curves on wonderful compactifications", "wonderful"};
  app.require_subcommand(1);
  app.fallthrough();
  Args a;
  app.add_option("--format", a.format, "output format")->check(CLI::IsMember({"json", "tsv"}));

  auto* roots = app.add_subcommand("roots", "root data of a (product) type");
  roots->add_option("type", a.type, "type, e.g. E8 or A2xG2")->required();

  auto* curve = app.add_subcommand("curve", "degrees and limit orbits of one curve");
  curve->add_option("--type", a.type, "type, e.g. A3")->required();
  curve->add_option("--mult", a.mult, "dominant indivisible cocharacter c1,..,cl (fundamental coweights)");
  curve->add_option("--additive", a.additive, "theta | theta-short");
  curve->add_option("--weight", a.weight, "weight a1,..,al (fundamental weights); ';' between factors");

  auto* vmrt = app.add_subcommand("vmrt", "dimensions of the family of minimal rational curves");
  vmrt->add_option("type", a.type, "type, e.g. A3 or A2xG2")->required();
  vmrt->add_option("--weight", a.weight, "polarization per factor, ';'-separated (default rho)");

  auto* orbits = app.add_subcommand("orbits", "closure relation between G x G-orbits");
  orbits->add_option("type", a.type, "type")->required();
  orbits->add_option("--contains", a.contains, "orbit label I, e.g. 1,3 (empty for the open orbit)")->required();
  orbits->add_option("--in", a.in, "orbit label J")->required();

  auto* table = app.add_subcommand("table", "classification tables with reference diff");
  table->add_option("name", a.table, "lemma-dim | lemma-roots | remark-lines | remark-short")->required();
  table->add_option("--max-rank", a.max_rank, "largest rank")->check(CLI::Range(1, 64));

  auto* verify = app.add_subcommand("verify", "run every identity check");
  verify->add_flag("--all", a.all, "include the Weyl oracle and randomized checks");
  verify->add_option("--max-rank", a.max_rank, "largest rank")->check(CLI::Range(1, 64));
  verify->add_option("--oracle-cap", a.oracle_cap, "largest |W| to enumerate (overrides WONDERFUL_ORACLE_CAP)");

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n"
        << "example: wonderful curve --type G2 --additive theta-short --weight 2,-1\n";
    return kUsage;
  }

  Document doc;
  int code = kOk;
  CLI::App* sub = app.get_subcommands().front();
  try {
    doc.command = sub->get_name();
    if (sub == roots) code = cmd_roots(a, doc);
    else if (sub == curve) code = cmd_curve(a, doc);
    else if (sub == vmrt) code = cmd_vmrt(a, doc);
    else if (sub == orbits) code = cmd_orbits(a, doc);
    else if (sub == table) code = cmd_table(a, doc);
    else code = cmd_verify(a, doc);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\nexample: " << e.example() << "\n";
    return kUsage;
  } catch (const InvariantViolation& e) {
    err << "verification failure: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const Error& e) {
    err << "error (" << e.kind() << "): " << e.what() << "\n"
        << "example: wonderful " << sub->get_name() << " " << (sub == curve ? "--type A3 --mult 1,0,1" : "A3") << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  write(doc, a.format, out);
  return code;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
  return run(args, out, err);
}

}  // namespace wonderful::cli
