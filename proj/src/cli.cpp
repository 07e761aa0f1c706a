#include "echkit/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "echkit/braid.hpp"
#include "echkit/curves.hpp"
#include "echkit/cz.hpp"
#include "echkit/json_io.hpp"
#include "echkit/partitions.hpp"
#include "echkit/relindex.hpp"
#include "echkit/verify.hpp"

namespace echkit::cli {

namespace {

using json_io::json;

struct Outcome {
  json doc;
  std::string text;
  int code = 0;
};

json object_payload(const std::string& text) {
  json j = json_io::parse_payload(text);
  if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "expected a JSON object payload");
  return j;
}

Trivialization offsets_or_reference(const std::string& text) {
  if (text.empty()) return Trivialization::reference();
  return json_io::trivialization_from_json(json_io::parse_payload(text));
}

std::string flat_text(const json& doc) {
  std::ostringstream s;
  for (const auto& [k, v] : doc.items()) {
    if (k == "schema_version" || k == "kind") continue;
    s << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
  return s.str();
}

// --- cz -------------------------------------------------------------------

struct CzArgs {
  std::string orbit;
  Int k = 1;
  Int offset = 0;
};

Outcome do_cz(const CzArgs& a) {
  const json oj = object_payload(a.orbit);
  const Orbit o = json_io::orbit_from_json(oj, oj.value("id", std::string("gamma")));
  Trivialization tau;
  tau.set(o.id(), a.offset);
  const Int value = cz::cz(o, tau, a.k);
  Outcome r;
  r.doc = json_io::envelope("cz", {{"orbit", json_io::orbit_to_json(o)},
                                   {"k", a.k},
                                   {"offset", a.offset},
                                   {"cz", value}});
  r.text = std::to_string(value) + '\n';
  return r;
}

// --- partitions -----------------------------------------------------------

struct PartitionArgs {
  std::string orbit;
  Int m = 1;
  std::string dir = "out";
  bool emit_path = false;
};

Outcome do_partitions(const PartitionArgs& a) {
  const json oj = object_payload(a.orbit);
  const Orbit o = json_io::orbit_from_json(oj, oj.value("id", std::string("gamma")));
  const auto res = a.dir == "out" ? partitions::p_out(o, a.m) : partitions::p_in(o, a.m);
  json body = {{"orbit", json_io::orbit_to_json(o)},
               {"m", a.m},
               {"dir", a.dir},
               {"partition", json_io::partition_to_json(res.partition)}};
  if (a.emit_path && res.path) {
    body["path"] = json_io::path_to_json(*res.path);
    json corners = json::array();
    for (const auto& p : res.path->corners()) corners.push_back({p.x, p.y});
    body["corners"] = corners;
  }
  Outcome r;
  r.doc = json_io::envelope("partitions", body);
  r.text = res.partition.str() + '\n';
  if (a.emit_path && res.path) r.text += "path: " + body["path"].dump() + '\n';
  return r;
}

// --- braid ----------------------------------------------------------------

struct BraidArgs {
  std::string word;
  Int m = 0;
  std::string components;
  std::optional<Int> reframe;
};

Outcome do_braid(const BraidArgs& a) {
  const json comps = a.components.empty() ? json::object() : json_io::parse_payload(a.components);
  braid::BraidWord b = json_io::braid_from_json(json_io::parse_payload(a.word), a.m, comps);
  if (b.components.empty()) {
    for (Int s = 1; s <= b.m; ++s) b.components["s" + std::to_string(s)] = {s};
  }
  braid::validate(b);
  braid::Invariants invs = braid::braid_invariants(b);
  json body = {{"braid", json_io::braid_to_json(b)}, {"invariants", json_io::invariants_to_json(invs)}};
  if (a.reframe) {
    invs = braid::reframe(invs, braid::strand_counts(b), *a.reframe);
    body["reframe"] = *a.reframe;
    body["reframed"] = json_io::invariants_to_json(invs);
  }
  Outcome r;
  r.doc = json_io::envelope("braid", body);
  std::ostringstream s;
  for (const auto& [name, w] : invs.w) s << "w(" << name << ") = " << w << '\n';
  for (const auto& [key, l] : invs.link) s << "link(" << key.first << ", " << key.second << ") = " << l << '\n';
  for (const auto& [name, e] : invs.eta) s << "eta(" << name << ") = " << e << '\n';
  r.text = s.str();
  return r;
}

// --- index ----------------------------------------------------------------

struct IndexArgs {
  std::string relclass;
  std::string offsets;
  bool j = false;
};

Outcome do_index(const IndexArgs& a) {
  const json doc = object_payload(a.relclass);
  const RelClass z = json_io::relclass_from_json(doc, json_io::orbits_of(doc));
  const Trivialization tau = offsets_or_reference(a.offsets);
  const auto framed = relindex::transform_relclass(z, tau);
  json body = {{"relclass", json_io::relclass_to_json(z)},
               {"offsets", json_io::trivialization_to_json(tau)},
               {"c_tau", framed.c},
               {"q_tau", framed.q},
               {"I", relindex::ech_index(z, tau)}};
  if (a.j) {
    const auto js = relindex::j_indices(z, tau);
    body["J0"] = js.j0;
    body["J_plus"] = js.j_plus;
    body["J_minus"] = js.j_minus;
  }
  Outcome r;
  r.doc = json_io::envelope("index", body);
  std::ostringstream s;
  s << "I = " << body["I"].get<Int>() << '\n';
  if (a.j) {
    s << "J0 = " << body["J0"].get<Int>() << "\nJ+ = " << body["J_plus"].get<Int>()
      << "\nJ- = " << body["J_minus"].get<Int>() << '\n';
  }
  r.text = s.str();
  return r;
}

// --- grade ----------------------------------------------------------------

struct GradeArgs {
  std::string orbitset;
  std::string context;
  std::string braid_w;
  std::string offsets;
  Int p = 0;
  Int modulus = 0;
  bool j = false;
};

std::vector<Int> int_vector(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidInput, std::string(what) + " must be an integer array");
  std::vector<Int> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(ErrorCode::InvalidInput, std::string(what) + " must be an integer array");
    v.push_back(x.get<Int>());
  }
  return v;
}

Outcome do_grade(const GradeArgs& a) {
  const json doc = object_payload(a.orbitset);
  const OrbitSet set = json_io::orbit_set_from_json(doc, json_io::orbits_of(doc), Side::Plus);

  relindex::GradingContext ctx;
  if (!a.context.empty()) {
    const json c = object_payload(a.context);
    ctx.h = HomologyModel(int_vector(c.value("invariant_factors", json::array()), "invariant_factors"));
    ctx.c1 = ctx.h.reduce(int_vector(c.value("c1", json(ctx.h.zero())), "c1"));
    if (c.contains("orbit_class")) {
      for (const auto& [id, x] : c["orbit_class"].items()) ctx.orbit_class[id] = ctx.h.reduce(int_vector(x, "orbit_class"));
    }
  } else {
    // No homology declared: every orbit is null-homologous in a rank-0 model.
    for (const auto& e : set.entries()) ctx.orbit_class[e.orbit.id()] = {};
  }

  std::map<std::string, Int> braid_w;
  if (!a.braid_w.empty()) {
    for (const auto& [id, w] : json_io::parse_payload(a.braid_w).items()) {
      if (!w.is_number_integer()) throw Error(ErrorCode::InvalidInput, "braid writhes must be integers");
      braid_w[id] = w.get<Int>();
    }
  }
  const auto kind = a.j ? relindex::IndexKind::J : relindex::IndexKind::I;
  const auto g = relindex::abs_grading(ctx, set, relindex::IndexValue::make(a.p, a.modulus), braid_w,
                                       offsets_or_reference(a.offsets), kind);
  Outcome r;
  r.doc = json_io::envelope("grade", {{"orbitset", json_io::orbit_set_to_json(set)},
                                      {"index", a.j ? "J" : "I"},
                                      {"gamma", g.gamma},
                                      {"offset", g.offset.value},
                                      {"modulus", g.offset.modulus}});
  r.text = flat_text(r.doc);
  return r;
}

// --- curve ----------------------------------------------------------------

struct CurveArgs {
  std::string data;
  std::string a;
  std::string b;
  std::string offsets;
};

curves::CurveData curve_payload(const std::string& text) {
  const json doc = object_payload(text);
  return curves::CurveData(json_io::curve_data_from_json(doc, json_io::orbits_of(doc)));
}

Outcome do_curve_report(const CurveArgs& a) {
  const auto c = curve_payload(a.data);
  const Trivialization tau = offsets_or_reference(a.offsets);
  json comps = json::array();
  for (const auto& p : c.components) {
    const Int q = c.q_entry(p.comp.name, p.comp.name);
    const auto cc = curves::self_intersection(p.comp, tau);
    comps.push_back({{"name", p.comp.name},
                     {"degree", p.degree},
                     {"chi", p.comp.chi()},
                     {"ind", curves::fredholm_index(p.comp, tau)},
                     {"I", curves::component_ech_index(p.comp, q, tau)},
                     {"J0", curves::component_j0(p.comp, q, tau)},
                     {"adjunction_residual", curves::adjunction_residual(p.comp, q)},
                     {"self_intersection", cc.value.str()},
                     {"trivial_cylinder", p.comp.is_trivial_cylinder()}});
  }
  json body = {{"data", json_io::curve_data_to_json(c)},
               {"components", comps},
               {"I", curves::curve_ech_index(c, tau)},
               {"J0", curves::curve_j0(c, tau)},
               {"J_plus", curves::curve_j_plus(c, tau)}};
  if (c.is_simple()) body["delta"] = curves::curve_delta(c);
  if (c.components.size() == 1 && c.is_simple()) {
    const auto rep = curves::index_inequality_report(c, tau);
    body["index_inequality"] = {{"ind", rep.ind},
                                {"I", rep.ech_index},
                                {"delta", rep.delta},
                                {"writhe_slack", rep.writhe_slack},
                                {"holds", rep.holds},
                                {"equality_admissible", rep.equality_admissible}};
  }
  Outcome r;
  r.doc = json_io::envelope("curve-report", body);
  std::ostringstream s;
  s << "I = " << body["I"] << "\nJ0 = " << body["J0"] << "\nJ+ = " << body["J_plus"] << '\n';
  for (const auto& cj : comps) {
    s << cj["name"].get<std::string>() << ": ind " << cj["ind"] << ", I " << cj["I"] << ", J0 "
      << cj["J0"] << ", C.C " << cj["self_intersection"].get<std::string>() << '\n';
  }
  r.text = s.str();
  return r;
}

Outcome do_curve_union(const CurveArgs& a) {
  const auto c = curve_payload(a.a);
  const auto c2 = curve_payload(a.b);
  const Trivialization tau = offsets_or_reference(a.offsets);
  const auto js = curves::j_union_slack(c, c2, tau);
  Outcome r;
  r.doc = json_io::envelope("curve-union", {{"dot", curves::dot(c, c2).str()},
                                            {"index_slack", curves::union_index_slack(c, c2, tau)},
                                            {"j_slack", js.slack},
                                            {"E", js.e},
                                            {"N", js.n}});
  r.text = flat_text(r.doc);
  return r;
}

// --- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string check;
  std::optional<Int> m_max;
  std::string thetas;
  Int n_min = -5;
  Int n_max = 5;
  std::uint64_t seed = 1;
  std::optional<Int> trials;
  unsigned workers = 0;
};

std::vector<MonodromyAngle> parse_thetas(const std::string& list) {
  std::vector<MonodromyAngle> out;
  std::stringstream s(list);
  std::string item;
  while (std::getline(s, item, ',')) {
    const auto slash = item.find('/');
    if (slash == std::string::npos) throw Error(ErrorCode::InvalidInput, "angles are written p/q, got '" + item + "'");
    Int q = 0;
    try {
      q = std::stoll(item.substr(slash + 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidInput, "bad denominator in '" + item + "'");
    }
    out.push_back(parse_angle(item, q - 1));
  }
  if (out.empty()) throw Error(ErrorCode::InvalidInput, "empty angle list");
  return out;
}

Outcome do_verify(const VerifyArgs& a) {
  using namespace verify;
  set_worker_count(a.workers);
  auto thetas = [&](std::vector<Int> dens) {
    return a.thetas.empty() ? theta_grid(dens) : parse_thetas(a.thetas);
  };
  auto grid = [&](std::vector<Int> dens) {
    return OrbitGrid{thetas(dens), rotation_grid(a.n_min, a.n_max, 0), rotation_grid(a.n_min, a.n_max, 1)};
  };
  auto m = [&](Int d) { return a.m_max.value_or(d); };
  auto t = [&](Int d) { return a.trials.value_or(d); };

  const std::map<std::string, std::function<SweepReport()>> checks = {
      {"ce1", [&] { return sweep_ce1(m(10), thetas({11, 13, 31, 97})); }},
      {"pick", [&] { return sweep_pick(m(10), thetas({11, 13, 31, 97})); }},
      {"cli", [&] { return sweep_cli(m(12), grid({13, 31, 97})); }},
      {"cli-strict", [&] { return sweep_cli_strict(m(12), grid({13, 31, 97})); }},
      {"neg-hyp", [&] { return sweep_neg_hyp(m(20)); }},
      {"jbound", [&] { return sweep_jbound_cases(m(10), grid({11, 13, 31, 97})); }},
      {"huge", [&] { return sweep_huge(m(10), grid({11, 13, 31, 97})); }},
      {"duality", [&] { return sweep_duality(m(50), thetas({53, 59, 97})); }},
      {"paths", [&] { return sweep_path_oracle(m(10), thetas({11, 13, 31, 97})); }},
      {"invariance", [&] { return check_invariance(a.seed, t(1000)); }},
      {"braid", [&] { return check_braid_identities(a.seed, t(1000), 6, 40); }},
      {"index", [&] { return check_index_equivalence(a.seed, t(500)); }},
      {"union", [&] { return check_union_routes(a.seed, t(500)); }},
      {"jplus", [&] { return check_j_plus(a.seed, t(500)); }},
      {"size", [&] { return check_size_identity(a.seed, t(1000)); }},
      {"absrel", [&] { return check_abs_vs_rel(a.seed, t(200)); }},
      {"additivity", [&] { return check_additivity(a.seed, t(300)); }},
  };
  auto it = checks.find(a.check);
  if (it == checks.end()) throw Error(ErrorCode::InvalidInput, "unknown check '" + a.check + "'");
  const SweepReport rep = it->second();

  Outcome r;
  r.doc = json_io::envelope("sweep-report", json_io::sweep_report_to_json(rep));
  std::ostringstream s;
  s << rep.name << ": " << rep.instances_checked << " instances, " << rep.violations.size()
    << " violations, " << rep.equality_cases.size() << " equality cases\n";
  for (const auto& [k, v] : rep.counters) s << "  " << k << " = " << v << '\n';
  for (std::size_t i = 0; i < rep.violations.size() && i < 20; ++i) s << "  violation: " << rep.violations[i] << '\n';
  r.text = s.str();
  r.code = rep.ok() ? 0 : 2;
  return r;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"echkit: exact ECH index combinatorics"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format;
  std::string out_path;
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out_path, "write the result to this file");

  std::function<Outcome()> action;
  bool json_default = false;

  CzArgs cz_args;
  auto* cz_cmd = app.add_subcommand("cz", "Conley-Zehnder index of an iterate");
  cz_cmd->add_option("--orbit", cz_args.orbit, "orbit JSON or file")->required();
  cz_cmd->add_option("--k", cz_args.k, "iterate")->required();
  cz_cmd->add_option("--offset", cz_args.offset, "trivialization offset");
  cz_cmd->callback([&] { action = [&] { return do_cz(cz_args); }; });

  PartitionArgs part_args;
  auto* part_cmd = app.add_subcommand("partitions", "incoming or outgoing partition");
  part_cmd->add_option("--orbit", part_args.orbit, "orbit JSON or file")->required();
  part_cmd->add_option("--m", part_args.m, "multiplicity")->required();
  part_cmd->add_option("--dir", part_args.dir, "out or in")->check(CLI::IsMember({"out", "in"}));
  part_cmd->add_flag("--emit-path", part_args.emit_path, "include the extremal lattice path");
  part_cmd->callback([&] { action = [&] { return do_partitions(part_args); }; });

  BraidArgs braid_args;
  auto* braid_cmd = app.add_subcommand("braid", "writhe, linking and winding of a braid word");
  braid_cmd->add_option("--word", braid_args.word, "[[position, sign], ...]")->required();
  braid_cmd->add_option("--m", braid_args.m, "number of strands")->required();
  braid_cmd->add_option("--components", braid_args.components, "{name: [strands]}");
  braid_cmd->add_option("--reframe", braid_args.reframe, "framing change");
  braid_cmd->callback([&] { action = [&] { return do_braid(braid_args); }; });

  IndexArgs index_args;
  auto* index_cmd = app.add_subcommand("index", "relative indices I, J0, J+ and J-");
  index_cmd->add_option("--relclass", index_args.relclass, "relative class JSON or file")->required();
  index_cmd->add_option("--offsets", index_args.offsets, "{orbit: offset}");
  index_cmd->add_flag("--j", index_args.j, "also compute the J indices");
  index_cmd->callback([&] { action = [&] { return do_index(index_args); }; });

  GradeArgs grade_args;
  auto* grade_cmd = app.add_subcommand("grade", "absolute grading as a plane field class");
  grade_cmd->add_option("--orbitset", grade_args.orbitset, "orbit set JSON or file")->required();
  grade_cmd->add_option("--context", grade_args.context, "homology context JSON or file");
  grade_cmd->add_option("--p", grade_args.p, "P offset of the framed link");
  grade_cmd->add_option("--modulus", grade_args.modulus, "modulus of the P offset");
  grade_cmd->add_option("--braid-w", grade_args.braid_w, "{orbit: writhe}");
  grade_cmd->add_option("--offsets", grade_args.offsets, "{orbit: offset}");
  grade_cmd->add_flag("--j", grade_args.j, "grade for J instead of I");
  grade_cmd->callback([&] { action = [&] { return do_grade(grade_args); }; });

  CurveArgs curve_args;
  auto* curve_cmd = app.add_subcommand("curve", "curve-level formulas");
  curve_cmd->require_subcommand(1);
  curve_cmd->fallthrough();
  auto* report_cmd = curve_cmd->add_subcommand("report", "indices and bounds of one curve");
  report_cmd->add_option("--data", curve_args.data, "curve JSON or file")->required();
  report_cmd->add_option("--offsets", curve_args.offsets, "{orbit: offset}");
  report_cmd->fallthrough();
  report_cmd->callback([&] { action = [&] { return do_curve_report(curve_args); }; });
  auto* union_cmd = curve_cmd->add_subcommand("union", "union slacks of two curves");
  union_cmd->add_option("--a", curve_args.a, "first curve JSON or file")->required();
  union_cmd->add_option("--b", curve_args.b, "second curve JSON or file")->required();
  union_cmd->add_option("--offsets", curve_args.offsets, "{orbit: offset}");
  union_cmd->fallthrough();
  union_cmd->callback([&] { action = [&] { return do_curve_union(curve_args); }; });

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "exhaustive sweeps and seeded property checks");
  verify_cmd->add_option("check", verify_args.check, "sweep or check name")->required();
  verify_cmd->add_option("--m-max", verify_args.m_max, "multiplicity bound");
  verify_cmd->add_option("--thetas", verify_args.thetas, "comma-separated p/q list");
  verify_cmd->add_option("--n-min", verify_args.n_min, "smallest hyperbolic rotation");
  verify_cmd->add_option("--n-max", verify_args.n_max, "largest hyperbolic rotation");
  verify_cmd->add_option("--seed", verify_args.seed, "seed for randomized checks");
  verify_cmd->add_option("--trials", verify_args.trials, "trials for randomized checks");
  verify_cmd->add_option("--workers", verify_args.workers, "worker threads, 0 for all cores");
  verify_cmd->callback([&] {
    json_default = true;
    action = [&] { return do_verify(verify_args); };
  });

  for (auto* sub : {cz_cmd, part_cmd, braid_cmd, index_cmd, grade_cmd, verify_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    const Outcome r = action();
    const bool as_json = format.empty() ? json_default : format == "json";
    const std::string text = as_json ? r.doc.dump(2) + '\n' : r.text;
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream f(out_path);
      if (!f) throw Error(ErrorCode::InvalidInput, "cannot write '" + out_path + "'");
      f << text;
    }
    return r.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const json::exception& e) {
    err << "error: InvalidInput: " << e.what() << '\n';
  }
  return 1;
}

}  // namespace echkit::cli
