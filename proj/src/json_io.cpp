#include "echkit/json_io.hpp"

#include <fstream>
#include <sstream>

namespace echkit::json_io {

namespace {

[[noreturn]] void bad(const std::string& why) { throw Error(ErrorCode::InvalidInput, why); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

Int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return v.get<Int>();
}

Int int_or(const json& j, const char* key, Int fallback) {
  return j.contains(key) ? int_field(j, key) : fallback;
}

std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) bad(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

json parse_payload(const std::string& text_or_path) {
  std::string text = text_or_path;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) bad("empty payload");
  if (text[first] != '{' && text[first] != '[') {
    std::ifstream in(text_or_path);
    if (!in) bad("cannot read payload file '" + text_or_path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    text = s.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

Orbit orbit_from_json(const json& j, const std::string& id) {
  const std::string kind = string_field(j, "kind");
  const std::string name = j.contains("id") ? string_field(j, "id") : id;
  if (kind == "elliptic") {
    return Orbit::elliptic(name, validate_angle(int_field(j, "p"), int_field(j, "q"), int_field(j, "k_max")));
  }
  if (kind == "hyp+" || kind == "positive_hyperbolic") {
    return Orbit::positive_hyperbolic(name, int_field(j, "n"));
  }
  if (kind == "hyp-" || kind == "negative_hyperbolic") {
    return Orbit::negative_hyperbolic(name, int_field(j, "n"));
  }
  bad("unknown orbit kind '" + kind + "'");
}

json orbit_to_json(const Orbit& o) {
  json j;
  j["id"] = o.id();
  switch (o.kind()) {
    case OrbitKind::Elliptic:
      j["kind"] = "elliptic";
      j["p"] = o.angle().num();
      j["q"] = o.angle().den();
      j["k_max"] = o.angle().horizon();
      break;
    case OrbitKind::PositiveHyperbolic:
      j["kind"] = "hyp+";
      j["n"] = o.rotation();
      break;
    case OrbitKind::NegativeHyperbolic:
      j["kind"] = "hyp-";
      j["n"] = o.rotation();
      break;
  }
  return j;
}

Orbit resolve_orbit(const json& ref, const OrbitTable& orbits) {
  if (ref.is_object()) {
    if (!ref.contains("id")) bad("an inline orbit needs an \"id\"");
    return orbit_from_json(ref, string_field(ref, "id"));
  }
  if (!ref.is_string()) bad("an orbit reference is an id string or an inline orbit object");
  const auto id = ref.get<std::string>();
  auto it = orbits.find(id);
  if (it == orbits.end()) bad("unknown orbit '" + id + "'");
  return it->second;
}

OrbitTable orbits_of(const json& doc) {
  if (doc.is_object() && doc.contains("orbits")) return orbit_table_from_json(doc["orbits"]);
  return {};
}

OrbitTable orbit_table_from_json(const json& j) {
  if (!j.is_object()) bad("'orbits' must map ids to orbit descriptions");
  OrbitTable t;
  for (const auto& [id, o] : j.items()) t.emplace(id, orbit_from_json(o, id));
  return t;
}

json orbit_table_to_json(const OrbitTable& t) {
  json j = json::object();
  for (const auto& [id, o] : t) {
    json oj = orbit_to_json(o);
    oj.erase("id");
    j[id] = oj;
  }
  return j;
}

Side side_from_json(const json& j) {
  if (!j.is_string()) bad("side must be \"plus\" or \"minus\"");
  const auto s = j.get<std::string>();
  if (s == "plus" || s == "+") return Side::Plus;
  if (s == "minus" || s == "-") return Side::Minus;
  bad("side must be \"plus\" or \"minus\", got '" + s + "'");
}

std::string side_name(Side s) { return s == Side::Plus ? "plus" : "minus"; }

OrbitSet orbit_set_from_json(const json& j, const OrbitTable& orbits, Side expected) {
  const Side side = j.contains("side") ? side_from_json(j["side"]) : expected;
  if (side != expected) bad("orbit set is on side '" + side_name(side) + "', expected '" + side_name(expected) + "'");
  const json& entries = field(j, "entries");
  if (!entries.is_array()) bad("'entries' must be an array");
  std::vector<OrbitSet::Entry> out;
  for (const auto& e : entries) out.push_back({resolve_orbit(field(e, "orbit"), orbits), int_field(e, "mult")});
  return OrbitSet(std::move(out), side);
}

json orbit_set_to_json(const OrbitSet& s) {
  json entries = json::array();
  for (const auto& e : s.entries()) entries.push_back({{"orbit", e.orbit.id()}, {"mult", e.mult}});
  return {{"side", side_name(s.side())}, {"entries", entries}};
}

Trivialization trivialization_from_json(const json& j) {
  if (!j.is_object()) bad("offsets must map orbit ids to integers");
  std::map<std::string, Int> m;
  for (const auto& [id, v] : j.items()) {
    if (!v.is_number_integer()) bad("offset of '" + id + "' must be an integer");
    m[id] = v.get<Int>();
  }
  return Trivialization(std::move(m));
}

json trivialization_to_json(const Trivialization& t) {
  json j = json::object();
  for (const auto& [id, o] : t.offsets()) j[id] = o;
  return j;
}

RelClass relclass_from_json(const json& j, const OrbitTable& orbits) {
  RelClass z;
  z.name = j.contains("name") ? string_field(j, "name") : "Z";
  z.alpha = orbit_set_from_json(field(j, "alpha"), orbits, Side::Plus);
  z.beta = orbit_set_from_json(field(j, "beta"), orbits, Side::Minus);
  z.c_ref = int_field(j, "c_ref");
  z.q_ref = int_field(j, "q_ref");
  if (j.contains("q_cross")) {
    for (const auto& [other, v] : j["q_cross"].items()) {
      if (!v.is_number_integer()) bad("q_cross values must be integers");
      z.q_cross[other] = v.get<Int>();
    }
  }
  z.validate();
  return z;
}

json relclass_to_json(const RelClass& z) {
  OrbitTable t;
  for (const auto* s : {&z.alpha, &z.beta}) {
    for (const auto& e : s->entries()) t.emplace(e.orbit.id(), e.orbit);
  }
  json cross = json::object();
  for (const auto& [k, v] : z.q_cross) cross[k] = v;
  return {{"name", z.name},
          {"orbits", orbit_table_to_json(t)},
          {"alpha", orbit_set_to_json(z.alpha)},
          {"beta", orbit_set_to_json(z.beta)},
          {"c_ref", z.c_ref},
          {"q_ref", z.q_ref},
          {"q_cross", cross}};
}

json partition_to_json(const partitions::Partition& p) { return p.parts(); }

json path_to_json(const partitions::LatticePath& p) {
  json v = json::array();
  for (const auto& pt : p.vertices) v.push_back({pt.x, pt.y});
  return v;
}

braid::BraidWord braid_from_json(const json& word, Int m, const json& components) {
  braid::BraidWord b;
  b.m = m;
  if (!word.is_array()) bad("a braid word is an array of [position, sign] pairs");
  for (const auto& l : word) {
    if (!l.is_array() || l.size() != 2 || !l[0].is_number_integer() || !l[1].is_number_integer()) {
      bad("each letter must be [position, sign]");
    }
    b.letters.push_back({l[0].get<Int>(), static_cast<int>(l[1].get<Int>())});
  }
  if (!components.is_object()) bad("components must map names to strand lists");
  for (const auto& [name, strands] : components.items()) {
    if (!strands.is_array()) bad("component '" + name + "' must list its strands");
    for (const auto& s : strands) {
      if (!s.is_number_integer()) bad("strand labels must be integers");
      b.components[name].push_back(s.get<Int>());
    }
  }
  return b;
}

json braid_to_json(const braid::BraidWord& b) {
  json word = json::array();
  for (const auto& l : b.letters) word.push_back({l.position, l.sign});
  json comps = json::object();
  for (const auto& [name, strands] : b.components) comps[name] = strands;
  return {{"m", b.m}, {"word", word}, {"components", comps}};
}

json invariants_to_json(const braid::Invariants& invs) {
  json link = json::array();
  for (const auto& [key, v] : invs.link) link.push_back({{"a", key.first}, {"b", key.second}, {"value", v}});
  return {{"w", invs.w}, {"link", link}, {"eta", invs.eta}};
}

curves::CurveData curve_data_from_json(const json& j, const OrbitTable& orbits) {
  curves::CurveData c;
  const json& comps = field(j, "components");
  if (!comps.is_array()) bad("'components' must be an array");
  for (const auto& cj : comps) {
    curves::CurveComponent comp;
    comp.name = string_field(cj, "name");
    comp.genus = int_or(cj, "genus", 0);
    comp.delta = int_or(cj, "delta", 0);
    comp.c_ref = int_or(cj, "c_ref", 0);
    for (const auto& e : field(cj, "ends")) {
      comp.ends.push_back(
          {side_from_json(field(e, "side")), resolve_orbit(field(e, "orbit"), orbits), int_field(e, "mult")});
    }
    if (cj.contains("writhe")) {
      for (const auto& w : cj["writhe"]) {
        comp.writhe[{side_from_json(field(w, "side")), string_field(w, "orbit")}] = int_field(w, "w");
      }
    }
    c.components.push_back({comp, int_or(cj, "degree", 1)});
  }
  auto table = [&](const char* key, curves::PairTable& into) {
    if (!j.contains(key)) return;
    for (const auto& e : j[key]) {
      const auto k = curves::pair_key(string_field(e, "a"), string_field(e, "b"));
      const Int v = int_field(e, "value");
      auto [it, fresh] = into.emplace(k, v);
      if (!fresh && it->second != v) {
        throw Error(ErrorCode::InconsistentData, std::string("conflicting '") + key + "' entries");
      }
    }
  };
  table("q", c.q_matrix);
  table("dot", c.dot_inputs);
  return c;
}

json curve_data_to_json(const curves::CurveData& c) {
  OrbitTable t;
  json comps = json::array();
  for (const auto& p : c.components) {
    json ends = json::array();
    for (const auto& e : p.comp.ends) {
      t.emplace(e.orbit.id(), e.orbit);
      ends.push_back({{"side", side_name(e.side)}, {"orbit", e.orbit.id()}, {"mult", e.mult}});
    }
    json writhe = json::array();
    for (const auto& [key, w] : p.comp.writhe) {
      writhe.push_back({{"side", side_name(key.first)}, {"orbit", key.second}, {"w", w}});
    }
    comps.push_back({{"name", p.comp.name},
                     {"genus", p.comp.genus},
                     {"delta", p.comp.delta},
                     {"c_ref", p.comp.c_ref},
                     {"degree", p.degree},
                     {"ends", ends},
                     {"writhe", writhe}});
  }
  auto table = [](const curves::PairTable& pt) {
    json a = json::array();
    for (const auto& [k, v] : pt) a.push_back({{"a", k.first}, {"b", k.second}, {"value", v}});
    return a;
  };
  return {{"orbits", orbit_table_to_json(t)},
          {"components", comps},
          {"q", table(c.q_matrix)},
          {"dot", table(c.dot_inputs)}};
}

json sweep_report_to_json(const verify::SweepReport& r) {
  return {{"name", r.name},
          {"parameters", r.parameters},
          {"instances_checked", r.instances_checked},
          {"violations", r.violations},
          {"equality_cases", r.equality_cases},
          {"counters", r.counters},
          {"ok", r.ok()}};
}

verify::SweepReport sweep_report_from_json(const json& j) {
  verify::SweepReport r;
  try {
    r.name = j.at("name").get<std::string>();
    r.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
    r.instances_checked = j.at("instances_checked").get<Int>();
    r.violations = j.at("violations").get<std::vector<std::string>>();
    r.equality_cases = j.at("equality_cases").get<std::vector<std::string>>();
    r.counters = j.at("counters").get<std::map<std::string, Int>>();
  } catch (const json::exception& e) {
    bad(std::string("malformed sweep report: ") + e.what());
  }
  return r;
}

json envelope(const std::string& kind, json body) {
  json j = {{"schema_version", kSchemaVersion}, {"kind", kind}};
  for (auto& [k, v] : body.items()) j[k] = std::move(v);
  return j;
}

}  // namespace echkit::json_io
