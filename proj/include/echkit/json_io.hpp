#pragma once

// JSON encoding of the library's value types. Every document emitted at the
// top level carries "schema_version"; decoders reject malformed payloads
// with InvalidInput.

#include <map>
#include <string>

#include <json.hpp>

#include "echkit/braid.hpp"
#include "echkit/core.hpp"
#include "echkit/curves.hpp"
#include "echkit/partitions.hpp"
#include "echkit/verify.hpp"

namespace echkit::json_io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Inline JSON text, or the path of a file holding it.
json parse_payload(const std::string& text_or_path);

/// Orbits referenced by id from orbit sets and curve ends.
using OrbitTable = std::map<std::string, Orbit>;

Orbit orbit_from_json(const json& j, const std::string& id);
json orbit_to_json(const Orbit& o);
OrbitTable orbit_table_from_json(const json& j);
json orbit_table_to_json(const OrbitTable& t);
/// The "orbits" table of a document, empty when absent.
OrbitTable orbits_of(const json& doc);
/// An orbit given either by id (looked up in `orbits`) or inline with an "id".
Orbit resolve_orbit(const json& ref, const OrbitTable& orbits);

OrbitSet orbit_set_from_json(const json& j, const OrbitTable& orbits, Side expected);
json orbit_set_to_json(const OrbitSet& s);

Side side_from_json(const json& j);
std::string side_name(Side s);

/// {"orbit id": offset, ...}; strict about unknown orbits when evaluated.
Trivialization trivialization_from_json(const json& j);
json trivialization_to_json(const Trivialization& t);

RelClass relclass_from_json(const json& j, const OrbitTable& orbits);
json relclass_to_json(const RelClass& z);

json partition_to_json(const partitions::Partition& p);
json path_to_json(const partitions::LatticePath& p);

braid::BraidWord braid_from_json(const json& word, Int m, const json& components);
json braid_to_json(const braid::BraidWord& b);
json invariants_to_json(const braid::Invariants& invs);

curves::CurveData curve_data_from_json(const json& j, const OrbitTable& orbits);
json curve_data_to_json(const curves::CurveData& c);

json sweep_report_to_json(const verify::SweepReport& r);
verify::SweepReport sweep_report_from_json(const json& j);

/// Wraps a result object with the schema version and a kind tag.
json envelope(const std::string& kind, json body);

}  // namespace echkit::json_io
