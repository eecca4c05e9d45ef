#pragma once

#include <json.hpp>

#include "ordlab/derivation.hpp"
#include "ordlab/index.hpp"
#include "ordlab/pointset.hpp"
#include "ordlab/tree.hpp"

namespace ordlab {

// All structured output uses insertion-ordered JSON so that repeated runs
// are byte-identical.
using json = nlohmann::ordered_json;

// Rationals serialize as JSON integers when the denominator is 1 and the
// value fits 64 bits, and as "p/q" strings otherwise. Parsing accepts
// integers and "p" / "p/q" strings; non-integer numbers are rejected, the
// formats are exact.
json rat_to_json(const rat& q);
rat rat_from_json(const json& j);

// Point set files: {"dim": 2, "norm": "l1", "points": [[0, "1/2"], ...]}.
json to_json(const point_set& s);
point_set point_set_from_json(const json& j);

// Derivation traces: {"epsilon": "1/2", "stages": [[0,1,2],[1],[]],
// "ranks": [0, 1, 0], "stabilized": false}; stable points rank as "stable".
json to_json(const derivation_trace& t);
derivation_trace trace_from_json(const json& j);

json to_json(const dyadic_tree& t);

json to_json(const index_report& r);

// Parses and validates a point-set file from disk.
point_set load_point_set(const std::string& path);

}  // namespace ordlab
