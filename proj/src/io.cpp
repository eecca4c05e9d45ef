#include "ordlab/io.hpp"

#include <fstream>
#include <limits>

namespace ordlab {

namespace {

const bigint k_i64_min(std::numeric_limits<std::int64_t>::min());
const bigint k_i64_max(std::numeric_limits<std::int64_t>::max());

[[noreturn]] void schema_fail(const std::string& what) {
    throw syntax_error("schema: " + what, 0);
}

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        schema_fail(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

int int_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_number_integer() && !v.is_number_unsigned())
        schema_fail(std::string("field \"") + name + "\" must be an integer");
    return v.get<int>();
}

}  // namespace

json rat_to_json(const rat& q) {
    if (denominator(q) == 1 && numerator(q) >= k_i64_min && numerator(q) <= k_i64_max)
        return numerator(q).convert_to<std::int64_t>();
    return format(q);
}

rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return rat(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return rat(bigint(j.get<std::uint64_t>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_float())
        schema_fail("rationals must be integers or \"p/q\" strings, not floats");
    schema_fail("expected a rational");
}

json to_json(const point_set& s) {
    json points = json::array();
    for (const auto& p : s.points) {
        json row = json::array();
        for (const auto& c : p) row.push_back(rat_to_json(c));
        points.push_back(std::move(row));
    }
    return json{{"dim", s.dim}, {"norm", to_string(s.norm)}, {"points", std::move(points)}};
}

point_set point_set_from_json(const json& j) {
    point_set s;
    s.dim = int_field(j, "dim");
    const json& norm = field(j, "norm");
    if (!norm.is_string()) schema_fail("field \"norm\" must be a string");
    s.norm = norm_from_string(norm.get<std::string>());
    const json& points = field(j, "points");
    if (!points.is_array()) schema_fail("field \"points\" must be an array");
    for (const auto& row : points) {
        if (!row.is_array()) schema_fail("each point must be an array");
        vec p;
        p.reserve(row.size());
        for (const auto& c : row) p.push_back(rat_from_json(c));
        s.points.push_back(std::move(p));
    }
    return s;
}

json to_json(const derivation_trace& t) {
    json stages = json::array();
    for (const auto& stage : t.stages) stages.push_back(stage);
    json ranks = json::array();
    for (const auto& r : t.ranks) {
        if (r)
            ranks.push_back(*r);
        else
            ranks.push_back("stable");
    }
    return json{{"epsilon", rat_to_json(t.epsilon)},
                {"stages", std::move(stages)},
                {"ranks", std::move(ranks)},
                {"stabilized", t.stabilized}};
}

derivation_trace trace_from_json(const json& j) {
    derivation_trace t;
    t.epsilon = rat_from_json(field(j, "epsilon"));
    const json& stages = field(j, "stages");
    if (!stages.is_array()) schema_fail("field \"stages\" must be an array");
    for (const auto& stage : stages) {
        if (!stage.is_array()) schema_fail("each stage must be an index array");
        std::vector<int> indices;
        for (const auto& i : stage) {
            if (!i.is_number_integer() && !i.is_number_unsigned())
                schema_fail("stage entries must be integers");
            indices.push_back(i.get<int>());
        }
        t.stages.push_back(std::move(indices));
    }
    const json& ranks = field(j, "ranks");
    if (!ranks.is_array()) schema_fail("field \"ranks\" must be an array");
    for (const auto& r : ranks) {
        if (r.is_string() && r.get<std::string>() == "stable")
            t.ranks.push_back(std::nullopt);
        else if (r.is_number_integer() || r.is_number_unsigned())
            t.ranks.push_back(r.get<int>());
        else
            schema_fail("rank entries must be integers or \"stable\"");
    }
    const json& stabilized = field(j, "stabilized");
    if (!stabilized.is_boolean()) schema_fail("field \"stabilized\" must be a boolean");
    t.stabilized = stabilized.get<bool>();
    return t;
}

json to_json(const dyadic_tree& t) {
    return json{{"depth", t.depth}, {"root", t.root_index}, {"set", to_json(t.set)}};
}

namespace {

json descriptor_to_json(const space_descriptor& d) {
    const char* kind = "c_interval";
    if (d.kind == space_kind::c_of_compact_height) kind = "c_of_compact_height";
    if (d.kind == space_kind::l2_of_c_interval) kind = "l2_of_c_interval";
    return json{{"kind", kind}, {"parameter", format(d.parameter)}};
}

json maybe_ordinal(const std::optional<ordinal>& o) {
    if (!o) return nullptr;
    return format(*o);
}

}  // namespace

json to_json(const index_report& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(json{{"name", c.name}, {"pass", c.pass}});
    return json{{"descriptor", descriptor_to_json(r.descriptor)},
                {"iso_gamma", maybe_ordinal(r.iso_gamma)},
                {"szlenk", format(r.szlenk)},
                {"dentability", maybe_ordinal(r.dentability)},
                {"cb_height", maybe_ordinal(r.cb_height)},
                {"checks", std::move(checks)},
                {"all_pass", r.all_pass()}};
}

point_set load_point_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open input file \"" + path + "\"");
    json j;
    try {
        j = json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw syntax_error(std::string("invalid JSON: ") + e.what(),
                           e.byte > 0 ? e.byte - 1 : 0);
    }
    point_set s = point_set_from_json(j);
    s.validate();
    return s;
}

}  // namespace ordlab
