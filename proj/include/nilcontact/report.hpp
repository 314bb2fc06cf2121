#pragma once

// JSON rendering of reports. Objects use sorted keys, so equal inputs give
// byte-identical output. The layout is described by schema/report.schema.json.

#include <string>
#include <vector>

#include <json.hpp>

#include "nilcontact/cones.hpp"
#include "nilcontact/error.hpp"
#include "nilcontact/exceptional_table.hpp"
#include "nilcontact/lie_core.hpp"
#include "nilcontact/orbits.hpp"
#include "nilcontact/resolutions.hpp"
#include "nilcontact/version.hpp"

namespace nilcontact {

using Json = nlohmann::json;

/// Integer vectors go out as JSON integers; other rationals as "p/q" strings.
inline Json to_json(const Rational& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return q.get_str();
}

inline Json to_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

inline Json to_json(const std::vector<Vector>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) out.push_back(to_json(v));
    return out;
}

inline std::string to_string(VeryEvenTag t) {
    switch (t) {
    case VeryEvenTag::I: return "I";
    case VeryEvenTag::II: return "II";
    default: return "";
    }
}

inline Json to_json(const OrbitRecord& r) {
    Json j;
    j["label"] = r.label.text();
    j["type"] = r.label.simple_type.name();
    if (r.label.is_partition()) {
        j["partition"] = r.label.partition();
        j["key"] = nullptr;
    } else {
        j["partition"] = nullptr;
        j["key"] = r.label.key();
    }
    j["very_even_tag"] = r.label.tag == VeryEvenTag::None ? Json(nullptr) : Json(to_string(r.label.tag));
    j["dim_orbit"] = r.dim_orbit;
    j["is_zero"] = r.is_zero;
    j["is_minimal"] = r.is_minimal;
    j["contact_n"] = r.contact_n;
    j["proj_normalization_smooth"] = r.proj_normalization_smooth;
    j["singularity_flags"] = {{"projectively_normal", r.singularity_flags.projectively_normal},
                              {"rational_gorenstein", r.singularity_flags.rational_gorenstein}};
    return j;
}

inline Json to_json(const RationalCone& c) {
    return {{"ambient_dim", c.ambient_dim()},
            {"dimension", c.dimension()},
            {"rays", to_json(c.rays())},
            {"lineality", to_json(c.lineality())},
            {"facet_normals", to_json(c.facet_normals())},
            {"simplicial", c.is_simplicial()}};
}

inline Json to_json(const Polarization& p) {
    Json j;
    j["parabolic"] = p.parabolic.label();
    j["composition"] = p.composition.empty() ? Json(nullptr) : Json(p.composition);
    j["flag_dimension"] = flag_dimension(p.parabolic);
    j["richardson_orbit"] = p.richardson_orbit.text();
    j["degree"] = p.springer_degree ? Json(*p.springer_degree) : Json(nullptr);
    j["birational"] = p.is_birational ? Json(*p.is_birational) : Json(nullptr);
    return j;
}

inline Json to_json(const ChamberComplex& cx) {
    Json chambers = Json::array();
    for (std::size_t i = 0; i < cx.chambers.size(); ++i) {
        const auto& ch = cx.chambers[i];
        chambers.push_back({{"label", ch.label},
                            {"composition", ch.composition.empty() ? Json(nullptr) : Json(ch.composition)},
                            {"degree", cx.degree(i)},
                            {"rays", to_json(ch.ample_cone.rays())}});
    }
    Json walls = Json::array();
    for (const auto& w : cx.walls)
        walls.push_back({{"chambers", {cx.chambers[w.chamber_a].label, cx.chambers[w.chamber_b].label}},
                         {"position", w.position},
                         {"transposition", {w.left, w.right}}});
    return {{"orbit", cx.orbit.text()},
            {"count", cx.chambers.size()},
            {"connected", cx.is_connected()},
            {"linear_gluing_implemented", cx.linear_gluing_implemented},
            {"chambers", chambers},
            {"walls", walls}};
}

inline Json to_json(const CrossCheck& c) {
    return {{"oracle_name", c.oracle},   {"inputs", c.inputs}, {"seeds", c.seeds},
            {"value", c.value},          {"formula", c.formula},
            {"agrees_with_formula", c.agrees_with_formula}};
}

inline Json to_json(const ResolutionReport& r) {
    Json j;
    j["orbit"] = to_json(r.orbit);
    j["verdict"] = to_string(r.verdict);
    j["reason"] = to_string(r.reason);
    j["basis"] = r.basis;
    j["affine_closure_admits_symplectic_resolution"] =
        r.affine_closure_admits_symplectic_resolution ? Json(*r.affine_closure_admits_symplectic_resolution) : Json(nullptr);
    j["crepant_equals_contact_equals_minimal"] = r.crepant_equals_contact_equals_minimal;
    j["canonical_bundle_exponent"] = r.canonical_bundle_exponent;
    Json pols = Json::array();
    for (const auto& p : r.polarizations) pols.push_back(to_json(p));
    j["polarizations"] = pols;
    j["chamber_complex"] = r.chamber_complex ? to_json(*r.chamber_complex) : Json(nullptr);
    j["annotations"] = r.annotations;
    Json checks = Json::array();
    for (const auto& c : r.cross_checks) checks.push_back(to_json(c));
    j["cross_checks"] = checks;
    return j;
}

/// Envelope shared by every command's output.
inline Json envelope(const std::string& command, const ExceptionalTable& table = default_exceptional_table()) {
    return {{"command", command}, {"artifact_version", kVersion}, {"table_version", table.version()}};
}

inline Json error_json(const Error& e) {
    return {{"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}};
}

} // namespace nilcontact
