#pragma once

// Command-line front end. run() takes the arguments after the program name
// and writes to the given streams, so it can be driven from tests.
//
//   classify ORBIT        verdict, polarizations, chambers, cross-checks
//   dim ORBIT             orbit record
//   polarizations X       polarizations of an orbit, or parabolics equivalent to a parabolic
//   chambers ORBIT        chamber complex of the movable cone
//   twistor PARABOLIC     projective-space and twistor-space test
//   verify --suite NAME   one verification suite
//
// Exit status: 0 success, 1 domain error or failed verification, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nilcontact/cones.hpp"
#include "nilcontact/error.hpp"
#include "nilcontact/exceptional_table.hpp"
#include "nilcontact/lie_core.hpp"
#include "nilcontact/orbits.hpp"
#include "nilcontact/report.hpp"
#include "nilcontact/resolutions.hpp"
#include "nilcontact/verify.hpp"

namespace nilcontact::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

struct Request {
    std::string command;
    std::string target;
    bool json = false;
    std::uint64_t seed = 1;
    std::optional<int> max_n;
    std::string suite;
    std::string table_path;
    bool cross_checks = true;
};

namespace detail {

inline std::string bracket(const std::vector<int>& parts) { return "[" + join_parts(parts) + "]"; }

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string rays_text(const std::vector<Vector>& rays) {
    std::ostringstream os;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        os << (i ? " " : "") << '(';
        for (std::size_t j = 0; j < rays[i].size(); ++j) os << (j ? "," : "") << rays[i][j];
        os << ')';
    }
    return os.str();
}

inline void text_orbit(std::ostream& out, const OrbitRecord& r) {
    out << "orbit " << r.label.text() << "\n"
        << "  dimension " << r.dim_orbit << ", contact n " << r.contact_n << "\n"
        << "  minimal " << yes_no(r.is_minimal) << ", zero " << yes_no(r.is_zero)
        << ", projectivised normalization smooth " << yes_no(r.proj_normalization_smooth) << "\n";
}

inline void text_polarizations(std::ostream& out, const std::vector<Polarization>& pols) {
    out << "polarizations " << pols.size() << "\n";
    for (const auto& p : pols) {
        out << "  " << p.parabolic.label();
        if (!p.composition.empty()) out << " composition " << bracket(p.composition);
        out << " flag dimension " << flag_dimension(p.parabolic);
        if (p.springer_degree) out << " degree " << *p.springer_degree;
        out << "\n";
    }
}

inline void text_chambers(std::ostream& out, const ChamberComplex& cx) {
    out << "chambers " << cx.chambers.size() << ", walls " << cx.walls.size() << ", connected "
        << yes_no(cx.is_connected()) << ", linear gluing " << (cx.linear_gluing_implemented ? "yes" : "not implemented")
        << "\n";
    for (std::size_t i = 0; i < cx.chambers.size(); ++i)
        out << "  " << cx.chambers[i].label << " degree " << cx.degree(i) << " rays "
            << rays_text(cx.chambers[i].ample_cone.rays()) << "\n";
    for (const auto& w : cx.walls)
        out << "  wall " << cx.chambers[w.chamber_a].label << " | " << cx.chambers[w.chamber_b].label << " swap "
            << w.left << "," << w.right << " at " << w.position << "\n";
}

inline void text_report(std::ostream& out, const ResolutionReport& r) {
    text_orbit(out, r.orbit);
    out << "verdict " << to_string(r.verdict) << " (" << to_string(r.reason) << ")\n"
        << "basis " << r.basis << "\n"
        << "affine closure admits symplectic resolution "
        << (r.affine_closure_admits_symplectic_resolution ? yes_no(*r.affine_closure_admits_symplectic_resolution)
                                                          : std::string("unknown"))
        << "\n"
        << "canonical bundle L^-" << r.canonical_bundle_exponent << "\n";
    text_polarizations(out, r.polarizations);
    if (r.chamber_complex) text_chambers(out, *r.chamber_complex);
    for (const auto& a : r.annotations) out << "note " << a << "\n";
    for (const auto& c : r.cross_checks)
        out << "check " << c.oracle << " " << c.inputs << " value " << c.value << " formula " << c.formula << " "
            << (c.agrees_with_formula ? "agree" : "DISAGREE") << "\n";
}

inline Json json_twistor(const ParabolicType& p) {
    Json j;
    j["parabolic"] = p.label();
    j["flag_dimension"] = flag_dimension(p);
    const auto poly = poincare_polynomial(p);
    Json coeffs = Json::array();
    for (const auto& c : poly) coeffs.push_back(c.get_str());
    j["poincare_polynomial"] = coeffs;
    j["embedding_degree"] = embedding_degree(p).get_str();
    j["poincare_all_ones"] = has_all_ones_poincare(p);
    j["is_projective_space"] = is_projective_space(p);
    j["is_twistor_space"] = is_twistor_space(p);
    return j;
}

inline Json json_verify(const VerifyResult& v) {
    Json rows = Json::array();
    for (const auto& r : v.rows)
        rows.push_back({{"case", r.case_id}, {"formula", r.formula}, {"oracle", r.oracle}, {"agree", r.agree}});
    return {{"suite", v.suite},
            {"max_n", v.max_n},
            {"seed", v.seed},
            {"cases", v.rows.size()},
            {"failures", v.failures()},
            {"passed", v.passed()},
            {"rows", rows}};
}

inline bool looks_like_parabolic(const std::string& s) { return s.find('{') != std::string::npos; }

/// Executes a parsed request; throws nilcontact::Error on domain problems.
inline int execute(const Request& req, std::ostream& out) {
    ExceptionalTable custom;
    const ExceptionalTable* table = &default_exceptional_table();
    if (!req.table_path.empty()) {
        std::ifstream in(req.table_path);
        if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read table file " + req.table_path);
        std::stringstream buf;
        buf << in.rdbuf();
        custom = parse_exceptional_table(buf.str());
        table = &custom;
    }
    Json j = envelope(req.command, *table);
    j["input"] = req.target;
    int status = kExitOk;

    if (req.command == "classify") {
        const auto o = parse_orbit(req.target, *table);
        const auto r = contact_resolution_exists(o, {req.seed, req.cross_checks}, *table);
        j["seed"] = req.seed;
        j["report"] = to_json(r);
        if (!req.json) text_report(out, r);
    } else if (req.command == "dim") {
        const auto rec = make_orbit_record(parse_orbit(req.target, *table), *table);
        j["orbit"] = to_json(rec);
        if (!req.json) text_orbit(out, rec);
    } else if (req.command == "polarizations") {
        if (looks_like_parabolic(req.target)) {
            const auto p = parse_parabolic(req.target);
            const auto eq = equivalent_parabolics(p, *table);
            Json arr = Json::array();
            for (const auto& q : eq) arr.push_back(q.label());
            j["equivalent_parabolics"] = arr;
            j["richardson_orbit"] = richardson_partition(p, *table).text();
            if (!req.json) {
                out << "parabolic " << p.label() << " induces " << richardson_partition(p, *table).text() << "\n"
                    << "equivalent parabolics " << eq.size() << "\n";
                for (const auto& q : eq) out << "  " << q.label() << "\n";
            }
        } else {
            const auto o = parse_orbit(req.target, *table);
            const auto pols = polarizations(o, *table);
            Json arr = Json::array();
            for (const auto& p : pols) arr.push_back(to_json(p));
            j["orbit"] = o.text();
            j["polarizations"] = arr;
            if (!req.json) {
                out << "orbit " << o.text() << "\n";
                text_polarizations(out, pols);
            }
        }
    } else if (req.command == "chambers") {
        const auto o = parse_orbit(req.target, *table);
        const auto cx = movable_chambers(o, *table);
        j["chamber_complex"] = to_json(cx);
        if (!req.json) {
            out << "orbit " << o.text() << "\n";
            text_chambers(out, cx);
        }
    } else if (req.command == "twistor") {
        const auto p = parse_parabolic(req.target);
        require_marking(p);
        j["twistor"] = json_twistor(p);
        if (!req.json) {
            const auto& t = j["twistor"];
            out << "parabolic " << p.label() << "\n"
                << "  flag dimension " << t["flag_dimension"].get<int>() << ", embedding degree "
                << t["embedding_degree"].get<std::string>() << "\n"
                << "  Poincare polynomial all ones " << yes_no(t["poincare_all_ones"].get<bool>()) << "\n"
                << "  projective space " << yes_no(t["is_projective_space"].get<bool>()) << ", twistor space "
                << yes_no(t["is_twistor_space"].get<bool>()) << "\n";
        }
    } else if (req.command == "verify") {
        const auto v = verify_suite(req.suite, req.max_n, req.seed);
        j["input"] = req.suite;
        j["verify"] = json_verify(v);
        if (!req.json) {
            out << "suite " << v.suite << " max-n " << v.max_n << " seed " << v.seed << "\n";
            for (const auto& r : v.rows)
                out << "  " << (r.agree ? "ok  " : "FAIL") << " " << r.case_id << ": formula " << r.formula << ", oracle "
                    << r.oracle << "\n";
            out << (v.passed() ? "all " + std::to_string(v.rows.size()) + " cases pass"
                               : std::to_string(v.failures()) + " of " + std::to_string(v.rows.size()) + " cases fail")
                << "\n";
        }
        if (!v.passed()) status = kExitDomain;
    }
    if (req.json) out << j.dump(2) << "\n";
    return status;
}

inline bool is_usage_error(ErrorKind k) { return k == ErrorKind::ParseError || k == ErrorKind::UnknownSuite; }

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Contact resolutions of projectivised nilpotent orbit closures", "nilcontact"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));
    Request req;

    auto common = [&](CLI::App* sub) {
        sub->add_flag("--json", req.json, "emit JSON");
        sub->add_option("--seed", req.seed, "seed for randomized oracles");
        sub->add_option("--table", req.table_path, "exceptional-orbit table file to use instead of the built-in one");
    };
    auto* classify = app.add_subcommand("classify", "verdict and report for an orbit");
    classify->add_option("orbit", req.target, "orbit, e.g. A3:2,1,1 or G2:dim8")->required();
    classify->add_flag("!--no-cross-checks", req.cross_checks, "skip oracle cross-checks");
    common(classify);
    auto* dim = app.add_subcommand("dim", "orbit dimension and record");
    dim->add_option("orbit", req.target, "orbit")->required();
    common(dim);
    auto* pols = app.add_subcommand("polarizations", "polarizations of an orbit or parabolics equivalent to a parabolic");
    pols->add_option("orbit_or_parabolic", req.target, "orbit (A3:2,2) or parabolic (A3:{2})")->required();
    common(pols);
    auto* chambers = app.add_subcommand("chambers", "chamber complex of the movable cone");
    chambers->add_option("orbit", req.target, "orbit")->required();
    common(chambers);
    auto* twistor = app.add_subcommand("twistor", "is G/P a projective space, P(T*(G/P)) a twistor space");
    twistor->add_option("parabolic", req.target, "parabolic, e.g. A3:{1}")->required();
    common(twistor);
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", req.suite, "ad-rank, kks, contact, richardson, fibers, chambers or cones")->required();
    verify->add_option("--max-n", req.max_n, "size bound for the suite");
    common(verify);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    req.command = app.get_subcommands().front()->get_name();

    try {
        return detail::execute(req, out);
    } catch (const Error& e) {
        if (req.json) {
            Json j = envelope(req.command);
            j["input"] = req.command == "verify" ? req.suite : req.target;
            j.update(error_json(e));
            out << j.dump(2) << "\n";
        } else {
            err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        }
        return detail::is_usage_error(e.kind()) ? kExitUsage : kExitDomain;
    }
}

} // namespace nilcontact::cli
