#pragma once

// Verification suites: each row compares a closed formula with an
// independent oracle on one case.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nilcontact/cones.hpp"
#include "nilcontact/error.hpp"
#include "nilcontact/oracle_lab.hpp"
#include "nilcontact/orbits.hpp"
#include "nilcontact/partitions.hpp"
#include "nilcontact/resolutions.hpp"

namespace nilcontact {

struct VerifyRow {
    std::string case_id;
    std::string formula;
    std::string oracle;
    bool agree = false;
};

struct VerifyResult {
    std::string suite;
    int max_n = 0;
    std::uint64_t seed = 0;
    std::vector<VerifyRow> rows;

    std::size_t failures() const {
        return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const VerifyRow& r) { return !r.agree; }));
    }
    bool passed() const { return failures() == 0; }
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"ad-rank", "kks", "contact", "richardson", "fibers", "chambers", "cones"};
    return names;
}

/// Default size bound per suite and the hard cap it may not exceed.
struct SuiteLimits {
    int default_max_n;
    int cap;
};

inline SuiteLimits suite_limits(const std::string& suite) {
    if (suite == "ad-rank") return {6, oracle::kAdRankSizeCap};
    if (suite == "kks") return {5, oracle::kAdRankSizeCap};
    if (suite == "contact") return {5, oracle::kAdRankSizeCap};
    if (suite == "richardson") return {6, oracle::kAdRankSizeCap};
    if (suite == "fibers") return {4, oracle::kFiberSizeCap};
    if (suite == "chambers") return {7, oracle::kAdRankSizeCap};
    if (suite == "cones") return {4, kConeMaxDimension};
    throw Error(ErrorKind::UnknownSuite, "unknown suite '" + suite + "'");
}

namespace detail {

inline OrbitLabel type_a_orbit(const Partition& lambda) {
    return {make_type(Family::A, total(lambda) - 1), lambda, VeryEvenTag::None};
}

inline std::string bracket(const std::vector<int>& parts) { return "[" + join_parts(parts) + "]"; }

inline void suite_ad_rank(VerifyResult& res) {
    for (int n = 2; n <= res.max_n; ++n)
        for (const auto& lambda : partitions_of(n)) {
            const int formula = orbit_dimension(type_a_orbit(lambda));
            const int oracle_value = oracle::addim(oracle::jordan_nilpotent(lambda));
            res.rows.push_back({"A" + std::to_string(n - 1) + ":" + join_parts(lambda), std::to_string(formula),
                                std::to_string(oracle_value), formula == oracle_value});
        }
}

inline void suite_kks(VerifyResult& res) {
    for (int n = 2; n <= res.max_n; ++n)
        for (const auto& lambda : partitions_of(n)) {
            const int formula = orbit_dimension(type_a_orbit(lambda));
            const auto base = oracle::jordan_nilpotent(lambda);
            for (int k = 0; k < oracle::kGenericSamples; ++k) {
                const std::uint64_t s = res.seed + static_cast<std::uint64_t>(k);
                const int v = oracle::kks_rank(oracle::random_conjugate(base, s));
                res.rows.push_back({"A" + std::to_string(n - 1) + ":" + join_parts(lambda) + " seed " + std::to_string(s),
                                    std::to_string(formula), std::to_string(v), formula == v});
            }
        }
}

inline void suite_contact(VerifyResult& res) {
    for (int n = 2; n <= res.max_n; ++n)
        for (const auto& lambda : partitions_of(n)) {
            const int dim = orbit_dimension(type_a_orbit(lambda));
            if (dim == 0) continue;
            const auto base = oracle::jordan_nilpotent(lambda);
            for (int k = 0; k < oracle::kGenericSamples; ++k) {
                const std::uint64_t s = res.seed + static_cast<std::uint64_t>(k);
                const auto m = oracle::random_conjugate(base, s);
                const auto cc = oracle::contact_check(m);
                const int kks = oracle::kks_rank(m);
                const std::string expected = "kks " + std::to_string(dim) + ", kernel " + std::to_string(dim - 1) +
                                             ", rank " + std::to_string(dim - 2) + ", euler radical";
                const std::string got = "kks " + std::to_string(kks) + ", kernel " + std::to_string(cc.theta_kernel_dim) +
                                        ", rank " + std::to_string(cc.omega_rank_on_kernel) +
                                        (cc.radical_is_euler_line ? ", euler radical" : ", other radical");
                const bool ok = kks == dim && cc.dim_orbit == dim && cc.theta_kernel_dim == dim - 1 && cc.nondegenerate();
                res.rows.push_back(
                    {"A" + std::to_string(n - 1) + ":" + join_parts(lambda) + " seed " + std::to_string(s), expected, got, ok});
            }
        }
}

inline void suite_richardson(VerifyResult& res) {
    for (int n = 2; n <= res.max_n; ++n)
        for (const auto& c : compositions_of(n)) {
            const Partition formula = dual_partition(sort_desc(c));
            const auto g = oracle::generic_jordan_type(c, res.seed);
            res.rows.push_back({"composition " + bracket(c), bracket(formula),
                                bracket(g.partition) + (g.agreed ? "" : " (seeds disagree)"),
                                g.agreed && g.partition == formula});
        }
}

inline void suite_fibers(VerifyResult& res) {
    for (int n = 2; n <= res.max_n; ++n)
        for (const auto& c : compositions_of(n)) {
            std::string value;
            bool ok = false;
            try {
                const long long deg = oracle::generic_fiber_count(c, res.seed);
                value = std::to_string(deg);
                ok = deg == 1;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::NonFiniteFiber) throw;
                value = "positive-dimensional fiber";
            }
            res.rows.push_back({"composition " + bracket(c), "1", value, ok});
        }
}

/// Polarization count by brute force: every composition whose generic
/// nilradical element has the given Jordan type.
inline void suite_chambers(VerifyResult& res) {
    for (int n = 2; n <= res.max_n; ++n) {
        std::map<Partition, std::vector<Composition>> by_orbit;
        for (const auto& c : compositions_of(n)) by_orbit[oracle::generic_jordan_type(c, res.seed).partition].push_back(c);
        for (const auto& lambda : partitions_of(n)) {
            const auto o = type_a_orbit(lambda);
            if (orbit_dimension(o) == 0) continue;
            const auto pols = polarizations(o);
            const std::uint64_t formula = multinomial_orderings(dual_partition(lambda));
            const std::size_t enumerated = by_orbit[lambda].size();
            const auto cx = movable_chambers(o);
            bool degrees_ok = true;
            for (std::size_t i = 0; i < cx.chambers.size(); ++i) {
                const auto& c = cx.chambers[i].composition;
                std::size_t unequal = 0;
                for (std::size_t p = 0; p + 1 < c.size(); ++p) unequal += c[p] != c[p + 1];
                degrees_ok &= cx.degree(i) == unequal;
            }
            const bool ok = formula == enumerated && pols.size() == enumerated && cx.chambers.size() == enumerated &&
                            cx.is_connected() && degrees_ok;
            res.rows.push_back({"A" + std::to_string(n - 1) + ":" + join_parts(lambda), std::to_string(formula),
                                std::to_string(enumerated) + (cx.is_connected() ? ", connected" : ", disconnected") +
                                    (degrees_ok ? "" : ", bad wall degrees"),
                                ok});
        }
    }
}

/// Seeded random integer generator sets in dimension 1..max_n.
inline std::vector<std::pair<int, std::vector<Vector>>> random_generator_sets(int max_dim, std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::vector<std::pair<int, std::vector<Vector>>> out;
    for (int k = 0; k < count; ++k) {
        const int d = 1 + k % max_dim;
        const int ngen = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(d + 3));
        std::vector<Vector> gens;
        for (int g = 0; g < ngen; ++g) {
            Vector v(d);
            for (auto& x : v) x = entry(rng);
            gens.push_back(std::move(v));
        }
        out.emplace_back(d, std::move(gens));
    }
    return out;
}

inline constexpr int kRandomConeCount = 120;

inline void suite_cones(VerifyResult& res) {
    int idx = 0;
    for (const auto& [d, gens] : random_generator_sets(res.max_n, res.seed, kRandomConeCount)) {
        const auto c = cone_from_generators(d, gens);
        const bool round_trip = cone_from_generators(d, c.generators()) == c &&
                                cone_from_inequalities(d, c.facet_normals(), c.equations()) == c;
        const bool involution = dual_cone(dual_cone(c)) == c;
        const bool members = std::all_of(gens.begin(), gens.end(), [&](const Vector& v) { return c.contains(v); });
        const bool ok = round_trip && involution && members;
        res.rows.push_back({"random cone " + std::to_string(idx++) + " dim " + std::to_string(d),
                            "round trip, dual involution, generators inside",
                            std::string(round_trip ? "round trip" : "round trip FAILED") +
                                (involution ? ", dual involution" : ", dual involution FAILED") +
                                (members ? ", generators inside" : ", generator outside"),
                            ok});
    }
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::G}) {
        for (int r = 1; r <= res.max_n; ++r) {
            if (!valid_rank(f, r)) continue;
            const SimpleType t = make_type(f, r);
            for (const auto& p : all_parabolics(t)) {
                if (p.marked.empty()) continue;
                const auto amp = ample_cone(p);
                const bool ok = amp.is_simplicial() && amp.rays().size() == p.marked.size() &&
                                amp == cone_from_generators(static_cast<int>(p.marked.size()),
                                                            unit_vectors(p.marked.size()));
                res.rows.push_back({"ample cone " + p.label(), std::to_string(p.marked.size()) + " rays, simplicial",
                                    std::to_string(amp.rays().size()) + " rays" +
                                        (amp.is_simplicial() ? ", simplicial" : ", not simplicial"),
                                    ok});
            }
        }
    }
}

} // namespace detail

inline VerifyResult verify_suite(const std::string& suite, std::optional<int> max_n = std::nullopt, std::uint64_t seed = 1) {
    const SuiteLimits lim = suite_limits(suite);
    VerifyResult res;
    res.suite = suite;
    res.seed = seed;
    res.max_n = max_n.value_or(lim.default_max_n);
    if (res.max_n < 1) throw Error(ErrorKind::InvalidArgument, "--max-n must be positive");
    if (res.max_n > lim.cap)
        throw Error(ErrorKind::SizeCap, "suite " + suite + " is capped at max-n " + std::to_string(lim.cap));
    if (suite == "ad-rank") detail::suite_ad_rank(res);
    else if (suite == "kks") detail::suite_kks(res);
    else if (suite == "contact") detail::suite_contact(res);
    else if (suite == "richardson") detail::suite_richardson(res);
    else if (suite == "fibers") detail::suite_fibers(res);
    else if (suite == "chambers") detail::suite_chambers(res);
    else detail::suite_cones(res);
    return res;
}

} // namespace nilcontact
