#pragma once

// Decision procedures for contact resolutions of projectivised nilpotent
// orbit closures: Richardson orbits, polarizations (parabolics whose
// Springer map is birational onto the closure), the equivalence of
// parabolics, the existence verdict, and assembled reports.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilcontact/cones.hpp"
#include "nilcontact/error.hpp"
#include "nilcontact/exceptional_table.hpp"
#include "nilcontact/lie_core.hpp"
#include "nilcontact/oracle_lab.hpp"
#include "nilcontact/orbits.hpp"
#include "nilcontact/partitions.hpp"

namespace nilcontact {

struct Polarization {
    ParabolicType parabolic;
    OrbitLabel richardson_orbit;
    /// Generic fiber cardinality of T*(G/P) -> closure; nullopt when not known.
    std::optional<int> springer_degree;
    std::optional<bool> is_birational;
    /// Block sizes (type A only).
    Composition composition;
};

// ---------------------------------------------------------------------------
// Richardson orbits

/// Levi factor of a classical parabolic: GL blocks and the rank of the
/// remaining classical factor.
struct ClassicalLevi {
    std::vector<int> gl_blocks;
    int tail_rank = 0;
};

inline ClassicalLevi classical_levi(const ParabolicType& p) {
    const SimpleType t = p.simple_type();
    const int n = t.rank;
    ClassicalLevi levi;
    int prev = 0;
    auto cut = [&](int at) {
        levi.gl_blocks.push_back(at - prev);
        prev = at;
    };
    if (t.family == Family::B || t.family == Family::C) {
        for (int m : p.marked) cut(m);
        levi.tail_rank = n - prev;
        return levi;
    }
    if (t.family != Family::D) throw Error(ErrorKind::UnsupportedType, "classical_levi expects type B, C or D");
    for (int m : p.marked)
        if (m <= n - 2) cut(m);
    const bool spin_a = p.is_marked(n - 1), spin_b = p.is_marked(n);
    if (spin_a && spin_b) {
        cut(n - 1);
        cut(n);
    } else if (spin_a || spin_b) {
        cut(n);
    }
    levi.tail_rank = n - prev;
    return levi;
}

namespace detail {

inline Partition induce_from_gl(Family f, Partition nu, int block) {
    while (static_cast<int>(nu.size()) < block) nu.push_back(0);
    for (int i = 0; i < block; ++i) nu[i] += 2;
    return collapse(f, canonical_partition(nu));
}

} // namespace detail

/// Orbit dense in G.n for the nilradical n of p. Type A: transpose of the
/// sorted block sizes. Types B, C, D: induction from the zero orbit of the
/// Levi (add 2 to the first parts, then collapse). Exceptional: curated table.
inline OrbitLabel richardson_partition(const ParabolicType& p, const ExceptionalTable& table = default_exceptional_table()) {
    const SimpleType t = p.simple_type();
    switch (t.family) {
    case Family::A:
        return {t, dual_partition(sort_desc(composition_of(p))), VeryEvenTag::None};
    case Family::B:
    case Family::C:
    case Family::D: {
        const auto levi = classical_levi(p);
        const int m = levi.tail_rank;
        Partition nu(t.family == Family::B ? 2 * m + 1 : 2 * m, 1);
        for (auto it = levi.gl_blocks.rbegin(); it != levi.gl_blocks.rend(); ++it)
            nu = detail::induce_from_gl(t.family, std::move(nu), *it);
        VeryEvenTag tag = VeryEvenTag::None;
        if (is_very_even(t.family, nu))
            tag = (p.is_marked(t.rank - 1) && !p.is_marked(t.rank)) ? VeryEvenTag::II : VeryEvenTag::I;
        return {t, nu, tag};
    }
    default: {
        const auto* e = table.richardson_of(t, p.marked);
        if (!e) throw Error(ErrorKind::UnsupportedType, "no curated Richardson orbit for " + p.label());
        return {t, e->key, VeryEvenTag::None};
    }
    }
}

/// Every marking of the type (including the empty one).
inline std::vector<ParabolicType> all_parabolics(SimpleType t) {
    std::vector<ParabolicType> out;
    for (unsigned mask = 0; mask < (1u << t.rank); ++mask) {
        std::vector<int> marks;
        for (int i = 0; i < t.rank; ++i)
            if (mask & (1u << i)) marks.push_back(i + 1);
        out.push_back(make_parabolic(t, marks));
    }
    return out;
}

/// Whether some parabolic of a classical type induces o (very even tags ignored).
inline bool is_richardson_classical(const OrbitLabel& o) {
    for (const auto& p : all_parabolics(o.simple_type))
        if (richardson_partition(p).partition() == o.partition()) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Classification of the affine closure

struct ClosureClassification {
    /// Whether the affine orbit closure admits a symplectic resolution; nullopt = not decided.
    std::optional<bool> admits_symplectic_resolution;
    std::string basis;
};

inline ClosureClassification classify_closure(const OrbitLabel& o, const ExceptionalTable& table = default_exceptional_table()) {
    const OrbitRecord rec = make_orbit_record(o, table);
    if (rec.is_zero) throw Error(ErrorKind::ZeroOrbit, "the zero orbit has no projectivisation");
    const Family f = o.simple_type.family;
    if (f == Family::A)
        return {true, "type A: the parabolic with block sizes from the dual partition gives a birational Springer map"};
    if (rec.is_minimal) return {false, "minimal orbit closure outside type A"};
    if (is_regular_orbit(o, table)) return {true, "regular orbit: Springer resolution T*(G/B)"};
    if (!is_classical(f)) {
        const auto* e = table.find(o.simple_type, o.key());
        if (e->admits_symplectic_resolution) return {*e->admits_symplectic_resolution, "curated table: " + e->provenance};
        if (e->is_richardson && !*e->is_richardson) return {false, "not Richardson (curated table)"};
        return {std::nullopt, "curated table has no entry for symplectic resolutions of " + o.text()};
    }
    if (!is_richardson_classical(o)) return {false, "not Richardson: no parabolic induces this orbit"};
    return {std::nullopt, "Richardson orbit whose Springer-map degrees are not decided for type " + o.simple_type.name()};
}

// ---------------------------------------------------------------------------
// Polarizations and equivalence

/// Parabolics with birational Springer map onto the closure, sorted (type A:
/// lexicographically by composition).
inline std::vector<Polarization> polarizations(const OrbitLabel& o, const ExceptionalTable& table = default_exceptional_table()) {
    const auto cls = classify_closure(o, table);
    std::vector<Polarization> out;
    const SimpleType t = o.simple_type;
    if (t.family == Family::A) {
        for (const auto& c : distinct_orderings(dual_partition(o.partition())))
            out.push_back({parabolic_of_composition(c), o, 1, true, c});
        return out;
    }
    if (!cls.admits_symplectic_resolution)
        throw Error(ErrorKind::UnknownClassification, "polarizations of " + o.text() + " are not classified: " + cls.basis);
    if (!*cls.admits_symplectic_resolution) return out;
    if (is_regular_orbit(o, table)) {
        out.push_back({borel(t), o, 1, true, {}});
        return out;
    }
    if (!is_classical(t.family)) {
        const auto* e = table.find(t, o.key());
        if (e->springer_degree && *e->springer_degree == 1)
            for (const auto& marks : e->richardson_of) out.push_back({make_parabolic(t, marks), o, 1, true, {}});
        if (!out.empty()) return out;
    }
    throw Error(ErrorKind::UnknownClassification, "no curated polarization list for " + o.text());
}

/// All parabolics Q with T*(G/Q) and T*(G/P) resolving the same orbit closure.
inline std::vector<ParabolicType> equivalent_parabolics(const ParabolicType& p,
                                                        const ExceptionalTable& table = default_exceptional_table()) {
    if (p.marked.empty()) throw Error(ErrorKind::NotAPolarization, "P = G maps onto the zero orbit");
    std::vector<ParabolicType> out;
    if (p.simple_type().family == Family::A) {
        for (const auto& c : distinct_orderings(composition_of(p))) out.push_back(parabolic_of_composition(c));
        return out;
    }
    OrbitLabel o;
    try {
        o = richardson_partition(p, table);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::UnsupportedType) throw Error(ErrorKind::UnknownClassification, e.what());
        throw;
    }
    const auto cls = classify_closure(o, table);
    if (cls.admits_symplectic_resolution && !*cls.admits_symplectic_resolution)
        throw Error(ErrorKind::NotAPolarization, p.label() + " induces " + o.text() + ", which has no symplectic resolution");
    for (const auto& pol : polarizations(o, table)) out.push_back(pol.parabolic);
    if (std::find(out.begin(), out.end(), p) == out.end())
        throw Error(ErrorKind::NotAPolarization, p.label() + " is not among the polarizations of " + o.text());
    return out;
}

/// K_X . C = -(n + 1) L . pi_*[C] on the projectivised cotangent bundle.
inline Rational canonical_degree_on_curve(int n_contact, const Rational& l_degree) {
    if (n_contact < 0) throw Error(ErrorKind::InvalidArgument, "contact half-dimension must be nonnegative");
    return -Rational(n_contact + 1) * l_degree;
}

/// P(T*(G/P)) is a twistor space of a quaternion-Kähler manifold iff G/P is a projective space.
inline bool is_twistor_space(const ParabolicType& p,
                             ProjectiveSpaceCriterion criterion = ProjectiveSpaceCriterion::PoincareAllOnesAndUnitDegree) {
    return is_projective_space(p, criterion);
}

inline ChamberComplex movable_chambers(const OrbitLabel& o, const ExceptionalTable& table = default_exceptional_table()) {
    const auto pols = polarizations(o, table);
    std::vector<ParabolicType> ps;
    for (const auto& pol : pols) ps.push_back(pol.parabolic);
    return build_chamber_complex(o, ps);
}

// ---------------------------------------------------------------------------
// Reports

enum class Verdict { SmoothAlready, ContactResolutionsExist, NoContactResolution, Unknown };
enum class Reason { Minimal, G2dim8, SymplecticResolution, ClassificationTable, Indeterminate };

inline std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::SmoothAlready: return "SmoothAlready";
    case Verdict::ContactResolutionsExist: return "ContactResolutionsExist";
    case Verdict::NoContactResolution: return "NoContactResolution";
    case Verdict::Unknown: return "Unknown";
    }
    return "";
}

inline std::string to_string(Reason r) {
    switch (r) {
    case Reason::Minimal: return "Minimal";
    case Reason::G2dim8: return "G2dim8";
    case Reason::SymplecticResolution: return "SymplecticResolution";
    case Reason::ClassificationTable: return "ClassificationTable";
    case Reason::Indeterminate: return "Indeterminate";
    }
    return "";
}

/// A contact resolution of the projectivised closure exists (possibly the identity of its normalization).
inline bool contact_resolution_available(Verdict v) {
    return v == Verdict::SmoothAlready || v == Verdict::ContactResolutionsExist;
}

/// One oracle evaluation compared against the closed-form value.
struct CrossCheck {
    std::string oracle;
    std::string inputs;
    std::vector<std::uint64_t> seeds;
    std::string value;
    std::string formula;
    bool agrees_with_formula = false;
};

struct ReportOptions {
    std::uint64_t seed = 1;
    bool cross_checks = true;
};

struct ResolutionReport {
    OrbitRecord orbit;
    Verdict verdict = Verdict::Unknown;
    Reason reason = Reason::Indeterminate;
    std::string basis;
    std::optional<bool> affine_closure_admits_symplectic_resolution;
    std::vector<Polarization> polarizations;
    std::optional<ChamberComplex> chamber_complex;
    /// Crepant, relative minimal model and contact resolution are one notion here.
    bool crepant_equals_contact_equals_minimal = true;
    /// K_X = L^{-(n+1)} with n + 1 = dim O / 2.
    int canonical_bundle_exponent = 0;
    std::vector<std::string> annotations;
    std::vector<CrossCheck> cross_checks;
};

namespace detail {

inline std::vector<CrossCheck> report_cross_checks(const OrbitLabel& o, int dim, const std::vector<Polarization>& pols,
                                                   std::uint64_t seed) {
    std::vector<CrossCheck> out;
    if (!o.is_partition()) return out;
    const int size = natural_dimension(o.simple_type);
    if (size > oracle::kAdRankSizeCap) return out;
    const std::string lam = join_parts(o.partition());
    if (o.simple_type.family != Family::A) {
        const int v = oracle::matrix_orbit_dimension(o);
        out.push_back({"classical-addim", o.text(), {}, std::to_string(v), std::to_string(dim), v == dim});
        return out;
    }
    const auto model = oracle::jordan_nilpotent(o.partition());
    const int ad = oracle::addim(model);
    out.push_back({"addim", "jordan(" + lam + ")", {}, std::to_string(ad), std::to_string(dim), ad == dim});
    if (size <= 6) {
        const int k = oracle::kks_rank(model);
        out.push_back({"kks_rank", "jordan(" + lam + ")", {}, std::to_string(k), std::to_string(dim), k == dim});
    }
    if (size <= 5) {
        const auto cc = oracle::contact_check(model);
        out.push_back({"contact_check", "jordan(" + lam + ")", {}, std::to_string(cc.omega_rank_on_kernel),
                       std::to_string(dim - 2), cc.nondegenerate()});
    }
    for (const auto& pol : pols) {
        const auto gj = oracle::generic_jordan_type(pol.composition, seed);
        out.push_back({"generic_jordan_type", "composition(" + join_parts(pol.composition) + ")", gj.seeds,
                       join_parts(gj.partition), lam, gj.agreed && gj.partition == o.partition()});
        if (size <= oracle::kFiberSizeCap) {
            const long long deg = oracle::generic_fiber_count(pol.composition, seed);
            out.push_back({"generic_fiber_count", "composition(" + join_parts(pol.composition) + ")", gj.seeds,
                           std::to_string(deg), "1", deg == 1});
        }
    }
    return out;
}

} // namespace detail

inline ResolutionReport contact_resolution_exists(const OrbitLabel& o, const ReportOptions& opts = {},
                                                  const ExceptionalTable& table = default_exceptional_table()) {
    ResolutionReport r;
    r.orbit = make_orbit_record(o, table);
    if (r.orbit.is_zero) throw Error(ErrorKind::ZeroOrbit, "the zero orbit has no projectivisation");
    r.canonical_bundle_exponent = r.orbit.dim_orbit / 2;

    const auto cls = classify_closure(o, table);
    r.affine_closure_admits_symplectic_resolution = cls.admits_symplectic_resolution;
    r.basis = cls.basis;
    try {
        r.polarizations = polarizations(o, table);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::UnknownClassification) throw;
    }

    const bool nonA = o.simple_type.family != Family::A;
    if (r.orbit.is_minimal) {
        r.verdict = Verdict::SmoothAlready;
        r.reason = Reason::Minimal;
        r.basis = "minimal orbit: the projectivised orbit is closed and smooth";
        if (nonA)
            r.annotations.push_back(
                "affine closure has no symplectic resolution, yet the closure minus the origin is smooth "
                "and is trivially its own symplectic resolution");
    } else if (r.orbit.proj_normalization_smooth) {
        r.verdict = Verdict::SmoothAlready;
        r.reason = Reason::G2dim8;
        r.basis = "G2 orbit of dimension 8: the normalization of the projectivised closure is smooth";
        r.annotations.push_back(
            "closure minus the origin is singular; its normalization is the minimal orbit of so(7), a symplectic "
            "resolution that does not extend over the origin because the orbit is not Richardson");
    } else if (cls.admits_symplectic_resolution) {
        if (*cls.admits_symplectic_resolution) {
            r.verdict = Verdict::ContactResolutionsExist;
            r.reason = nonA ? Reason::ClassificationTable : Reason::SymplecticResolution;
        } else {
            r.verdict = Verdict::NoContactResolution;
            r.reason = Reason::ClassificationTable;
        }
    } else {
        r.verdict = Verdict::Unknown;
        r.reason = Reason::Indeterminate;
    }
    if (o.tag != VeryEvenTag::None)
        r.annotations.push_back("very even tag I/II does not change any quantity computed here");

    if (!r.polarizations.empty()) {
        std::vector<ParabolicType> ps;
        for (const auto& pol : r.polarizations) ps.push_back(pol.parabolic);
        r.chamber_complex = build_chamber_complex(o, ps);
    }
    if (opts.cross_checks) r.cross_checks = detail::report_cross_checks(o, r.orbit.dim_orbit, r.polarizations, opts.seed);
    return r;
}

} // namespace nilcontact
