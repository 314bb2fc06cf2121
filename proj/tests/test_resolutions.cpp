#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "nilcontact/oracle_lab.hpp"
#include "nilcontact/resolutions.hpp"
#include "test_helpers.hpp"

using namespace nilcontact;

namespace {

/// Block sizes of the isotropic flag stabilized by p in the natural
/// representation with antidiagonal form.
std::vector<int> flag_blocks(const ParabolicType& p) {
    const SimpleType t = p.simple_type();
    const int n = t.rank, N = natural_dimension(t);
    std::vector<int> dims;
    if (t.family == Family::D) {
        for (int m : p.marked)
            if (m <= n - 2) dims.push_back(m);
        if (p.is_marked(n - 1) && p.is_marked(n)) dims.push_back(n - 1);
        else if (p.is_marked(n - 1) || p.is_marked(n)) dims.push_back(n);
    } else {
        dims = p.marked;
    }
    std::vector<int> lower;
    int prev = 0;
    for (int d : dims) {
        lower.push_back(d - prev);
        prev = d;
    }
    std::vector<int> blocks = lower;
    if (N - 2 * prev > 0) blocks.push_back(N - 2 * prev);
    blocks.insert(blocks.end(), lower.rbegin(), lower.rend());
    return blocks;
}

/// Jordan type of a generic element of the nilradical of p inside so_N / sp_N.
Partition matrix_richardson(const ParabolicType& p, std::uint64_t seed) {
    const SimpleType t = p.simple_type();
    const int N = natural_dimension(t);
    const bool skew = t.family == Family::C;
    Matrix form(N, N);
    for (int i = 0; i < N; ++i) form(i, N - 1 - i) = (skew && i >= N / 2) ? -1 : 1;
    std::vector<int> block_of;
    const auto blocks = flag_blocks(p);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int k = 0; k < blocks[b]; ++k) block_of.push_back(static_cast<int>(b));
    std::vector<std::pair<int, int>> vars;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (block_of[i] < block_of[j]) vars.emplace_back(i, j);
    // (X^T F + F X)(a, b) = sum_k X(k, a) F(k, b) + F(a, k) X(k, b)
    Matrix constraints(N * N, vars.size());
    for (std::size_t v = 0; v < vars.size(); ++v) {
        const auto [i, j] = vars[v];
        for (int b = 0; b < N; ++b) constraints(j * N + b, v) += form(i, b);
        for (int a = 0; a < N; ++a) constraints(a * N + j, v) += form(a, i);
    }
    const auto basis = nullspace(constraints);
    Partition best;
    for (int s = 0; s < 3; ++s) {
        oracle::RationalSampler sampler(seed + s);
        Matrix x(N, N);
        for (const auto& vec : basis) {
            const Rational c = sampler.next();
            for (std::size_t v = 0; v < vars.size(); ++v) x(vars[v].first, vars[v].second) += c * vec[v];
        }
        EXPECT_TRUE((x.transpose() * form + form * x).is_zero());
        const Partition j = oracle::jordan_type(x);
        if (best.empty() || dominates(j, best)) best = j;
    }
    return best;
}

std::vector<SimpleType> bcd_types() {
    return {make_type(Family::B, 2), make_type(Family::B, 3), make_type(Family::B, 4), make_type(Family::C, 2),
            make_type(Family::C, 3), make_type(Family::C, 4), make_type(Family::D, 4), make_type(Family::D, 5)};
}

} // namespace

TEST(Resolutions, TypeARichardsonRoundTrip) {
    for (int n = 2; n <= 6; ++n)
        for (const auto& c : compositions_of(n)) {
            if (c.size() < 2) continue;
            const auto p = parabolic_of_composition(c);
            const auto o = richardson_partition(p);
            EXPECT_EQ(o.partition(), dual_partition(sort_desc(c)));
            EXPECT_EQ(2 * flag_dimension(p), orbit_dimension(o));
            const auto pols = polarizations(o);
            EXPECT_TRUE(std::any_of(pols.begin(), pols.end(), [&](const Polarization& q) { return q.composition == c; }));
        }
}

TEST(Resolutions, ClassicalRichardsonDimensionLaw) {
    for (const auto& t : bcd_types())
        for (const auto& p : all_parabolics(t)) {
            if (p.marked.empty()) continue;
            const auto o = richardson_partition(p);
            EXPECT_NO_THROW(validate_orbit(t, o.partition(), o.tag)) << p.label();
            EXPECT_EQ(2 * flag_dimension(p), orbit_dimension(o)) << p.label() << " -> " << o.text();
        }
}

TEST(Resolutions, ClassicalRichardsonMatchesMatrixModel) {
    for (const auto& t : bcd_types()) {
        if (natural_dimension(t) > 8) continue;
        for (const auto& p : all_parabolics(t)) {
            if (p.marked.empty()) continue;
            EXPECT_EQ(matrix_richardson(p, 101), richardson_partition(p).partition()) << p.label();
        }
    }
}

TEST(Resolutions, VeryEvenTagFollowsSpinNode) {
    EXPECT_EQ(richardson_partition(parse_parabolic("D4:{4}")).text(), "D4:2,2,2,2/I");
    EXPECT_EQ(richardson_partition(parse_parabolic("D4:{3}")).text(), "D4:2,2,2,2/II");
    EXPECT_EQ(richardson_partition(parse_parabolic("D4:{1}")).text(), "D4:3,1,1,1,1,1");
}

TEST(Resolutions, ExceptionalRichardsonFromTable) {
    EXPECT_EQ(richardson_partition(parse_parabolic("G2:{1,2}")).text(), "G2:dim12");
    EXPECT_EQ(richardson_partition(parse_parabolic("G2:{1}")).text(), "G2:dim10");
    EXPECT_EQ(2 * flag_dimension(parse_parabolic("G2:{2}")), orbit_dimension(parse_orbit("G2:dim10")));
    EXPECT_ERROR_KIND(richardson_partition(parse_parabolic("F4:{1}")), ErrorKind::UnsupportedType);
}

TEST(Resolutions, PolarizationCountsAndOrder) {
    EXPECT_EQ(polarizations(parse_orbit("A3:2,1,1")).size(), 2u);
    EXPECT_EQ(polarizations(parse_orbit("A3:2,2")).size(), 1u);
    EXPECT_EQ(polarizations(parse_orbit("A5:3,2,1")).size(), 6u);
    for (int n = 2; n <= 7; ++n)
        for (const auto& lambda : partitions_of(n)) {
            const OrbitLabel o{make_type(Family::A, n - 1), lambda, VeryEvenTag::None};
            if (is_zero_orbit(o)) {
                EXPECT_ERROR_KIND(polarizations(o), ErrorKind::ZeroOrbit);
                continue;
            }
            const auto pols = polarizations(o);
            EXPECT_EQ(pols.size(), multinomial_orderings(dual_partition(lambda)));
            // lexicographic by composition; every entry is a birational polarization of o
            for (std::size_t i = 1; i < pols.size(); ++i) EXPECT_LT(pols[i - 1].composition, pols[i].composition);
            for (const auto& p : pols) {
                EXPECT_EQ(p.springer_degree, 1);
                EXPECT_EQ(richardson_partition(p.parabolic), o);
            }
        }
}

TEST(Resolutions, EquivalenceIsAnEquivalenceRelation) {
    for (int n = 2; n <= 6; ++n) {
        const auto t = make_type(Family::A, n - 1);
        for (const auto& p : all_parabolics(t)) {
            if (p.marked.empty()) {
                EXPECT_ERROR_KIND(equivalent_parabolics(p), ErrorKind::NotAPolarization);
                continue;
            }
            const auto cls = equivalent_parabolics(p);
            EXPECT_NE(std::find(cls.begin(), cls.end(), p), cls.end());
            for (const auto& q : cls) {
                const auto other = equivalent_parabolics(q);
                ASSERT_EQ(other.size(), cls.size());
                for (const auto& r : other) EXPECT_NE(std::find(cls.begin(), cls.end(), r), cls.end());
                EXPECT_EQ(richardson_partition(q), richardson_partition(p));
            }
        }
    }
}

TEST(Resolutions, EquivalenceOutsideTypeA) {
    EXPECT_EQ(equivalent_parabolics(borel(make_type(Family::B, 3))).size(), 1u);
    EXPECT_ERROR_KIND(equivalent_parabolics(parse_parabolic("B3:{}")), ErrorKind::NotAPolarization);
    EXPECT_ERROR_KIND(equivalent_parabolics(parse_parabolic("G2:{1}")), ErrorKind::UnknownClassification);
    EXPECT_ERROR_KIND(equivalent_parabolics(parse_parabolic("C3:{1}")), ErrorKind::UnknownClassification);
    EXPECT_ERROR_KIND(equivalent_parabolics(parse_parabolic("E6:{1}")), ErrorKind::UnknownClassification);
}

TEST(Resolutions, VerdictsOnPinnedCases) {
    const auto g2 = contact_resolution_exists(parse_orbit("G2:dim8"));
    EXPECT_EQ(g2.verdict, Verdict::SmoothAlready);
    EXPECT_EQ(g2.reason, Reason::G2dim8);
    EXPECT_EQ(g2.affine_closure_admits_symplectic_resolution, false);
    EXPECT_FALSE(g2.annotations.empty());

    const auto b3min = contact_resolution_exists(parse_orbit("B3:2,2,1,1,1"));
    EXPECT_EQ(b3min.verdict, Verdict::SmoothAlready);
    EXPECT_EQ(b3min.reason, Reason::Minimal);
    EXPECT_EQ(b3min.affine_closure_admits_symplectic_resolution, false);
    EXPECT_FALSE(b3min.annotations.empty());

    const auto a = contact_resolution_exists(parse_orbit("A4:3,2"));
    EXPECT_EQ(a.verdict, Verdict::ContactResolutionsExist);
    EXPECT_EQ(a.reason, Reason::SymplecticResolution);
    EXPECT_EQ(a.polarizations.size(), 3u);
    ASSERT_TRUE(a.chamber_complex.has_value());
    EXPECT_EQ(a.canonical_bundle_exponent, orbit_dimension(parse_orbit("A4:3,2")) / 2);
    for (const auto& c : a.cross_checks) EXPECT_TRUE(c.agrees_with_formula) << c.oracle << " " << c.inputs;

    EXPECT_EQ(contact_resolution_exists(parse_orbit("C3:4,1,1")).verdict, Verdict::NoContactResolution);
    EXPECT_EQ(contact_resolution_exists(parse_orbit("D4:3,2,2,1")).verdict, Verdict::NoContactResolution);
    EXPECT_EQ(contact_resolution_exists(parse_orbit("G2:dim10")).verdict, Verdict::Unknown);
    EXPECT_EQ(contact_resolution_exists(parse_orbit("C3:2,2,1,1")).verdict, Verdict::Unknown);

    const auto reg = contact_resolution_exists(parse_orbit("B3:7"));
    EXPECT_EQ(reg.verdict, Verdict::ContactResolutionsExist);
    EXPECT_EQ(reg.reason, Reason::ClassificationTable);
    ASSERT_EQ(reg.polarizations.size(), 1u);
    EXPECT_EQ(reg.polarizations[0].parabolic, borel(make_type(Family::B, 3)));

    EXPECT_EQ(contact_resolution_exists(parse_orbit("E8:E8")).verdict, Verdict::ContactResolutionsExist);
    EXPECT_ERROR_KIND(contact_resolution_exists(parse_orbit("A3:1,1,1,1")), ErrorKind::ZeroOrbit);
    EXPECT_ERROR_KIND(contact_resolution_exists(parse_orbit("G2:dim0")), ErrorKind::ZeroOrbit);
}

TEST(Resolutions, ReportCoherence) {
    std::vector<SimpleType> types;
    for (int r = 1; r <= 5; ++r) types.push_back(make_type(Family::A, r));
    for (const auto& t : bcd_types()) types.push_back(t);
    for (const char* s : {"G2", "F4", "E6", "E7", "E8"}) types.push_back(parse_simple_type(s));
    for (const auto& t : types)
        for (const auto& o : enumerate_orbits(t)) {
            if (is_zero_orbit(o)) continue;
            const auto r = contact_resolution_exists(o, {.seed = 1, .cross_checks = false});
            EXPECT_EQ(r.verdict == Verdict::SmoothAlready, r.orbit.proj_normalization_smooth) << o.text();
            EXPECT_EQ(contact_resolution_available(r.verdict),
                      !r.polarizations.empty() || r.reason == Reason::Minimal || r.reason == Reason::G2dim8)
                << o.text();
            EXPECT_TRUE(r.crepant_equals_contact_equals_minimal);
            if (t.family == Family::A) { EXPECT_NE(r.verdict, Verdict::Unknown) << o.text(); }
            if (r.verdict == Verdict::NoContactResolution) { EXPECT_TRUE(r.polarizations.empty()); }
        }
}

TEST(Resolutions, NonRichardsonClassicalOrbitsHaveNoInducingParabolic) {
    // brute force: collect every induced orbit, compare with the classifier's verdicts
    for (const auto& t : bcd_types()) {
        std::set<Partition> induced;
        for (const auto& p : all_parabolics(t)) induced.insert(richardson_partition(p).partition());
        for (const auto& o : enumerate_orbits(t)) {
            if (is_zero_orbit(o) || is_minimal_orbit(o)) continue;
            const auto cls = classify_closure(o);
            if (!induced.count(o.partition())) {
                EXPECT_EQ(cls.admits_symplectic_resolution, false) << o.text();
            } else {
                EXPECT_NE(cls.admits_symplectic_resolution, false) << o.text();
            }
        }
    }
}

TEST(Resolutions, CanonicalDegree) {
    EXPECT_EQ(canonical_degree_on_curve(3, 0), 0);
    EXPECT_EQ(canonical_degree_on_curve(3, 2), -8);
    EXPECT_EQ(canonical_degree_on_curve(0, Rational(1, 2)), Rational(-1, 2));
    EXPECT_ERROR_KIND(canonical_degree_on_curve(-1, 1), ErrorKind::InvalidArgument);
}

TEST(Resolutions, TwistorSpaces) {
    EXPECT_TRUE(is_twistor_space(parse_parabolic("A3:{1}")));
    EXPECT_TRUE(is_twistor_space(parse_parabolic("C3:{1}")));
    EXPECT_FALSE(is_twistor_space(parse_parabolic("B3:{1}")));
    EXPECT_FALSE(is_twistor_space(parse_parabolic("A3:{2}")));
}

TEST(Resolutions, MovableChambersNeedPolarizations) {
    EXPECT_ERROR_KIND(movable_chambers(parse_orbit("C3:4,1,1")), ErrorKind::NoPolarization);
    EXPECT_ERROR_KIND(movable_chambers(parse_orbit("C3:2,2,1,1")), ErrorKind::UnknownClassification);
    EXPECT_EQ(movable_chambers(parse_orbit("A5:3,2,1")).chambers.size(), 6u);
}
