#include <random>

#include <gtest/gtest.h>

#include "nilcontact/cones.hpp"
#include "nilcontact/resolutions.hpp"
#include "nilcontact/verify.hpp"
#include "test_helpers.hpp"

using namespace nilcontact;

namespace {

/// Caratheodory: x lies in cone(G) iff x is a nonnegative combination of
/// some linearly independent subset of G.
bool caratheodory_contains(const std::vector<Vector>& gens, const Vector& x, std::size_t d) {
    if (is_zero(x)) return true;
    const std::size_t g = gens.size();
    for (unsigned mask = 1; mask < (1u << g); ++mask) {
        std::vector<Vector> sub;
        for (std::size_t i = 0; i < g; ++i)
            if (mask & (1u << i)) sub.push_back(gens[i]);
        if (sub.size() > d || rank(Matrix::from_rows(sub, d)) != sub.size()) continue;
        const auto coeffs = solve(Matrix::from_columns(sub, d), x);
        if (coeffs && std::all_of(coeffs->begin(), coeffs->end(), [](const Rational& c) { return c >= 0; })) return true;
    }
    return false;
}

Vector vec(std::initializer_list<int> xs) {
    Vector v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

} // namespace

TEST(Cones, Orthant) {
    const auto c = cone_from_generators(3, unit_vectors(3));
    const std::vector<Vector> sorted{vec({0, 0, 1}), vec({0, 1, 0}), vec({1, 0, 0})};
    EXPECT_EQ(c.rays(), sorted);
    EXPECT_EQ(c.facet_normals(), sorted);
    EXPECT_TRUE(c.is_simplicial());
    EXPECT_EQ(c.dimension(), 3);
    EXPECT_TRUE(c.contains(vec({1, 2, 0})));
    EXPECT_FALSE(c.contains(vec({1, -2, 0})));
}

TEST(Cones, HalfPlaneHasLineality) {
    const auto c = cone_from_generators(2, {vec({1, 0}), vec({-1, 0}), vec({0, 1})});
    EXPECT_FALSE(c.is_pointed());
    EXPECT_EQ(c.lineality().size(), 1u);
    EXPECT_EQ(c.rays(), (std::vector<Vector>{vec({0, 1})}));
    EXPECT_EQ(c.facet_normals(), (std::vector<Vector>{vec({0, 1})}));
}

TEST(Cones, WholeSpaceAndZeroCone) {
    const auto all = cone_from_generators(2, {vec({1, 0}), vec({-1, 0}), vec({0, 1}), vec({0, -1})});
    EXPECT_EQ(all.lineality().size(), 2u);
    EXPECT_TRUE(all.rays().empty());
    EXPECT_TRUE(all.facet_normals().empty());
    const auto zero = cone_from_generators(2, {});
    EXPECT_EQ(zero.dimension(), 0);
    EXPECT_EQ(dual_cone(zero), all);
    EXPECT_EQ(dual_cone(all), zero);
}

TEST(Cones, LowerDimensionalCone) {
    const auto c = cone_from_generators(3, {vec({1, 0, 0}), vec({1, 1, 0})});
    EXPECT_EQ(c.dimension(), 2);
    EXPECT_EQ(c.equations(), (std::vector<Vector>{vec({0, 0, 1})}));
    EXPECT_FALSE(c.contains(vec({1, 0, 1})));
    EXPECT_FALSE(c.contains(vec({0, 1, 0})));
    EXPECT_TRUE(c.contains(vec({3, 1, 0})));
}

TEST(Cones, RedundantGeneratorsDropOut) {
    const auto c = cone_from_generators(2, {vec({1, 0}), vec({0, 1}), vec({1, 1}), vec({2, 0})});
    EXPECT_EQ(c.rays(), (std::vector<Vector>{vec({0, 1}), vec({1, 0})}));
}

TEST(Cones, ErrorsAndCaps) {
    EXPECT_ERROR_KIND(cone_from_generators(9, {}), ErrorKind::SizeCap);
    EXPECT_ERROR_KIND(cone_from_generators(2, {vec({1, 0, 0})}), ErrorKind::DimensionMismatch);
    EXPECT_ERROR_KIND(cone_from_generators(2, {vec({1, 0})}).contains(vec({1})), ErrorKind::DimensionMismatch);
}

TEST(Cones, MembershipMatchesCaratheodory) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (const auto& [d, gens] : detail::random_generator_sets(3, 77, 60)) {
        const auto c = cone_from_generators(d, gens);
        for (int k = 0; k < 15; ++k) {
            Vector x(d);
            for (auto& v : x) v = entry(rng);
            EXPECT_EQ(c.contains(x), caratheodory_contains(gens, x, d));
        }
    }
}

TEST(Cones, RoundTripAndDualInvolution) {
    for (const auto& [d, gens] : detail::random_generator_sets(4, 5, 150)) {
        const auto c = cone_from_generators(d, gens);
        EXPECT_EQ(cone_from_generators(d, c.generators()), c);
        EXPECT_EQ(cone_from_inequalities(d, c.facet_normals(), c.equations()), c);
        EXPECT_EQ(dual_cone(dual_cone(c)), c);
        // facets of c are exactly the rays of its dual when c is full-dimensional and pointed
        if (c.dimension() == d) { EXPECT_EQ(dual_cone(c).rays(), c.facet_normals()); }
    }
}

TEST(Cones, AmpleConesAreSimplicial) {
    for (const char* name : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
        const auto t = parse_simple_type(name);
        for (const auto& p : all_parabolics(t)) {
            if (p.marked.empty()) continue;
            const auto amp = ample_cone(p);
            EXPECT_TRUE(amp.is_simplicial()) << p.label();
            EXPECT_EQ(amp.rays().size(), p.marked.size()) << p.label();
            // dual to the curve cone under the identity pairing
            EXPECT_EQ(amp, dual_cone(curve_cone(p))) << p.label();
        }
    }
}

TEST(Chambers, SpotCountsAndWallDegrees) {
    EXPECT_EQ(movable_chambers(parse_orbit("A3:2,1,1")).chambers.size(), 2u);
    EXPECT_EQ(movable_chambers(parse_orbit("A3:2,2")).chambers.size(), 1u);
    const auto cx = movable_chambers(parse_orbit("A5:3,2,1"));
    EXPECT_EQ(cx.chambers.size(), 6u);
    EXPECT_EQ(cx.walls.size(), 6u);  // hexagon: the permutohedron of S_3
    EXPECT_TRUE(cx.is_connected());
    EXPECT_FALSE(cx.linear_gluing_implemented);
    for (std::size_t i = 0; i < cx.chambers.size(); ++i) EXPECT_EQ(cx.degree(i), 2u);
    for (const auto& w : cx.walls) {
        auto c = cx.chambers[w.chamber_a].composition;
        EXPECT_EQ(c[w.position], w.left);
        EXPECT_EQ(c[w.position + 1], w.right);
        std::swap(c[w.position], c[w.position + 1]);
        EXPECT_EQ(c, cx.chambers[w.chamber_b].composition);
    }
}

TEST(Chambers, AllPartitionsUpToSeven) {
    for (int n = 2; n <= 7; ++n)
        for (const auto& lambda : partitions_of(n)) {
            const OrbitLabel o{make_type(Family::A, n - 1), lambda, VeryEvenTag::None};
            if (is_zero_orbit(o)) continue;
            const auto cx = movable_chambers(o);
            EXPECT_EQ(cx.chambers.size(), multinomial_orderings(dual_partition(lambda)));
            EXPECT_TRUE(cx.is_connected());
            for (std::size_t i = 0; i < cx.chambers.size(); ++i) {
                const auto& c = cx.chambers[i].composition;
                std::size_t unequal = 0;
                for (std::size_t p = 0; p + 1 < c.size(); ++p) unequal += c[p] != c[p + 1];
                EXPECT_EQ(cx.degree(i), unequal);
                EXPECT_TRUE(cx.chambers[i].ample_cone.is_simplicial());
            }
        }
}

TEST(Chambers, EmptyInputRejected) {
    EXPECT_ERROR_KIND(build_chamber_complex(parse_orbit("A2:2,1"), {}), ErrorKind::NoPolarization);
}
