// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nilcontact/cli.hpp"
#include "nilcontact/nilcontact.hpp"

using namespace nilcontact;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

void fail(Outcome& o, const std::string& what) {
    if (o.ok) o.detail = what;  // keep the first failure
    o.ok = false;
}

OrbitLabel type_a(const Partition& lambda) { return {make_type(Family::A, total(lambda) - 1), lambda, VeryEvenTag::None}; }

Outcome dimension_concordance() {
    Outcome o;
    int cases = 0;
    for (int n = 2; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n)) {
            ++cases;
            if (orbit_dimension(type_a(lambda)) != oracle::addim(oracle::jordan_nilpotent(lambda)))
                fail(o, "mismatch at " + join_parts(lambda));
        }
    if (o.ok) o.detail = std::to_string(cases) + " partitions";
    return o;
}

Outcome richardson_law() {
    Outcome o;
    int cases = 0;
    for (int n = 2; n <= 6; ++n)
        for (const auto& c : compositions_of(n)) {
            ++cases;
            const auto g = oracle::generic_jordan_type(c, 1);
            if (!g.agreed) fail(o, "seeds disagree on " + join_parts(c));
            if (g.partition != dual_partition(sort_desc(c))) fail(o, "wrong Jordan type for " + join_parts(c));
        }
    if (o.ok) o.detail = std::to_string(cases) + " compositions, 3 seeds each";
    return o;
}

Outcome contact_nondegeneracy() {
    Outcome o;
    int cases = 0;
    for (int n = 2; n <= 5; ++n)
        for (const auto& lambda : partitions_of(n)) {
            const int dim = orbit_dimension(type_a(lambda));
            if (dim == 0) continue;
            for (std::uint64_t seed : {11u, 12u, 13u}) {
                ++cases;
                const auto m = oracle::random_conjugate(oracle::jordan_nilpotent(lambda), seed);
                const auto cc = oracle::contact_check(m);
                const bool ok = oracle::kks_rank(m) == dim && cc.theta_kernel_dim == dim - 1 &&
                                cc.omega_rank_on_kernel == dim - 2 && cc.radical_is_euler_line && cc.theta_well_defined;
                if (!ok) fail(o, "failure at " + join_parts(lambda) + " seed " + std::to_string(seed));
            }
        }
    if (o.ok) o.detail = std::to_string(cases) + " conjugates";
    return o;
}

Outcome trichotomy() {
    Outcome o;
    int smooth = 0, resolved = 0;
    std::vector<SimpleType> small;
    for (int r = 1; r <= 4; ++r) small.push_back(make_type(Family::A, r));
    for (const char* s : {"B2", "B3", "C2", "C3", "D4", "G2"}) small.push_back(parse_simple_type(s));
    const ReportOptions quick{1, false};
    for (const auto& t : small)
        for (const auto& orbit : enumerate_orbits(t)) {
            if (is_zero_orbit(orbit) || !is_minimal_orbit(orbit)) continue;
            ++smooth;
            if (contact_resolution_exists(orbit, quick).verdict != Verdict::SmoothAlready) fail(o, orbit.text() + " not SmoothAlready");
        }
    const auto g2 = contact_resolution_exists(parse_orbit("G2:dim8"), quick);
    ++smooth;
    if (g2.verdict != Verdict::SmoothAlready || g2.reason != Reason::G2dim8) fail(o, "G2:dim8 not SmoothAlready/G2dim8");
    for (int n = 2; n <= 7; ++n)
        for (const auto& lambda : partitions_of(n)) {
            const auto orbit = type_a(lambda);
            if (is_zero_orbit(orbit)) continue;
            const auto r = contact_resolution_exists(orbit, quick);
            if (r.verdict == Verdict::Unknown) fail(o, orbit.text() + " Unknown");
            if (is_minimal_orbit(orbit)) continue;
            ++resolved;
            if (r.verdict != Verdict::ContactResolutionsExist || r.polarizations.empty())
                fail(o, orbit.text() + " lacks contact resolutions");
        }
    if (o.ok) o.detail = std::to_string(smooth) + " smooth, " + std::to_string(resolved) + " resolvable";
    return o;
}

Outcome chamber_counts() {
    Outcome o;
    const std::vector<std::pair<Partition, std::size_t>> spots{{{2, 1, 1}, 2}, {{2, 2}, 1}, {{3, 2, 1}, 6}};
    for (const auto& [lambda, expected] : spots)
        if (movable_chambers(type_a(lambda)).chambers.size() != expected) fail(o, "spot value " + join_parts(lambda));
    const auto v = verify_suite("chambers", 7, 1);
    if (!v.passed()) fail(o, std::to_string(v.failures()) + " chamber rows fail");
    if (o.ok) o.detail = std::to_string(v.rows.size()) + " orbits plus 3 spot values";
    return o;
}

Outcome springer_degree() {
    Outcome o;
    int cases = 0;
    for (int n = 2; n <= 4; ++n)
        for (const auto& c : compositions_of(n)) {
            ++cases;
            if (oracle::generic_fiber_count(c, 1) != 1) fail(o, "degree != 1 at " + join_parts(c));
        }
    if (o.ok) o.detail = std::to_string(cases) + " compositions";
    return o;
}

Outcome cone_soundness() {
    Outcome o;
    const auto v = verify_suite("cones", 4, 1);
    std::size_t random = 0;
    for (const auto& r : v.rows) random += r.case_id.rfind("random cone", 0) == 0;
    if (random < 100) fail(o, "only " + std::to_string(random) + " random cones");
    if (!v.passed()) fail(o, std::to_string(v.failures()) + " cone rows fail");
    if (o.ok) o.detail = std::to_string(random) + " random cones, " + std::to_string(v.rows.size() - random) + " ample cones";
    return o;
}

Outcome canonical_degree() {
    Outcome o;
    // (n, L-degree, expected K-degree)
    const int table[20][3] = {{0, 0, 0},  {0, 1, -1},  {1, 0, 0},   {1, 1, -2},  {1, 3, -6},  {2, 0, 0},   {2, 1, -3},
                              {2, 2, -6}, {3, 0, 0},   {3, 1, -4},  {3, 5, -20}, {4, 2, -10}, {5, 0, 0},   {5, 1, -6},
                              {6, 3, -21}, {7, 0, 0},  {8, 2, -18}, {9, 1, -10}, {12, 4, -52}, {20, 7, -147}};
    for (const auto& row : table)
        if (canonical_degree_on_curve(row[0], row[1]) != row[2])
            fail(o, "n=" + std::to_string(row[0]) + " d=" + std::to_string(row[1]));
    if (o.ok) o.detail = "20 (n, d) pairs";
    return o;
}

std::string run_capture(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    cli::run(args, out, err);
    return out.str();
}

Outcome determinism() {
    Outcome o;
    const std::vector<std::vector<std::string>> requests{
        {"classify", "A4:2,2,1", "--json", "--seed", "9"},
        {"classify", "G2:dim8", "--json", "--seed", "9"},
        {"verify", "--suite", "richardson", "--max-n", "5", "--seed", "9", "--json"},
        {"verify", "--suite", "cones", "--max-n", "3", "--seed", "9", "--json"},
        {"verify", "--suite", "kks", "--max-n", "4", "--seed", "9", "--json"}};
    for (const auto& req : requests) {
        const auto a = run_capture(req), b = run_capture(req);
        if (a != b || a.empty()) fail(o, "output differs for " + req[0] + " " + req[1]);
    }
    if (o.ok) o.detail = std::to_string(requests.size()) + " requests run twice";
    return o;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> check;
        double budget_seconds;  // 0 = no runtime bound
    };
    const std::vector<Criterion> criteria{
        {1, "dimension concordance", dimension_concordance, 30},
        {2, "Richardson law", richardson_law, 60},
        {3, "contact nondegeneracy", contact_nondegeneracy, 0},
        {4, "classification trichotomy", trichotomy, 0},
        {5, "chamber counts", chamber_counts, 0},
        {6, "Springer degree 1 in type A", springer_degree, 0},
        {7, "cone engine soundness", cone_soundness, 0},
        {8, "canonical degree formula", canonical_degree, 0},
        {9, "determinism", determinism, 0},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && secs > c.budget_seconds)
            fail(o, "took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_seconds) + " s");
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2f s", secs);
        std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.id << "  " << c.name << ": " << o.detail << " ("
                  << timing << ")\n";
        failures += !o.ok;
    }
    std::cout << (failures == 0 ? "all acceptance criteria pass" : std::to_string(failures) + " criteria fail") << "\n";
    return failures == 0 ? 0 : 1;
}
