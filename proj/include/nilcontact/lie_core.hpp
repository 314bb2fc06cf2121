#pragma once

// Root systems of simple types, parabolic markings, flag-variety dimensions,
// Poincaré polynomials of W/W_L, and the curve/divisor lattice of G/P.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "nilcontact/error.hpp"
#include "nilcontact/linalg.hpp"

namespace nilcontact {

enum class Family { A, B, C, D, E, F, G };

inline char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

struct SimpleType {
    Family family = Family::A;
    int rank = 1;

    std::string name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

    friend bool operator==(const SimpleType&, const SimpleType&) = default;
    friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

inline bool valid_rank(Family f, int r) {
    switch (f) {
    case Family::A: return r >= 1;
    case Family::B: return r >= 2;
    case Family::C: return r >= 2;
    case Family::D: return r >= 3;
    case Family::E: return r >= 6 && r <= 8;
    case Family::F: return r == 4;
    case Family::G: return r == 2;
    }
    return false;
}

inline SimpleType make_type(Family f, int r) {
    if (!valid_rank(f, r))
        throw Error(ErrorKind::InvalidRank,
                    "rank " + std::to_string(r) + " is out of range for type " + family_letter(f));
    return {f, r};
}

/// Parses "A3", "E8", "G2".
inline SimpleType parse_simple_type(const std::string& s) {
    if (s.size() < 2) throw Error(ErrorKind::ParseError, "bad simple type '" + s + "'");
    static const std::string letters = "ABCDEFG";
    const auto pos = letters.find(s[0]);
    if (pos == std::string::npos) throw Error(ErrorKind::ParseError, "unknown family in '" + s + "'");
    const std::string digits = s.substr(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 3)
        throw Error(ErrorKind::ParseError, "bad rank in '" + s + "'");
    return make_type(static_cast<Family>(pos), std::stoi(digits));
}

inline int dual_coxeter_number(SimpleType t) {
    const int n = t.rank;
    switch (t.family) {
    case Family::A: return n + 1;
    case Family::B: return 2 * n - 1;
    case Family::C: return n + 1;
    case Family::D: return 2 * n - 2;
    case Family::E: return n == 6 ? 12 : n == 7 ? 18 : 30;
    case Family::F: return 9;
    case Family::G: return 4;
    }
    return 0;
}

/// Classical count of positive roots, used to validate the generated system.
inline int expected_positive_root_count(SimpleType t) {
    const int n = t.rank;
    switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
    }
    return 0;
}

inline std::uint64_t weyl_group_order(SimpleType t) {
    const int n = t.rank;
    auto fact = [](int k) {
        std::uint64_t f = 1;
        for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
        return f;
    };
    switch (t.family) {
    case Family::A: return fact(n + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << n) * fact(n);
    case Family::D: return (std::uint64_t{1} << (n - 1)) * fact(n);
    case Family::E: return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
    case Family::F: return 1152;
    case Family::G: return 12;
    }
    return 0;
}

using RootVector = std::vector<int>;

/// Cartan data in Bourbaki numbering. cartan[i][j] = <alpha_i, alpha_j^vee>.
struct RootSystemData {
    SimpleType simple_type;
    std::vector<std::vector<int>> cartan;
    /// Positive roots in simple-root coordinates, sorted by height then lexicographically.
    std::vector<RootVector> positive_roots;
    /// Row i is the fundamental weight varpi_{i+1} in simple-root coordinates.
    Matrix fundamental_weights;
    /// (alpha_i, alpha_i), normalized so that the shortest simple root has squared length 2.
    std::vector<Rational> simple_length_sq;

    int rank() const { return simple_type.rank; }
    int algebra_dimension() const { return rank() + 2 * static_cast<int>(positive_roots.size()); }

    Rational inner(const RootVector& a, const RootVector& b) const {
        Rational s = 0;
        for (int i = 0; i < rank(); ++i)
            for (int j = 0; j < rank(); ++j)
                if (a[i] != 0 && b[j] != 0) s += Rational(a[i] * b[j] * cartan[i][j]) * simple_length_sq[j] / 2;
        return s;
    }

    /// Coordinates of alpha^vee in the simple-coroot basis.
    std::vector<Rational> coroot(const RootVector& alpha) const {
        const Rational len = inner(alpha, alpha);
        std::vector<Rational> c(rank());
        for (int j = 0; j < rank(); ++j) c[j] = Rational(alpha[j]) * simple_length_sq[j] / len;
        return c;
    }

    static int height(const RootVector& r) { return std::accumulate(r.begin(), r.end(), 0); }
};

namespace detail {

inline std::vector<std::vector<int>> cartan_matrix(SimpleType t) {
    const int n = t.rank;
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](int i, int j, int aij, int aji) {  // 1-based Bourbaki indices
        a[i - 1][j - 1] = aij;
        a[j - 1][i - 1] = aji;
    };
    switch (t.family) {
    case Family::A:
        for (int i = 1; i < n; ++i) link(i, i + 1, -1, -1);
        break;
    case Family::B:
        for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1, -1);
        link(n - 1, n, -2, -1);
        break;
    case Family::C:
        for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1, -1);
        link(n - 1, n, -1, -2);
        break;
    case Family::D:
        for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1, -1);
        link(n - 2, n, -1, -1);
        break;
    case Family::E:
        link(1, 3, -1, -1);
        link(2, 4, -1, -1);
        for (int i = 3; i < n; ++i) link(i, i + 1, -1, -1);
        break;
    case Family::F:
        link(1, 2, -1, -1);
        link(2, 3, -2, -1);
        link(3, 4, -1, -1);
        break;
    case Family::G:
        link(1, 2, -1, -3);
        break;
    }
    return a;
}

} // namespace detail

/// Builds the root system by closing the simple roots under simple reflections.
inline RootSystemData build_root_system(SimpleType t) {
    if (!valid_rank(t.family, t.rank))
        throw Error(ErrorKind::InvalidRank, "rank out of range for type " + t.name());
    RootSystemData rs;
    rs.simple_type = t;
    rs.cartan = detail::cartan_matrix(t);
    const int n = t.rank;

    // symmetrizer: a_ij * l_j = a_ji * l_i along every edge of the (connected) diagram
    std::vector<Rational> len(n, Rational(0));
    len[0] = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j) {
            if (j == i || rs.cartan[i][j] == 0 || len[j] != 0) continue;
            len[j] = Rational(rs.cartan[j][i]) * len[i] / rs.cartan[i][j];
            stack.push_back(j);
        }
    }
    const Rational shortest = *std::min_element(len.begin(), len.end());
    for (auto& l : len) l = l * 2 / shortest;
    rs.simple_length_sq = len;

    std::set<RootVector> seen;
    std::vector<RootVector> frontier;
    for (int i = 0; i < n; ++i) {
        RootVector e(n, 0);
        e[i] = 1;
        seen.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<RootVector> next;
        for (const auto& beta : frontier) {
            for (int j = 0; j < n; ++j) {
                int pairing = 0;
                for (int i = 0; i < n; ++i) pairing += beta[i] * rs.cartan[i][j];
                if (pairing == 0) continue;
                RootVector img = beta;
                img[j] -= pairing;
                if (img[j] < 0) continue;  // only beta == alpha_j leaves the positive system
                if (seen.insert(img).second) next.push_back(img);
            }
        }
        frontier = std::move(next);
    }
    rs.positive_roots.assign(seen.begin(), seen.end());
    std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), [](const RootVector& a, const RootVector& b) {
        const int ha = RootSystemData::height(a), hb = RootSystemData::height(b);
        return ha != hb ? ha < hb : a < b;
    });
    if (static_cast<int>(rs.positive_roots.size()) != expected_positive_root_count(t))
        throw Error(ErrorKind::InvalidArgument, "root closure produced a wrong number of roots for " + t.name());

    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = rs.cartan[i][j];
    rs.fundamental_weights = *inverse(a);
    return rs;
}

/// Shared, immutable root systems; one per simple type.
inline std::shared_ptr<const RootSystemData> root_system(SimpleType t) {
    static std::mutex mutex;
    static std::map<SimpleType, std::shared_ptr<const RootSystemData>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[t];
    if (!slot) slot = std::make_shared<const RootSystemData>(build_root_system(t));
    return slot;
}

/// A conjugacy class of parabolic subgroups: marked simple roots (1-based, Bourbaki).
struct ParabolicType {
    std::shared_ptr<const RootSystemData> root_system;
    std::vector<int> marked;

    SimpleType simple_type() const { return root_system->simple_type; }
    int rank() const { return root_system->rank(); }
    bool is_marked(int index1) const { return std::binary_search(marked.begin(), marked.end(), index1); }

    /// "A3:{1,3}"
    std::string label() const {
        std::ostringstream os;
        os << simple_type().name() << ":{";
        for (std::size_t i = 0; i < marked.size(); ++i) os << (i ? "," : "") << marked[i];
        os << '}';
        return os.str();
    }

    friend bool operator==(const ParabolicType& a, const ParabolicType& b) {
        return a.simple_type() == b.simple_type() && a.marked == b.marked;
    }
};

inline ParabolicType make_parabolic(SimpleType t, std::vector<int> marked) {
    std::sort(marked.begin(), marked.end());
    marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
    for (int m : marked)
        if (m < 1 || m > t.rank)
            throw Error(ErrorKind::InvalidMarking,
                        "marked root " + std::to_string(m) + " outside 1.." + std::to_string(t.rank));
    return {root_system(t), std::move(marked)};
}

/// Parses "A3:{1,3}" (braces optional, "{}" allowed).
inline ParabolicType parse_parabolic(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::ParseError, "parabolic '" + text + "' must look like TYPE:{i,j,...}");
    const SimpleType t = parse_simple_type(text.substr(0, colon));
    std::string body = text.substr(colon + 1);
    if (!body.empty() && body.front() == '{') {
        if (body.back() != '}') throw Error(ErrorKind::ParseError, "unbalanced braces in '" + text + "'");
        body = body.substr(1, body.size() - 2);
    }
    std::vector<int> marks;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.size() > 3 || !std::all_of(item.begin(), item.end(), ::isdigit))
            throw Error(ErrorKind::ParseError, "bad root index '" + item + "' in '" + text + "'");
        marks.push_back(std::stoi(item));
    }
    if (!body.empty() && body.back() == ',') throw Error(ErrorKind::ParseError, "trailing comma in '" + text + "'");
    return make_parabolic(t, std::move(marks));
}

inline ParabolicType borel(SimpleType t) {
    std::vector<int> all(t.rank);
    std::iota(all.begin(), all.end(), 1);
    return make_parabolic(t, all);
}

inline void require_marking(const ParabolicType& p) {
    if (p.marked.empty()) throw Error(ErrorKind::EmptyMarking, "parabolic " + p.label() + " has no marked roots");
}

/// Positive roots of the nilradical: those with a nonzero coefficient on a marked root.
inline std::vector<RootVector> nilradical_roots(const ParabolicType& p) {
    std::vector<RootVector> out;
    for (const auto& r : p.root_system->positive_roots)
        if (std::any_of(p.marked.begin(), p.marked.end(), [&](int m) { return r[m - 1] != 0; })) out.push_back(r);
    return out;
}

/// dim G/P.
inline int flag_dimension(const ParabolicType& p) {
    require_marking(p);
    return static_cast<int>(nilradical_roots(p).size());
}

struct CurveDivisorLattice {
    ParabolicType parabolic;
    /// Schubert curves C_alpha, alpha in I.
    std::vector<std::string> curve_basis;
    /// Fundamental weights varpi_alpha, alpha in I.
    std::vector<std::string> divisor_basis;
    /// pairing(b, c) = <varpi_{I[b]}, alpha_{I[c]}^vee>
    Matrix pairing;

    std::size_t rank() const { return curve_basis.size(); }
};

/// The same lattice serves the Springer map, its punctured restriction, and
/// the projectivised map; only the parabolic determines it.
inline CurveDivisorLattice curve_divisor_lattice(const ParabolicType& p) {
    require_marking(p);
    const auto& rs = *p.root_system;
    const std::size_t k = p.marked.size();
    CurveDivisorLattice lat{p, {}, {}, Matrix(k, k)};
    for (std::size_t b = 0; b < k; ++b) {
        lat.curve_basis.push_back("C" + std::to_string(p.marked[b]));
        lat.divisor_basis.push_back("varpi" + std::to_string(p.marked[b]));
        for (std::size_t c = 0; c < k; ++c) {
            const int beta = p.marked[b] - 1, gamma = p.marked[c] - 1;
            Rational s = 0;
            for (int j = 0; j < rs.rank(); ++j) s += rs.fundamental_weights(beta, j) * rs.cartan[j][gamma];
            lat.pairing(b, c) = s;
        }
    }
    return lat;
}

// ---------------------------------------------------------------------------
// Poincaré polynomials of G/P = W/W_L

/// Integer polynomial in q, coefficient of q^i at index i.
using Polynomial = std::vector<Integer>;

namespace detail {

inline void trim(Polynomial& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

inline Polynomial multiply(const Polynomial& a, const Polynomial& b) {
    Polynomial c(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

/// Exact division by a monic polynomial; throws if there is a remainder.
inline Polynomial divide_exact(Polynomial num, const Polynomial& den) {
    trim(num);
    const std::size_t dn = den.size() - 1;
    if (num.size() - 1 < dn) throw Error(ErrorKind::InvalidArgument, "polynomial division degree underflow");
    Polynomial q(num.size() - dn, Integer(0));
    for (std::size_t i = num.size(); i-- > dn;) {
        const Integer c = num[i];
        q[i - dn] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    for (const auto& r : num)
        if (r != 0) throw Error(ErrorKind::InvalidArgument, "polynomial division left a remainder");
    return q;
}

inline Polynomial q_integer(int m) { return Polynomial(static_cast<std::size_t>(m), Integer(1)); }

} // namespace detail

/// Length generating function of minimal coset representatives, via the
/// product prod_{alpha in Phi+ \ Phi_L} [ht(alpha)+1]_q / [ht(alpha)]_q.
inline Polynomial poincare_by_product(const ParabolicType& p) {
    Polynomial num{Integer(1)}, den{Integer(1)};
    for (const auto& r : nilradical_roots(p)) {
        const int h = RootSystemData::height(r);
        num = detail::multiply(num, detail::q_integer(h + 1));
        den = detail::multiply(den, detail::q_integer(h));
    }
    return detail::divide_exact(num, den);
}

/// Materializes W/W_L as the W-orbit of rho_I = sum of marked fundamental
/// weights; BFS depth from the dominant weight is the length of the minimal
/// coset representative.
inline Polynomial poincare_by_enumeration(const ParabolicType& p) {
    const auto& rs = *p.root_system;
    const int n = rs.rank();
    std::vector<int> start(n, 0);  // fundamental-weight coordinates
    for (int m : p.marked) start[m - 1] = 1;
    std::set<std::vector<int>> seen{start};
    std::vector<std::vector<int>> layer{start};
    Polynomial poly;
    while (!layer.empty()) {
        poly.emplace_back(static_cast<unsigned long>(layer.size()));
        std::vector<std::vector<int>> next;
        for (const auto& mu : layer) {
            for (int j = 0; j < n; ++j) {
                if (mu[j] <= 0) continue;
                std::vector<int> img = mu;
                for (int k = 0; k < n; ++k) img[k] -= mu[j] * rs.cartan[j][k];
                if (seen.insert(img).second) next.push_back(std::move(img));
            }
        }
        layer = std::move(next);
    }
    return poly;
}

/// Rank at or below which W/W_L is enumerated explicitly.
inline constexpr int kWeylEnumerationMaxRank = 6;

inline Polynomial poincare_polynomial(const ParabolicType& p) {
    return p.rank() <= kWeylEnumerationMaxRank ? poincare_by_enumeration(p) : poincare_by_product(p);
}

/// Degree of G/P in the embedding given by varpi = sum of marked fundamental weights:
/// dim! * prod_{alpha in Phi+ \ Phi_L} <varpi, alpha^vee> / <rho, alpha^vee>.
inline Integer embedding_degree(const ParabolicType& p) {
    require_marking(p);
    const auto& rs = *p.root_system;
    const auto roots = nilradical_roots(p);
    Rational prod = 1;
    for (const auto& r : roots) {
        const auto cv = rs.coroot(r);
        Rational w = 0, rho = 0;
        for (int j = 0; j < rs.rank(); ++j) {
            rho += cv[j];
            if (p.is_marked(j + 1)) w += cv[j];
        }
        prod *= w / rho;
    }
    for (std::size_t k = 2; k <= roots.size(); ++k) prod *= static_cast<unsigned long>(k);
    if (prod.get_den() != 1) throw Error(ErrorKind::InvalidArgument, "non-integral embedding degree");
    return prod.get_num();
}

enum class ProjectiveSpaceCriterion {
    /// Every Betti number b_{2i}, 0 <= 2i <= 2 dim, equals 1.
    PoincareAllOnes,
    /// All-ones Poincaré polynomial and degree 1 in the minimal embedding.
    PoincareAllOnesAndUnitDegree,
};

inline bool has_all_ones_poincare(const ParabolicType& p) {
    const auto poly = poincare_polynomial(p);
    return std::all_of(poly.begin(), poly.end(), [](const Integer& c) { return c == 1; });
}

inline bool is_projective_space(const ParabolicType& p,
                                ProjectiveSpaceCriterion criterion = ProjectiveSpaceCriterion::PoincareAllOnesAndUnitDegree) {
    require_marking(p);
    if (!has_all_ones_poincare(p)) return false;
    if (criterion == ProjectiveSpaceCriterion::PoincareAllOnes) return true;
    // all-ones forces b_2 = 1, so the marking is a single root here
    return embedding_degree(p) == 1;
}

} // namespace nilcontact
