#pragma once

// Exact rational polyhedral cones (naive double description) and the
// chamber complex of a movable cone.

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <string>
#include <vector>

#include "nilcontact/error.hpp"
#include "nilcontact/lie_core.hpp"
#include "nilcontact/linalg.hpp"
#include "nilcontact/orbits.hpp"
#include "nilcontact/partitions.hpp"

namespace nilcontact {

/// Cones live in ambient dimension at most this.
inline constexpr int kConeMaxDimension = 8;

namespace detail {

/// Canonical basis of a subspace: reduced echelon rows, each scaled to a
/// primitive integer vector.
inline std::vector<Vector> canonical_subspace_basis(const std::vector<Vector>& spanning, std::size_t dim) {
    if (spanning.empty()) return {};
    const auto [red, pivots] = rref(Matrix::from_rows(spanning, dim));
    std::vector<Vector> out;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        const auto row = red.row(k);
        out.push_back(primitive_integer(Vector(row.begin(), row.end())));
    }
    return out;
}

inline Vector negate(Vector v) {
    for (auto& x : v) x = -x;
    return v;
}

/// Vector in span(basis) orthogonal to every vector of `orth`; caller guarantees a 1-dim solution space.
inline std::vector<Vector> span_intersect_orth(const std::vector<Vector>& basis, const std::vector<Vector>& orth,
                                               std::size_t dim) {
    // y = sum a_i basis_i, constraints <y, o> = 0
    Matrix constraints(orth.size(), basis.size());
    for (std::size_t r = 0; r < orth.size(); ++r)
        for (std::size_t i = 0; i < basis.size(); ++i) constraints(r, i) = dot(basis[i], orth[r]);
    std::vector<Vector> out;
    for (const auto& coeffs : nullspace(constraints)) {
        Vector y(dim);
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (coeffs[i] != 0)
                for (std::size_t j = 0; j < dim; ++j) y[j] += coeffs[i] * basis[i][j];
        out.push_back(std::move(y));
    }
    return out;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (idx.size() == k) {
            fn(idx);
            return;
        }
        for (std::size_t i = from; i + (k - idx.size()) <= n; ++i) {
            idx.push_back(i);
            rec(i + 1);
            idx.pop_back();
        }
    };
    rec(0);
}

inline std::size_t rank_of(const std::vector<Vector>& vs, std::size_t dim) {
    return vs.empty() ? 0 : rank(Matrix::from_rows(vs, dim));
}

} // namespace detail

/// A closed rational polyhedral cone {x : <f, x> >= 0 for facets f, <e, x> = 0 for equations e}
/// = span(lineality) + cone(rays). All stored vectors are primitive integer
/// vectors in sorted order, so two cones are equal iff their members are.
class RationalCone {
public:
    static RationalCone from_generators(int ambient_dim, const std::vector<Vector>& gens) {
        if (ambient_dim < 0 || ambient_dim > kConeMaxDimension)
            throw Error(ErrorKind::SizeCap, "cone ambient dimension must be in 0.." + std::to_string(kConeMaxDimension));
        const std::size_t d = static_cast<std::size_t>(ambient_dim);
        std::vector<Vector> g;
        for (const auto& v : gens) {
            if (v.size() != d) throw Error(ErrorKind::DimensionMismatch, "generator length differs from ambient dimension");
            if (is_zero(v)) continue;
            Vector p = primitive_integer(v);
            if (std::find(g.begin(), g.end(), p) == g.end()) g.push_back(std::move(p));
        }

        RationalCone c;
        c.dim_ = ambient_dim;
        const auto span_basis = detail::canonical_subspace_basis(g, d);
        const std::size_t r = span_basis.size();
        {
            std::vector<Vector> orth = g.empty() ? std::vector<Vector>{} : nullspace(Matrix::from_rows(g, d));
            if (g.empty())
                for (std::size_t i = 0; i < d; ++i) {
                    Vector e(d);
                    e[i] = 1;
                    orth.push_back(std::move(e));
                }
            c.equations_ = detail::canonical_subspace_basis(orth, d);
        }
        if (r == 0) return c;

        // facets: normals inside span(g), orthogonal to r-1 independent generators,
        // nonnegative on every generator
        detail::for_each_subset(g.size(), r - 1, [&](const std::vector<std::size_t>& idx) {
            std::vector<Vector> sub;
            for (auto i : idx) sub.push_back(g[i]);
            if (detail::rank_of(sub, d) != r - 1) return;
            const auto sol = detail::span_intersect_orth(span_basis, sub, d);
            if (sol.size() != 1) return;
            Vector y = primitive_integer(sol.front());
            bool pos = false, neg = false;
            for (const auto& v : g) {
                const Rational s = dot(y, v);
                pos |= s > 0;
                neg |= s < 0;
            }
            if (pos && neg) return;
            if (neg) y = detail::negate(std::move(y));
            if (std::find(c.facets_.begin(), c.facets_.end(), y) == c.facets_.end()) c.facets_.push_back(std::move(y));
        });
        std::sort(c.facets_.begin(), c.facets_.end());

        const auto lin = detail::span_intersect_orth(span_basis, c.facets_, d);
        c.lineality_ = detail::canonical_subspace_basis(lin, d);
        const std::size_t l = c.lineality_.size();

        // extreme rays modulo the lineality space, represented orthogonally to it
        for (const auto& v : g) {
            std::vector<Vector> tight;
            for (const auto& f : c.facets_)
                if (dot(f, v) == 0) tight.push_back(f);
            if (l > 0) {
                auto with_v = c.lineality_;
                with_v.push_back(v);
                if (detail::rank_of(with_v, d) == l) continue;  // v lies in the lineality space
            }
            if (detail::rank_of(tight, d) + l + 1 != r) continue;
            Vector ray = primitive_integer(c.project_off_lineality(v));
            if (std::find(c.rays_.begin(), c.rays_.end(), ray) == c.rays_.end()) c.rays_.push_back(std::move(ray));
        }
        std::sort(c.rays_.begin(), c.rays_.end());
        return c;
    }

    int ambient_dim() const noexcept { return dim_; }
    const std::vector<Vector>& rays() const noexcept { return rays_; }
    const std::vector<Vector>& lineality() const noexcept { return lineality_; }
    const std::vector<Vector>& facet_normals() const noexcept { return facets_; }
    const std::vector<Vector>& equations() const noexcept { return equations_; }

    /// Dimension of the linear span.
    int dimension() const noexcept { return dim_ - static_cast<int>(equations_.size()); }
    bool is_pointed() const noexcept { return lineality_.empty(); }
    bool is_simplicial() const noexcept {
        return is_pointed() && static_cast<int>(rays_.size()) == dimension();
    }

    /// Rays followed by +/- the lineality basis.
    std::vector<Vector> generators() const {
        std::vector<Vector> g = rays_;
        for (const auto& v : lineality_) {
            g.push_back(v);
            g.push_back(detail::negate(v));
        }
        return g;
    }

    bool contains(const Vector& x) const {
        if (x.size() != static_cast<std::size_t>(dim_)) throw Error(ErrorKind::DimensionMismatch, "point has wrong length");
        for (const auto& e : equations_)
            if (dot(e, x) != 0) return false;
        for (const auto& f : facets_)
            if (dot(f, x) < 0) return false;
        return true;
    }

    friend bool operator==(const RationalCone& a, const RationalCone& b) {
        return a.dim_ == b.dim_ && a.rays_ == b.rays_ && a.lineality_ == b.lineality_ && a.equations_ == b.equations_;
    }

private:
    Vector project_off_lineality(const Vector& v) const {
        if (lineality_.empty()) return v;
        const std::size_t d = static_cast<std::size_t>(dim_), l = lineality_.size();
        Matrix gram(l, l);
        Vector rhs(l);
        for (std::size_t i = 0; i < l; ++i) {
            rhs[i] = dot(lineality_[i], v);
            for (std::size_t j = 0; j < l; ++j) gram(i, j) = dot(lineality_[i], lineality_[j]);
        }
        const Vector coeff = *solve(gram, rhs);
        Vector out = v;
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < d; ++j) out[j] -= coeff[i] * lineality_[i][j];
        return out;
    }

    int dim_ = 0;
    std::vector<Vector> rays_;
    std::vector<Vector> lineality_;
    std::vector<Vector> facets_;
    std::vector<Vector> equations_;
};

inline RationalCone cone_from_generators(int ambient_dim, const std::vector<Vector>& gens) {
    return RationalCone::from_generators(ambient_dim, gens);
}

/// {y : <y, x> >= 0 for all x in c}
inline RationalCone dual_cone(const RationalCone& c) {
    std::vector<Vector> gens = c.facet_normals();
    for (const auto& e : c.equations()) {
        gens.push_back(e);
        gens.push_back(detail::negate(e));
    }
    return RationalCone::from_generators(c.ambient_dim(), gens);
}

/// {x : <f, x> >= 0, <e, x> = 0}; the inverse direction of the double description.
inline RationalCone cone_from_inequalities(int ambient_dim, const std::vector<Vector>& normals,
                                           const std::vector<Vector>& equations = {}) {
    std::vector<Vector> gens = normals;
    for (const auto& e : equations) {
        gens.push_back(e);
        gens.push_back(detail::negate(e));
    }
    return dual_cone(RationalCone::from_generators(ambient_dim, gens));
}

inline std::vector<Vector> unit_vectors(std::size_t dim) {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < dim; ++i) {
        Vector e(dim);
        e[i] = 1;
        out.push_back(std::move(e));
    }
    return out;
}

/// Relative ample cone of T*(G/P) (and of its punctured and projectivised
/// versions), in the varpi_alpha basis: the dual of the Schubert-curve cone
/// under the curve/divisor pairing.
inline RationalCone ample_cone(const ParabolicType& p) {
    const auto lattice = curve_divisor_lattice(p);
    const std::size_t k = lattice.rank();
    // a divisor D pairs with curve C as D^T P C, so D must be nonnegative on every P C_i
    std::vector<Vector> paired;
    for (const auto& c : unit_vectors(k)) {
        Vector pc(k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) pc[i] += lattice.pairing(i, j) * c[j];
        paired.push_back(std::move(pc));
    }
    return dual_cone(cone_from_generators(static_cast<int>(k), paired));
}

/// The effective curve cone NE(G/P) in the Schubert-curve basis.
inline RationalCone curve_cone(const ParabolicType& p) {
    const auto lattice = curve_divisor_lattice(p);
    return cone_from_generators(static_cast<int>(lattice.rank()), unit_vectors(lattice.rank()));
}

// ---------------------------------------------------------------------------
// Chamber complexes

struct Chamber {
    std::string label;
    ParabolicType parabolic;
    /// Block sizes in type A; empty otherwise.
    Composition composition;
    /// In this chamber's own varpi basis.
    RationalCone ample_cone;
};

/// Swap of the entries at positions (position, position + 1) of chamber_a's
/// composition, which yields chamber_b's.
struct Wall {
    std::size_t chamber_a = 0;
    std::size_t chamber_b = 0;
    int position = 0;
    int left = 0;
    int right = 0;
};

struct ChamberComplex {
    OrbitLabel orbit;
    std::vector<Chamber> chambers;
    std::vector<Wall> walls;
    /// Adjacent chambers are glued combinatorially only; no common linear
    /// embedding of all ample cones is constructed.
    bool linear_gluing_implemented = false;

    std::size_t degree(std::size_t chamber) const {
        return static_cast<std::size_t>(std::count_if(walls.begin(), walls.end(), [&](const Wall& w) {
            return w.chamber_a == chamber || w.chamber_b == chamber;
        }));
    }

    bool is_connected() const {
        if (chambers.empty()) return false;
        std::vector<bool> seen(chambers.size(), false);
        std::queue<std::size_t> q;
        q.push(0);
        seen[0] = true;
        while (!q.empty()) {
            const auto c = q.front();
            q.pop();
            for (const auto& w : walls) {
                const std::size_t other = w.chamber_a == c ? w.chamber_b : w.chamber_b == c ? w.chamber_a : c;
                if (!seen[other]) {
                    seen[other] = true;
                    q.push(other);
                }
            }
        }
        return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    }
};

/// Type A_{n-1}: parabolic with block sizes c (marking = partial sums).
inline ParabolicType parabolic_of_composition(const Composition& c) {
    const int n = total(c);
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "composition must sum to at least 2");
    std::vector<int> marks;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) marks.push_back(acc += c[i]);
    return make_parabolic(make_type(Family::A, n - 1), marks);
}

/// Type A block sizes of a parabolic.
inline Composition composition_of(const ParabolicType& p) {
    if (p.simple_type().family != Family::A) throw Error(ErrorKind::UnsupportedType, "compositions describe type A parabolics only");
    Composition c;
    int prev = 0;
    for (int m : p.marked) {
        c.push_back(m - prev);
        prev = m;
    }
    c.push_back(p.rank() + 1 - prev);
    return c;
}

/// Chambers from a nonempty list of equivalent parabolics; walls join type A
/// compositions that differ by one adjacent transposition of distinct entries.
inline ChamberComplex build_chamber_complex(const OrbitLabel& orbit, const std::vector<ParabolicType>& parabolics) {
    if (parabolics.empty()) throw Error(ErrorKind::NoPolarization, orbit.text() + " has no polarization");
    ChamberComplex cx;
    cx.orbit = orbit;
    for (const auto& p : parabolics) {
        Chamber ch{p.label(), p, {}, ample_cone(p)};
        if (p.simple_type().family == Family::A) ch.composition = composition_of(p);
        cx.chambers.push_back(std::move(ch));
    }
    if (orbit.simple_type.family == Family::A) {
        std::map<Composition, std::size_t> index;
        for (std::size_t i = 0; i < cx.chambers.size(); ++i) index[cx.chambers[i].composition] = i;
        for (std::size_t i = 0; i < cx.chambers.size(); ++i) {
            const auto& c = cx.chambers[i].composition;
            for (std::size_t pos = 0; pos + 1 < c.size(); ++pos) {
                if (c[pos] == c[pos + 1]) continue;
                Composition swapped = c;
                std::swap(swapped[pos], swapped[pos + 1]);
                const auto it = index.find(swapped);
                if (it == index.end() || it->second < i) continue;
                cx.walls.push_back({i, it->second, static_cast<int>(pos), c[pos], c[pos + 1]});
            }
        }
    }
    if (!cx.is_connected())
        throw Error(ErrorKind::InvalidArgument, "chamber complex of " + orbit.text() + " is disconnected");
    return cx;
}

} // namespace nilcontact
