#pragma once

// Exact matrix oracles over Q (and, for flag counting, over small prime
// fields). Everything here is computed from explicit matrices and never
// consults the combinatorial formulas it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "nilcontact/error.hpp"
#include "nilcontact/linalg.hpp"
#include "nilcontact/orbits.hpp"
#include "nilcontact/partitions.hpp"

namespace nilcontact::oracle {

/// Largest matrix size for ad-rank style oracles.
inline constexpr int kAdRankSizeCap = 8;
/// Largest matrix size for flag enumeration.
inline constexpr int kFiberSizeCap = 4;

struct MatrixModel {
    int n = 0;
    Matrix e;
    /// Basis of sl_n: E_ij (i != j) followed by E_ii - E_{i+1,i+1}.
    std::vector<Matrix> basis_g;
};

inline std::vector<Matrix> sl_basis(int n) {
    std::vector<Matrix> basis;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Matrix m(n, n);
            m(i, j) = 1;
            basis.push_back(std::move(m));
        }
    for (int i = 0; i + 1 < n; ++i) {
        Matrix m(n, n);
        m(i, i) = 1;
        m(i + 1, i + 1) = -1;
        basis.push_back(std::move(m));
    }
    return basis;
}

inline bool is_nilpotent(const Matrix& e) {
    Matrix p = e;
    for (std::size_t k = 1; k < e.rows(); ++k) p = p * e;
    return p.is_zero();
}

inline MatrixModel make_model(Matrix e) {
    if (e.rows() != e.cols() || e.rows() == 0) throw Error(ErrorKind::DimensionMismatch, "model matrix must be square");
    if (!is_nilpotent(e)) throw Error(ErrorKind::InvalidArgument, "model matrix is not nilpotent");
    const int n = static_cast<int>(e.rows());
    return {n, std::move(e), sl_basis(n)};
}

/// Block Jordan nilpotent of type lambda (superdiagonal ones inside each block).
inline Matrix jordan_matrix(const Partition& lambda) {
    const int n = total(lambda);
    Matrix e(n, n);
    int offset = 0;
    for (int block : lambda) {
        for (int i = 0; i + 1 < block; ++i) e(offset + i, offset + i + 1) = 1;
        offset += block;
    }
    return e;
}

inline MatrixModel jordan_nilpotent(const Partition& lambda, int size_cap = kAdRankSizeCap) {
    const int n = total(lambda);
    if (n > size_cap)
        throw Error(ErrorKind::SizeCap, "matrix size " + std::to_string(n) + " exceeds cap " + std::to_string(size_cap));
    if (n == 0) throw Error(ErrorKind::InvalidPartition, "empty partition");
    return make_model(jordan_matrix(canonical_partition(lambda)));
}

/// n^2 x (n^2 - 1) matrix of x -> [e, x] on the sl_n basis.
inline Matrix ad_matrix(const MatrixModel& m) {
    const std::size_t n2 = static_cast<std::size_t>(m.n) * m.n;
    Matrix ad(n2, m.basis_g.size());
    for (std::size_t j = 0; j < m.basis_g.size(); ++j) {
        const Matrix c = commutator(m.e, m.basis_g[j]);
        for (std::size_t i = 0; i < n2; ++i) ad(i, j) = c.flat()[i];
    }
    return ad;
}

/// dim [e, g] = dim of the orbit through e.
inline int addim(const MatrixModel& m) { return static_cast<int>(rank(ad_matrix(m))); }

/// tr(x y) without forming the product.
inline Rational trace_product(const Matrix& x, const Matrix& y) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < x.cols(); ++k)
            if (x(i, k) != 0 && y(k, i) != 0) s += x(i, k) * y(k, i);
    return s;
}

/// theta'_e([e, x]) = tr(e x), the trace-form stand-in for the Killing form.
inline Rational theta_prime(const Matrix& e, const Matrix& x) { return trace_product(e, x); }

/// Rank of (x, y) -> tr(e [x, y]) on sl_n.
inline int kks_rank(const MatrixModel& m) {
    const std::size_t d = m.basis_g.size();
    std::vector<Matrix> ad;
    ad.reserve(d);
    for (const auto& b : m.basis_g) ad.push_back(commutator(m.e, b));
    Matrix omega(d, d);
    // tr(e [x, y]) = tr([e, x] y)
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) omega(a, b) = trace_product(ad[a], m.basis_g[b]);
    return static_cast<int>(rank(omega));
}

struct ContactCheckResult {
    int dim_orbit = 0;
    int theta_kernel_dim = 0;
    int omega_rank_on_kernel = 0;
    bool radical_is_euler_line = false;
    /// tr(e z) vanishes on the centralizer, so theta' is a function of [e, x].
    bool theta_well_defined = false;

    bool nondegenerate() const {
        return theta_well_defined && omega_rank_on_kernel == dim_orbit - 2 && radical_is_euler_line;
    }
};

/// Linearized contact condition at e: restrict the KKS form to the kernel of
/// theta' inside T_e O and check that its radical is exactly the line through e.
inline ContactCheckResult contact_check(const MatrixModel& m) {
    if (m.e.is_zero()) throw Error(ErrorKind::ZeroElement, "contact check needs a nonzero nilpotent");
    const Matrix ad = ad_matrix(m);
    const auto pivots = independent_columns(ad);
    const std::size_t dim = pivots.size();

    ContactCheckResult res;
    res.dim_orbit = static_cast<int>(dim);

    res.theta_well_defined = true;
    for (const auto& z : nullspace(ad)) {
        Rational v = 0;
        for (std::size_t j = 0; j < z.size(); ++j)
            if (z[j] != 0) v += z[j] * theta_prime(m.e, m.basis_g[j]);
        if (v != 0) res.theta_well_defined = false;
    }

    // T_e O has basis w_k = [e, x_k] with x_k the pivot basis elements
    std::vector<const Matrix*> pre;
    for (auto p : pivots) pre.push_back(&m.basis_g[p]);
    Matrix theta(1, dim);
    Matrix omega(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
        theta(0, k) = theta_prime(m.e, *pre[k]);
        const Matrix w = commutator(m.e, *pre[k]);
        for (std::size_t l = 0; l < dim; ++l) omega(k, l) = trace_product(w, *pre[l]);
    }

    const auto kernel = nullspace(theta);
    res.theta_kernel_dim = static_cast<int>(kernel.size());
    const Matrix kbasis = Matrix::from_columns(kernel, dim);
    const Matrix restricted = kbasis.transpose() * omega * kbasis;
    res.omega_rank_on_kernel = static_cast<int>(rank(restricted));

    Matrix tangent(ad.rows(), dim);
    for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t i = 0; i < ad.rows(); ++i) tangent(i, k) = ad(i, pivots[k]);
    const auto euler = solve(tangent, m.e.flat());
    const auto radical = nullspace(restricted);
    if (euler && !is_zero(*euler) && radical.size() == 1) {
        const Vector r = (kbasis * Matrix::from_columns(radical, kernel.size())).column(0);
        res.radical_is_euler_line = rank(Matrix::from_columns({r, *euler}, dim)) == 1;
    }
    return res;
}

// ---------------------------------------------------------------------------
// Randomness: every oracle call owns its generator, seeded explicitly.

class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

    Rational next() {
        // a wide range keeps the chance of landing on a degenerate locus small
        std::uniform_int_distribution<int> num(-1000, 1000);
        std::uniform_int_distribution<int> den(1, 100);
        Rational q(num(rng_), den(rng_));
        q.canonicalize();
        return q;
    }

    Rational next_nonzero() {
        for (;;) {
            Rational q = next();
            if (q != 0) return q;
        }
    }

private:
    std::mt19937_64 rng_;
};

/// A random invertible rational matrix.
inline Matrix random_invertible(int n, std::uint64_t seed) {
    RationalSampler s(seed);
    for (;;) {
        Matrix g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g(i, j) = s.next();
        if (rank(g) == static_cast<std::size_t>(n)) return g;
    }
}

/// g e g^{-1} for a seeded random g.
inline MatrixModel random_conjugate(const MatrixModel& m, std::uint64_t seed) {
    const Matrix g = random_invertible(m.n, seed);
    return make_model(g * m.e * *inverse(g));
}

/// Jordan type of a nilpotent matrix from the ranks of its powers.
inline Partition jordan_type(const Matrix& x) {
    if (!is_nilpotent(x)) throw Error(ErrorKind::InvalidArgument, "jordan_type needs a nilpotent matrix");
    Partition dual;
    std::size_t prev = x.rows();
    Matrix power = x;
    while (prev > 0) {
        const std::size_t r = rank(power);
        dual.push_back(static_cast<int>(prev - r));
        prev = r;
        power = power * x;
    }
    return dual_partition(dual);
}

/// Random element of the nilradical of the block upper-triangular parabolic with block sizes c.
inline Matrix random_nilradical_element(const Composition& c, std::uint64_t seed) {
    const int n = total(c);
    std::vector<int> block_of;
    for (std::size_t b = 0; b < c.size(); ++b)
        for (int k = 0; k < c[b]; ++k) block_of.push_back(static_cast<int>(b));
    RationalSampler s(seed);
    Matrix x(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (block_of[i] < block_of[j]) x(i, j) = s.next_nonzero();
    return x;
}

struct GenericJordanResult {
    Partition partition;
    std::vector<std::uint64_t> seeds;
    std::vector<Partition> observed;
    /// All samples produced the same Jordan type.
    bool agreed = false;
};

inline constexpr int kGenericSamples = 3;

/// Jordan type of a generic nilradical element: three seeded samples, the
/// dominance-maximal observation wins.
inline GenericJordanResult generic_jordan_type(const Composition& c, std::uint64_t seed, int size_cap = kAdRankSizeCap) {
    const int n = total(c);
    if (n > size_cap)
        throw Error(ErrorKind::SizeCap, "matrix size " + std::to_string(n) + " exceeds cap " + std::to_string(size_cap));
    if (c.empty() || std::any_of(c.begin(), c.end(), [](int p) { return p <= 0; }))
        throw Error(ErrorKind::InvalidArgument, "composition parts must be positive");
    GenericJordanResult res;
    for (int k = 0; k < kGenericSamples; ++k) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(k);
        res.seeds.push_back(s);
        res.observed.push_back(jordan_type(random_nilradical_element(c, s)));
    }
    res.partition = res.observed.front();
    for (const auto& p : res.observed)
        if (dominates(p, res.partition) && p != res.partition) res.partition = p;
    res.agreed = std::all_of(res.observed.begin(), res.observed.end(), [&](const Partition& p) { return p == res.partition; });
    return res;
}

// ---------------------------------------------------------------------------
// Flag enumeration over F_p

namespace detail {

using ModRow = std::vector<int>;

inline int mod(long long a, int p) { return static_cast<int>(((a % p) + p) % p); }

inline int inv_mod(int a, int p) {
    int r = 1;
    for (int e = p - 2, b = a; e > 0; e >>= 1, b = static_cast<int>(1LL * b * b % p))
        if (e & 1) r = static_cast<int>(1LL * r * b % p);
    return r;
}

inline int rank_mod(std::vector<ModRow> rows, int p) {
    if (rows.empty()) return 0;
    const std::size_t C = rows[0].size();
    int r = 0;
    for (std::size_t col = 0; col < C && r < static_cast<int>(rows.size()); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        const int inv = inv_mod(rows[r][col], p);
        for (auto& x : rows[r]) x = static_cast<int>(1LL * x * inv % p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == r || rows[i][col] == 0) continue;
            const int f = rows[i][col];
            for (std::size_t j = 0; j < C; ++j) rows[i][j] = mod(rows[i][j] - 1LL * f * rows[r][j], p);
        }
        ++r;
    }
    return r;
}

/// All d-dimensional subspaces of F_p^n, each as its reduced echelon basis.
inline std::vector<std::vector<ModRow>> subspaces(int n, int d, int p) {
    std::vector<std::vector<ModRow>> out;
    std::vector<int> pivots;
    std::function<void(int)> choose = [&](int from) {
        if (static_cast<int>(pivots.size()) == d) {
            std::vector<std::pair<int, int>> free;  // (row, col) slots left open by the echelon shape
            for (int r = 0; r < d; ++r)
                for (int col = pivots[r] + 1; col < n; ++col)
                    if (std::find(pivots.begin(), pivots.end(), col) == pivots.end()) free.emplace_back(r, col);
            std::vector<int> vals(free.size(), 0);
            for (;;) {
                std::vector<ModRow> basis(d, ModRow(n, 0));
                for (int r = 0; r < d; ++r) basis[r][pivots[r]] = 1;
                for (std::size_t k = 0; k < free.size(); ++k) basis[free[k].first][free[k].second] = vals[k];
                out.push_back(std::move(basis));
                std::size_t k = 0;
                while (k < vals.size() && ++vals[k] == p) vals[k++] = 0;
                if (k == vals.size()) break;
            }
            return;
        }
        for (int col = from; col < n; ++col) {
            pivots.push_back(col);
            choose(col + 1);
            pivots.pop_back();
        }
    };
    choose(0);
    return out;
}

inline ModRow apply(const std::vector<ModRow>& e, const ModRow& v, int p) {
    ModRow w(v.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
        long long s = 0;
        for (std::size_t j = 0; j < v.size(); ++j) s += 1LL * e[i][j] * v[j];
        w[i] = mod(s, p);
    }
    return w;
}

/// span(small) is inside span(big)
inline bool contained(const std::vector<ModRow>& small, const std::vector<ModRow>& big, int p) {
    if (small.empty()) return true;
    std::vector<ModRow> joined = big;
    joined.insert(joined.end(), small.begin(), small.end());
    return rank_mod(joined, p) == rank_mod(big, p);
}

inline long long count_flags_mod(const std::vector<ModRow>& e, const Composition& c, int p) {
    const int n = total(c);
    std::vector<int> dims{0};
    for (int part : c) dims.push_back(dims.back() + part);
    std::map<int, std::vector<std::vector<ModRow>>> by_dim;
    for (std::size_t i = 1; i + 1 < dims.size(); ++i)
        if (!by_dim.count(dims[i])) by_dim[dims[i]] = subspaces(n, dims[i], p);

    std::vector<ModRow> whole(n, ModRow(n, 0));
    for (int i = 0; i < n; ++i) whole[i][i] = 1;

    auto image = [&](const std::vector<ModRow>& basis) {
        std::vector<ModRow> img;
        for (const auto& v : basis) img.push_back(apply(e, v, p));
        return img;
    };

    // V_k = F^n; choose V_{i} inside V_{i+1} containing e V_{i+1}; finally e V_1 = 0
    std::function<long long(std::size_t, const std::vector<ModRow>&)> rec = [&](std::size_t level,
                                                                                const std::vector<ModRow>& upper) -> long long {
        const auto img = image(upper);
        if (level == 0) return rank_mod(img, p) == 0 ? 1 : 0;
        long long count = 0;
        for (const auto& cand : by_dim[dims[level]])
            if (contained(cand, upper, p) && contained(img, cand, p)) count += rec(level - 1, cand);
        return count;
    };
    return rec(dims.size() - 2, whole);
}

} // namespace detail

inline constexpr int kFiberPrimes[] = {5, 7};

/// Number of partial flags of type c with e V_i inside V_{i-1}, counted as
/// F_p-points for two primes. Equal counts mean a finite fiber; that count is
/// the Springer-map degree. e must be an integer nilpotent matrix.
inline long long fiber_count_for(const Matrix& e, const Composition& c) {
    const int n = total(c);
    if (n > kFiberSizeCap)
        throw Error(ErrorKind::SizeCap, "flag enumeration capped at size " + std::to_string(kFiberSizeCap));
    if (static_cast<int>(e.rows()) != n) throw Error(ErrorKind::DimensionMismatch, "matrix size differs from composition total");
    std::vector<long long> counts;
    for (int p : kFiberPrimes) {
        std::vector<detail::ModRow> em(n, detail::ModRow(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (e(i, j).get_den() != 1) throw Error(ErrorKind::InvalidArgument, "fiber count needs an integer matrix");
                em[i][j] = detail::mod(e(i, j).get_num().get_si(), p);
            }
        counts.push_back(detail::count_flags_mod(em, c, p));
    }
    if (std::adjacent_find(counts.begin(), counts.end(), std::not_equal_to<>()) != counts.end())
        throw Error(ErrorKind::NonFiniteFiber, "flag counts vary with the prime; the fiber has positive dimension");
    return counts.front();
}

/// Springer fiber cardinality over a point of the orbit found by generic_jordan_type(c).
inline long long generic_fiber_count(const Composition& c, std::uint64_t seed = 1) {
    if (total(c) > kFiberSizeCap)
        throw Error(ErrorKind::SizeCap, "flag enumeration capped at size " + std::to_string(kFiberSizeCap));
    const auto generic = generic_jordan_type(c, seed);
    return fiber_count_for(jordan_matrix(generic.partition), c);
}

// ---------------------------------------------------------------------------
// Classical matrix models (so and sp); extension beyond sl_n used to
// cross-check the B, C, D dimension formulas.

struct ClassicalModel {
    Matrix form;  // Gram matrix of the invariant bilinear form
    Matrix e;     // nilpotent, skew-adjoint for the form
};

/// Nilpotent of type lambda inside so_N (symmetric form) or sp_N (skew form).
inline ClassicalModel classical_nilpotent(Family f, const Partition& lambda) {
    if (f != Family::B && f != Family::C && f != Family::D)
        throw Error(ErrorKind::UnsupportedType, "classical model only for B, C, D");
    const bool symmetric = f != Family::C;
    const int n = total(lambda);
    ClassicalModel m{Matrix(n, n), Matrix(n, n)};
    // single blocks carry a form of the right symmetry when size is odd (symmetric) or even (skew)
    const int self_dual_parity = symmetric ? 1 : 0;
    std::map<int, int, std::greater<>> mult;
    for (int p : lambda) ++mult[p];
    int offset = 0;
    for (const auto& [size, count] : mult) {
        if (size % 2 == self_dual_parity) {
            for (int rep = 0; rep < count; ++rep) {
                for (int i = 0; i + 1 < size; ++i) m.e(offset + i, offset + i + 1) = 1;
                for (int i = 1; i <= size; ++i) m.form(offset + i - 1, offset + size - i) = (i % 2 == 0) ? 1 : -1;
                offset += size;
            }
        } else {
            if (count % 2 != 0) throw Error(ErrorKind::InvalidPartition, "unpaired part in classical model");
            for (int rep = 0; rep < count / 2; ++rep) {
                for (int i = 0; i + 1 < size; ++i) {
                    m.e(offset + i, offset + i + 1) = 1;
                    m.e(offset + size + i + 1, offset + size + i) = -1;  // -J^T on the dual block
                }
                for (int i = 0; i < size; ++i) {
                    m.form(offset + i, offset + size + i) = 1;
                    m.form(offset + size + i, offset + i) = symmetric ? 1 : -1;
                }
                offset += 2 * size;
            }
        }
    }
    return m;
}

/// dim g and dim of the orbit of e, with g = {X : X^T F + F X = 0}.
struct ClassicalDimensions {
    int dim_algebra = 0;
    int dim_orbit = 0;
};

inline ClassicalDimensions classical_orbit_dimensions(const ClassicalModel& m) {
    const int n = static_cast<int>(m.e.rows());
    if (n > kAdRankSizeCap) throw Error(ErrorKind::SizeCap, "classical model exceeds size cap");
    const Matrix skew = m.e.transpose() * m.form + m.form * m.e;
    if (!skew.is_zero()) throw Error(ErrorKind::InvalidArgument, "model element is not in the algebra");
    const int N2 = n * n;
    auto var = [n](int a, int b) { return static_cast<std::size_t>(a * n + b); };
    Matrix in_algebra(N2, N2);
    Matrix commuting(N2, N2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const std::size_t row = var(i, j);
            for (int k = 0; k < n; ++k) {
                in_algebra(row, var(k, i)) += m.form(k, j);
                in_algebra(row, var(k, j)) += m.form(i, k);
                commuting(row, var(k, j)) += m.e(i, k);
                commuting(row, var(i, k)) -= m.e(k, j);
            }
        }
    Matrix both(2 * N2, N2);
    for (int r = 0; r < N2; ++r)
        for (int c = 0; c < N2; ++c) {
            both(r, c) = in_algebra(r, c);
            both(N2 + r, c) = commuting(r, c);
        }
    const int dim_g = N2 - static_cast<int>(rank(in_algebra));
    const int dim_z = N2 - static_cast<int>(rank(both));
    return {dim_g, dim_g - dim_z};
}

/// Orbit dimension of a classical-type label from its matrix model.
inline int matrix_orbit_dimension(const OrbitLabel& o) {
    if (!o.is_partition()) throw Error(ErrorKind::UnsupportedType, "no matrix model for exceptional types");
    if (o.simple_type.family == Family::A) return addim(jordan_nilpotent(o.partition()));
    return classical_orbit_dimensions(classical_nilpotent(o.simple_type.family, o.partition())).dim_orbit;
}

} // namespace nilcontact::oracle
