#pragma once

// Kronecker canonical structure of a matrix pencil (A, B), i.e. of the
// representation of the double-arrow quiver, under (A, B) -> (R^-1 A S,
// R^-1 B S).
//
// Exact route: finite elementary divisors from the Smith form of xA - B,
// infinite ones from the x-power divisors of xB - A, minimal indices from
// nullities of the block-Toeplitz stack of the pencil.
//
// Float route: the same rank data read with tolerant SVD ranks; eigenvalue
// candidates come from two independent random compressions of the pencil and
// are kept only where the full pencil genuinely drops rank.

#include "qmx/canon_basic.hpp"

namespace qmx {
namespace detail {

// T_j: coefficient stacks of P(x) v(x) for v of degree < j, P(x) = xA - B.
// ((j+1)m x jn), block column i carrying -B at row block i and A at i+1.
template <class K>
Matrix<K> pencil_toeplitz(const Matrix<K>& a, const Matrix<K>& b, int j) {
    const int m = a.rows(), n = a.cols();
    Matrix<K> t((j + 1) * m, j * n);
    for (int i = 0; i < j; ++i) {
        t.set_block(i * m, i * n, -b);
        t.set_block((i + 1) * m, i * n, a);
    }
    return t;
}

// multiset of column minimal indices (an index d means a block with d+1
// columns); s_expected = n - normal_rank when known (-1 otherwise)
template <class K>
std::vector<int> column_minimal_indices(const Matrix<K>& a, const Matrix<K>& b,
                                        int s_expected, double tol) {
    const int n = a.cols();
    std::vector<int> nullity{0};
    for (int j = 1; j <= n + 2; ++j) {
        Matrix<K> t = pencil_toeplitz(a, b, j);
        int nl;
        if constexpr (FT<K>::exact)
            nl = j * n - rank(t, tol);
        else
            nl = j * n - svd_rank(t, tol);
        nullity.push_back(nl);
        // #{indices <= j-1} is nondecreasing and capped by s_expected
        if (nullity[j] - nullity[j - 1] == s_expected) break;
        if (j == n + 2)
            fail("internal-inconsistency", "minimal index extraction did not stabilize");
    }
    std::vector<int> indices;
    for (size_t d = 0; d + 1 < nullity.size(); ++d) {
        int le_d = nullity[d + 1] - nullity[d];
        int le_dm1 = d > 0 ? nullity[d] - nullity[d - 1] : 0;
        for (int c = 0; c < le_d - le_dm1; ++c) indices.push_back((int)d);
    }
    return indices;
}

inline int x_multiplicity(const Poly<Rat>& p) {
    for (int k = 0; k <= p.degree(); ++k)
        if (!(p.coeff(k) == 0)) return k;
    return -1;
}
inline int x_multiplicity(const Poly<GaussRat>& p) {
    for (int k = 0; k <= p.degree(); ++k)
        if (!p.coeff(k).is_zero()) return k;
    return -1;
}

template <class K>
void pencil_bookkeeping(const Decomposition<K>& d, int m, int n) {
    int rows = 0, cols = 0;
    for (auto& b : d.blocks) {
        auto [r, c] = block_shape(b);
        rows += r;
        cols += c;
    }
    if (rows != m || cols != n)
        fail("internal-inconsistency", "pencil blocks do not tile the input dimensions");
}

template <class K>
Decomposition<K> canon_pencil_exact(const Matrix<K>& a, const Matrix<K>& b) {
    const int m = a.rows(), n = a.cols();
    Decomposition<K> d{Problem::Pencil, {}};

    auto inv1 = smith_invariant_factors(pencil_matrix(a, b));  // xA - B
    int r = 0;
    for (auto& f : inv1)
        if (!f.is_zero()) ++r;
    for (auto& f : inv1)
        if (!f.is_zero() && f.degree() >= 1)
            for (auto& q : elementary_divisors<K>({f})) d.blocks.push_back(Block<K>::pencil_reg(q));

    auto inv2 = smith_invariant_factors(pencil_matrix(b, a));  // xB - A
    for (auto& f : inv2) {
        if (f.is_zero()) continue;
        int s = x_multiplicity(f);
        if (s > 0) d.blocks.push_back(Block<K>::pencil(BlockKind::PenNilpotentPair, s));
    }

    for (int idx : column_minimal_indices(a, b, n - r, 0))
        d.blocks.push_back(Block<K>::pencil(BlockKind::PenColMin, idx + 1));
    for (int idx : column_minimal_indices(a.transpose(), b.transpose(), m - r, 0))
        d.blocks.push_back(Block<K>::pencil(BlockKind::PenRowMin, idx + 1));

    pencil_bookkeeping(d, m, n);
    d.sort();
    return d;
}

// deterministic pseudo-random complex entries for compressions
inline Matrix<Cplx> hash_matrix(int rows, int cols, uint64_t seed) {
    Matrix<Cplx> m(rows, cols);
    uint64_t s = seed * 0x9e3779b97f4a7c15ULL + 12345;
    auto next = [&s]() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return (double)(s % 2000001) / 1000000.0 - 1.0;
    };
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = Cplx(next(), next());
    return m;
}

inline int pencil_rank_at(const Matrix<Cplx>& a, const Matrix<Cplx>& b, const Cplx& x,
                          double tol) {
    Matrix<Cplx> p = a;
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p.cols(); ++j) p.at(i, j) = x * a.at(i, j) - b.at(i, j);
    return svd_rank(p, tol);
}

// nullity of E_k at a finite eigenvalue of xA - B (diag P(lambda), subdiag A)
inline int ek_nullity(const Matrix<Cplx>& a, const Matrix<Cplx>& b, const Cplx& lam, int k,
                      double tol) {
    const int m = a.rows(), n = a.cols();
    Matrix<Cplx> p(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) p.at(i, j) = lam * a.at(i, j) - b.at(i, j);
    Matrix<Cplx> e(k * m, k * n);
    for (int i = 0; i < k; ++i) {
        e.set_block(i * m, i * n, p);
        if (i + 1 < k) e.set_block((i + 1) * m, i * n, a);
    }
    return k * n - svd_rank(e, tol);
}

inline Decomposition<Cplx> canon_pencil_float(const Matrix<Cplx>& a, const Matrix<Cplx>& b,
                                              double tol) {
    const int m = a.rows(), n = a.cols();
    Decomposition<Cplx> d{Problem::Pencil, {}};

    // normal rank from a few sample points
    int r = 0;
    for (uint64_t s = 1; s <= 3; ++s) {
        Cplx x(std::cos(2.39996 * (double)s) * 1.2345, std::sin(2.39996 * (double)s) * 1.2345);
        r = std::max(r, pencil_rank_at(a, b, x, tol));
    }

    auto colind = detail::column_minimal_indices(a, b, n - r, tol);
    auto rowind = detail::column_minimal_indices(a.transpose(), b.transpose(), m - r, tol);
    const int s_c = (int)colind.size();
    for (int idx : colind) d.blocks.push_back(Block<Cplx>::pencil(BlockKind::PenColMin, idx + 1));
    for (int idx : rowind) d.blocks.push_back(Block<Cplx>::pencil(BlockKind::PenRowMin, idx + 1));

    // candidate eigenvalues from two random compressions, kept iff the full
    // pencil drops rank there
    std::vector<Cplx> kept;
    bool keep_inf = svd_rank(a, tol) < r;
    if (r > 0) {
        for (uint64_t trial = 0; trial < 2; ++trial) {
            Matrix<Cplx> P = hash_matrix(r, m, 77 + trial), Q = hash_matrix(n, r, 131 + trial);
            Matrix<Cplx> Ac = P * a * Q, Bc = P * b * Q;
            // Moebius x = (bb + dd w)/(aa + cc w)
            Cplx aa(0.8127, -0.3311), bb(-0.2511, 0.9044), cc(0.5320, 0.2177),
                dd(1.1003, -0.1415);
            Matrix<Cplx> M1(r, r), M0(r, r);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) {
                    M1.at(i, j) = dd * Ac.at(i, j) - cc * Bc.at(i, j);
                    M0.at(i, j) = bb * Ac.at(i, j) - aa * Bc.at(i, j);
                }
            if (svd_rank(M1, 1e-12) < r) continue;
            Matrix<Cplx> Mw = inverse(M1, 1e-14) * M0;
            for (auto& w : eigenvalues(Mw)) {
                Cplx num = bb + dd * (-w), den = aa + cc * (-w);  // eig of -M1^-1 M0
                if (std::abs(den) < 1e-9 * std::max(1.0, std::abs(num))) continue;  // -> infinity
                Cplx x = num / den;
                if (pencil_rank_at(a, b, x, tol) < r) kept.push_back(x);
            }
        }
    }
    double scale = 1.0;
    for (auto& x : kept) scale = std::max(scale, std::abs(x));
    auto clusters = cluster_points(kept, std::max(100.0 * tol, 1e-2) * scale);

    int reg_total = 0;
    for (auto& cl : clusters) {
        // Weyr data from E_k nullities (minus the singular-part contribution)
        std::vector<int> w{0};
        for (int k = 1; k <= std::min(m, n); ++k) {
            int nl = ek_nullity(a, b, cl.center, k, tol) - k * s_c;
            if (nl <= w.back()) break;
            w.push_back(nl);
        }
        Poly<Cplx> lin({-cl.center, FT<Cplx>::one()});
        for (size_t k = 1; k < w.size(); ++k) {
            int ge_k = w[k] - w[k - 1];
            int ge_next = k + 1 < w.size() ? w[k + 1] - w[k] : 0;
            for (int c = 0; c < ge_k - ge_next; ++c) {
                d.blocks.push_back(Block<Cplx>::pencil_reg(poly_pow(lin, (int)k)));
                reg_total += (int)k;
            }
        }
    }
    if (keep_inf) {
        std::vector<int> w{0};
        for (int k = 1; k <= std::min(m, n); ++k) {
            int nl = ek_nullity(b, a, Cplx(0, 0), k, tol) - k * s_c;
            if (nl <= w.back()) break;
            w.push_back(nl);
        }
        for (size_t k = 1; k < w.size(); ++k) {
            int ge_k = w[k] - w[k - 1];
            int ge_next = k + 1 < w.size() ? w[k + 1] - w[k] : 0;
            for (int c = 0; c < ge_k - ge_next; ++c) {
                d.blocks.push_back(Block<Cplx>::pencil(BlockKind::PenNilpotentPair, (int)k));
                reg_total += (int)k;
            }
        }
    }
    (void)reg_total;
    pencil_bookkeeping(d, m, n);
    d.sort();
    return d;
}

}  // namespace detail

template <class K>
Decomposition<K> canon_pencil(const Matrix<K>& a, const Matrix<K>& b, double tol = 1e-8) {
    Matrix<K>::require_same_shape(a, b);
    if constexpr (FT<K>::exact)
        return detail::canon_pencil_exact(a, b);
    else
        return detail::canon_pencil_float(a, b, tol);
}

}  // namespace qmx
