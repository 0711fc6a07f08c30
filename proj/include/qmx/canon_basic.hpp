#pragma once

// Equivalence and similarity engines. Exact similarity goes through the
// Smith form of xI - A and factorization into elementary divisors (the
// elementary-divisors rational canonical form); the float backend clusters
// eigenvalues and reads Jordan structure off rank chains.

#include "qmx/blocks.hpp"
#include "qmx/float_linalg.hpp"
#include "qmx/smith.hpp"

namespace qmx {

template <class K>
Decomposition<K> canon_equivalence(const Matrix<K>& a, double tol = 1e-9) {
    Decomposition<K> d{Problem::Equivalence, {}};
    int r = rank(a, tol);
    for (int k = 0; k < r; ++k) d.blocks.push_back(Block<K>::equiv(BlockKind::EqIdentity));
    for (int k = 0; k < a.rows() - r; ++k)
        d.blocks.push_back(Block<K>::equiv(BlockKind::EqZeroToF));
    for (int k = 0; k < a.cols() - r; ++k)
        d.blocks.push_back(Block<K>::equiv(BlockKind::EqFToZero));
    d.sort();
    return d;
}

namespace detail {

// Jordan data of a float matrix: clustered eigenvalues with block sizes from
// rank chains of powers.
struct JordanPart {
    Cplx lambda;
    std::vector<int> sizes;
};

inline std::vector<JordanPart> jordan_float(const Matrix<Cplx>& a, double tol) {
    const int n = a.rows();
    std::vector<JordanPart> out;
    if (n == 0) return out;
    auto evs = eigenvalues(a);
    double scale = 1.0;
    for (auto& e : evs) scale = std::max(scale, std::abs(e));
    double ctol = std::max(100.0 * tol, 1e-2) * scale;
    for (auto& cl : cluster_points(evs, ctol)) {
        JordanPart part;
        part.lambda = cl.center;
        Matrix<Cplx> shifted = a;
        for (int i = 0; i < n; ++i) shifted.at(i, i) -= cl.center;
        std::vector<int> nullity{0};
        Matrix<Cplx> pw = Matrix<Cplx>::identity(n);
        while (nullity.back() < cl.mult) {
            pw = pw * shifted;
            nullity.push_back(n - svd_rank(pw, tol));
            if ((int)nullity.size() > n + 1)
                fail("internal-inconsistency", "rank chain failed to exhaust the cluster");
        }
        // blocks of size exactly k: (w_k - w_{k-1}) - (w_{k+1} - w_k)
        for (size_t k = 1; k < nullity.size(); ++k) {
            int ge_k = nullity[k] - nullity[k - 1];
            int ge_next = k + 1 < nullity.size() ? nullity[k + 1] - nullity[k] : 0;
            for (int c = 0; c < ge_k - ge_next; ++c) part.sizes.push_back((int)k);
        }
        int total = 0;
        for (int s : part.sizes) total += s;
        if (total != cl.mult)
            fail("internal-inconsistency", "Jordan sizes do not tile the cluster multiplicity");
        out.push_back(std::move(part));
    }
    return out;
}

}  // namespace detail

template <class K>
Decomposition<K> canon_similarity(const Matrix<K>& a, double tol = 1e-8) {
    if (a.rows() != a.cols()) fail("invalid-argument", "similarity needs a square matrix");
    Decomposition<K> d{Problem::Similarity, {}};
    if constexpr (FT<K>::exact) {
        (void)tol;
        for (auto& q : elementary_divisors(smith_char(a))) d.blocks.push_back(Block<K>::sim(q));
    } else {
        for (auto& part : detail::jordan_float(a, tol)) {
            Poly<Cplx> lin({-part.lambda, FT<Cplx>::one()});
            for (int s : part.sizes) d.blocks.push_back(Block<Cplx>::sim(poly_pow(lin, s)));
        }
    }
    d.sort();
    return d;
}

}  // namespace qmx
