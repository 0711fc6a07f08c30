#pragma once

// Shared helpers for the test suites: deterministic RNG, random scalars,
// random invertible scrambles over exact domains, random unitaries for the
// float backend.

#include <random>

#include "qmx/linalg.hpp"

namespace qmx::test {

using Rng = std::mt19937_64;

inline long rand_int(Rng& rng, long lo, long hi) {
    return (long)std::uniform_int_distribution<long long>(lo, hi)(rng);
}

template <class K>
K rand_scalar(Rng& rng, long span = 4) {
    if constexpr (std::is_same_v<K, Rat>) {
        return make_rat(rand_int(rng, -span, span), rand_int(rng, 1, 3));
    } else if constexpr (std::is_same_v<K, GaussRat>) {
        return GaussRat(make_rat(rand_int(rng, -span, span), rand_int(rng, 1, 3)),
                        make_rat(rand_int(rng, -span, span), rand_int(rng, 1, 3)));
    } else {
        std::normal_distribution<double> nd(0.0, 1.0);
        return Cplx(nd(rng), nd(rng));
    }
}

template <class K>
Matrix<K> rand_matrix(Rng& rng, int rows, int cols, long span = 4) {
    Matrix<K> m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = rand_scalar<K>(rng, span);
    return m;
}

// Random invertible matrix over an exact domain: a product of elementary
// shears and diagonal +-1 on a permutation, so the inverse stays small.
template <class K>
Matrix<K> rand_invertible(Rng& rng, int n) {
    Matrix<K> s = Matrix<K>::identity(n);
    if (n == 0) return s;
    // permutation
    for (int i = n - 1; i > 0; --i) {
        int j = (int)rand_int(rng, 0, i);
        for (int c = 0; c < n; ++c) std::swap(s.at(i, c), s.at(j, c));
    }
    for (int i = 0; i < n; ++i)
        if (rand_int(rng, 0, 1)) {
            for (int c = 0; c < n; ++c) s.at(i, c) = -s.at(i, c);
        }
    int shears = 2 * n + 2;
    for (int k = 0; k < shears; ++k) {
        int i = (int)rand_int(rng, 0, n - 1), j = (int)rand_int(rng, 0, n - 1);
        if (i == j) continue;
        K f = FT<K>::from_int(rand_int(rng, -2, 2));
        if (FT<K>::is_zero(f)) continue;
        for (int c = 0; c < n; ++c) s.at(i, c) += f * s.at(j, c);
    }
    return s;
}

// Random unitary via Gram-Schmidt on a Gaussian matrix.
inline Matrix<Cplx> rand_unitary(Rng& rng, int n) {
    Matrix<Cplx> a = rand_matrix<Cplx>(rng, n, n);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < j; ++k) {
            Cplx dot = 0;
            for (int i = 0; i < n; ++i) dot += std::conj(a.at(i, k)) * a.at(i, j);
            for (int i = 0; i < n; ++i) a.at(i, j) -= dot * a.at(i, k);
        }
        double nrm = 0;
        for (int i = 0; i < n; ++i) nrm += std::norm(a.at(i, j));
        nrm = std::sqrt(nrm);
        for (int i = 0; i < n; ++i) a.at(i, j) /= nrm;
    }
    return a;
}

inline double max_abs_diff(const Matrix<Cplx>& a, const Matrix<Cplx>& b) {
    double d = 0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) d = std::max(d, std::abs(a.at(i, j) - b.at(i, j)));
    return d;
}

}  // namespace qmx::test
