#pragma once

// Smith normal form over K[x] for an exact field K. Returns the full diagonal
// of monic invariant factors d_1 | d_2 | ... (constant 1s included, zeros for
// rank-deficient tails), which is what the elementary-divisor engines consume.

#include "qmx/linalg.hpp"
#include "qmx/polynomial.hpp"

namespace qmx {

template <class K>
using MatPoly = Matrix<Poly<K>>;

template <class K>
MatPoly<K> char_matrix(const Matrix<K>& a) {  // xI - A
    if (a.rows() != a.cols()) fail("invalid-argument", "char matrix of non-square input");
    MatPoly<K> m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            m.at(i, j) = i == j ? Poly<K>({-a.at(i, j), FT<K>::one()})
                                : Poly<K>({-a.at(i, j)});
        }
    return m;
}

// x*A - B
template <class K>
MatPoly<K> pencil_matrix(const Matrix<K>& a, const Matrix<K>& b) {
    Matrix<K>::require_same_shape(a, b);
    MatPoly<K> m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            m.at(i, j) = Poly<K>({-b.at(i, j), a.at(i, j)});
    return m;
}

template <class K>
std::vector<Poly<K>> smith_invariant_factors(MatPoly<K> m) {
    static_assert(FT<K>::exact, "Smith form needs an exact domain");
    const int rows = m.rows(), cols = m.cols();
    const int nd = std::min(rows, cols);
    std::vector<Poly<K>> diag(nd);

    for (int s = 0; s < nd; ++s) {
        // find a nonzero entry of minimal degree in the working submatrix
        auto find_pivot = [&]() -> std::pair<int, int> {
            int br = -1, bc = -1, bd = -1;
            for (int i = s; i < rows; ++i)
                for (int j = s; j < cols; ++j) {
                    int d = m.at(i, j).degree();
                    if (d >= 0 && (bd < 0 || d < bd)) {
                        bd = d;
                        br = i;
                        bc = j;
                    }
                }
            return {br, bc};
        };

        while (true) {
            auto [pr, pc] = find_pivot();
            if (pr < 0) break;  // submatrix is zero
            if (pr != s)
                for (int j = 0; j < cols; ++j) std::swap(m.at(pr, j), m.at(s, j));
            if (pc != s)
                for (int i = 0; i < rows; ++i) std::swap(m.at(i, pc), m.at(i, s));

            // clear column and row by division; a nonzero remainder has
            // smaller degree and becomes the next pivot candidate
            bool clean = true;
            for (int i = s + 1; i < rows; ++i) {
                if (m.at(i, s).is_zero()) continue;
                Poly<K> q = m.at(i, s) / m.at(s, s);
                for (int j = s; j < cols; ++j) m.at(i, j) -= q * m.at(s, j);
                if (!m.at(i, s).is_zero()) clean = false;
            }
            for (int j = s + 1; j < cols; ++j) {
                if (m.at(s, j).is_zero()) continue;
                Poly<K> q = m.at(s, j) / m.at(s, s);
                for (int i = s; i < rows; ++i) m.at(i, j) -= q * m.at(i, s);
                if (!m.at(s, j).is_zero()) clean = false;
            }
            if (!clean) continue;

            // pivot must divide the rest of the submatrix
            bool divides_all = true;
            for (int i = s + 1; i < rows && divides_all; ++i)
                for (int j = s + 1; j < cols && divides_all; ++j) {
                    if (!(m.at(i, j) % m.at(s, s)).is_zero()) {
                        for (int c = s; c < cols; ++c) m.at(s, c) += m.at(i, c);
                        divides_all = false;
                    }
                }
            if (divides_all) break;
        }
        diag[s] = m.at(s, s).monic();
    }
    return diag;
}

// Smith form of xI - A: the route to elementary divisors of A.
template <class K>
std::vector<Poly<K>> smith_char(const Matrix<K>& a) {
    return smith_invariant_factors(char_matrix(a));
}

}  // namespace qmx
