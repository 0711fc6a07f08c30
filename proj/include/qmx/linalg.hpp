#pragma once

// Dense linear algebra over the scalar domains. The multiply and elimination
// kernels have OpenMP-parallel inner loops; `mul_serial` / `echelon_serial`
// are the plain reference implementations kept for testing and benchmarks.

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "qmx/matrix.hpp"

namespace qmx {

namespace detail {
template <class K>
constexpr size_t par_threshold() {
    return FT<K>::exact ? 512 : 65536;  // exact entries are far more expensive
}

inline double mag(const Rat& a) { return std::abs(a.get_d()); }
inline double mag(const GaussRat& a) { return std::abs(a.re.get_d()) + std::abs(a.im.get_d()); }
inline double mag(const Cplx& a) { return std::abs(a); }
}  // namespace detail

template <class K>
Matrix<K> mul_impl(const Matrix<K>& a, const Matrix<K>& b, bool parallel) {
    if (a.cols() != b.rows()) fail("invalid-argument", "matrix product shape mismatch");
    Matrix<K> r(a.rows(), b.cols());
    const size_t work = (size_t)a.rows() * a.cols() * b.cols();
    const bool go_par = parallel && work >= detail::par_threshold<K>();
#pragma omp parallel for schedule(dynamic) if (go_par)
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const K& aik = a.at(i, k);
            if (FT<K>::is_zero(aik)) continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (!FT<K>::is_zero(b.at(k, j))) r.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return r;
}

template <class K>
Matrix<K> mul_serial(const Matrix<K>& a, const Matrix<K>& b) {
    return mul_impl(a, b, false);
}
template <class K>
Matrix<K> mul(const Matrix<K>& a, const Matrix<K>& b) {
    return mul_impl(a, b, true);
}
template <class K>
Matrix<K> operator*(const Matrix<K>& a, const Matrix<K>& b) {
    return mul_impl(a, b, true);
}

// ---------------------------------------------------------------------------
// Row reduction

template <class K>
struct Echelon {
    Matrix<K> rref;
    std::vector<int> pivot_cols;
    int rank = 0;
};

template <class K>
Echelon<K> echelon_impl(Matrix<K> m, double tol, bool parallel) {
    Echelon<K> out;
    const int rows = m.rows(), cols = m.cols();
    double scale = 1.0;
    if constexpr (!FT<K>::exact) {
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) scale = std::max(scale, detail::mag(m.at(i, j)));
    }
    int pr = 0;
    for (int pc = 0; pc < cols && pr < rows; ++pc) {
        int sel = -1;
        if constexpr (FT<K>::exact) {
            for (int i = pr; i < rows; ++i)
                if (!FT<K>::is_zero(m.at(i, pc))) {
                    sel = i;
                    break;
                }
        } else {
            double best = tol * scale;
            for (int i = pr; i < rows; ++i) {
                double v = detail::mag(m.at(i, pc));
                if (v > best) {
                    best = v;
                    sel = i;
                }
            }
        }
        if (sel < 0) continue;
        if (sel != pr)
            for (int j = 0; j < cols; ++j) std::swap(m.at(sel, j), m.at(pr, j));
        K inv = FT<K>::one() / m.at(pr, pc);
        for (int j = pc; j < cols; ++j) m.at(pr, j) = inv * m.at(pr, j);
        m.at(pr, pc) = FT<K>::one();
        const size_t work = (size_t)rows * (cols - pc);
        const bool go_par = parallel && work >= detail::par_threshold<K>();
#pragma omp parallel for schedule(dynamic) if (go_par)
        for (int i = 0; i < rows; ++i) {
            if (i == pr) continue;
            K f = m.at(i, pc);
            if (FT<K>::is_zero(f)) continue;
            for (int j = pc; j < cols; ++j) m.at(i, j) -= f * m.at(pr, j);
            m.at(i, pc) = FT<K>::zero();
        }
        out.pivot_cols.push_back(pc);
        ++pr;
    }
    out.rank = pr;
    out.rref = std::move(m);
    return out;
}

template <class K>
Echelon<K> echelon_serial(const Matrix<K>& m, double tol = 1e-9) {
    return echelon_impl(m, tol, false);
}
template <class K>
Echelon<K> echelon(const Matrix<K>& m, double tol = 1e-9) {
    return echelon_impl(m, tol, true);
}

template <class K>
int rank(const Matrix<K>& m, double tol = 1e-9) {
    return echelon(m, tol).rank;
}

// Columns form a basis of the right null space.
template <class K>
Matrix<K> kernel_basis(const Matrix<K>& m, double tol = 1e-9) {
    Echelon<K> e = echelon(m, tol);
    const int cols = m.cols();
    std::vector<int> free_cols;
    {
        std::vector<bool> is_piv(cols, false);
        for (int c : e.pivot_cols) is_piv[c] = true;
        for (int c = 0; c < cols; ++c)
            if (!is_piv[c]) free_cols.push_back(c);
    }
    Matrix<K> ker(cols, (int)free_cols.size());
    for (size_t k = 0; k < free_cols.size(); ++k) {
        ker.at(free_cols[k], (int)k) = FT<K>::one();
        for (int pi = 0; pi < e.rank; ++pi)
            ker.at(e.pivot_cols[pi], (int)k) = -e.rref.at(pi, free_cols[k]);
    }
    return ker;
}

// Solves A X = B; reports inconsistency via the bool.
template <class K>
std::pair<bool, Matrix<K>> solve(const Matrix<K>& a, const Matrix<K>& b, double tol = 1e-9) {
    if (a.rows() != b.rows()) fail("invalid-argument", "solve shape mismatch");
    Echelon<K> e = echelon(hcat(a, b), tol);
    for (int c : e.pivot_cols)
        if (c >= a.cols()) return {false, Matrix<K>()};
    Matrix<K> x(a.cols(), b.cols());
    for (int pi = 0; pi < e.rank; ++pi)
        for (int j = 0; j < b.cols(); ++j)
            x.at(e.pivot_cols[pi], j) = e.rref.at(pi, a.cols() + j);
    return {true, x};
}

template <class K>
bool is_invertible(const Matrix<K>& a, double tol = 1e-9) {
    return a.rows() == a.cols() && rank(a, tol) == a.rows();
}

template <class K>
Matrix<K> inverse(const Matrix<K>& a, double tol = 1e-9) {
    if (a.rows() != a.cols()) fail("invalid-argument", "inverse of non-square matrix");
    auto [ok, x] = solve(a, Matrix<K>::identity(a.rows()), tol);
    if (!ok) fail("invalid-argument", "matrix is singular");
    return x;
}

template <class K>
K det(const Matrix<K>& a, double tol = 1e-9) {
    if (a.rows() != a.cols()) fail("invalid-argument", "det of non-square matrix");
    Matrix<K> m = a;
    const int n = m.rows();
    K d = FT<K>::one();
    for (int pc = 0; pc < n; ++pc) {
        int sel = -1;
        if constexpr (FT<K>::exact) {
            for (int i = pc; i < n; ++i)
                if (!FT<K>::is_zero(m.at(i, pc))) {
                    sel = i;
                    break;
                }
        } else {
            double best = tol;
            for (int i = pc; i < n; ++i)
                if (detail::mag(m.at(i, pc)) > best) {
                    best = detail::mag(m.at(i, pc));
                    sel = i;
                }
        }
        if (sel < 0) return FT<K>::zero();
        if (sel != pc) {
            for (int j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(pc, j));
            d = -d;
        }
        d = d * m.at(pc, pc);
        K inv = FT<K>::one() / m.at(pc, pc);
        for (int i = pc + 1; i < n; ++i) {
            K f = inv * m.at(i, pc);
            if (FT<K>::is_zero(f)) continue;
            for (int j = pc; j < n; ++j) m.at(i, j) -= f * m.at(pc, j);
        }
    }
    return d;
}

template <class K>
K trace(const Matrix<K>& a) {
    K t = FT<K>::zero();
    for (int i = 0; i < a.rows(); ++i) t += a.at(i, i);
    return t;
}

// Characteristic polynomial det(xI - A) by Faddeev-LeVerrier.
// Returned low-to-high: coeff[k] multiplies x^k.
template <class K>
std::vector<K> charpoly(const Matrix<K>& a) {
    if (a.rows() != a.cols()) fail("invalid-argument", "charpoly of non-square matrix");
    const int n = a.rows();
    std::vector<K> c(n + 1, FT<K>::zero());
    c[n] = FT<K>::one();
    Matrix<K> m = Matrix<K>::identity(n);
    for (int k = 1; k <= n; ++k) {
        m = a * m;
        K ck = -(trace(m) / FT<K>::from_int(k));
        c[n - k] = ck;
        for (int i = 0; i < n; ++i) m.at(i, i) += ck;
    }
    return c;
}

}  // namespace qmx
