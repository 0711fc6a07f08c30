#pragma once

// Eigen-backed helpers for the ComplexFloat backend: tolerant SVD rank with
// gap detection, eigenvalues, eigenvalue clustering, Hermitian inertia.
// Desk-scale numerics; not backward-stable canonicalization.

#include <Eigen/Dense>

#include "qmx/matrix.hpp"

namespace qmx {

inline Eigen::MatrixXcd to_eigen(const Matrix<Cplx>& m) {
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) e(i, j) = m.at(i, j);
    return e;
}

inline Matrix<Cplx> from_eigen(const Eigen::MatrixXcd& e) {
    Matrix<Cplx> m((int)e.rows(), (int)e.cols());
    for (int i = 0; i < e.rows(); ++i)
        for (int j = 0; j < e.cols(); ++j) m.at(i, j) = e(i, j);
    return m;
}

inline std::vector<double> singular_values(const Matrix<Cplx>& m) {
    if (m.rows() == 0 || m.cols() == 0) return {};
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
    std::vector<double> s(svd.singularValues().data(),
                          svd.singularValues().data() + svd.singularValues().size());
    return s;
}

// Rank with a relative threshold plus gap detection: a multiplicative drop of
// more than ~1e4 below one percent of scale is treated as the noise floor.
inline int svd_rank(const Matrix<Cplx>& m, double tol) {
    auto s = singular_values(m);
    if (s.empty()) return 0;
    double scale = std::max(1.0, s[0]);
    int r = 0;
    while (r < (int)s.size() && s[r] > tol * scale) ++r;
    for (int i = 0; i + 1 < r; ++i) {
        if (s[i + 1] <= 1e-2 * scale && s[i + 1] <= 1e-4 * s[i]) {
            r = i + 1;
            break;
        }
    }
    return r;
}

inline int svd_nullity(const Matrix<Cplx>& m, double tol) { return m.cols() - svd_rank(m, tol); }

inline std::vector<Cplx> eigenvalues(const Matrix<Cplx>& m) {
    if (m.rows() == 0) return {};
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(to_eigen(m), false);
    std::vector<Cplx> out(es.eigenvalues().data(), es.eigenvalues().data() + m.rows());
    return out;
}

struct EigCluster {
    Cplx center;
    int mult = 0;
};

// Single-linkage clustering with radius ctol (absolute, caller pre-scales).
inline std::vector<EigCluster> cluster_points(const std::vector<Cplx>& pts, double ctol) {
    const int n = (int)pts.size();
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(pts[i] - pts[j]) <= ctol) parent[find(i)] = find(j);
    std::map<int, EigCluster> agg;
    for (int i = 0; i < n; ++i) {
        auto& c = agg[find(i)];
        c.center += pts[i];
        ++c.mult;
    }
    std::vector<EigCluster> out;
    for (auto& [root, c] : agg) {
        c.center /= (double)c.mult;
        out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const EigCluster& a, const EigCluster& b) {
        return cmp_scalar(a.center, b.center) < 0;
    });
    return out;
}

struct Inertia {
    int plus = 0, minus = 0, zero = 0;
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

inline Inertia hermitian_inertia_float(const Matrix<Cplx>& h, double tol) {
    Inertia out;
    if (h.rows() == 0) return out;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(h), Eigen::EigenvaluesOnly);
    double scale = 1.0;
    for (int i = 0; i < h.rows(); ++i) scale = std::max(scale, std::abs(es.eigenvalues()[i]));
    for (int i = 0; i < h.rows(); ++i) {
        double ev = es.eigenvalues()[i];
        if (ev > tol * scale)
            ++out.plus;
        else if (ev < -tol * scale)
            ++out.minus;
        else
            ++out.zero;
    }
    return out;
}

}  // namespace qmx
