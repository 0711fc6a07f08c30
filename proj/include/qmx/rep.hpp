#pragma once

// Representations of quivers and mixed graphs in explicit coordinates, plus
// morphisms, isomorphism checks and direct sums.
//
// Gram convention for an undirected edge lambda: i -- j (i <= j):
//   A_lambda(y, x) = involve(y)^T * Gram * x,  Gram of shape z_j x z_i
// (linear in x from A_i, semilinear in y from A_j).

#include "qmx/graph.hpp"
#include "qmx/linalg.hpp"

namespace qmx {

template <class K>
struct Rep {
    MixedGraph graph;
    std::vector<int> dims;  // dims[v-1] for vertex v
    std::map<std::string, Matrix<K>> maps;   // arrow id -> matrix (z_dst x z_src)
    std::map<std::string, Matrix<K>> forms;  // edge id  -> Gram   (z_j x z_i)
    Involution invol = Involution::Identity;

    int dim(int v) const { return dims.at(v - 1); }

    void validate() const {
        graph.validate();
        if ((int)dims.size() != graph.t)
            fail("parse-error", "dimension vector length != vertex count");
        for (int d : dims)
            if (d < 0) fail("parse-error", "negative dimension");
        for (auto& a : graph.arrows) {
            auto it = maps.find(a.id);
            if (it == maps.end()) fail("parse-error", "missing matrix for arrow '" + a.id + "'");
            if (it->second.rows() != dim(a.dst) || it->second.cols() != dim(a.src))
                fail("parse-error", "matrix for arrow '" + a.id + "' has wrong shape");
        }
        for (auto& e : graph.edges) {
            auto it = forms.find(e.id);
            if (it == forms.end()) fail("parse-error", "missing Gram matrix for edge '" + e.id + "'");
            if (it->second.rows() != dim(e.j) || it->second.cols() != dim(e.i))
                fail("parse-error", "Gram matrix for edge '" + e.id + "' has wrong shape");
        }
        if ((int)maps.size() != (int)graph.arrows.size() ||
            (int)forms.size() != (int)graph.edges.size())
            fail("parse-error", "stray matrices not matching any arrow/edge");
    }

    friend bool operator==(const Rep& a, const Rep& b) {
        return a.graph == b.graph && a.dims == b.dims && a.maps == b.maps &&
               a.forms == b.forms && a.invol == b.invol;
    }
};

template <class K>
struct Morphism {
    Rep<K> src, dst;
    std::vector<Matrix<K>> phi;  // phi[v-1]: src.dim(v) -> dst.dim(v)
};

namespace detail {
template <class K>
bool near_zero(const Matrix<K>& m, double tol) {
    if constexpr (FT<K>::exact) {
        (void)tol;
        return m == Matrix<K>(m.rows(), m.cols());
    } else {
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (mag(m.at(i, j)) > tol) return false;
        return true;
    }
}
}  // namespace detail

template <class K>
bool is_morphism(const Morphism<K>& f, double tol = 1e-9) {
    if (f.src.graph != f.dst.graph)
        fail("graph-mismatch", "morphism endpoints live on different graphs");
    const MixedGraph& g = f.src.graph;
    if ((int)f.phi.size() != g.t) fail("invalid-argument", "wrong number of vertex maps");
    for (int v = 1; v <= g.t; ++v)
        if (f.phi[v - 1].rows() != f.dst.dim(v) || f.phi[v - 1].cols() != f.src.dim(v))
            fail("invalid-argument", "vertex map shape mismatch at vertex " + std::to_string(v));
    for (auto& a : g.arrows) {
        Matrix<K> lhs = f.phi[a.dst - 1] * f.src.maps.at(a.id);
        Matrix<K> rhs = f.dst.maps.at(a.id) * f.phi[a.src - 1];
        if (!detail::near_zero(lhs - rhs, tol)) return false;
    }
    for (auto& e : g.edges) {
        Matrix<K> pulled = star_transpose(f.phi[e.j - 1], f.src.invol) *
                           f.dst.forms.at(e.id) * f.phi[e.i - 1];
        if (!detail::near_zero(pulled - f.src.forms.at(e.id), tol)) return false;
    }
    return true;
}

template <class K>
bool is_isomorphism(const Morphism<K>& f, double tol = 1e-9) {
    if (!is_morphism(f, tol)) return false;
    for (auto& p : f.phi)
        if (p.rows() != p.cols() || !is_invertible(p, tol)) return false;
    return true;
}

template <class K>
Morphism<K> compose(const Morphism<K>& g, const Morphism<K>& f) {  // g after f
    if (f.dst.graph != g.src.graph) fail("graph-mismatch", "composition endpoint mismatch");
    Morphism<K> h{f.src, g.dst, {}};
    for (size_t v = 0; v < f.phi.size(); ++v) h.phi.push_back(g.phi[v] * f.phi[v]);
    return h;
}

template <class K>
Morphism<K> identity_morphism(const Rep<K>& a) {
    Morphism<K> m{a, a, {}};
    for (int v = 1; v <= a.graph.t; ++v) m.phi.push_back(Matrix<K>::identity(a.dim(v)));
    return m;
}

template <class K>
Rep<K> direct_sum(const Rep<K>& a, const Rep<K>& b) {
    if (a.graph != b.graph) fail("graph-mismatch", "direct sum across different graphs");
    if (a.invol != b.invol) fail("graph-mismatch", "direct sum across different involutions");
    Rep<K> r;
    r.graph = a.graph;
    r.invol = a.invol;
    for (int v = 1; v <= a.graph.t; ++v) r.dims.push_back(a.dim(v) + b.dim(v));
    for (auto& ar : a.graph.arrows)
        r.maps[ar.id] = block_diag(a.maps.at(ar.id), b.maps.at(ar.id));
    for (auto& e : a.graph.edges)
        r.forms[e.id] = block_diag(a.forms.at(e.id), b.forms.at(e.id));
    return r;
}

template <class K>
Rep<K> zero_rep(const MixedGraph& g, Involution invol = Involution::Identity) {
    Rep<K> r;
    r.graph = g;
    r.invol = invol;
    r.dims.assign(g.t, 0);
    for (auto& a : g.arrows) r.maps[a.id] = Matrix<K>(0, 0);
    for (auto& e : g.edges) r.forms[e.id] = Matrix<K>(0, 0);
    return r;
}

}  // namespace qmx
