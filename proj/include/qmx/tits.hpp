#pragma once

// Tits quadratic form, exact definiteness analysis, Dynkin / extended-Dynkin
// recognition, finite/tame/wild classification, root enumeration and the
// parameter-count formula.

#include <algorithm>
#include <optional>

#include "qmx/graph.hpp"
#include "qmx/linalg.hpp"

namespace qmx {

// q(z) = z^T (gram2/2) z; gram2 is integral and symmetric.
struct TitsForm {
    int t = 0;
    Matrix<long long> gram2;

    long long eval(const std::vector<long long>& z) const {
        if ((int)z.size() != t) fail("invalid-argument", "dimension vector length mismatch");
        long long s = 0;
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) s += gram2.at(i, j) * z[i] * z[j];
        return s / 2;
    }
};

inline TitsForm tits_form(const MixedGraph& g) {
    TitsForm f;
    f.t = g.t;
    f.gram2 = Matrix<long long>(g.t, g.t);
    for (int i = 0; i < g.t; ++i) f.gram2.at(i, i) = 2;
    auto add_edge = [&](int i, int j) {
        if (i == j) {
            f.gram2.at(i - 1, i - 1) -= 2;
        } else {
            f.gram2.at(i - 1, j - 1) -= 1;
            f.gram2.at(j - 1, i - 1) -= 1;
        }
    };
    for (auto& a : g.arrows) add_edge(a.src, a.dst);
    for (auto& e : g.edges) add_edge(e.i, e.j);
    return f;
}

// Direct evaluation of the defining sum, used as an independent route in
// tests and for the parameter-count formula.
inline long long tits_eval_direct(const MixedGraph& g, const std::vector<long long>& z) {
    long long s = 0;
    for (int i = 0; i < g.t; ++i) s += z[i] * z[i];
    for (auto& a : g.arrows) s -= z[a.src - 1] * z[a.dst - 1];
    for (auto& e : g.edges) s -= z[e.i - 1] * z[e.j - 1];
    return s;
}

enum class Definiteness { PositiveDefinite, PositiveSemidefinite, Indefinite };

// Exact definiteness of a symmetric rational matrix by pivoted symmetric
// elimination (no floats; a PSD matrix with a zero diagonal entry has the
// whole row zero).
inline Definiteness definiteness(Matrix<Rat> g) {
    int n = g.rows();
    bool deficient = false;
    std::vector<int> alive(n);
    for (int i = 0; i < n; ++i) alive[i] = i;
    while (!alive.empty()) {
        int pivot = -1;
        for (int idx : alive) {
            if (g.at(idx, idx) < 0) return Definiteness::Indefinite;
            if (pivot < 0 && g.at(idx, idx) > 0) pivot = idx;
        }
        if (pivot < 0) {  // all remaining diagonal entries are zero
            for (int a : alive)
                for (int b : alive)
                    if (g.at(a, b) != 0) return Definiteness::Indefinite;
            deficient = deficient || !alive.empty();
            break;
        }
        Rat piv = g.at(pivot, pivot);
        std::vector<int> next;
        for (int a : alive)
            if (a != pivot) next.push_back(a);
        for (int a : next)
            for (int b : next) g.at(a, b) -= g.at(a, pivot) * g.at(pivot, b) / piv;
        alive = std::move(next);
    }
    return deficient ? Definiteness::PositiveSemidefinite : Definiteness::PositiveDefinite;
}

inline Definiteness definiteness(const TitsForm& f) {
    Matrix<Rat> g(f.t, f.t);
    for (int i = 0; i < f.t; ++i)
        for (int j = 0; j < f.t; ++j) g.at(i, j) = Rat((long)f.gram2.at(i, j));
    return definiteness(g);
}

// ---------------------------------------------------------------------------
// Diagram recognition on the underlying undirected multigraph (connected).
// Loops and multi-edges only ever match the A~0 / A~1 patterns; everything
// else falls through to "no diagram".

inline std::optional<std::string> recognize_dynkin(const MixedGraph& g) {
    const int n = g.t;
    if (n == 0) return std::nullopt;
    long edges = (long)g.arrows.size() + (long)g.edges.size();
    int loops = 0;
    Matrix<int> mult(n, n);
    auto add = [&](int i, int j) {
        if (i == j)
            ++loops;
        else {
            ++mult.at(i - 1, j - 1);
            ++mult.at(j - 1, i - 1);
        }
    };
    for (auto& a : g.arrows) add(a.src, a.dst);
    for (auto& e : g.edges) add(e.i, e.j);

    if (loops) return (n == 1 && edges == 1) ? std::optional<std::string>("A~0") : std::nullopt;
    bool multi = false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (mult.at(i, j) > 1) multi = true;
    if (multi)
        return (n == 2 && edges == 2) ? std::optional<std::string>("A~1") : std::nullopt;

    std::vector<int> deg(n, 0);
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mult.at(i, j)) {
                ++deg[i];
                ++deg[j];
                adj[i].push_back(j);
                adj[j].push_back(i);
            }

    if (edges == n) {  // simple connected with one cycle: must be the cycle itself
        for (int d : deg)
            if (d != 2) return std::nullopt;
        return "A~" + std::to_string(n - 1);
    }
    if (edges != n - 1) return std::nullopt;  // not a tree

    int maxdeg = *std::max_element(deg.begin(), deg.end());
    if (maxdeg <= 2) return "A" + std::to_string(n);

    // leg lengths from a branch vertex: walk each neighbor away from center
    auto legs_from = [&](int c) {
        std::vector<int> legs;
        for (int nb : adj[c]) {
            int len = 1, prev = c, cur = nb;
            while (deg[cur] == 2) {
                int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = nxt;
                ++len;
            }
            if (deg[cur] != 1) return std::vector<int>();  // hit another branch vertex
            legs.push_back(len);
        }
        std::sort(legs.begin(), legs.end());
        return legs;
    };

    std::vector<int> branch;
    for (int v = 0; v < n; ++v)
        if (deg[v] >= 3) branch.push_back(v);

    if (branch.size() == 1) {
        int c = branch[0];
        if (deg[c] == 4) {
            auto legs = legs_from(c);
            if (legs == std::vector<int>{1, 1, 1, 1}) return "D~4";
            return std::nullopt;
        }
        if (deg[c] != 3) return std::nullopt;
        auto legs = legs_from(c);
        if (legs.empty()) return std::nullopt;
        if (legs[0] == 1 && legs[1] == 1) return "D" + std::to_string(n);
        if (legs == std::vector<int>{1, 2, 2}) return "E6";
        if (legs == std::vector<int>{1, 2, 3}) return "E7";
        if (legs == std::vector<int>{1, 2, 4}) return "E8";
        if (legs == std::vector<int>{2, 2, 2}) return "E~6";
        if (legs == std::vector<int>{1, 3, 3}) return "E~7";
        if (legs == std::vector<int>{1, 2, 5}) return "E~8";
        return std::nullopt;
    }
    if (branch.size() == 2) {  // D~ with two forked ends
        for (int c : branch) {
            if (deg[c] != 3) return std::nullopt;
            int leaves = 0;
            for (int nb : adj[c])
                if (deg[nb] == 1) ++leaves;
            if (leaves != 2) return std::nullopt;
        }
        for (int v = 0; v < n; ++v)
            if (deg[v] > 2 && v != branch[0] && v != branch[1]) return std::nullopt;
        return "D~" + std::to_string(n - 1);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

enum class QType { Finite, Tame, Wild };

struct Classification {
    QType type = QType::Finite;
    std::string diagram;  // empty for wild
    Definiteness def = Definiteness::PositiveDefinite;
};

inline Classification classify(const MixedGraph& g) {
    Classification worst;
    worst.type = QType::Finite;
    bool first = true;
    for (auto& verts : g.components()) {
        MixedGraph comp = g.induced(verts);
        Classification c;
        c.def = definiteness(tits_form(comp));
        c.type = c.def == Definiteness::PositiveDefinite    ? QType::Finite
                 : c.def == Definiteness::PositiveSemidefinite ? QType::Tame
                                                               : QType::Wild;
        auto rec = recognize_dynkin(comp);
        bool extended = rec && rec->find('~') != std::string::npos;
        QType rec_type = !rec ? QType::Wild : extended ? QType::Tame : QType::Finite;
        if (rec_type != c.type)
            fail("internal-inconsistency",
                 "definiteness and diagram recognition disagree on a component");
        if (rec) c.diagram = *rec;
        if (first || (int)c.type > (int)worst.type) worst = c;
        first = false;
    }
    if (worst.type == QType::Wild) worst.diagram.clear();
    return worst;
}

// ---------------------------------------------------------------------------
// Root (indecomposable-dimension) enumeration.
//
// Finite type: all z >= 0, z != 0 with q(z) = 1; the component cap 6 (the
// largest coefficient of the highest root of E8) makes the search a priori
// finite without external root tables. Tame type: caller bound, q in {0,1}.
// The DFS prunes with the exact infimum of q over real completions of a
// prefix (Schur complement over Q), so large path quivers stay cheap.

inline std::vector<std::vector<long long>> indecomposable_dimensions(const MixedGraph& g,
                                                                     long long bound = 0) {
    Classification cls = classify(g);
    if (cls.type == QType::Wild)
        fail("wild-type-unsupported",
             "root enumeration for wild type needs Kac's Delta_+, which is out of scope");
    long long cap = cls.type == QType::Finite ? 6 : bound;
    if (cls.type == QType::Tame && bound < 1)
        fail("invalid-argument", "tame root enumeration needs a positive bound");

    TitsForm f = tits_form(g);
    const int t = f.t;
    Matrix<Rat> G(t, t);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) G.at(i, j) = Rat((long)f.gram2.at(i, j));

    // Schur data: for prefix length k, S_k with inf_real q = z1^T S_k z1 / 2
    std::vector<Matrix<Rat>> schur(t);
    std::vector<bool> have_schur(t, false);
    for (int k = 1; k < t; ++k) {
        Matrix<Rat> P = G.submatrix(0, 0, k, k);
        Matrix<Rat> B = G.submatrix(0, k, k, t - k);
        Matrix<Rat> C = G.submatrix(k, k, t - k, t - k);
        auto [ok, X] = solve(C, B.transpose());
        if (!ok) continue;  // cannot happen for PSD input; skip pruning then
        schur[k] = P - B * X;
        have_schur[k] = true;
    }

    std::vector<std::vector<long long>> out;
    std::vector<long long> z(t, 0);
    auto prefix_bound_exceeds = [&](int k) {
        if (k == 0 || k >= t || !have_schur[k]) return false;
        Rat s(0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) s += schur[k].at(i, j) * Rat((long)z[i]) * Rat((long)z[j]);
        return s > 2;  // inf q > 1
    };
    auto dfs = [&](auto&& self, int k) -> void {
        if (k == t) {
            long long q = f.eval(z);
            bool nonzero = false;
            for (long long v : z) nonzero = nonzero || v;
            if (!nonzero) return;
            if (q == 1 || (cls.type == QType::Tame && q == 0)) out.push_back(z);
            return;
        }
        for (long long v = 0; v <= cap; ++v) {
            z[k] = v;
            if (!prefix_bound_exceeds(k + 1)) self(self, k + 1);
        }
        z[k] = 0;
    };
    dfs(dfs, 0);
    std::sort(out.begin(), out.end());
    return out;
}

inline long long parameter_count(const MixedGraph& g, const std::vector<long long>& z) {
    return 1 - tits_form(g).eval(z);
}

}  // namespace qmx
