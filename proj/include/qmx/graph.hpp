#pragma once

// Quivers and mixed graphs. Vertices are 1-based, matching the paper's
// figures; a quiver is a mixed graph without undirected edges.

#include <map>
#include <string>
#include <vector>

#include "qmx/scalar.hpp"

namespace qmx {

struct Arrow {
    std::string id;
    int src = 0, dst = 0;
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct UEdge {
    std::string id;
    int i = 0, j = 0;  // normalized i <= j
    friend bool operator==(const UEdge&, const UEdge&) = default;
};

struct MixedGraph {
    int t = 0;
    std::vector<Arrow> arrows;
    std::vector<UEdge> edges;

    friend bool operator==(const MixedGraph&, const MixedGraph&) = default;

    void validate() const {
        if (t < 0) fail("parse-error", "negative vertex count");
        std::map<std::string, int> seen;
        for (auto& a : arrows) {
            if (a.src < 1 || a.src > t || a.dst < 1 || a.dst > t)
                fail("parse-error", "arrow '" + a.id + "' references vertex outside 1.." +
                                        std::to_string(t));
            if (a.id.empty() || seen.count(a.id))
                fail("parse-error", "missing or duplicate edge id '" + a.id + "'");
            seen[a.id] = 1;
        }
        for (auto& e : edges) {
            if (e.i < 1 || e.i > t || e.j < 1 || e.j > t)
                fail("parse-error", "edge '" + e.id + "' references vertex outside 1.." +
                                        std::to_string(t));
            if (e.i > e.j) fail("parse-error", "edge '" + e.id + "' violates i <= j");
            if (e.id.empty() || seen.count(e.id))
                fail("parse-error", "missing or duplicate edge id '" + e.id + "'");
            seen[e.id] = 1;
        }
    }

    bool is_quiver() const { return edges.empty(); }

    const Arrow& arrow(const std::string& id) const {
        for (auto& a : arrows)
            if (a.id == id) return a;
        fail("invalid-argument", "no arrow '" + id + "'");
    }
    const UEdge& edge(const std::string& id) const {
        for (auto& e : edges)
            if (e.id == id) return e;
        fail("invalid-argument", "no edge '" + id + "'");
    }

    // connected components of the underlying undirected multigraph
    std::vector<std::vector<int>> components() const {
        std::vector<int> parent(t + 1);
        for (int v = 1; v <= t; ++v) parent[v] = v;
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
        for (auto& a : arrows) unite(a.src, a.dst);
        for (auto& e : edges) unite(e.i, e.j);
        std::map<int, std::vector<int>> comp;
        for (int v = 1; v <= t; ++v) comp[find(v)].push_back(v);
        std::vector<std::vector<int>> out;
        for (auto& [root, vs] : comp) out.push_back(vs);
        return out;
    }

    // restriction to a vertex subset, with vertices renumbered 1..k in order
    MixedGraph induced(const std::vector<int>& verts) const {
        std::map<int, int> renum;
        for (size_t k = 0; k < verts.size(); ++k) renum[verts[k]] = (int)k + 1;
        MixedGraph g;
        g.t = (int)verts.size();
        for (auto& a : arrows)
            if (renum.count(a.src) && renum.count(a.dst))
                g.arrows.push_back({a.id, renum[a.src], renum[a.dst]});
        for (auto& e : edges)
            if (renum.count(e.i) && renum.count(e.j))
                g.edges.push_back({e.id, renum[e.i], renum[e.j]});
        return g;
    }
};

using Quiver = MixedGraph;

// The five canonical shapes handled by decompose_representation.
inline Quiver shape_single_arrow() { return {2, {{"a", 1, 2}}, {}}; }
inline Quiver shape_loop() { return {1, {{"a", 1, 1}}, {}}; }
inline Quiver shape_kronecker() { return {2, {{"a", 1, 2}, {"b", 1, 2}}, {}}; }
inline Quiver shape_pair() { return {2, {{"a", 1, 2}, {"b", 2, 1}}, {}}; }
inline MixedGraph shape_form() { return {1, {}, {{"f", 1, 1}}}; }

}  // namespace qmx
