#pragma once

// Exhaustive census of connected quivers (directed multigraphs, loops and
// multi-arrows included): definiteness-based classification cross-checked
// against diagram recognition on every graph. The classify step is the
// OpenMP-parallel kernel; census_serial is the reference.

#include "qmx/tits.hpp"

namespace qmx {

struct CensusResult {
    long long total = 0;
    long long finite = 0, tame = 0, wild = 0;
    long long mismatches = 0;  // definiteness vs diagram recognition

    friend bool operator==(const CensusResult&, const CensusResult&) = default;
};

namespace detail {

// multisets of size m over `slots` slot indices, as nondecreasing tuples
inline void enumerate_multisets(int slots, int m, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(m, 0);
    if (m == 0) {
        out.push_back(cur);
        return;
    }
    while (true) {
        out.push_back(cur);
        int i = m - 1;
        while (i >= 0 && cur[i] == slots - 1) --i;
        if (i < 0) break;
        int v = cur[i] + 1;
        for (int j = i; j < m; ++j) cur[j] = v;
    }
}

inline MixedGraph graph_from_slots(int t, const std::vector<int>& slot_multiset) {
    MixedGraph g;
    g.t = t;
    int id = 0;
    for (int s : slot_multiset) {
        int src = s / t + 1, dst = s % t + 1;
        g.arrows.push_back({"a" + std::to_string(id++), src, dst});
    }
    return g;
}

inline bool census_connected(const MixedGraph& g) {
    return g.components().size() == 1;
}

inline void census_tally(const MixedGraph& g, CensusResult& r) {
    ++r.total;
    Definiteness def = definiteness(tits_form(g));
    QType dtype = def == Definiteness::PositiveDefinite      ? QType::Finite
                  : def == Definiteness::PositiveSemidefinite ? QType::Tame
                                                              : QType::Wild;
    auto rec = recognize_dynkin(g);
    QType rtype = !rec ? QType::Wild
                       : rec->find('~') != std::string::npos ? QType::Tame : QType::Finite;
    if (dtype != rtype) ++r.mismatches;
    switch (dtype) {
        case QType::Finite: ++r.finite; break;
        case QType::Tame: ++r.tame; break;
        case QType::Wild: ++r.wild; break;
    }
}

}  // namespace detail

inline CensusResult census_serial(int max_vertices, int max_arrows) {
    CensusResult r;
    for (int t = 1; t <= max_vertices; ++t) {
        int slots = t * t;
        for (int m = std::max(0, t - 1); m <= max_arrows; ++m) {
            std::vector<std::vector<int>> multisets;
            detail::enumerate_multisets(slots, m, multisets);
            for (auto& ms : multisets) {
                MixedGraph g = detail::graph_from_slots(t, ms);
                if (!detail::census_connected(g)) continue;
                detail::census_tally(g, r);
            }
        }
    }
    return r;
}

inline CensusResult census_parallel(int max_vertices, int max_arrows) {
    CensusResult r;
    for (int t = 1; t <= max_vertices; ++t) {
        int slots = t * t;
        for (int m = std::max(0, t - 1); m <= max_arrows; ++m) {
            std::vector<std::vector<int>> multisets;
            detail::enumerate_multisets(slots, m, multisets);
            long long total = 0, fin = 0, tame = 0, wild = 0, mis = 0;
#pragma omp parallel for schedule(dynamic, 256) \
    reduction(+ : total, fin, tame, wild, mis)
            for (long k = 0; k < (long)multisets.size(); ++k) {
                MixedGraph g = detail::graph_from_slots(t, multisets[k]);
                if (!detail::census_connected(g)) continue;
                CensusResult one;
                detail::census_tally(g, one);
                total += one.total;
                fin += one.finite;
                tame += one.tame;
                wild += one.wild;
                mis += one.mismatches;
            }
            r.total += total;
            r.finite += fin;
            r.tame += tame;
            r.wild += wild;
            r.mismatches += mis;
        }
    }
    return r;
}

}  // namespace qmx
