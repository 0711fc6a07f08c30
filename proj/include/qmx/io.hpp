#pragma once

// JSON (de)serialization of graphs, representations and matrices. Entries are
// scalar strings per the domain ("3/2", "1/2+3/4i", "1.5-2e-3i"); empty
// matrix dimensions are carried by "dims".

#include <json.hpp>

#include "qmx/rep.hpp"

namespace qmx {

using Json = nlohmann::ordered_json;

// Wraps nlohmann's parser to report line/column on failure.
inline Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        size_t pos = e.byte > 0 ? e.byte - 1 : 0;
        int line = 1, col = 1;
        for (size_t k = 0; k < pos && k < text.size(); ++k) {
            if (text[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        fail("parse-error", "JSON error at line " + std::to_string(line) + ", column " +
                                std::to_string(col) + ": " + e.what());
    }
}

template <class K>
Json matrix_to_json(const Matrix<K>& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(FT<K>::str(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class K>
Matrix<K> matrix_from_json(const Json& j, int rows = -1, int cols = -1) {
    if (!j.is_array()) fail("parse-error", "matrix must be an array of rows");
    int r = (int)j.size();
    int c = r ? (int)j[0].size() : 0;
    if (rows >= 0) {
        // shape dictated by dims; tolerate [] for zero-row or zero-col values
        if (r == 0) {
            r = rows;
            c = cols;
            if (r != 0 && c != 0)
                fail("parse-error", "empty matrix literal for nonzero shape");
        } else if (r != rows) {
            fail("parse-error", "matrix has wrong row count");
        }
    }
    Matrix<K> m(r, c);
    for (int i = 0; i < r && i < (int)j.size(); ++i) {
        if ((int)j[i].size() != c) fail("parse-error", "ragged matrix rows");
        for (int jj = 0; jj < c; ++jj) {
            const Json& cell = j[i][jj];
            if (cell.is_string())
                m.at(i, jj) = FT<K>::parse(cell.get<std::string>());
            else if (cell.is_number())
                m.at(i, jj) = FT<K>::parse(cell.dump());
            else
                fail("parse-error", "matrix entries must be scalar strings or numbers");
        }
    }
    if (cols >= 0 && m.cols() != cols) fail("parse-error", "matrix has wrong column count");
    return m;
}

inline Json graph_to_json(const MixedGraph& g) {
    Json j;
    j["vertices"] = g.t;
    j["arrows"] = Json::array();
    for (auto& a : g.arrows) j["arrows"].push_back({{"id", a.id}, {"src", a.src}, {"dst", a.dst}});
    j["edges"] = Json::array();
    for (auto& e : g.edges) j["edges"].push_back({{"id", e.id}, {"i", e.i}, {"j", e.j}});
    return j;
}

inline MixedGraph graph_from_json(const Json& j) {
    MixedGraph g;
    if (!j.is_object() || !j.contains("vertices"))
        fail("parse-error", "graph object needs a 'vertices' field");
    g.t = j.at("vertices").get<int>();
    for (auto& a : j.value("arrows", Json::array()))
        g.arrows.push_back({a.at("id").get<std::string>(), a.at("src").get<int>(),
                            a.at("dst").get<int>()});
    for (auto& e : j.value("edges", Json::array()))
        g.edges.push_back(
            {e.at("id").get<std::string>(), e.at("i").get<int>(), e.at("j").get<int>()});
    g.validate();
    return g;
}

template <class K>
Json rep_to_json(const Rep<K>& r) {
    Json j = graph_to_json(r.graph);
    j["dims"] = r.dims;
    Json maps = Json::object();
    for (auto& a : r.graph.arrows) maps[a.id] = matrix_to_json(r.maps.at(a.id));
    j["maps"] = std::move(maps);
    Json forms = Json::object();
    for (auto& e : r.graph.edges) forms[e.id] = matrix_to_json(r.forms.at(e.id));
    j["forms"] = std::move(forms);
    return j;
}

template <class K>
Rep<K> rep_from_json(const Json& j, Involution invol = Involution::Identity) {
    Rep<K> r;
    r.graph = graph_from_json(j);
    r.invol = invol;
    if (!j.contains("dims")) fail("parse-error", "representation needs 'dims'");
    for (auto& d : j.at("dims")) r.dims.push_back(d.get<int>());
    if ((int)r.dims.size() != r.graph.t)
        fail("parse-error", "dimension vector length != vertex count");
    Json maps = j.value("maps", Json::object());
    for (auto& a : r.graph.arrows) {
        if (!maps.contains(a.id)) fail("parse-error", "missing matrix for arrow '" + a.id + "'");
        r.maps[a.id] = matrix_from_json<K>(maps.at(a.id), r.dim(a.dst), r.dim(a.src));
    }
    Json forms = j.value("forms", Json::object());
    for (auto& e : r.graph.edges) {
        if (!forms.contains(e.id))
            fail("parse-error", "missing Gram matrix for edge '" + e.id + "'");
        r.forms[e.id] = matrix_from_json<K>(forms.at(e.id), r.dim(e.j), r.dim(e.i));
    }
    r.validate();
    return r;
}

// {"matrices": [...]} or a bare array of matrices.
template <class K>
std::vector<Matrix<K>> matrices_from_json(const Json& j) {
    const Json* arr = &j;
    if (j.is_object()) {
        if (!j.contains("matrices")) fail("parse-error", "expected a 'matrices' field");
        arr = &j.at("matrices");
    }
    if (!arr->is_array()) fail("parse-error", "expected an array of matrices");
    std::vector<Matrix<K>> out;
    for (auto& m : *arr) out.push_back(matrix_from_json<K>(m));
    return out;
}

}  // namespace qmx
