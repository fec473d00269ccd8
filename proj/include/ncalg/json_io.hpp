#pragma once

// JSON (de)serialization for the file formats consumed by the CLI:
// quivers, datums, presentations (path-algebra and monomial), and series.
// Big integers travel as decimal strings; plain JSON numbers are also
// accepted on input for convenience.

#include <string>
#include <vector>

#include "json.hpp"

#include "ncalg/algebra.hpp"
#include "ncalg/datum.hpp"
#include "ncalg/monomial.hpp"
#include "ncalg/quiver.hpp"
#include "ncalg/series.hpp"

namespace ncalg {

using Json = nlohmann::json;

namespace detail {

inline Int json_to_int(const Json& j, const char* what) {
    if (j.is_string()) return Int(j.get<std::string>());
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    throw std::invalid_argument(std::string(what) + ": expected integer or decimal string");
}

inline Rat json_to_rat(const Json& j, const char* what) {
    if (j.is_string()) {
        Rat q(j.get<std::string>());
        q.canonicalize();
        return q;
    }
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    throw std::invalid_argument(std::string(what) + ": expected rational as decimal string");
}

} // namespace detail

// ---- Series ----

inline Json series_to_json(const ZSeries& s) {
    Json coeffs = Json::array();
    for (const Int& c : s.coeffs()) coeffs.push_back(c.get_str());
    return Json{{"order", s.order()}, {"coeffs", coeffs}};
}

inline ZSeries series_from_json(const Json& j) {
    if (!j.contains("order") || !j.contains("coeffs"))
        throw std::invalid_argument("series: need 'order' and 'coeffs'");
    int order = j.at("order").get<int>();
    std::vector<Int> v;
    for (const Json& c : j.at("coeffs")) v.push_back(detail::json_to_int(c, "series"));
    if (static_cast<int>(v.size()) != order + 1)
        throw std::invalid_argument("series: coeffs length must be order + 1");
    return ZSeries(order, std::move(v));
}

inline Json mat_series_to_json(const ZMatSeries& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(series_to_json(m(i, j)));
        rows.push_back(row);
    }
    return Json{{"dim", m.dim()}, {"order", m.order()}, {"entries", rows}};
}

// ---- Quiver ----

inline Json quiver_to_json(const Quiver& q) {
    Json vertices = Json::array();
    for (const std::string& v : q.vertices()) vertices.push_back(v);
    Json edges = Json::array();
    for (const Edge& e : q.edges())
        edges.push_back(Json{{"tail", q.vertices()[static_cast<size_t>(e.tail)]},
                             {"head", q.vertices()[static_cast<size_t>(e.head)]},
                             {"degree", e.degree},
                             {"name", e.name}});
    return Json{{"vertices", vertices}, {"edges", edges}};
}

inline Quiver quiver_from_json(const Json& j) {
    if (!j.contains("vertices") || !j.contains("edges"))
        throw std::invalid_argument("quiver: need 'vertices' and 'edges'");
    Quiver q;
    for (const Json& v : j.at("vertices")) q.add_vertex(v.get<std::string>());
    for (const Json& e : j.at("edges")) {
        int tail = q.vertex_index(e.at("tail").get<std::string>());
        int head = q.vertex_index(e.at("head").get<std::string>());
        int degree = e.value("degree", 1);
        std::string name = e.value("name", std::string{});
        q.add_edge(tail, head, degree, std::move(name));
    }
    return q;
}

// ---- Path-algebra presentation ----
// {"quiver": {...}, "relations": [[{"coeff":"-1","path":["a*","a"]}, ...], ...]}

inline Presentation presentation_from_json(const Json& j) {
    Presentation pr;
    pr.quiver = quiver_from_json(j.at("quiver"));
    if (j.contains("relations"))
        for (const Json& rel : j.at("relations")) {
            std::vector<std::pair<Rat, std::vector<std::string>>> terms;
            for (const Json& term : rel) {
                Rat coeff = term.contains("coeff") ? detail::json_to_rat(term.at("coeff"), "relation")
                                                   : Rat(1);
                std::vector<std::string> path;
                for (const Json& nm : term.at("path")) path.push_back(nm.get<std::string>());
                terms.emplace_back(coeff, std::move(path));
            }
            pr.relations.push_back(make_relation(pr.quiver, terms));
        }
    return pr;
}

// ---- Datum ----
// {"vertices": n, "order": N, "dimsV": [[[...]]], "dimsL": [[[...]]], "m": [...]}
// A missing dims block means zero; a "preprojective" shortcut builds the
// datum from a quiver.

inline VLDatum datum_from_json(const Json& j, int order) {
    VLDatum d = VLDatum::empty(j.at("vertices").get<int>(), order);
    auto load = [&](const char* key, std::vector<std::vector<std::vector<long>>>& dims) {
        if (!j.contains(key)) return;
        const Json& block = j.at(key);
        for (size_t i = 0; i < block.size(); ++i)
            for (size_t k = 0; k < block[i].size(); ++k)
                for (size_t r = 0; r < block[i][k].size(); ++r) {
                    if (static_cast<int>(i) >= d.num_vertices ||
                        static_cast<int>(k) >= d.num_vertices)
                        throw std::invalid_argument("datum: dims block exceeds vertex count");
                    if (static_cast<int>(r) <= order)
                        dims[i][k][r] = block[i][k][r].get<long>();
                }
    };
    load("dimsV", d.dimsV);
    load("dimsL", d.dimsL);
    if (j.contains("m")) {
        const Json& m = j.at("m");
        for (size_t r = 0; r < m.size(); ++r)
            if (static_cast<int>(r) <= order) d.m[r] = m[r].get<long>();
    }
    d.validate();
    return d;
}

// ---- Monomial presentation ----
// {"alphabet":[{"name":"x","degree":1}],"relations":[["x","y"]]}

inline MonomialPresentation monomial_from_json(const Json& j) {
    std::vector<Letter> alphabet;
    for (const Json& l : j.at("alphabet"))
        alphabet.push_back(Letter{l.at("name").get<std::string>(), l.value("degree", 1)});
    std::vector<std::vector<std::string>> rels;
    if (j.contains("relations"))
        for (const Json& w : j.at("relations")) {
            std::vector<std::string> word;
            for (const Json& nm : w) word.push_back(nm.get<std::string>());
            rels.push_back(std::move(word));
        }
    return make_monomial(std::move(alphabet), rels);
}

inline Json monomial_to_json(const MonomialPresentation& p) {
    Json alphabet = Json::array();
    for (const Letter& l : p.alphabet)
        alphabet.push_back(Json{{"name", l.name}, {"degree", l.degree}});
    Json rels = Json::array();
    for (const Word& w : p.relations) {
        Json word = Json::array();
        for (int a : w) word.push_back(p.alphabet[static_cast<size_t>(a)].name);
        rels.push_back(word);
    }
    return Json{{"alphabet", alphabet}, {"relations", rels}};
}

} // namespace ncalg
