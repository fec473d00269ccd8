#include <catch2/catch_amalgamated.hpp>

#include "ncalg/json_io.hpp"

using namespace ncalg;

TEST_CASE("series roundtrip with big integers as decimal strings") {
    ZSeries s(3);
    s.at(0) = 1;
    s.at(2) = Int("123456789012345678901234567890");
    s.at(3) = -7;
    Json j = series_to_json(s);
    CHECK(j.at("coeffs")[2].get<std::string>() == "123456789012345678901234567890");
    CHECK(series_from_json(j) == s);
}

TEST_CASE("series accepts plain JSON integers on input") {
    Json j{{"order", 2}, {"coeffs", {1, -4, 1}}};
    ZSeries s = series_from_json(j);
    CHECK(s[1] == -4);
    CHECK_THROWS_AS(series_from_json(Json{{"order", 2}, {"coeffs", {1}}}), std::invalid_argument);
}

TEST_CASE("quiver roundtrip through the documented schema") {
    Json j = Json::parse(R"({
      "vertices": ["0", "1"],
      "edges": [{"tail": "0", "head": "1", "degree": 1}]
    })");
    Quiver q = quiver_from_json(j);
    CHECK(q.num_vertices() == 2);
    CHECK(q.edge(0).head == 1);
    Quiver back = quiver_from_json(quiver_to_json(q));
    CHECK(back.num_edges() == 1);
    CHECK(back.edge(0).name == q.edge(0).name);
}

TEST_CASE("presentation with relation terms") {
    Json j = Json::parse(R"({
      "quiver": {
        "vertices": ["0"],
        "edges": [{"tail": "0", "head": "0", "name": "a"},
                  {"tail": "0", "head": "0", "name": "a*"}]
      },
      "relations": [[{"coeff": "1", "path": ["a", "a*"]},
                     {"coeff": "-1", "path": ["a*", "a"]}]]
    })");
    Presentation pr = presentation_from_json(j);
    REQUIRE(pr.relations.size() == 1);
    CHECK(pr.relations[0].weight == 2);
    CHECK(pr.relations[0].terms[1].first == Rat(-1));
}

TEST_CASE("monomial presentation schema") {
    Json j = Json::parse(R"({
      "alphabet": [{"name": "x", "degree": 1}, {"name": "y", "degree": 1}],
      "relations": [["x", "y"]]
    })");
    MonomialPresentation p = monomial_from_json(j);
    CHECK(p.relations.size() == 1);
    CHECK(strongly_free(p));
    Json back = monomial_to_json(p);
    CHECK(back.at("relations")[0][1].get<std::string>() == "y");
}

TEST_CASE("datum schema with zero-defaulted blocks") {
    Json j = Json::parse(R"({"vertices": 1, "dimsV": [[[0, 2]]], "m": [0, 0, 1]})");
    VLDatum d = datum_from_json(j, 4);
    CHECK(d.dimsV[0][0][1] == 2);
    CHECK(d.m[2] == 1);
    CHECK(d.dimsL[0][0][2] == 0);
    Json bad = Json::parse(R"({"vertices": 1, "dimsV": [[[1]]]})");
    CHECK_THROWS_AS(datum_from_json(bad, 4), std::invalid_argument);
}
