#include <catch2/catch_amalgamated.hpp>

#include "ncalg/monomial.hpp"

using namespace ncalg;

namespace {
const std::vector<Letter> kXY{{"x", 1}, {"y", 1}};

Word word(const MonomialPresentation& p, const std::string& letters) {
    Word w;
    for (char c : letters) w.push_back(p.letter_index(std::string(1, c)));
    return w;
}
} // namespace

TEST_CASE("non_overlapping conventions") {
    MonomialPresentation p = make_monomial(kXY, {});
    CHECK(non_overlapping(word(p, "xy"), word(p, "xy")));
    CHECK(!non_overlapping(word(p, "xx"), word(p, "xx")));
    CHECK(non_overlapping(word(p, "xxyy"), word(p, "xyxyy")));
    CHECK(!non_overlapping(word(p, "xy"), word(p, "yx")));       // suffix y = prefix y
    CHECK(!non_overlapping(word(p, "xyx"), word(p, "y")));       // subword
    CHECK(!non_overlapping(word(p, "xyxy"), word(p, "xyxy")));   // proper shift overlap
}

TEST_CASE("strongly_free on the catalog") {
    CHECK(strongly_free(make_monomial(kXY, {{"x", "y"}})));
    CHECK(!strongly_free(make_monomial(kXY, {{"x", "x"}})));
    CHECK(strongly_free(make_monomial(kXY, {{"x", "x", "y", "y"}, {"x", "y", "x", "y", "y"}})));
    CHECK(strongly_free(make_monomial(kXY, {{"x", "x", "x", "y"}})));
    CHECK(!strongly_free(make_monomial(kXY, {{"x", "y"}, {"x", "y"}})));  // duplicate
}

TEST_CASE("normal words of C<x,y>/(xy)") {
    ZSeries s = count_normal_words(make_monomial(kXY, {{"x", "y"}}), 8);
    for (int r = 0; r <= 8; ++r) CHECK(s[r] == r + 1);
}

TEST_CASE("normal words of the free algebra") {
    ZSeries s = count_normal_words(make_monomial(kXY, {}), 6);
    for (int r = 0; r <= 6; ++r) CHECK(s[r] == (Int(1) << r));
}

TEST_CASE("normal words of {xxyy} match 1/(1 - 2t + t^4)") {
    ZSeries s = count_normal_words(make_monomial(kXY, {{"x", "x", "y", "y"}}), 10);
    ZSeries den(10);
    den.at(0) = 1;
    den.at(1) = -2;
    den.at(4) = 1;
    CHECK(s == den.inverse());
}

TEST_CASE("weighted alphabet walk counting") {
    // x of degree 1, z of degree 2, no relations: counts of weight-r words
    // satisfy the Fibonacci-style recurrence a_r = a_{r-1} + a_{r-2}.
    ZSeries s = count_normal_words(make_monomial({{"x", 1}, {"z", 2}}, {}), 8);
    ZSeries den(8);
    den.at(0) = 1;
    den.at(1) = -1;
    den.at(2) = -1;
    CHECK(s == den.inverse());
}

TEST_CASE("cyclic avoidance counts") {
    // C<x,y>/(xy): only x^n and y^n survive cyclically.
    ZSeries s = count_cyclic_avoiding(make_monomial(kXY, {{"x", "y"}}), 7);
    CHECK(s[0] == 0);
    for (int r = 1; r <= 7; ++r) CHECK(s[r] == 2);
    // Free: binary necklace numbers.
    ZSeries f = count_cyclic_avoiding(make_monomial(kXY, {}), 6);
    long necklaces[] = {0, 2, 3, 4, 6, 8, 14};
    for (int r = 1; r <= 6; ++r) CHECK(f[r] == necklaces[r]);
    // {xxyy} at weight 4 kills exactly one of the six necklaces.
    ZSeries g = count_cyclic_avoiding(make_monomial(kXY, {{"x", "x", "y", "y"}}), 4);
    CHECK(g[4] == 5);
}

TEST_CASE("cyclic factor wraps around the necklace boundary") {
    // yx is a cyclic factor of xy: necklace xy dies under relation yx.
    ZSeries s = count_cyclic_avoiding(make_monomial(kXY, {{"y", "x"}}), 2);
    CHECK(s[2] == 2);  // only xx and yy remain
}

TEST_CASE("admissible search reproduces the worked examples") {
    AdmissibleResult r4 = admissible_search({1, 1}, {4});
    REQUIRE(r4.status == SearchStatus::Found);
    CHECK(r4.witness.size() == 1);

    AdmissibleResult r45 = admissible_search({1, 1}, {4, 5});
    REQUIRE(r45.status == SearchStatus::Found);
    CHECK(non_overlapping(r45.witness[0], r45.witness[1]));

    for (int s = 2; s <= 6; ++s) {
        AdmissibleResult none = admissible_search({1, 1}, {2, s});
        CHECK(none.status == SearchStatus::NoneExhaustive);
    }

    AdmissibleResult tight = admissible_search({1, 1}, {6, 6, 6}, 5);
    CHECK(tight.status == SearchStatus::Inconclusive);
}

TEST_CASE("automaton death states absorb suffix hits") {
    // Relation yx must also be caught when entered via the failure link.
    MonomialPresentation p = make_monomial(kXY, {{"y", "x"}});
    AvoidanceAutomaton aut(p);
    int s = aut.step(0, p.letter_index("x"));
    s = aut.step(s, p.letter_index("y"));
    s = aut.step(s, p.letter_index("x"));  // word xyx contains yx
    CHECK(aut.dead(s));
}

TEST_CASE("presentation validation") {
    CHECK_THROWS_AS(make_monomial({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(make_monomial({{"x", 0}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(make_monomial(kXY, {{"q"}}), std::invalid_argument);
}
