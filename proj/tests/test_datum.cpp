#include <catch2/catch_amalgamated.hpp>

#include "ncalg/datum.hpp"
#include "ncalg/prepro.hpp"
#include "ncalg/quiver.hpp"

using namespace ncalg;

TEST_CASE("datum built from a presentation reduces dependent relations") {
    Quiver q = loop_quiver(2);
    NCPoly rel1, rel2;
    rel1.tail = rel1.head = 0;
    rel1.weight = 2;
    rel1.terms.emplace_back(Rat(1), std::vector<int>{0, 1});
    rel2 = rel1;  // dependent copy
    Presentation pr{q, {rel1, rel2}};
    VLDatum d = datum_from_presentation(pr, 4);
    CHECK(d.dimsV[0][0][1] == 2);
    CHECK(d.dimsL[0][0][2] == 1);  // rank 1, not 2
    CHECK(d.m[2] == 0);            // xy is not cyclic
}

TEST_CASE("preprojective datum agrees with its own oracle m") {
    PreprojectiveData pd = preprojective_datum(cycle_quiver(3), 4);
    VLDatum from_pres = datum_from_presentation(pd.presentation, 4);
    CHECK(from_pres.dimsV == pd.datum.dimsV);
    CHECK(from_pres.dimsL == pd.datum.dimsL);
    CHECK(from_pres.m == pd.datum.m);
}

TEST_CASE("lambda and zeta assemble hilbert_OA") {
    PreprojectiveData pd = preprojective_datum(loop_quiver(2), 6);
    ZSeries lam = lambda_poly(pd.datum);
    CHECK(lam == ZSeries::one_minus_tk(6, 2));
    CHECK(hilbert_OA(pd.datum) == zeta(pd.datum) * lam.inverse());
}

TEST_CASE("hochschild series satisfy the Euler identity") {
    PreprojectiveData pd = preprojective_datum(loop_quiver(2), 6);
    HochschildSeries hh = hochschild_series(pd.datum);
    ZSeries euler(6);
    euler.at(0) = 1;  // |I|
    euler = euler - hh.hh0 + hh.hh1 - hh.hh2;
    CHECK(euler.is_zero());
    CHECK(hh.hh2 == ZSeries::monomial(6, 2, Int(1)));
    CHECK(hh.hh0[0] == 1);
}

TEST_CASE("free product of two polynomial rings is the free algebra on two variables") {
    // h(C[x]) = 1/(1 - t); h(C[x] * C[y]) = 1/(1 - 2t).
    ZMatSeries h1(1, 6);
    h1(0, 0) = ZSeries::one_minus_tk(6, 1).inverse();
    ZMatSeries res = free_product_hilbert(h1, h1);
    ZSeries two(6);
    two.at(0) = 1;
    two.at(1) = -2;
    CHECK(res(0, 0) == two.inverse());
}

TEST_CASE("circ product with D = base ring is the identity operation") {
    PreprojectiveData pd = preprojective_datum(loop_quiver(2), 6);
    ZMatSeries hV = hilbert_V(pd.datum), hL = hilbert_L(pd.datum);
    ZMatSeries hD = ZMatSeries::identity(1, 6);
    CHECK(circ_product_hilbert(hV, hL, hD) == hilbert_A(pd.datum));
    // And the moduli series degenerates to zeta / lambda_Q.
    ZSeries o = circ_product_OA(hV, hL, hD, ZSeries::one(6), {0, 0, 1});
    CHECK(o == hilbert_OA(pd.datum));
}

TEST_CASE("datum validation") {
    VLDatum d = VLDatum::empty(2, 3);
    CHECK_NOTHROW(d.validate());
    d.dimsV[0][0][0] = 1;
    CHECK_THROWS_AS(d.validate(), std::invalid_argument);
}
