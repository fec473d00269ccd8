#include <catch2/catch_amalgamated.hpp>

#include "ncalg/series.hpp"

using namespace ncalg;

namespace {
ZSeries zs(std::initializer_list<long> cs) {
    std::vector<Int> v(cs.begin(), cs.end());
    const int order = static_cast<int>(v.size()) - 1;
    return ZSeries(order, std::move(v));
}
} // namespace

TEST_CASE("series arithmetic basics") {
    ZSeries a = zs({1, 2, 3});
    ZSeries b = zs({0, 1, 1});
    CHECK((a + b) == zs({1, 3, 4}));
    CHECK((a - b) == zs({1, 1, 2}));
    CHECK((a * b) == zs({0, 1, 3}));
    CHECK((-a) == zs({-1, -2, -3}));
    CHECK(ZSeries::one(2) == zs({1, 0, 0}));
    CHECK(ZSeries::monomial(3, 2, Int(5)) == zs({0, 0, 5, 0}));
    CHECK(ZSeries::one_minus_tk(3, 2) == zs({1, 0, -1, 0}));
    CHECK_THROWS_AS(a + ZSeries(5), std::invalid_argument);
    CHECK_THROWS_AS(ZSeries(-1), std::invalid_argument);
}

TEST_CASE("truncate lowers the order only") {
    ZSeries a = zs({1, 2, 3, 4});
    CHECK(a.truncate(1) == zs({1, 2}));
    CHECK_THROWS_AS(a.truncate(5), std::invalid_argument);
}

TEST_CASE("inverse of 1 - 4t + t^2") {
    ZSeries d = zs({1, -4, 1, 0});
    CHECK(d.inverse() == zs({1, 4, 15, 56}));
    CHECK((d * d.inverse()) == ZSeries::one(3));
}

TEST_CASE("integer inverse requires a unit constant term") {
    CHECK_THROWS_AS(zs({2, 1}).inverse(), std::domain_error);
    CHECK(zs({-1, 1}).inverse() == zs({-1, -1}));
}

TEST_CASE("substitute_power and pow") {
    ZSeries a = zs({1, 1, 0, 0, 0});
    CHECK(a.substitute_power(2) == zs({1, 0, 1, 0, 0}));
    CHECK(zs({1, 1, 0}).pow(2) == zs({1, 2, 1}));
    CHECK(zs({1, -1, 0, 0}).pow(-1) == zs({1, 1, 1, 1}));
    CHECK_THROWS_AS(a.substitute_power(0), std::invalid_argument);
}

TEST_CASE("sym_exp of the constant dimension series gives partition numbers") {
    const int n = 9;
    ZSeries f(n);
    for (int r = 1; r <= n; ++r) f.at(r) = 1;
    ZSeries p = sym_exp(f);
    long expect[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
    for (int r = 0; r <= n; ++r) CHECK(p[r] == expect[r]);
}

TEST_CASE("sym_exp with negative entries produces odd factors") {
    // f = -t: (1 - t)^1
    ZSeries f(3);
    f.at(1) = -1;
    CHECK(sym_exp(f) == zs({1, -1, 0, 0}));
    ZSeries bad = ZSeries::one(2);
    CHECK_THROWS_AS(sym_exp(bad), std::domain_error);
}

TEST_CASE("sym_log inverts sym_exp") {
    ZSeries f(8);
    long vals[] = {0, 2, -1, 3, 0, 1, -2, 4, 1};
    for (int r = 0; r <= 8; ++r) f.at(r) = vals[r];
    CHECK(sym_log(sym_exp(f)) == f);
}

TEST_CASE("sym_log requires constant term 1 and inverts sym_exp both ways") {
    CHECK_THROWS_AS(sym_log(zs({2, 1})), std::domain_error);
    // Any integer series with constant term 1 factors as a plethystic
    // exponential of an integer series; sym_exp(sym_log(h)) recovers it.
    ZSeries h = zs({1, 1, 1, 1, 2, -3, 0, 7});
    CHECK(sym_exp(sym_log(h)) == h);
}

TEST_CASE("log and exp are mutually inverse over rationals") {
    QSeries a(6);
    a.at(0) = 1;
    a.at(1) = Rat(1, 2);
    a.at(3) = Rat(-2, 3);
    a.at(5) = Rat(7, 4);
    CHECK(exp_series(log_series(a)) == a);
    QSeries z(4);
    z.at(2) = Rat(1, 3);
    CHECK(log_series(exp_series(z)) == z);
}

TEST_CASE("to_integer rejects true rationals") {
    QSeries q(2);
    q.at(1) = Rat(1, 2);
    CHECK_THROWS_AS(to_integer(q), std::domain_error);
    Rat two(4, 2);
    two.canonicalize();
    q.at(1) = two;
    CHECK(to_integer(q)[1] == 2);
}
