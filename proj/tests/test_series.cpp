#include "doctest.h"

#include "cobordism/errors.hpp"
#include "cobordism/fgl.hpp"
#include "cobordism/series.hpp"
#include "oracles.hpp"

using namespace cobordism;

namespace {

const std::vector<std::string> T2{"t1", "t2"};
const std::vector<std::string> T1{"t1"};

TruncSeries t(std::size_t i, int g = 6) { return TruncSeries::variable(T2, i, g); }
TruncSeries one2(int g = 6) { return TruncSeries::constant(T2, 1, g); }

} // namespace

TEST_CASE("series: product of variables")
{
    auto p = ts_mul(t(0), t(1));
    CHECK(p.render() == "t1*t2");
    CHECK(p.coefficient({1, 1}) == GradedCoeff(1));
}

TEST_CASE("series: product with a unit inverse is one")
{
    auto a = one2() + t(0);
    auto inv = ts_invert_unit(a);
    auto prod = ts_mul(a, inv);
    CHECK(equal_through(prod, one2()));
    CHECK(prod.guarantee() >= 6);
}

TEST_CASE("series: product against dense convolution")
{
    const int G = 6;
    auto m1 = GradedCoeff::generator(1);
    auto a = TruncSeries::variable(T1, 0, G) + TruncSeries::monomial(T1, {2}, m1, G);
    auto b = TruncSeries::variable(T1, 0, G) - TruncSeries::monomial(T1, {2}, m1, G);
    auto expected = oracle::to_series(T1, oracle::mul(oracle::from_series(a, G), oracle::from_series(b, G), G), G);
    CHECK(equal_through(ts_mul(a, b), expected));
    CHECK(ts_mul(a, b).guarantee() == G + 1);
    CHECK(ts_mul(a, b).render() == "t1^2 - m1^2*t1^4");
}

TEST_CASE("series: product guarantee uses the lowest degrees")
{
    auto a = TruncSeries::variable(T1, 0, 3);
    auto b = TruncSeries::variable(T1, 0, 5);
    CHECK(ts_mul(a, b).guarantee() == 4);
    CHECK(ts_mul(a, b, 3).guarantee() == 3);
    CHECK(ts_mul(TruncSeries(T1, 2), a).guarantee() == 3);
}

TEST_CASE("series: substitution")
{
    const int G = 5;
    SUBCASE("square of a sum")
    {
        auto f = ts_mul(t(0, G), t(0, G));
        auto s = ts_substitute(f, {{"t1", t(0, G) + t(1, G)}});
        CHECK(s.render() == "t1^2 + 2*t1*t2 + t2^2");
    }
    SUBCASE("linear")
    {
        auto s = ts_substitute(t(0, G), {{"t1", t(0, G) * GradedCoeff(2) + t(1, G)}});
        CHECK(s.render() == "2*t1 + t2");
    }
    SUBCASE("logarithm of the exponential")
    {
        FGLContext fgl(G, G);
        auto composed = ts_substitute(fgl.log(), {{"u", fgl.exp()}});
        CHECK(equal_through(composed, TruncSeries::variable({"u"}, 0, G)));
        CHECK(composed.guarantee() == G);
    }
    SUBCASE("assigned series need zero constant term")
    {
        CHECK_THROWS_AS(ts_substitute(t(0, G), {{"t1", one2(G)}}), Error);
    }
}

TEST_CASE("series: unit inverses")
{
    const int G = 5;
    auto u = TruncSeries::variable(T1, 0, G);
    SUBCASE("geometric series")
    {
        auto inv = ts_invert_unit(TruncSeries::constant(T1, 1, G) - u);
        for (int k = 0; k <= G; ++k) CHECK(inv.coefficient({k}) == GradedCoeff(1));
    }
    SUBCASE("Lazard coefficient")
    {
        auto m1 = GradedCoeff::generator(1);
        auto inv = ts_invert_unit(TruncSeries::constant(T1, 1, G) + u * m1);
        GradedCoeff power(1);
        for (int k = 0; k <= G; ++k) {
            CHECK(inv.coefficient({k}) == (k % 2 ? -power : power));
            power = power * m1;
        }
    }
    SUBCASE("rational constant")
    {
        CHECK(ts_invert_unit(TruncSeries::constant(T1, 2, G)).render() == "1/2");
    }
    SUBCASE("non-units are rejected")
    {
        CHECK_THROWS_AS(ts_invert_unit(u), Error);
        CHECK_THROWS_AS(ts_invert_unit(TruncSeries::constant(T1, GradedCoeff::generator(1), G)), Error);
    }
}

TEST_CASE("series: exact division")
{
    SUBCASE("divisible")
    {
        auto f = ts_mul(t(0), t(1)) + ts_mul(t(1), t(1));
        auto q = ts_divide_exact(f, t(0) + t(1));
        CHECK(q.render() == "t2");
        CHECK(q.guarantee() == 5);
    }
    SUBCASE("not divisible, with the residue at t2 = -t1 as witness")
    {
        auto f = ts_mul(t(0), t(1));
        auto residue = ts_substitute(f, {{"t1", t(0)}, {"t2", -t(0)}});
        CHECK_FALSE(residue.is_zero());
        CHECK(residue.render() == "-t1^2");
        CHECK_FALSE(ts_divides(t(0) + t(1), f));
        try {
            ts_divide_exact(f, t(0) + t(1));
            FAIL("expected NotDivisible");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotDivisible);
        }
    }
    SUBCASE("zero")
    {
        auto q = ts_divide_exact(TruncSeries(T2, 6), t(0));
        CHECK(q.is_zero());
    }
    SUBCASE("division by zero")
    {
        CHECK_THROWS_AS(ts_divide_exact(t(0), TruncSeries(T2, 6)), Error);
    }
}

TEST_CASE("series: compositional inverse")
{
    const int G = 7;
    const std::vector<std::string> U{"u"};
    auto u = TruncSeries::variable(U, 0, G);
    CHECK(ts_compositional_inverse(u) == u);
    CHECK(ts_compositional_inverse(u * GradedCoeff(2)).render() == "1/2*u");

    // u + u^2 inverts to sum (-1)^(k-1) C_(k-1) u^k with Catalan numbers C.
    auto h = ts_compositional_inverse(u + ts_mul(u, u));
    Rational catalan = 1;
    for (int k = 1; k <= G; ++k) {
        Rational expected = (k % 2 ? 1 : -1) * catalan;
        CHECK(h.coefficient({k}) == GradedCoeff(expected));
        int c = k - 1; // C_{c+1} = C_c * 2(2c+1)/(c+2)
        catalan = catalan * Rational(2 * (2 * c + 1), c + 2);
    }
}

TEST_CASE("series: rendering groups shared coefficients")
{
    FGLContext fgl(3, 3);
    CHECK(fgl.law().render() == "u + v - 2*m1*u*v + (4*m1^2 - 3*m2)*(u^2*v + u*v^2)");
    CHECK(TruncSeries(T2, 3).render() == "0");
}

TEST_CASE("series: mismatched variables are rejected")
{
    auto a = TruncSeries::variable(T1, 0, 3);
    CHECK_THROWS_AS(a + t(0), Error);
}
