#include "doctest.h"

#include "cobordism/errors.hpp"
#include "cobordism/fgl.hpp"
#include "oracles.hpp"

using namespace cobordism;
using oracle::m;

namespace {

const std::vector<std::string> U{"u"};

TruncSeries uv(const std::vector<std::pair<Exponents, Rational>>& terms, int g)
{
    TruncSeries out({"u", "v"}, g);
    for (const auto& [e, c] : terms) out.add_term(e, GradedCoeff(c));
    return out;
}

} // namespace

TEST_CASE("fgl: additive law")
{
    FGLContext fgl(5, 5, Specialization::additive());
    CHECK(fgl.law() == uv({{{1, 0}, 1}, {{0, 1}, 1}}, 5));
}

TEST_CASE("fgl: multiplicative law against the closed-form logarithm")
{
    const int D = 8;
    // -ln(1-u) = sum u^k / k.
    oracle::Poly1 log = oracle::zero1(D);
    for (int k = 1; k <= D; ++k) log[static_cast<std::size_t>(k)] = GradedCoeff(Rational(1, k));
    auto expected = oracle::to_series(oracle::law_from_log(log, D), D);

    FGLContext fgl(D, D, Specialization::multiplicative(1));
    CHECK(fgl.law() == expected);
    CHECK(fgl.law() == uv({{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, -1}}, D));
}

TEST_CASE("fgl: universal law against dense composition")
{
    for (int D = 1; D <= 5; ++D) {
        FGLContext fgl(D, D);
        auto expected = oracle::to_series(oracle::law_from_log(oracle::universal_log(D), D), D);
        CHECK(fgl.law() == expected);
    }
    FGLContext fgl(3, 3);
    CHECK(fgl.law().render() == "u + v - 2*m1*u*v + (4*m1^2 - 3*m2)*(u^2*v + u*v^2)");
}

TEST_CASE("fgl: coefficients a_ij")
{
    FGLContext fgl(4, 4);
    CHECK(fgl.a_coeff(1, 0) == GradedCoeff(1));
    CHECK(fgl.a_coeff(0, 0).is_zero());
    CHECK(fgl.a_coeff(1, 1) == m(1) * Rational(-2));
    CHECK(fgl.a_coeff(1, 2) == m(1) * m(1) * Rational(4) - m(2) * Rational(3));
    CHECK_THROWS_AS(fgl.a_coeff(3, 2), Error);

    SUBCASE("multiplicative values")
    {
        Rational beta(3, 2);
        FGLContext mult(4, 4, Specialization::multiplicative(beta));
        CHECK(mult.a_coeff(1, 1) == GradedCoeff(-beta));
        CHECK(mult.a_coeff(1, 2).is_zero());
        CHECK(mult.log_coefficient(1) == GradedCoeff(beta / 2));
        CHECK(mult.log_coefficient(2) == GradedCoeff(beta * beta / 3));
    }
}

TEST_CASE("fgl: n-series")
{
    const int D = 5;
    FGLContext fgl(D, D);
    auto u = TruncSeries::variable(U, 0, D);
    CHECK(fgl.n_series(1) == u);
    CHECK(fgl.n_series(0).is_zero());

    SUBCASE("inverse solved degree by degree")
    {
        // rho = -u - sum_{i,j>=1} a_ij u^i rho^j, iterated.
        oracle::Poly1 rho = oracle::zero1(D);
        rho[1] = -1;
        for (int iter = 0; iter < D; ++iter) {
            oracle::Poly1 next = oracle::zero1(D);
            next[1] = -1;
            oracle::Poly1 rho_power = rho;
            for (int j = 1; j <= D; ++j) {
                oracle::Poly1 upow = oracle::zero1(D);
                upow[0] = 1;
                for (int i = 1; i + j <= D; ++i) {
                    upow = oracle::mul(upow, oracle::from_series(u, D), D);
                    auto term = oracle::mul(upow, rho_power, D);
                    for (int k = 0; k <= D; ++k) next[static_cast<std::size_t>(k)] -= fgl.a_coeff(i, j) * term[static_cast<std::size_t>(k)];
                }
                rho_power = oracle::mul(rho_power, rho, D);
            }
            rho = next;
        }
        CHECK(fgl.n_series(-1) == oracle::to_series(U, rho, D));
        CHECK(fgl.inverse() == fgl.n_series(-1));
        CHECK(fgl.n_series(-1).truncated(2).render() == "-u - 2*m1*u^2");
    }
    SUBCASE("doubling is F(u,u)")
    {
        auto doubled = ts_substitute(fgl.law().renamed({"u", "w"}), {{"u", u}, {"w", u}});
        CHECK(fgl.n_series(2) == doubled);
        CHECK(fgl.n_series(2).truncated(3).render() == "2*u - 2*m1*u^2 + (8*m1^2 - 6*m2)*u^3");
    }
    SUBCASE("multiplicative doubling")
    {
        FGLContext mult(D, D, Specialization::multiplicative(1));
        CHECK(mult.n_series(2).render() == "2*u - u^2");
    }
    SUBCASE("n-series compose")
    {
        auto three = fgl.n_series(3);
        auto composed = ts_substitute(fgl.n_series(-2), {{"u", fgl.n_series(3)}});
        CHECK(composed == fgl.n_series(-6));
        CHECK(three == fgl.add(fgl.n_series(2), u));
    }
}

TEST_CASE("fgl: formal sums")
{
    const int D = 4;
    FGLContext fgl(D, D);
    const std::vector<std::string> T{"t1", "t2", "t3"};
    auto t1 = TruncSeries::variable(T, 0, D), t2 = TruncSeries::variable(T, 1, D), t3 = TruncSeries::variable(T, 2, D);
    CHECK(fgl.formal_sum(T, {t1}) == t1);
    CHECK(fgl.formal_sum(T, {t1, TruncSeries(T, D)}) == t1);
    CHECK(fgl.formal_sum(T, {}).is_zero());
    auto left = fgl.formal_sum(T, {t1, t2, t3});
    CHECK(left == fgl.add(t1, fgl.add(t2, t3)));
    CHECK(left == fgl.add(fgl.add(t1, t2), t3));
}

TEST_CASE("fgl: inverse agrees with e(-l(u))")
{
    FGLContext fgl(6, 6);
    CHECK(fgl.inverse() == fgl.inverse_via_log());
}

TEST_CASE("fgl: coefficient truncation drops higher generators")
{
    FGLContext fgl(1, 4);
    CHECK(fgl.law().max_generator() <= 1);
    CHECK(fgl.a_coeff(1, 2) == m(1) * m(1) * Rational(4));
}

TEST_CASE("fgl: specialization parsing")
{
    CHECK(Specialization::parse("universal").kind == Specialization::Kind::Universal);
    CHECK(Specialization::parse("additive").kind == Specialization::Kind::Additive);
    auto s = Specialization::parse("multiplicative:-2/3");
    CHECK(s.kind == Specialization::Kind::Multiplicative);
    CHECK(s.beta == Rational(-2, 3));
    CHECK(s.name() == "multiplicative:-2/3");
    CHECK(Specialization::parse("multiplicative").beta == 1);
    CHECK_THROWS_AS(Specialization::parse("mult"), Error);
    CHECK_THROWS_AS(Specialization::parse("multiplicative:x"), Error);
}

TEST_CASE("fgl: invalid sizes")
{
    CHECK_THROWS_AS(FGLContext(-1, 3), Error);
    CHECK_THROWS_AS(FGLContext(2, 0), Error);
}
