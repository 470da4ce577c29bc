#include "doctest.h"

#include <memory>

#include "cobordism/errors.hpp"
#include "cobordism/flag.hpp"

using namespace cobordism;

namespace {

TruncSeries x(int n, std::size_t i) { return TruncSeries::variable(flag_vars(n), i, kExactGuarantee); }

TorusContext torus(std::size_t rank, int D = 4)
{
    return TorusContext(rank, std::make_shared<const FGLContext>(D, D));
}

} // namespace

TEST_CASE("flag: normal forms")
{
    CHECK(coinv_normal_form(2, x(2, 1)).render() == "-x1");
    CHECK(coinv_normal_form(2, ts_mul(x(2, 0), x(2, 0))).is_zero());
    CHECK(coinv_normal_form(3, elementary_symmetric(3, 2)).is_zero());
    CHECK(coinv_normal_form(3, elementary_symmetric(3, 3)).is_zero());

    // x1^2 = x1 e1 - e2 for n = 2
    auto lhs = ts_mul(x(2, 0), x(2, 0));
    auto rhs = ts_mul(x(2, 0), elementary_symmetric(2, 1)) - elementary_symmetric(2, 2);
    CHECK(lhs == rhs);

    // Normal forms are supported on Artin monomials and are idempotent.
    auto p = ts_mul(ts_mul(x(3, 2), x(3, 2)), x(3, 1)) + x(3, 2) * GradedCoeff(Rational(2, 3));
    auto nf = coinv_normal_form(3, p);
    for (const auto& [e, c] : nf.terms()) {
        CHECK(e[0] <= 2);
        CHECK(e[1] <= 1);
        CHECK(e[2] == 0);
    }
    CHECK(coinv_normal_form(3, nf) == nf);
    CHECK(coinv_normal_form(3, p - nf).is_zero());

    CHECK_THROWS_AS(coinv_normal_form(3, x(2, 0)), Error);
}

TEST_CASE("flag: ranks")
{
    auto r2 = coinv_rank(2);
    CHECK(r2.rank == 2);
    CHECK(r2.basis == std::vector<Exponents>{{0, 0}, {1, 0}});
    CHECK(coinv_rank(3).rank == 6);
    CHECK(coinv_rank(4).rank == 24);
    auto r1 = coinv_rank(1);
    CHECK(r1.rank == 1);
    CHECK(r1.basis == std::vector<Exponents>{{0}});
}

TEST_CASE("flag: restrictions to fixed points")
{
    auto ctx = torus(2);
    auto g = gkm_generate_flag(2);
    auto r = flag_restriction(ctx, g, x(2, 0));
    CHECK(r[0].render() == "t1");
    CHECK(r[1].render() == "t2");
    CHECK(r[0].guarantee() == kExactGuarantee);

    auto one = flag_restriction(ctx, g, TruncSeries::constant(flag_vars(2), 1, kExactGuarantee));
    CHECK(one[0].constant_term() == GradedCoeff(1));
    CHECK(one[1] == one[0]);

    auto ctx3 = torus(3);
    auto g3 = gkm_generate_flag(3);
    auto e1 = flag_restriction(ctx3, g3, elementary_symmetric(3, 1));
    for (std::size_t v = 0; v < e1.size(); ++v) CHECK(e1[v] == e1[0]);
    CHECK(e1[0].render() == "t1 + t2 + t3");
}

TEST_CASE("flag: kernel check")
{
    auto ctx3 = torus(3);
    auto k = flag_kernel_check(ctx3, elementary_symmetric(3, 1));
    CHECK(k.normal_form_zero);
    CHECK(k.gkm_zero);

    auto ctx2 = torus(2);
    k = flag_kernel_check(ctx2, x(2, 0));
    CHECK_FALSE(k.normal_form_zero);
    CHECK_FALSE(k.gkm_zero);
    CHECK(k.coordinates == std::vector<GradedCoeff>{0, 1});

    k = flag_kernel_check(ctx2, ts_mul(x(2, 0), x(2, 0)));
    CHECK(k.normal_form_zero);
    CHECK(k.gkm_zero);

    k = flag_kernel_check(ctx3, ts_mul(x(3, 0), x(3, 1)) - ts_mul(x(3, 2), x(3, 2)));
    CHECK(k.agree());
}

TEST_CASE("flag: symmetric polynomials")
{
    CHECK(elementary_symmetric(3, 2).render() == "x1*x2 + x1*x3 + x2*x3");
    CHECK(complete_symmetric(3, 2, 2).render() == "x1^2 + x1*x2 + x2^2");
    CHECK(elementary_symmetric(3, 4).is_zero());
}
