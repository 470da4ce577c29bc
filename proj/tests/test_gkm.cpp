#include "doctest.h"

#include <algorithm>
#include <memory>
#include <set>

#include "cobordism/errors.hpp"
#include "cobordism/gkm.hpp"
#include "cobordism/json_io.hpp"
#include "oracles.hpp"

using namespace cobordism;

namespace {

TorusContext torus(std::size_t rank, int D, Specialization spec = Specialization::universal())
{
    return TorusContext(rank, std::make_shared<const FGLContext>(D, D, spec));
}

PiecewiseClass pair(const TruncSeries& a, const TruncSeries& b) { return PiecewiseClass({a, b}); }

bool has_message(const std::vector<Diagnostic>& d, const std::string& text)
{
    return std::any_of(d.begin(), d.end(), [&](const Diagnostic& x) { return x.message.find(text) != std::string::npos; });
}

} // namespace

TEST_CASE("gkm: validation")
{
    CHECK(gkm_validate(gkm_generate_p1(Character({1}))).empty());
    CHECK(gkm_validate(gkm_generate_pn(3)).empty());
    CHECK(gkm_validate(gkm_generate_flag(3)).empty());

    SUBCASE("valence")
    {
        GKMGraph g(1, 1, {"a", "b"}, {{"a", "b", Character({1})}, {"b", "b", Character({1})}});
        auto d = gkm_validate(g);
        CHECK_FALSE(d.empty());
        CHECK(has_message(d, "valence"));
    }
    SUBCASE("proportional characters")
    {
        GKMGraph g(2, 2, {"a", "b", "c"}, {{"a", "b", Character({1, 0})}, {"a", "c", Character({2, 0})}, {"b", "c", Character({0, 1})}});
        CHECK(has_message(gkm_validate(g), "proportional"));
        CHECK_THROWS_AS(require_valid(g), Error);
    }
    SUBCASE("zero character and unknown vertex")
    {
        GKMGraph g(1, 1, {"a", "b"}, {{"a", "x", Character({0})}});
        auto d = gkm_validate(g);
        CHECK(has_message(d, "zero"));
        CHECK(has_message(d, "unknown"));
    }
}

TEST_CASE("gkm: congruences on P1")
{
    auto ctx = torus(2, 4);
    Character chi({2, -1});
    auto g = gkm_generate_p1(chi);
    CHECK(gkm_is_class(ctx, g, pair(ctx.chern(chi), ctx.zero())));
    CHECK_FALSE(gkm_is_class(ctx, g, pair(ctx.one(), ctx.zero())));
    CHECK(gkm_first_violation(ctx, g, pair(ctx.one(), ctx.zero())) == std::optional<std::size_t>(0));
    auto s = ctx.one() + ts_mul(ctx.t(0), ctx.t(1)) * GradedCoeff::generator(1);
    CHECK(gkm_is_class(ctx, g, constant_class(g, s)));
    CHECK(gkm_is_class(ctx, g, pair(ctx.linear_form(chi), ctx.zero()), Congruence::LinearForm));
    CHECK_THROWS_AS(gkm_is_class(ctx, g, pair(ctx.one().truncated(0), ctx.one().truncated(0))), Error);
}

TEST_CASE("gkm: pushforward of a point")
{
    auto ctx = torus(1, 4);
    Character chi({3});
    auto g = gkm_generate_p1(chi);
    CHECK(gkm_pushforward_point(ctx, g, 0, ctx.one()) == pair(ctx.chern(chi), ctx.zero()));
    CHECK(gkm_pushforward_point(ctx, g, 1, ctx.one()) == pair(ctx.zero(), ctx.chern(-chi)));

    auto ctx2 = torus(2, 4);
    auto f2 = gkm_generate_flag(2);
    CHECK(f2.vertices()[0] == "12");
    CHECK(gkm_pushforward_point(ctx2, f2, 0, ctx2.one()) == pair(ctx2.chern(Character({1, -1})), ctx2.zero()));
    CHECK(gkm_euler_class(ctx2, f2, 1) == ctx2.chern(Character({-1, 1})));
}

TEST_CASE("gkm: integral of 1 on P1 equals (t + rho(t)) / (t rho(t))")
{
    const int D = 7;
    auto ctx = torus(1, D);
    auto g = gkm_generate_p1(Character({1}));
    auto r = gkm_integrate(ctx, g, constant_class(g, ctx.one()));

    auto t = ctx.t(0);
    auto rho = ctx.fgl().inverse().renamed(ctx.vars());
    auto expected = ts_divide_exact(t + rho, ts_mul(t, rho));
    CHECK(r.value.guarantee() == D - 2);
    CHECK(equal_through(r.value, expected));
    CHECK(r.lazard == GradedCoeff::generator(1) * Rational(2));
    CHECK(r.lazard == -ctx.fgl().a_coeff(1, 1));
    CHECK_FALSE(r.pure());

    SUBCASE("multiplicative specialization gives beta")
    {
        Rational beta(5, 3);
        auto mctx = torus(1, D, Specialization::multiplicative(beta));
        auto mr = gkm_integrate(mctx, g, constant_class(g, mctx.one()));
        CHECK(mr.lazard == GradedCoeff(beta));
        CHECK(mr.pure());
    }
}

TEST_CASE("gkm: integral of a point class on P1 is 1")
{
    for (const auto& chi : {Character({1}), Character({2, -3}), Character({1, 1, -2})}) {
        auto ctx = torus(chi.rank(), 5);
        auto g = gkm_generate_p1(chi);
        auto r = gkm_integrate(ctx, g, gkm_pushforward_point(ctx, g, 0, ctx.one()));
        CHECK(equal_through(r.value, ctx.one()));
        CHECK(r.lazard == GradedCoeff(1));
    }
}

TEST_CASE("gkm: additive h^2 on P2 matches the classical residue sum")
{
    const int D = 4;
    auto ctx = torus(2, D, Specialization::additive());
    auto g = gkm_generate_pn(2);
    auto h = hyperplane_class(ctx, g);
    auto r = gkm_integrate(ctx, g, (h * h).truncated(D));
    CHECK(r.lazard == GradedCoeff(1));
    CHECK(equal_through(r.value, ctx.one()));

    // sum_v t_v^2 / prod_{w != v} (t_v - t_w) at t = (0, 2, 5).
    const Rational pt[3] = {0, 2, 5};
    Rational sum = 0;
    for (int v = 0; v < 3; ++v) {
        Rational denom = 1;
        for (int w = 0; w < 3; ++w)
            if (w != v) denom *= pt[v] - pt[w];
        sum += pt[v] * pt[v] / denom;
    }
    CHECK(GradedCoeff(sum) == r.lazard);
}

TEST_CASE("gkm: integration checks its input")
{
    auto ctx = torus(1, 4);
    auto g = gkm_generate_p1(Character({1}));
    try {
        gkm_integrate(ctx, g, pair(ctx.one(), ctx.zero()));
        FAIL("expected NotAClass");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAClass);
    }
    try {
        gkm_integrate(ctx, g, constant_class(g, ctx.one()).truncated(0));
        FAIL("expected TruncationInsufficient");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TruncationInsufficient);
    }
}

TEST_CASE("gkm: integration does not depend on the vertex order")
{
    auto ctx = torus(3, 5);
    auto g = gkm_generate_flag(3);
    auto xs = tautological_classes(ctx, g);
    auto a = (xs[0] * xs[0] * xs[1] + xs[2]).truncated(5);
    auto base = gkm_integrate(ctx, g, a);
    std::vector<std::size_t> order{5, 3, 1, 0, 2, 4};
    CHECK(gkm_integrate(ctx, g, a, order).value == base.value);
    std::reverse(order.begin(), order.end());
    CHECK(gkm_integrate(ctx, g, a, order).value == base.value);
}

TEST_CASE("gkm: basis expansion on P1")
{
    const int D = 4;
    auto ctx = torus(1, D);
    Character chi({1});
    auto g = gkm_generate_p1(chi);
    auto basis = standard_basis(ctx, g);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0][0].render() == "1");
    CHECK(basis[0][1].render() == "1");
    CHECK(basis[1] == pair(ctx.chern(chi), ctx.zero()));

    auto c = gkm_basis_expand(g, basis, pair(ctx.chern(chi), ctx.zero()));
    CHECK(c[0].is_zero());
    CHECK(equal_through(c[1], ctx.one()));

    c = gkm_basis_expand(g, basis, pair(ctx.t(0), ctx.t(0)));
    CHECK(equal_through(c[0], ctx.t(0)));
    CHECK(c[1].is_zero());

    auto point_inf = pair(ctx.zero(), ctx.chern(-chi));
    c = gkm_basis_expand(g, basis, point_inf);
    CHECK(equal_through(c[0], ctx.chern(-chi)));
    // c1 = -c(-chi)/c(chi) = -rho(t)/t
    auto minus_ratio = -ts_divide_exact(ctx.chern(-chi), ctx.chern(chi));
    CHECK(equal_through(c[1], minus_ratio));
    CHECK(c[1].constant_term() == GradedCoeff(1));
    auto rebuilt = basis[0].scaled(c[0]) + basis[1].scaled(c[1]);
    CHECK(equal_through(rebuilt[0], point_inf[0], c[1].guarantee()));
    CHECK(equal_through(rebuilt[1], point_inf[1], c[1].guarantee()));

    CHECK_THROWS_AS(gkm_basis_expand(g, {basis[0]}, point_inf), Error);
    CHECK_THROWS_AS(gkm_basis_expand(g, {basis[0], basis[0]}, point_inf), Error);
}

TEST_CASE("gkm: forgetting to L on P1")
{
    const int D = 4;
    auto ctx = torus(1, D);
    Character chi({1});
    auto g = gkm_generate_p1(chi);
    auto basis = standard_basis(ctx, g);
    auto c = ctx.chern(chi);
    CHECK(gkm_tensor_with_L(g, basis, pair(c, ctx.zero())) == std::vector<GradedCoeff>{0, 1});
    CHECK(gkm_tensor_with_L(g, basis, pair(ts_mul(ctx.t(0), c), ctx.zero())) == std::vector<GradedCoeff>{0, 0});
    CHECK(gkm_tensor_with_L(g, basis, pair(ctx.one() + c, ctx.one())) == std::vector<GradedCoeff>{1, 1});
    CHECK(gkm_tensor_with_L(g, basis, pair(ctx.zero(), ctx.chern(-chi))) == std::vector<GradedCoeff>{0, 1});
}

TEST_CASE("gkm: generated graphs")
{
    auto p1 = gkm_generate_p1(Character({1}));
    CHECK(p1.vertices() == std::vector<std::string>{"0", "inf"});
    CHECK(p1.edges().size() == 1);
    CHECK(p1.dim() == 1);
    CHECK_THROWS_AS(gkm_generate_p1(Character({0, 0})), Error);

    auto f2 = gkm_generate_flag(2);
    CHECK(f2.vertices().size() == 2);
    REQUIRE(f2.edges().size() == 1);
    CHECK(f2.edges()[0].chi == Character({1, -1}));
    auto ctx2 = torus(2, 3);
    auto xs = tautological_classes(ctx2, f2);
    CHECK(xs[0][0].render() == "t1");
    CHECK(xs[0][1].render() == "t2");

    auto f3 = gkm_generate_flag(3);
    CHECK(f3.vertices().size() == 6);
    CHECK(f3.dim() == 3);
    // 6 permutations, 3 transpositions each, every edge counted twice.
    CHECK(f3.edges().size() == 6 * 3 / 2);
    for (std::size_t v = 0; v < f3.vertices().size(); ++v) CHECK(f3.incident(v).size() == 3);

    auto pn = gkm_generate_pn(3);
    CHECK(pn.vertices().size() == 4);
    CHECK(pn.edges().size() == 6);
    CHECK(pn.rank() == 3);

    CHECK(gkm_generate("flag", {3}).edges().size() == 9);
    CHECK_THROWS_AS(gkm_generate("torus", {1}), Error);
}

TEST_CASE("gkm: flag vertices follow length, then lexicographic order")
{
    auto perms = flag_permutations(3);
    std::vector<std::string> ids;
    for (const auto& w : perms) ids.push_back(permutation_id(w));
    CHECK(ids == std::vector<std::string>{"123", "132", "213", "231", "312", "321"});
    CHECK(artin_exponents(3).size() == 6);
}

TEST_CASE("gkm: standard bases are classes")
{
    auto ctx = torus(3, 4);
    for (const auto& g : {gkm_generate_pn(3), gkm_generate_flag(3)}) {
        auto basis = standard_basis(ctx, g);
        CHECK(basis.size() == g.vertices().size());
        for (const auto& b : basis) CHECK(gkm_is_class(ctx, g, b.truncated(4)));
    }
}

TEST_CASE("gkm: graph JSON round trip")
{
    for (const auto& g : {gkm_generate_p1(Character({2, -1})), gkm_generate_pn(2), gkm_generate_flag(3)}) {
        auto text = graph_to_json(g);
        auto back = graph_from_json(text);
        CHECK(back.vertices() == g.vertices());
        CHECK(back.edges().size() == g.edges().size());
        CHECK(graph_to_json(back) == text);
    }
    CHECK_THROWS_AS(graph_from_json("{\"rank\": 1}"), Error);
    CHECK_THROWS_AS(graph_from_json("not json"), Error);
}

TEST_CASE("gkm: class JSON")
{
    auto ctx = torus(1, 4);
    auto g = gkm_generate_p1(Character({1}));
    EvalContext ectx{&ctx.fgl(), ctx.vars(), 4};
    auto in = class_from_json(R"J({"0": "chern([1])", "inf": 0})J", g, ectx);
    CHECK(in.value == pair(ctx.chern(Character({1})), ctx.zero()));
    CHECK_FALSE(in.truncation.has_value());

    auto truncated = class_from_json(R"J({"truncation": 2, "values": {"0": "1", "inf": "1"}})J", g, ectx);
    CHECK(truncated.truncation == std::optional<int>(2));
    CHECK(truncated.value.guarantee() == 2);

    CHECK_THROWS_AS(class_from_json(R"J({"0": "1"})J", g, ectx), Error);
    CHECK_THROWS_AS(class_from_json(R"J({"0": "1", "inf": "1", "x": "1"})J", g, ectx), Error);

    auto text = class_to_json(g, in.value);
    CHECK(class_from_json(text, g, ectx).value == in.value);
}

TEST_CASE("gkm: integrating an expansion term by term agrees with direct integration")
{
    const int D = 5;
    auto ctx = torus(2, D);
    auto g = gkm_generate_pn(2);
    auto basis = standard_basis(ctx, g);
    auto gamma = hyperplane_class(ctx, g);
    for (const auto& beta : basis) {
        auto product = (beta * gamma).truncated(D);
        auto direct = gkm_integrate(ctx, g, product);
        auto coeffs = gkm_basis_expand(g, basis, product, D);
        TruncSeries sum = ctx.zero();
        int through = direct.value.guarantee();
        for (std::size_t k = 0; k < basis.size(); ++k) {
            auto part = gkm_integrate(ctx, g, basis[k].truncated(D));
            auto term = ts_mul(coeffs[k], part.value);
            through = std::min(through, term.guarantee());
            sum += term.truncated(through);
        }
        sum = sum.truncated(through);
        CHECK(through >= 0);
        CHECK(equal_through(sum, direct.value, through));
    }
}

TEST_CASE("gkm: non-homogeneous classes integrate degree by degree")
{
    const int D = 5;
    auto ctx = torus(3, D);
    auto g = gkm_generate_flag(3);
    auto xs = tautological_classes(ctx, g);
    auto m1 = ctx.constant(GradedCoeff::generator(1));
    auto a = (xs[0] * xs[0] * xs[1] + xs[1].scaled(m1) + constant_class(g, ctx.one())).truncated(D);
    auto whole = gkm_integrate(ctx, g, a);

    TruncSeries sum = ctx.zero();
    int through = whole.value.guarantee();
    for (int j : {0, 1, 3}) {
        std::vector<TruncSeries> parts;
        for (std::size_t v = 0; v < a.size(); ++v) parts.push_back(a[v].cohomological_component(j));
        auto r = gkm_integrate(ctx, g, PiecewiseClass(parts));
        through = std::min(through, r.value.guarantee());
        sum += r.value.truncated(through);
    }
    CHECK(equal_through(sum.truncated(through), whole.value, through));
    CHECK(whole.lazard == GradedCoeff(1) + gkm_integrate(ctx, g, constant_class(g, ctx.one()).truncated(D)).lazard +
                              gkm_integrate(ctx, g, xs[1].scaled(m1).truncated(D)).lazard);
}

TEST_CASE("gkm: tautological flag classes are classes")
{
    for (int n = 1; n <= 3; ++n) {
        auto ctx = torus(static_cast<std::size_t>(n), 4);
        auto g = gkm_generate_flag(n);
        for (const auto& x : tautological_classes(ctx, g)) CHECK(gkm_is_class(ctx, g, x.truncated(4)));
    }
}
