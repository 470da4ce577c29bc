#include "doctest.h"

#include <cstdlib>
#include <memory>
#include <sstream>

#include "cobordism/cli.hpp"
#include "cobordism/equivariant.hpp"
#include "cobordism/errors.hpp"
#include "cobordism/expression.hpp"

using namespace cobordism;

namespace {

CommandResult run(const std::vector<std::string>& args) { return run_command(args); }

CommandResult run(const std::vector<std::string>& args, const std::string& input)
{
    std::istringstream in(input);
    return run_command(args, in);
}

std::string p1_graph() { return run({"gkm", "gen", "p1", "--char", "1"}).out; }

std::string parse_error(const std::string& text)
{
    try {
        parse_expression(text);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("expression: parsing")
{
    auto e = parse_expression("t1 + 2/3*m1*t1*t2");
    REQUIRE(e->kind == Expr::Kind::Add);
    CHECK(e->args[0]->kind == Expr::Kind::Ident);
    CHECK(e->args[1]->kind == Expr::Kind::Mul);

    auto f = parse_expression("F(t1, rho(t2))");
    REQUIRE(f->kind == Expr::Kind::Call);
    CHECK(f->function == "F");
    CHECK(f->args[1]->function == "rho");

    auto left = parse_expression("t1 - t2 - t3");
    REQUIRE(left->kind == Expr::Kind::Sub);
    CHECK(left->args[0]->kind == Expr::Kind::Sub);

    auto power = parse_expression("2*t1^3");
    REQUIRE(power->kind == Expr::Kind::Mul);
    CHECK(power->args[1]->kind == Expr::Kind::Pow);
    CHECK(power->args[1]->exponent == 3);

    auto ch = parse_expression("chern([1, -2, 0])");
    CHECK(ch->ints == std::vector<long>{1, -2, 0});
    CHECK(parse_expression("nser(-2, t1)")->ints == std::vector<long>{-2});
}

TEST_CASE("expression: syntax errors carry a location")
{
    CHECK(parse_error("t1 +* t2").find("line 1, column 4") != std::string::npos);
    CHECK(parse_error("t1 + (t2").find("line 1") != std::string::npos);
    CHECK(parse_error("t1\n+ y2").find("line 2, column 3") != std::string::npos);
    CHECK_FALSE(parse_error("q1").empty());
    CHECK_FALSE(parse_error("t1 t2").empty());
    CHECK_FALSE(parse_error("F(t1)").empty());
    CHECK_FALSE(parse_error("").empty());
}

TEST_CASE("expression: rendering round trips")
{
    for (const char* text : {"t1 + 2/3*m1*t1*t2", "F(t1, rho(t2))", "(t1 + t2)^2", "t1 - (t2 - t3)", "-t1^2",
                             "(-t1)^2", "t1^-1", "nser(-3, t1*t2)", "chern([1,-1])", "t1*(t2*t3)", "--t1", "t1 + -t2"}) {
        auto e = parse_expression(text);
        auto rendered = render_expression(*e);
        CHECK(*parse_expression(rendered) == *e);
        CHECK(render_expression(*parse_expression(rendered)) == rendered);
    }
    CHECK(render_expression(*parse_expression("((t1))*(t2)")) == "t1*t2");
    CHECK(render_expression(*parse_expression("t1 + (t2 + t3)")) == "t1 + (t2 + t3)");
}

TEST_CASE("expression: evaluation")
{
    const int D = 4;
    auto fgl = std::make_shared<const FGLContext>(D, D);
    TorusContext ctx(2, fgl);
    EvalContext ectx{fgl.get(), ctx.vars(), D};

    // F(t1, rho(t2)) is the Chern class of chi1 - chi2.
    CHECK(evaluate("F(t1, rho(t2))", ectx) == ctx.chern(Character({1, -1})));
    CHECK(evaluate("chern([2,-1])", ectx) == ctx.chern(Character({2, -1})));
    CHECK(evaluate("nser(3, t1)", ectx) == ctx.chern(Character({3, 0})));
    CHECK(evaluate("t1 + 2/3*m1*t1*t2", ectx).render() == "t1 + 2/3*m1*t1*t2");
    CHECK(evaluate("(1 + t1)^-1 * (1 + t1)", ectx) == ctx.one());
    CHECK_THROWS_AS(evaluate("x1", ectx), Error);
    CHECK_THROWS_AS(evaluate("t1^-1", ectx), Error);
    CHECK_THROWS_AS(evaluate("t3", ectx), Error);

    FGLContext additive(D, D, Specialization::additive());
    EvalContext actx{&additive, ctx.vars(), D};
    CHECK(evaluate("m1 + F(t1, t2)", actx).render() == "t1 + t2");
}

TEST_CASE("cli: documented examples")
{
    auto law = run({"fgl", "print", "--deg", "3", "--spec", "universal"});
    CHECK(law.status == 0);
    CHECK(law.out == "u + v - 2*m1*u*v + (4*m1^2 - 3*m2)*(u^2*v + u*v^2)\n");

    auto total = run({"gkm", "integrate", "--class", R"J({"0":"1","inf":"1"})J", "--deg", "6"}, p1_graph());
    CHECK(total.status == 0);
    CHECK(total.out == "2*m1\n");

    auto rank = run({"flag", "rank", "--rank", "3"});
    CHECK(rank.status == 0);
    CHECK(rank.out == "6\n");
}

TEST_CASE("cli: fgl commands")
{
    CHECK(run({"fgl", "nseries", "-1", "--deg", "2"}).out == "-u - 2*m1*u^2\n");
    CHECK(run({"fgl", "acoeff", "1", "2", "--deg", "3"}).out == "4*m1^2 - 3*m2\n");
    CHECK(run({"fgl", "print", "--deg", "4", "--spec", "multiplicative:2"}).out == "u + v - 2*u*v\n");
    CHECK(run({"fgl", "print", "--what", "log", "--deg", "3", "--coeff-deg", "1"}).out == "u + m1*u^2\n");
    auto defaulted = run({"fgl", "acoeff", "1", "1"});
    CHECK(defaulted.out == "# deg 2 (default)\n-2*m1\n");
}

TEST_CASE("cli: default degree header and environment override")
{
    auto r = run({"gkm", "integrate", "--class", R"J({"0":"1","inf":"1"})J"}, p1_graph());
    CHECK(r.status == 0);
    CHECK(r.out == "# deg 3 (default)\n2*m1\n");

    setenv("COBORDISM_DEFAULT_DEG", "5", 1);
    r = run({"gkm", "integrate", "--class", R"J({"0":"1","inf":"1"})J"}, p1_graph());
    CHECK(r.out == "# deg 5 (COBORDISM_DEFAULT_DEG)\n2*m1\n");
    setenv("COBORDISM_DEFAULT_DEG", "zero", 1);
    CHECK(run({"gkm", "integrate", "--class", R"J({"0":"1","inf":"1"})J"}, p1_graph()).status == 2);
    unsetenv("COBORDISM_DEFAULT_DEG");
}

TEST_CASE("cli: gkm commands")
{
    const std::string graph = p1_graph();
    CHECK(run({"gkm", "check", "--class", R"J({"0":"chern([1])","inf":"0"})J", "--deg", "3"}, graph).out == "true\n");
    auto bad = run({"gkm", "check", "--class", R"J({"0":"1","inf":"0"})J", "--deg", "3"}, graph);
    CHECK(bad.status == 1);
    CHECK(bad.out == "false\n");
    CHECK(run({"gkm", "forget", "--class", R"J({"0":"0","inf":"chern([-1])"})J", "--deg", "3"}, graph).out == "(0, 1)\n");
    auto expand = run({"gkm", "expand", "--class", R"J({"0":"t1","inf":"t1"})J", "--deg", "3"}, graph);
    CHECK(expand.out == "t1\n0\n");
    auto full = run({"gkm", "integrate", "--full", "--class", R"J({"0":"chern([1])","inf":"0"})J", "--deg", "3"}, graph);
    CHECK(full.out == "1\n");
    auto pn = run({"gkm", "gen", "pn", "2"}).out;
    CHECK(run({"gkm", "integrate", "--spec", "additive", "--class", R"J({"0":"0","1":"t1^2","2":"t2^2"})J", "--deg", "4"}, pn).out ==
          "1\n");
}

TEST_CASE("cli: flag commands")
{
    CHECK(run({"flag", "nf", "x2", "--rank", "2"}).out == "-x1\n");
    CHECK(run({"flag", "kernel", "x1^2", "--rank", "2"}).out == "true\n");
    CHECK(run({"flag", "kernel", "x1", "--rank", "2"}).out == "false\n");
    CHECK(run({"flag", "rank", "--rank", "2", "--list"}).out == "2\n1, x1\n");
}

TEST_CASE("cli: exit statuses")
{
    CHECK(run({}).status == 2);
    CHECK(run({"fgl"}).status == 2);
    CHECK(run({"fgl", "print", "--deg", "x"}).status == 2);
    CHECK(run({"flag", "nf", "x1 +* x2", "--rank", "2"}).status == 2);
    CHECK(run({"flag", "rank"}).status == 2);
    CHECK(run({"gkm", "integrate", "--class", "{}"}, "").status == 2);

    auto not_class = run({"gkm", "integrate", "--class", R"J({"0":"1","inf":"0"})J", "--deg", "3"}, p1_graph());
    CHECK(not_class.status == 1);
    CHECK(not_class.err.find("NotAClass") != std::string::npos);

    CHECK(run({"--help"}).status == 0);
}

TEST_CASE("cli: repeated runs are identical")
{
    const std::vector<std::string> args{"gkm", "gen", "flag", "3"};
    auto a = run(args);
    auto b = run(args);
    CHECK(a.out == b.out);
    CHECK(a.status == b.status);
}
