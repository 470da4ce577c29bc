#include "cobordism/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cobordism/acceptance.hpp"
#include "cobordism/errors.hpp"
#include "cobordism/expression.hpp"
#include "cobordism/flag.hpp"
#include "cobordism/gkm.hpp"
#include "cobordism/json_io.hpp"

namespace cobordism {

namespace {

struct Options {
    int deg = 0;
    int coeff_deg = 0;
    int rank = 0;
    std::string spec = "universal";

    // fgl
    std::string what = "law";
    std::vector<std::string> ints;

    // gkm
    std::string kind;
    std::vector<long> params;
    std::vector<long> chi;
    int n = 0;
    std::string graph_file;
    std::string class_text;
    std::string basis_text;
    bool full = false;
    bool linear_form = false;
    int truncation = -1;

    // flag
    std::string expr;
    bool list = false;
};

struct Output {
    std::ostringstream out;
    std::ostringstream err;
};

class Runner {
public:
    Runner(const Options& o, CLI::App& app, std::istream& in, Output& io) : o_(o), app_(app), in_(in), io_(io) {}

    int run(CLI::App* cmd, CLI::App* sub);

private:
    // D from --deg, else COBORDISM_DEFAULT_DEG, else the command's default.
    int resolve_degree(int computed, bool announce = true)
    {
        if (app_.count("--deg")) {
            if (o_.deg < 1) throw Error(ErrorKind::InvalidArgument, "--deg must be >= 1");
            return o_.deg;
        }
        int d = computed;
        std::string source = "default";
        if (const char* env = std::getenv("COBORDISM_DEFAULT_DEG")) {
            try {
                std::size_t used = 0;
                d = std::stoi(env, &used);
                if (used != std::string(env).size() || d < 1) throw std::invalid_argument(env);
            } catch (const std::exception&) {
                throw Error(ErrorKind::InvalidArgument, std::string("COBORDISM_DEFAULT_DEG must be a positive integer, got '") + env + "'");
            }
            source = "COBORDISM_DEFAULT_DEG";
        }
        if (announce) io_.out << "# deg " << d << " (" << source << ")\n";
        return d;
    }

    std::shared_ptr<const FGLContext> make_fgl(int D)
    {
        int Dc = app_.count("--coeff-deg") ? o_.coeff_deg : D;
        if (Dc < 0) throw Error(ErrorKind::InvalidArgument, "--coeff-deg must be >= 0");
        return std::make_shared<FGLContext>(Dc, D, Specialization::parse(o_.spec));
    }

    std::string read_argument(const std::string& text)
    {
        if (text.empty() || text[0] != '@') return text;
        std::ifstream f(text.substr(1));
        if (!f) throw Error(ErrorKind::InvalidArgument, "cannot read " + text.substr(1));
        return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
    }

    GKMGraph read_graph()
    {
        std::string text;
        if (!o_.graph_file.empty()) {
            text = read_argument("@" + o_.graph_file);
        } else {
            text.assign(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
        }
        if (text.find_first_not_of(" \t\r\n") == std::string::npos)
            throw Error(ErrorKind::InvalidArgument, "no graph given (use --graph FILE or pipe JSON on stdin)");
        GKMGraph g = graph_from_json(text);
        require_valid(g);
        if (app_.count("--rank") && static_cast<std::size_t>(o_.rank) != g.rank())
            throw Error(ErrorKind::InvalidArgument, "--rank disagrees with the graph's torus rank");
        return g;
    }

    int require_rank()
    {
        if (!app_.count("--rank") || o_.rank < 1) throw Error(ErrorKind::InvalidArgument, "this command needs --rank n (n >= 1)");
        return o_.rank;
    }

    int fgl_command(CLI::App* sub);
    int gkm_command(CLI::App* sub);
    int flag_command(CLI::App* sub);

    const Options& o_;
    CLI::App& app_;
    std::istream& in_;
    Output& io_;
};

long parse_int(const std::string& s, const char* what)
{
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be an integer, got '" + s + "'");
}

int Runner::fgl_command(CLI::App* sub)
{
    const std::string name = sub->get_name();
    if (name == "print") {
        int D = resolve_degree(4);
        auto fgl = make_fgl(D);
        if (o_.what == "law")
            io_.out << fgl->law().render() << "\n";
        else if (o_.what == "log")
            io_.out << fgl->log().render() << "\n";
        else if (o_.what == "exp")
            io_.out << fgl->exp().render() << "\n";
        else if (o_.what == "inverse")
            io_.out << fgl->inverse().render() << "\n";
        else
            throw Error(ErrorKind::InvalidArgument, "--what must be law, log, exp or inverse");
        return 0;
    }
    if (name == "nseries") {
        if (o_.ints.size() != 1) throw Error(ErrorKind::InvalidArgument, "nseries takes one integer n");
        long n = parse_int(o_.ints[0], "n");
        int D = resolve_degree(4);
        io_.out << make_fgl(D)->n_series(static_cast<int>(n)).render() << "\n";
        return 0;
    }
    if (o_.ints.size() != 2) throw Error(ErrorKind::InvalidArgument, "acoeff takes two integers i j");
    long i = parse_int(o_.ints[0], "i"), j = parse_int(o_.ints[1], "j");
    if (i < 0 || j < 0) throw Error(ErrorKind::InvalidArgument, "acoeff needs i, j >= 0");
    int D = resolve_degree(static_cast<int>(std::max(1L, i + j)));
    io_.out << make_fgl(D)->a_coeff(static_cast<int>(i), static_cast<int>(j)).render() << "\n";
    return 0;
}

int Runner::gkm_command(CLI::App* sub)
{
    const std::string name = sub->get_name();
    if (name == "gen") {
        std::vector<long> params = o_.params;
        if (o_.kind == "p1" && !o_.chi.empty()) params = o_.chi;
        if ((o_.kind == "pn" || o_.kind == "flag") && o_.n > 0) params = {static_cast<long>(o_.n)};
        io_.out << graph_to_json(gkm_generate(o_.kind, params)) << "\n";
        return 0;
    }

    GKMGraph g = read_graph();
    int computed = name == "expand" || name == "forget" ? std::max(1, 2 * g.dim()) : g.dim() + 2;
    int D = resolve_degree(computed);
    auto fgl = make_fgl(D);
    TorusContext ctx(g.rank(), fgl);
    EvalContext ectx{fgl.get(), ctx.vars(), D};
    if (o_.class_text.empty()) throw Error(ErrorKind::InvalidArgument, "--class is required");
    ClassInput input = class_from_json(read_argument(o_.class_text), g, ectx);
    const PiecewiseClass& a = input.value;

    if (name == "check") {
        auto bad = gkm_first_violation(ctx, g, a, o_.linear_form ? Congruence::LinearForm : Congruence::Chern);
        if (!bad) {
            io_.out << "true\n";
            return 0;
        }
        const GKMEdge& e = g.edges()[*bad];
        io_.out << "false\n";
        io_.err << "congruence fails on edge " << e.v << "-" << e.w << " with character " << e.chi.render() << "\n";
        return 1;
    }
    if (name == "integrate") {
        IntegrationResult r = gkm_integrate(ctx, g, a);
        io_.out << (o_.full ? r.value.render() : r.lazard.render()) << "\n";
        return 0;
    }

    std::vector<PiecewiseClass> basis = o_.basis_text.empty() ? standard_basis(ctx, g)
                                                                : classes_from_json(read_argument(o_.basis_text), g, ectx);
    std::optional<int> truncation;
    if (o_.truncation >= 0) truncation = o_.truncation;
    if (name == "expand") {
        for (const auto& c : gkm_basis_expand(g, basis, a, truncation)) io_.out << c.render() << "\n";
        return 0;
    }
    auto coords = gkm_tensor_with_L(g, basis, a, truncation);
    io_.out << "(";
    for (std::size_t i = 0; i < coords.size(); ++i) io_.out << (i ? ", " : "") << coords[i].render();
    io_.out << ")\n";
    return 0;
}

bool uses_fgl(const Expr& e)
{
    if (e.kind == Expr::Kind::Call) return true;
    for (const auto& a : e.args)
        if (uses_fgl(*a)) return true;
    return false;
}

int Runner::flag_command(CLI::App* sub)
{
    const std::string name = sub->get_name();
    const int n = require_rank();
    if (name == "rank") {
        CoinvariantRank r = coinv_rank(n);
        io_.out << r.rank << "\n";
        if (o_.list) {
            auto vars = flag_vars(n);
            for (std::size_t i = 0; i < r.basis.size(); ++i) {
                TruncSeries mono = TruncSeries::monomial(vars, r.basis[i], GradedCoeff(1), kExactGuarantee);
                io_.out << (i ? ", " : "") << mono.render();
            }
            io_.out << "\n";
        }
        return 0;
    }
    if (o_.expr.empty()) throw Error(ErrorKind::InvalidArgument, name + " needs a polynomial in x1..x" + std::to_string(n));
    ExprPtr e = parse_expression(o_.expr);
    int D = uses_fgl(*e) ? resolve_degree(4) : (app_.count("--deg") ? o_.deg : 4);
    auto fgl = make_fgl(D);
    EvalContext ectx{fgl.get(), flag_vars(n), uses_fgl(*e) ? D : kExactGuarantee};
    TruncSeries p = evaluate(*e, ectx);
    if (name == "nf") {
        io_.out << coinv_normal_form(n, p).render() << "\n";
        return 0;
    }
    TorusContext ctx(static_cast<std::size_t>(n), fgl);
    KernelCheck k = flag_kernel_check(ctx, p);
    if (!k.agree()) {
        io_.err << "error: normal form and GKM routes disagree\n";
        return 1;
    }
    io_.out << (k.normal_form_zero ? "true" : "false") << "\n";
    return 0;
}

int Runner::run(CLI::App* cmd, CLI::App* sub)
{
    const std::string group = cmd->get_name();
    if (group == "selftest") {
        bool all = true;
        for (const auto& r : run_acceptance()) {
            io_.out << format_result(r) << "\n";
            all = all && r.passed;
        }
        return all ? 0 : 1;
    }
    if (group == "fgl") return fgl_command(sub);
    if (group == "gkm") return gkm_command(sub);
    return flag_command(sub);
}

} // namespace

CommandResult run_command(const std::vector<std::string>& args, std::istream& in)
{
    Options o;
    Output io;
    CLI::App app{"Torus-equivariant algebraic cobordism with rational coefficients", "cobordism"};
    app.require_subcommand(1);
    app.add_option("--deg", o.deg, "series truncation degree D");
    app.add_option("--coeff-deg", o.coeff_deg, "largest Lazard generator index Dc (default D)");
    app.add_option("--spec", o.spec, "universal, additive or multiplicative[:beta]");
    app.add_option("--rank", o.rank, "torus rank / number of flag variables");

    auto* fgl = app.add_subcommand("fgl", "formal group law")->require_subcommand(1)->fallthrough();
    auto* fgl_print = fgl->add_subcommand("print", "print F(u,v), log, exp or the inverse")->fallthrough();
    fgl_print->add_option("--what", o.what, "law, log, exp or inverse");
    auto* fgl_nseries = fgl->add_subcommand("nseries", "print [n]_F u")->fallthrough();
    fgl_nseries->add_option("n", o.ints, "n")->allow_extra_args();
    auto* fgl_acoeff = fgl->add_subcommand("acoeff", "print the coefficient a_ij of F")->fallthrough();
    fgl_acoeff->add_option("ij", o.ints, "i j");

    auto* gkm = app.add_subcommand("gkm", "GKM graphs and classes")->require_subcommand(1)->fallthrough();
    auto* gen = gkm->add_subcommand("gen", "generate p1, pn or flag graphs")->fallthrough();
    gen->add_option("kind", o.kind, "p1, pn or flag")->required();
    gen->add_option("params", o.params, "character (p1) or n");
    gen->add_option("--char", o.chi, "character for p1")->delimiter(',');
    gen->add_option("--n", o.n, "n for pn and flag");
    for (const char* name : {"check", "integrate", "expand", "forget"}) {
        auto* c = gkm->add_subcommand(name)->fallthrough();
        c->add_option("--graph", o.graph_file, "graph JSON file (default: stdin)");
        c->add_option("--class", o.class_text, "class JSON, or @file")->required();
        if (std::string(name) == "check") c->add_flag("--linear-form", o.linear_form, "use linear forms instead of Chern classes");
        if (std::string(name) == "integrate") c->add_flag("--full", o.full, "print the whole pushforward in S(T)");
        if (std::string(name) == "expand" || std::string(name) == "forget") {
            c->add_option("--basis", o.basis_text, "JSON array of basis classes, or @file (default: standard basis)");
            c->add_option("--truncation", o.truncation, "solve only through this degree");
        }
    }
    gkm->get_subcommand("check")->description("test the edge congruences");
    gkm->get_subcommand("integrate")->description("integrate a class by localization");
    gkm->get_subcommand("expand")->description("coordinates of a class in a free basis");
    gkm->get_subcommand("forget")->description("non-equivariant coordinates (augmented expansion)");

    auto* flag = app.add_subcommand("flag", "coinvariant presentation of GL_n/B")->require_subcommand(1)->fallthrough();
    auto* nf = flag->add_subcommand("nf", "normal form in the Artin basis")->fallthrough();
    nf->add_option("expr", o.expr, "polynomial in x1..xn")->required();
    auto* rank = flag->add_subcommand("rank", "rank of the coinvariant algebra")->fallthrough();
    rank->add_flag("--list", o.list, "also list the Artin basis");
    auto* kernel = flag->add_subcommand("kernel", "is the polynomial zero in the coinvariant algebra")->fallthrough();
    kernel->add_option("expr", o.expr, "polynomial in x1..xn")->required();

    app.add_subcommand("selftest", "run the acceptance checks");

    CommandResult result;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        result.out = app.help();
        return result;
    } catch (const CLI::CallForAllHelp&) {
        result.out = app.help("", CLI::AppFormatMode::All);
        return result;
    } catch (const CLI::ParseError& e) {
        result.status = 2;
        result.err = std::string("error: ") + e.what() + "\n";
        return result;
    }

    CLI::App* cmd = nullptr;
    for (auto* c : app.get_subcommands()) cmd = c;
    CLI::App* sub = nullptr;
    if (cmd)
        for (auto* s : cmd->get_subcommands()) sub = s;

    try {
        Runner runner(o, app, in, io);
        result.status = runner.run(cmd, sub);
    } catch (const Error& e) {
        result.status = e.is_mathematical() ? 1 : 2;
        io.err << "error: " << e.what() << "\n";
    }
    result.out = io.out.str();
    result.err = io.err.str();
    return result;
}

CommandResult run_command(const std::vector<std::string>& args)
{
    std::istringstream empty;
    return run_command(args, empty);
}

} // namespace cobordism
