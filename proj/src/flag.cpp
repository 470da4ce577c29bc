#include "cobordism/flag.hpp"

#include <algorithm>
#include <map>

#include "cobordism/errors.hpp"

namespace cobordism {

namespace {

// Lex order with x_n most significant, largest first.
struct ReverseLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const
    {
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

void check_n(int n)
{
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
}

} // namespace

std::vector<std::string> flag_vars(int n)
{
    check_n(n);
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
    return out;
}

TruncSeries complete_symmetric(int n, int i, int k)
{
    TruncSeries out(flag_vars(n), kExactGuarantee);
    for (const auto& e : monomials_of_degree(static_cast<std::size_t>(i), k)) {
        Exponents full(static_cast<std::size_t>(n), 0);
        std::copy(e.begin(), e.end(), full.begin());
        out.add_term(full, GradedCoeff(1));
    }
    return out;
}

TruncSeries elementary_symmetric(int n, int k)
{
    TruncSeries out(flag_vars(n), kExactGuarantee);
    for (const auto& e : monomials_of_degree(static_cast<std::size_t>(n), k))
        if (std::all_of(e.begin(), e.end(), [](int a) { return a <= 1; })) out.add_term(e, GradedCoeff(1));
    return out;
}

TruncSeries coinv_normal_form(int n, const TruncSeries& p)
{
    check_n(n);
    if (p.vars() != flag_vars(n)) throw Error(ErrorKind::VariableMismatch, "expected a polynomial in x1..x" + std::to_string(n));

    // Tails of the reducers: g_i = x_i^{n-i+1} + tail_i.
    std::vector<std::vector<Exponents>> tails(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int k = n - i + 1;
        auto h = complete_symmetric(n, i, k);
        for (const auto& [e, c] : h.terms())
            if (e[static_cast<std::size_t>(i - 1)] != k) tails[static_cast<std::size_t>(i - 1)].push_back(e);
    }

    std::map<Exponents, GradedCoeff, ReverseLexGreater> work;
    for (const auto& [e, c] : p.terms()) work[e] += c;
    TruncSeries out(p.vars(), p.guarantee());
    while (!work.empty()) {
        auto node = work.extract(work.begin());
        const Exponents& a = node.key();
        const GradedCoeff& c = node.mapped();
        if (c.is_zero()) continue;
        int reducer = -1;
        for (int i = n; i >= 1; --i)
            if (a[static_cast<std::size_t>(i - 1)] >= n - i + 1) {
                reducer = i;
                break;
            }
        if (reducer < 0) {
            out.add_term(a, c);
            continue;
        }
        Exponents rest = a;
        rest[static_cast<std::size_t>(reducer - 1)] -= n - reducer + 1;
        for (const auto& t : tails[static_cast<std::size_t>(reducer - 1)]) {
            GradedCoeff& slot = work[add_exponents(rest, t)];
            slot -= c;
        }
    }
    return out;
}

CoinvariantRank coinv_rank(int n)
{
    check_n(n);
    CoinvariantRank out;
    out.basis = artin_exponents(n);
    out.rank = static_cast<long>(out.basis.size());
    return out;
}

PiecewiseClass flag_restriction(const TorusContext& ctx, const GKMGraph& g, const TruncSeries& p)
{
    if (g.family().kind != GraphFamily::Kind::Flag || g.family().n != static_cast<int>(ctx.rank()))
        throw Error(ErrorKind::InvalidArgument, "flag restriction needs the generated flag graph of the torus rank");
    const int n = g.family().n;
    if (p.vars() != flag_vars(n)) throw Error(ErrorKind::VariableMismatch, "expected a polynomial in x1..x" + std::to_string(n));
    std::vector<TruncSeries> vals;
    for (const auto& id : g.vertices()) {
        std::map<std::string, TruncSeries> assignment;
        for (int k = 0; k < n; ++k) {
            auto j = static_cast<std::size_t>(id[static_cast<std::size_t>(k)] - '1');
            assignment.emplace(p.vars()[static_cast<std::size_t>(k)], TruncSeries::variable(ctx.vars(), j, kExactGuarantee));
        }
        vals.push_back(ts_substitute(p, assignment));
    }
    return PiecewiseClass(std::move(vals));
}

KernelCheck flag_kernel_check(const TorusContext& ctx, const TruncSeries& p)
{
    const int n = static_cast<int>(ctx.rank());
    KernelCheck out;
    out.normal_form_zero = coinv_normal_form(n, p).is_zero();

    GKMGraph g = gkm_generate_flag(n);
    int degree = std::max(p.highest_degree(), g.dim());
    if (p.guarantee() < degree)
        throw Error(ErrorKind::TruncationInsufficient, "polynomial is known only through degree " + std::to_string(p.guarantee()));
    out.coordinates = gkm_tensor_with_L(g, standard_basis(ctx, g), flag_restriction(ctx, g, p), degree);
    out.gkm_zero = std::all_of(out.coordinates.begin(), out.coordinates.end(), [](const GradedCoeff& c) { return c.is_zero(); });
    return out;
}

} // namespace cobordism
