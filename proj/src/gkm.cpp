#include "cobordism/gkm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cobordism/errors.hpp"
#include "cobordism/linalg.hpp"

namespace cobordism {

GKMGraph::GKMGraph(std::size_t rank, int dim, std::vector<std::string> vertices, std::vector<GKMEdge> edges)
    : rank_(rank), dim_(dim), vertices_(std::move(vertices)), edges_(std::move(edges))
{
}

std::optional<std::size_t> GKMGraph::index_of(const std::string& id) const
{
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i] == id) return i;
    return std::nullopt;
}

std::vector<GKMGraph::Incidence> GKMGraph::incident(std::size_t v) const
{
    std::vector<Incidence> out;
    const std::string& id = vertices_.at(v);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const GKMEdge& edge = edges_[e];
        if (edge.v == id) {
            if (auto w = index_of(edge.w)) out.push_back({e, *w, edge.chi});
        } else if (edge.w == id) {
            if (auto w = index_of(edge.v)) out.push_back({e, *w, -edge.chi});
        }
    }
    return out;
}

std::vector<Character> GKMGraph::tangent_weights(std::size_t v) const
{
    std::vector<Character> out;
    for (const auto& inc : incident(v)) out.push_back(inc.chi);
    return out;
}

std::vector<Diagnostic> gkm_validate(const GKMGraph& g)
{
    std::vector<Diagnostic> out;
    std::set<std::string> seen;
    for (const auto& id : g.vertices())
        if (!seen.insert(id).second) out.push_back({"vertex " + id, "duplicate vertex id"});
    if (g.dim() < 0) out.push_back({"graph", "negative dimension"});

    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const GKMEdge& edge = g.edges()[e];
        std::string loc = "edge " + std::to_string(e) + " (" + edge.v + "-" + edge.w + ")";
        if (!g.index_of(edge.v)) out.push_back({loc, "unknown vertex " + edge.v});
        if (!g.index_of(edge.w)) out.push_back({loc, "unknown vertex " + edge.w});
        if (edge.v == edge.w) out.push_back({loc, "edge joins a vertex to itself"});
        if (edge.chi.rank() != g.rank())
            out.push_back({loc, "character " + edge.chi.render() + " has length " + std::to_string(edge.chi.rank()) +
                                    ", torus rank is " + std::to_string(g.rank())});
        else if (edge.chi.is_zero())
            out.push_back({loc, "zero character"});
    }

    for (std::size_t v = 0; v < g.vertices().size(); ++v) {
        std::string loc = "vertex " + g.vertices()[v];
        auto inc = g.incident(v);
        if (static_cast<int>(inc.size()) != g.dim())
            out.push_back({loc, "valence " + std::to_string(inc.size()) + ", expected " + std::to_string(g.dim())});
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                if (inc[i].chi.rank() == g.rank() && inc[i].chi.proportional_to(inc[j].chi))
                    out.push_back({loc, "proportional characters " + inc[i].chi.render() + " and " + inc[j].chi.render()});
    }
    return out;
}

void require_valid(const GKMGraph& g)
{
    auto diags = gkm_validate(g);
    if (!diags.empty())
        throw Error(ErrorKind::HypothesisViolation, "invalid GKM graph: " + diags.front().location + ": " + diags.front().message);
}

int PiecewiseClass::guarantee() const
{
    int g = kExactGuarantee;
    for (const auto& v : values_) g = std::min(g, v.guarantee());
    return g;
}

PiecewiseClass PiecewiseClass::truncated(int guarantee) const
{
    std::vector<TruncSeries> out;
    for (const auto& v : values_) out.push_back(v.truncated(guarantee));
    return PiecewiseClass(std::move(out));
}

PiecewiseClass PiecewiseClass::scaled(const TruncSeries& s) const
{
    std::vector<TruncSeries> out;
    for (const auto& v : values_) out.push_back(ts_mul(s, v));
    return PiecewiseClass(std::move(out));
}

namespace {

void check_sizes(const PiecewiseClass& a, const PiecewiseClass& b)
{
    if (a.size() != b.size()) throw Error(ErrorKind::InvalidArgument, "classes have different numbers of components");
}

void check_class_size(const GKMGraph& g, const PiecewiseClass& a)
{
    if (a.size() != g.vertices().size())
        throw Error(ErrorKind::InvalidArgument, "class has " + std::to_string(a.size()) + " components, graph has " +
                                                    std::to_string(g.vertices().size()) + " vertices");
}

} // namespace

PiecewiseClass& PiecewiseClass::operator+=(const PiecewiseClass& o)
{
    check_sizes(*this, o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
}

PiecewiseClass& PiecewiseClass::operator-=(const PiecewiseClass& o)
{
    check_sizes(*this, o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
}

PiecewiseClass operator*(const PiecewiseClass& a, const PiecewiseClass& b)
{
    check_sizes(a, b);
    std::vector<TruncSeries> out;
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(ts_mul(a[i], b[i]));
    return PiecewiseClass(std::move(out));
}

PiecewiseClass constant_class(const GKMGraph& g, const TruncSeries& s)
{
    return PiecewiseClass(std::vector<TruncSeries>(g.vertices().size(), s));
}

std::optional<std::size_t> gkm_first_violation(const TorusContext& ctx, const GKMGraph& g, const PiecewiseClass& a,
                                               Congruence mode)
{
    check_class_size(g, a);
    if (a.guarantee() < 1)
        throw Error(ErrorKind::TruncationInsufficient, "class is known only through degree " +
                                                           std::to_string(a.guarantee()) + "; congruences need degree >= 1");
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const GKMEdge& edge = g.edges()[e];
        auto v = g.index_of(edge.v), w = g.index_of(edge.w);
        if (!v || !w) throw Error(ErrorKind::HypothesisViolation, "edge with unknown vertex");
        TruncSeries diff = a[*v] - a[*w];
        if (diff.is_zero()) continue;
        if (edge.chi.is_zero()) throw Error(ErrorKind::ZeroCharacter, "edge with zero character");
        TruncSeries divisor = mode == Congruence::Chern ? ctx.chern(edge.chi) : ctx.linear_form(edge.chi);
        if (!ts_divides(divisor, diff)) return e;
    }
    return std::nullopt;
}

bool gkm_is_class(const TorusContext& ctx, const GKMGraph& g, const PiecewiseClass& a, Congruence mode)
{
    return !gkm_first_violation(ctx, g, a, mode).has_value();
}

TruncSeries gkm_euler_class(const TorusContext& ctx, const GKMGraph& g, std::size_t v)
{
    return ctx.euler(g.tangent_weights(v));
}

PiecewiseClass gkm_pushforward_point(const TorusContext& ctx, const GKMGraph& g, std::size_t v, const TruncSeries& s)
{
    if (v >= g.vertices().size()) throw Error(ErrorKind::InvalidArgument, "vertex index out of range");
    TruncSeries value = ts_mul(s, gkm_euler_class(ctx, g, v));
    std::vector<TruncSeries> out(g.vertices().size(), TruncSeries(ctx.vars(), value.guarantee()));
    out[v] = value;
    return PiecewiseClass(std::move(out));
}

LocalizedTerm add_localized(const LocalizedTerm& a, const LocalizedTerm& b, int cap, int denominator_cap)
{
    const int euler = a.euler_degree + b.euler_degree;
    const int through = cap + euler;
    LocalizedTerm out;
    out.numerator = ts_mul(a.numerator, b.denominator, through) + ts_mul(b.numerator, a.denominator, through);
    out.denominator = ts_mul(a.denominator, b.denominator, denominator_cap);
    out.euler_degree = euler;
    return out;
}

bool IntegrationResult::pure() const
{
    for (const auto& [e, c] : value.terms())
        if (total_degree(e) > 0) return false;
    return true;
}

IntegrationResult gkm_integrate(const TorusContext& ctx, const GKMGraph& g, const PiecewiseClass& a,
                                const std::vector<std::size_t>& order)
{
    require_valid(g);
    check_class_size(g, a);
    if (g.vertices().empty()) throw Error(ErrorKind::InvalidArgument, "graph has no vertices");
    const int target = a.guarantee() - g.dim();
    if (target < 0)
        throw Error(ErrorKind::TruncationInsufficient, "class is known through degree " + std::to_string(a.guarantee()) +
                                                           "; integration needs at least " + std::to_string(g.dim()));
    if (auto bad = gkm_first_violation(ctx, g, a)) {
        const GKMEdge& edge = g.edges()[*bad];
        throw Error(ErrorKind::NotAClass, "congruence fails on edge " + edge.v + "-" + edge.w + " with character " +
                                              edge.chi.render());
    }

    std::vector<std::size_t> seq = order;
    if (seq.empty()) {
        seq.resize(g.vertices().size());
        std::iota(seq.begin(), seq.end(), 0);
    }
    std::vector<std::size_t> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != i || sorted.size() != g.vertices().size())
            throw Error(ErrorKind::InvalidArgument, "integration order is not a permutation of the vertices");

    // A denominator may later meet a numerator with no t-content, so it is
    // kept through the final Euler degree.
    const int denominator_cap = target + g.dim() * static_cast<int>(g.vertices().size());
    std::optional<LocalizedTerm> acc;
    for (std::size_t v : seq) {
        LocalizedTerm term{a[v], gkm_euler_class(ctx, g, v), g.dim()};
        acc = acc ? add_localized(*acc, term, target, denominator_cap) : term;
    }
    TruncSeries value = ts_divide_exact(acc->numerator, acc->denominator);
    if (value.guarantee() > target) value = value.truncated(target);
    if (value.guarantee() < 0)
        throw Error(ErrorKind::TruncationInsufficient, "formal group law truncation too small for this integral");
    return IntegrationResult{value, value.constant_term()};
}

namespace {

// Polynomial in t with rational coefficients.
using QPoly = std::map<Exponents, Rational>;
// Lazard monomial -> one polynomial per vertex.
using Split = std::map<Exponents, std::vector<QPoly>, LazardOrder>;

Exponents trimmed(Exponents e)
{
    trim_trailing_zeros(e);
    return e;
}

Split split_class(const PiecewiseClass& a, int through)
{
    Split out;
    for (std::size_t v = 0; v < a.size(); ++v) {
        for (const auto& [e, c] : a[v].terms()) {
            if (total_degree(e) > through) continue;
            for (const auto& [lam, q] : c.terms()) {
                auto& slot = out[trimmed(lam)];
                slot.resize(a.size());
                slot[v][e] += q;
            }
        }
    }
    return out;
}

void add_into(QPoly& p, const Exponents& e, const Rational& q)
{
    Rational& slot = p[e];
    slot += q;
    if (slot == 0) p.erase(e);
}

} // namespace

std::vector<TruncSeries> gkm_basis_expand(const GKMGraph& g, const std::vector<PiecewiseClass>& basis,
                                          const PiecewiseClass& a, std::optional<int> truncation)
{
    check_class_size(g, a);
    const std::size_t nv = g.vertices().size();
    if (basis.size() != nv)
        throw Error(ErrorKind::InvalidArgument, "basis has " + std::to_string(basis.size()) + " elements, graph has " +
                                                    std::to_string(nv) + " vertices");
    if (nv == 0) return {};
    const std::vector<std::string>& vars = a[0].vars();
    const std::size_t nvars = vars.size();

    int G = a.guarantee();
    std::vector<int> deg(nv, 0);
    for (std::size_t k = 0; k < nv; ++k) {
        check_class_size(g, basis[k]);
        G = std::min(G, basis[k].guarantee());
        std::optional<int> d;
        for (const auto& comp : basis[k].values()) {
            if (comp.vars() != vars) throw Error(ErrorKind::VariableMismatch, "basis and class use different variables");
            if (comp.is_zero()) continue;
            auto h = comp.homogeneous_degree();
            if (!h || (d && *d != *h))
                throw Error(ErrorKind::InvalidArgument, "basis element " + std::to_string(k) + " is not homogeneous");
            d = h;
        }
        deg[k] = d.value_or(0);
    }
    if (truncation) G = std::min(G, *truncation);
    if (G < 0) throw Error(ErrorKind::TruncationInsufficient, "nothing is known about the class");

    std::vector<Split> bsplit;
    for (const auto& b : basis) bsplit.push_back(split_class(b, G));
    auto chow_part = [&](std::size_t k) -> const std::vector<QPoly>* {
        auto it = bsplit[k].find(Exponents{});
        return it == bsplit[k].end() ? nullptr : &it->second;
    };

    // One rational system per t-degree s: sum_k c_k^{(s - d_k)} * chow(basis_k) = rhs^{(s)}.
    struct System {
        std::vector<std::vector<Exponents>> unknown_monos; // per k
        std::vector<Exponents> eq_monos;
        std::map<Exponents, std::size_t> eq_index;
        std::optional<LinearSolver> solver;
    };
    std::vector<System> systems(static_cast<std::size_t>(G + 1));
    for (int s = 0; s <= G; ++s) {
        System& sys = systems[static_cast<std::size_t>(s)];
        sys.eq_monos = monomials_of_degree(nvars, s);
        for (std::size_t i = 0; i < sys.eq_monos.size(); ++i) sys.eq_index[sys.eq_monos[i]] = i;
        std::size_t cols = 0;
        sys.unknown_monos.resize(nv);
        for (std::size_t k = 0; k < nv; ++k) {
            if (s >= deg[k]) sys.unknown_monos[k] = monomials_of_degree(nvars, s - deg[k]);
            cols += sys.unknown_monos[k].size();
        }
        const std::size_t neq = sys.eq_monos.size();
        RationalMatrix m(nv * neq, cols);
        std::size_t col = 0;
        for (std::size_t k = 0; k < nv; ++k) {
            const auto* chow = chow_part(k);
            for (const auto& mono : sys.unknown_monos[k]) {
                if (chow)
                    for (std::size_t v = 0; v < nv; ++v)
                        for (const auto& [e, q] : (*chow)[v]) {
                            auto it = sys.eq_index.find(add_exponents(mono, e));
                            if (it != sys.eq_index.end()) m(v * neq + it->second, col) += q;
                        }
                ++col;
            }
        }
        sys.solver.emplace(m);
        if (!sys.solver->injective())
            throw Error(ErrorKind::Ambiguous, "basis is not free in degree " + std::to_string(s));
    }

    std::vector<TruncSeries> coeffs;
    for (std::size_t k = 0; k < nv; ++k) coeffs.emplace_back(vars, G - deg[k]);

    Split rhs = split_class(a, G);
    while (!rhs.empty()) {
        auto node = rhs.extract(rhs.begin());
        const Exponents& nu = node.key();
        std::vector<QPoly>& target = node.mapped();
        target.resize(nv);

        std::set<int> degrees;
        for (const auto& p : target)
            for (const auto& [e, q] : p) degrees.insert(total_degree(e));
        for (int s : degrees) {
            System& sys = systems[static_cast<std::size_t>(s)];
            const std::size_t neq = sys.eq_monos.size();
            RationalVector b(nv * neq, Rational(0));
            for (std::size_t v = 0; v < nv; ++v)
                for (const auto& [e, q] : target[v])
                    if (total_degree(e) == s) b[v * neq + sys.eq_index.at(e)] = q;
            auto x = sys.solver->solve(b);
            if (!x) throw Error(ErrorKind::NoSolution, "class is not in the span of the basis (degree " + std::to_string(s) + ")");

            std::size_t col = 0;
            for (std::size_t k = 0; k < nv; ++k) {
                for (const auto& mono : sys.unknown_monos[k]) {
                    const Rational& val = (*x)[col++];
                    if (val == 0) continue;
                    coeffs[k].add_term(mono, GradedCoeff::monomial(nu, val));
                    for (const auto& [mu, polys] : bsplit[k]) {
                        if (mu.empty()) continue;
                        Exponents target_nu = trimmed(add_exponents(nu, mu));
                        for (std::size_t v = 0; v < nv; ++v) {
                            for (const auto& [e, q] : polys[v]) {
                                Exponents te = add_exponents(mono, e);
                                if (total_degree(te) > G) continue;
                                auto& slot = rhs[target_nu];
                                slot.resize(nv);
                                add_into(slot[v], te, -val * q);
                            }
                        }
                    }
                }
            }
        }
    }
    return coeffs;
}

std::vector<GradedCoeff> gkm_tensor_with_L(const GKMGraph& g, const std::vector<PiecewiseClass>& basis,
                                           const PiecewiseClass& a, std::optional<int> truncation)
{
    auto coeffs = gkm_basis_expand(g, basis, a, truncation);
    std::vector<GradedCoeff> out;
    for (const auto& c : coeffs) {
        if (c.guarantee() < 0)
            throw Error(ErrorKind::TruncationInsufficient, "truncation below the degree of a basis element");
        out.push_back(augmentation(c));
    }
    return out;
}

GKMGraph gkm_generate_p1(const Character& chi)
{
    if (chi.rank() == 0) throw Error(ErrorKind::InvalidArgument, "p1 needs a character");
    if (chi.is_zero()) throw Error(ErrorKind::ZeroCharacter, "p1 needs a nonzero character");
    GKMGraph g(chi.rank(), 1, {"0", "inf"}, {GKMEdge{"0", "inf", chi}});
    GraphFamily f;
    f.kind = GraphFamily::Kind::P1;
    f.chi = chi;
    g.set_family(f);
    return g;
}

GKMGraph gkm_generate_pn(int n)
{
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "pn needs n >= 1");
    const std::size_t rank = static_cast<std::size_t>(n);
    auto e = [&](int i) { return i == 0 ? Character(std::vector<long>(rank, 0)) : Character::basis(rank, static_cast<std::size_t>(i - 1)); };
    std::vector<std::string> vertices;
    for (int i = 0; i <= n; ++i) vertices.push_back(std::to_string(i));
    std::vector<GKMEdge> edges;
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.push_back({vertices[i], vertices[j], e(i) - e(j)});
    GKMGraph g(rank, n, std::move(vertices), std::move(edges));
    GraphFamily f;
    f.kind = GraphFamily::Kind::Pn;
    f.n = n;
    g.set_family(f);
    return g;
}

std::vector<std::vector<int>> flag_permutations(int n)
{
    if (n < 1 || n > 9) throw Error(ErrorKind::InvalidArgument, "flag needs 1 <= n <= 9");
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<std::pair<int, std::vector<int>>> all;
    do {
        int inv = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = i + 1; j < w.size(); ++j)
                if (w[i] > w[j]) ++inv;
        all.emplace_back(inv, w);
    } while (std::next_permutation(w.begin(), w.end()));
    std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::vector<int>> out;
    for (auto& p : all) out.push_back(std::move(p.second));
    return out;
}

std::string permutation_id(const std::vector<int>& w)
{
    std::string s;
    for (int x : w) s += std::to_string(x);
    return s;
}

GKMGraph gkm_generate_flag(int n)
{
    auto perms = flag_permutations(n);
    const std::size_t rank = static_cast<std::size_t>(n);
    std::vector<std::string> vertices;
    for (const auto& w : perms) vertices.push_back(permutation_id(w));
    std::vector<GKMEdge> edges;
    for (const auto& w : perms) {
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = i + 1; j < rank; ++j) {
                std::vector<int> u = w;
                std::swap(u[i], u[j]);
                if (permutation_id(w) >= permutation_id(u)) continue;
                Character chi = Character::basis(rank, static_cast<std::size_t>(w[i] - 1)) -
                                Character::basis(rank, static_cast<std::size_t>(w[j] - 1));
                edges.push_back({permutation_id(w), permutation_id(u), chi});
            }
    }
    GKMGraph g(rank, n * (n - 1) / 2, std::move(vertices), std::move(edges));
    GraphFamily f;
    f.kind = GraphFamily::Kind::Flag;
    f.n = n;
    g.set_family(f);
    return g;
}

GKMGraph gkm_generate(const std::string& kind, const std::vector<long>& params)
{
    if (kind == "p1") return gkm_generate_p1(Character(params));
    if (kind == "pn" || kind == "flag") {
        if (params.size() != 1) throw Error(ErrorKind::InvalidArgument, kind + " takes one parameter n");
        int n = static_cast<int>(params[0]);
        return kind == "pn" ? gkm_generate_pn(n) : gkm_generate_flag(n);
    }
    throw Error(ErrorKind::InvalidArgument, "unsupported graph kind '" + kind + "' (expected p1, pn or flag)");
}

std::vector<Exponents> artin_exponents(int n)
{
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
    std::vector<Exponents> out{Exponents(static_cast<std::size_t>(n), 0)};
    for (int i = 0; i < n; ++i) {
        std::vector<Exponents> next;
        for (const auto& e : out)
            for (int a = 0; a <= n - 1 - i; ++a) {
                Exponents f = e;
                f[static_cast<std::size_t>(i)] = a;
                next.push_back(f);
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end(), SeriesOrder());
    return out;
}

namespace {

std::vector<int> permutation_of(const std::string& id)
{
    std::vector<int> w;
    for (char c : id) w.push_back(c - '0');
    return w;
}

void require_family(const GKMGraph& g, GraphFamily::Kind kind, const char* what)
{
    if (g.family().kind != kind) throw Error(ErrorKind::InvalidArgument, std::string(what) + " needs a generated graph of the matching kind");
}

} // namespace

std::vector<PiecewiseClass> tautological_classes(const TorusContext& ctx, const GKMGraph& g)
{
    require_family(g, GraphFamily::Kind::Flag, "tautological classes");
    const int n = g.family().n;
    std::vector<PiecewiseClass> out;
    for (int k = 0; k < n; ++k) {
        std::vector<TruncSeries> vals;
        for (const auto& id : g.vertices()) {
            auto w = permutation_of(id);
            vals.push_back(TruncSeries::variable(ctx.vars(), static_cast<std::size_t>(w[static_cast<std::size_t>(k)] - 1), kExactGuarantee));
        }
        out.emplace_back(std::move(vals));
    }
    return out;
}

PiecewiseClass hyperplane_class(const TorusContext& ctx, const GKMGraph& g)
{
    require_family(g, GraphFamily::Kind::Pn, "hyperplane class");
    std::vector<TruncSeries> vals;
    for (int j = 0; j <= g.family().n; ++j)
        vals.push_back(j == 0 ? TruncSeries(ctx.vars(), kExactGuarantee)
                              : TruncSeries::variable(ctx.vars(), static_cast<std::size_t>(j - 1), kExactGuarantee));
    return PiecewiseClass(std::move(vals));
}

std::vector<PiecewiseClass> standard_basis(const TorusContext& ctx, const GKMGraph& g)
{
    const TruncSeries one = TruncSeries::constant(ctx.vars(), GradedCoeff(1), kExactGuarantee);
    const TruncSeries zero(ctx.vars(), kExactGuarantee);
    switch (g.family().kind) {
    case GraphFamily::Kind::P1:
        return {constant_class(g, one), gkm_pushforward_point(ctx, g, 0, one)};
    case GraphFamily::Kind::Pn: {
        const int n = g.family().n;
        std::vector<PiecewiseClass> out;
        for (int k = 0; k <= n; ++k) {
            std::vector<TruncSeries> vals;
            for (int j = 0; j <= n; ++j) {
                if (j < k) {
                    vals.push_back(zero);
                    continue;
                }
                TruncSeries v = one;
                for (const auto& inc : g.incident(static_cast<std::size_t>(j)))
                    if (static_cast<int>(inc.neighbor) < k) v = ts_mul(v, ctx.chern(inc.chi));
                vals.push_back(v);
            }
            out.emplace_back(std::move(vals));
        }
        return out;
    }
    case GraphFamily::Kind::Flag: {
        auto xs = tautological_classes(ctx, g);
        std::vector<PiecewiseClass> out;
        for (const auto& a : artin_exponents(g.family().n)) {
            PiecewiseClass c = constant_class(g, one);
            for (std::size_t k = 0; k < a.size(); ++k)
                for (int p = 0; p < a[k]; ++p) c = c * xs[k];
            out.push_back(std::move(c));
        }
        return out;
    }
    case GraphFamily::Kind::None:
        break;
    }
    throw Error(ErrorKind::InvalidArgument, "no standard basis for a graph that was not generated");
}

} // namespace cobordism
