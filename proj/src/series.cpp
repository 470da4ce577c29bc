#include "cobordism/series.hpp"

#include <algorithm>
#include <set>

#include "cobordism/errors.hpp"
#include "cobordism/linalg.hpp"

namespace cobordism {

namespace {

int clamp_guarantee(long long g)
{
    return static_cast<int>(std::min<long long>(g, kExactGuarantee));
}

bool is_exact(int g) { return g >= kExactGuarantee; }

using Terms = TruncSeries::Terms;

// acc += a*b restricted to total degree <= cap.
void multiply_into(Terms& acc, const Terms& a, const Terms& b, int cap)
{
    if (a.empty() || b.empty()) return;
    int lb = total_degree(b.begin()->first);
    for (const auto& [ea, ca] : a) {
        int da = total_degree(ea);
        if (da + lb > cap) break;
        for (const auto& [eb, cb] : b) {
            if (da + total_degree(eb) > cap) break;
            GradedCoeff prod = ca * cb;
            if (prod.is_zero()) continue;
            auto [it, inserted] = acc.try_emplace(add_exponents(ea, eb), prod);
            if (!inserted) {
                it->second += prod;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
    }
}

void subtract_scaled_into(Terms& acc, const Exponents& shift, const GradedCoeff& c, const Terms& g, int cap)
{
    int ds = total_degree(shift);
    for (const auto& [eg, cg] : g) {
        if (ds + total_degree(eg) > cap) break;
        GradedCoeff prod = c * cg;
        auto [it, inserted] = acc.try_emplace(add_exponents(shift, eg), -prod);
        if (!inserted) {
            it->second -= prod;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
}

} // namespace

TruncSeries::TruncSeries(std::vector<std::string> vars, int guarantee)
    : vars_(std::move(vars)), guarantee_(std::max(-1, clamp_guarantee(guarantee)))
{
}

TruncSeries TruncSeries::constant(std::vector<std::string> vars, const GradedCoeff& c, int guarantee)
{
    TruncSeries s(std::move(vars), guarantee);
    s.add_term(Exponents(s.nvars(), 0), c);
    return s;
}

TruncSeries TruncSeries::variable(std::vector<std::string> vars, std::size_t index, int guarantee)
{
    TruncSeries s(std::move(vars), guarantee);
    if (index >= s.nvars()) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
    Exponents e(s.nvars(), 0);
    e[index] = 1;
    s.add_term(e, GradedCoeff(1));
    return s;
}

TruncSeries TruncSeries::monomial(std::vector<std::string> vars, Exponents e, const GradedCoeff& c,
                                  int guarantee)
{
    TruncSeries s(std::move(vars), guarantee);
    if (e.size() != s.nvars()) throw Error(ErrorKind::InvalidArgument, "exponent length mismatch");
    s.add_term(e, c);
    return s;
}

int TruncSeries::lowest_degree() const
{
    return terms_.empty() ? guarantee_ + 1 : total_degree(terms_.begin()->first);
}

int TruncSeries::highest_degree() const
{
    return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first);
}

GradedCoeff TruncSeries::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? GradedCoeff() : it->second;
}

GradedCoeff TruncSeries::constant_term() const
{
    return coefficient(Exponents(nvars(), 0));
}

std::optional<int> TruncSeries::homogeneous_degree() const
{
    std::optional<int> deg;
    for (const auto& [e, c] : terms_) {
        for (const auto& [m, q] : c.terms()) {
            int d = total_degree(e) - lazard_weight(m);
            if (deg && *deg != d) return std::nullopt;
            deg = d;
        }
    }
    return deg;
}

int TruncSeries::max_generator() const
{
    int g = 0;
    for (const auto& [e, c] : terms_) g = std::max(g, c.max_generator());
    return g;
}

void TruncSeries::add_term(const Exponents& e, const GradedCoeff& c)
{
    if (c.is_zero() || total_degree(e) > guarantee_) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TruncSeries TruncSeries::truncated(int guarantee) const
{
    TruncSeries out(vars_, std::min(guarantee, guarantee_));
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) > out.guarantee_) break;
        out.terms_.emplace_hint(out.terms_.end(), e, c);
    }
    return out;
}

TruncSeries TruncSeries::layer(int d) const
{
    TruncSeries out(vars_, guarantee_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == d) out.terms_.emplace_hint(out.terms_.end(), e, c);
    return out;
}

TruncSeries TruncSeries::cohomological_component(int j) const
{
    TruncSeries out(vars_, guarantee_);
    for (const auto& [e, c] : terms_) out.add_term(e, c.degree_component(j - total_degree(e)));
    return out;
}

std::vector<int> TruncSeries::cohomological_degrees() const
{
    std::set<int> degs;
    for (const auto& [e, c] : terms_)
        for (const auto& [m, q] : c.terms()) degs.insert(total_degree(e) - lazard_weight(m));
    return {degs.begin(), degs.end()};
}

TruncSeries TruncSeries::map_coefficients(const std::function<GradedCoeff(const GradedCoeff&)>& fn) const
{
    TruncSeries out(vars_, guarantee_);
    for (const auto& [e, c] : terms_) out.add_term(e, fn(c));
    return out;
}

TruncSeries TruncSeries::embed(const std::vector<std::string>& target) const
{
    std::vector<std::size_t> pos(nvars(), target.size());
    for (std::size_t i = 0; i < nvars(); ++i) {
        auto it = std::find(target.begin(), target.end(), vars_[i]);
        if (it != target.end()) pos[i] = static_cast<std::size_t>(it - target.begin());
    }
    TruncSeries out(target, guarantee_);
    for (const auto& [e, c] : terms_) {
        Exponents f(target.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (pos[i] == target.size())
                throw Error(ErrorKind::VariableMismatch, "variable " + vars_[i] + " missing from target");
            f[pos[i]] += e[i];
        }
        out.add_term(f, c);
    }
    return out;
}

TruncSeries TruncSeries::renamed(std::vector<std::string> vars) const
{
    if (vars.size() != vars_.size()) throw Error(ErrorKind::VariableMismatch, "rename changes variable count");
    TruncSeries out(*this);
    out.vars_ = std::move(vars);
    return out;
}

void TruncSeries::check_compatible(const TruncSeries& o, const char* op) const
{
    if (vars_ != o.vars_) throw Error(ErrorKind::VariableMismatch, std::string(op) + " on series with different variables");
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o)
{
    check_compatible(o, "addition");
    guarantee_ = std::min(guarantee_, o.guarantee_);
    while (!terms_.empty() && total_degree(terms_.rbegin()->first) > guarantee_) terms_.erase(std::prev(terms_.end()));
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o)
{
    check_compatible(o, "subtraction");
    guarantee_ = std::min(guarantee_, o.guarantee_);
    while (!terms_.empty() && total_degree(terms_.rbegin()->first) > guarantee_) terms_.erase(std::prev(terms_.end()));
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

TruncSeries& TruncSeries::operator*=(const GradedCoeff& c)
{
    Terms out;
    for (const auto& [e, x] : terms_) {
        GradedCoeff p = x * c;
        if (!p.is_zero()) out.emplace_hint(out.end(), e, std::move(p));
    }
    terms_ = std::move(out);
    return *this;
}

TruncSeries TruncSeries::operator-() const
{
    TruncSeries r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return ts_mul(a, b); }

bool operator==(const TruncSeries& a, const TruncSeries& b)
{
    return a.vars_ == b.vars_ && a.guarantee_ == b.guarantee_ && a.terms_ == b.terms_;
}

bool equal_through(const TruncSeries& a, const TruncSeries& b, int degree)
{
    if (a.vars() != b.vars()) return false;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    auto in_range = [degree](const auto& it, const auto& end) {
        return it != end && total_degree(it->first) <= degree;
    };
    while (in_range(ia, a.terms().end()) || in_range(ib, b.terms().end())) {
        if (!in_range(ia, a.terms().end()) || !in_range(ib, b.terms().end())) return false;
        if (ia->first != ib->first || !(ia->second == ib->second)) return false;
        ++ia;
        ++ib;
    }
    return true;
}

bool equal_through(const TruncSeries& a, const TruncSeries& b)
{
    return equal_through(a, b, std::min(a.guarantee(), b.guarantee()));
}

std::string TruncSeries::render() const { return render(vars_); }

std::string TruncSeries::render(const std::vector<std::string>& names) const
{
    if (terms_.empty()) return "0";
    std::string out;
    auto emit = [&out](bool negative, const std::string& body) {
        if (out.empty())
            out += negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
    };
    auto it = terms_.begin();
    while (it != terms_.end()) {
        int d = total_degree(it->first);
        auto end = it;
        while (end != terms_.end() && total_degree(end->first) == d) ++end;
        std::vector<bool> done;
        std::vector<std::pair<const Exponents*, const GradedCoeff*>> layer;
        for (auto j = it; j != end; ++j) layer.emplace_back(&j->first, &j->second);
        done.assign(layer.size(), false);
        for (std::size_t i = 0; i < layer.size(); ++i) {
            if (done[i]) continue;
            const Exponents& e = *layer[i].first;
            const GradedCoeff& c = *layer[i].second;
            std::string mono = render_monomial(e, names);
            if (c.is_single_term()) {
                const auto& [m, q] = *c.terms().begin();
                std::vector<std::string> gens;
                for (std::size_t g = 0; g < m.size(); ++g) gens.push_back(lazard_generator_name(g + 1));
                std::string body;
                Rational mag = abs(q);
                std::string lz = render_monomial(m, gens);
                if (mag != 1 || (lz.empty() && mono.empty())) body = to_string(mag);
                for (const std::string* part : {&lz, &mono}) {
                    if (part->empty()) continue;
                    if (!body.empty()) body += '*';
                    body += *part;
                }
                emit(q < 0, body);
                done[i] = true;
                continue;
            }
            if (mono.empty()) {
                // Constant term: its Lazard terms are summands in their own right.
                for (const auto& [m, q] : c.terms()) {
                    GradedCoeff single = GradedCoeff::monomial(m, abs(q));
                    emit(q < 0, single.render());
                }
                done[i] = true;
                continue;
            }
            std::vector<std::string> monos;
            for (std::size_t k = i; k < layer.size(); ++k) {
                if (done[k] || !(*layer[k].second == c)) continue;
                monos.push_back(render_monomial(*layer[k].first, names));
                done[k] = true;
            }
            std::string body = "(" + c.render() + ")*";
            if (monos.size() == 1) {
                body += monos.front();
            } else {
                body += "(";
                for (std::size_t k = 0; k < monos.size(); ++k) body += (k ? " + " : "") + monos[k];
                body += ")";
            }
            emit(false, body);
        }
        it = end;
    }
    return out;
}

TruncSeries ts_mul(const TruncSeries& a, const TruncSeries& b, int cap)
{
    if (a.vars() != b.vars()) throw Error(ErrorKind::VariableMismatch, "product of series with different variables");
    long long g1 = static_cast<long long>(a.guarantee()) + b.lowest_degree();
    long long g2 = static_cast<long long>(b.guarantee()) + a.lowest_degree();
    long long g = std::min(g1, g2);
    if (is_exact(a.guarantee()) && is_exact(b.guarantee())) g = kExactGuarantee;
    g = std::min<long long>(g, cap);
    TruncSeries out(a.vars(), clamp_guarantee(g));
    Terms acc;
    multiply_into(acc, a.terms(), b.terms(), out.guarantee());
    for (auto& [e, c] : acc) out.add_term(e, c);
    return out;
}

TruncSeries ts_mul(const TruncSeries& a, const TruncSeries& b)
{
    return ts_mul(a, b, kExactGuarantee);
}

TruncSeries ts_pow(const TruncSeries& a, int k)
{
    if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative power; invert the unit first");
    TruncSeries result = TruncSeries::constant(a.vars(), GradedCoeff(1), kExactGuarantee);
    TruncSeries base = a;
    while (k > 0) {
        if (k & 1) result = ts_mul(result, base);
        k >>= 1;
        if (k) base = ts_mul(base, base);
    }
    return result;
}

TruncSeries ts_substitute(const TruncSeries& f, const std::map<std::string, TruncSeries>& assignment)
{
    std::vector<std::string> target = f.vars();
    if (!assignment.empty()) target = assignment.begin()->second.vars();
    long long g = f.guarantee();
    for (const auto& [name, s] : assignment) {
        if (s.vars() != target)
            throw Error(ErrorKind::VariableMismatch, "substituted series must share one variable list");
        if (!s.constant_term().is_zero())
            throw Error(ErrorKind::InvalidArgument, "substituted series for " + name + " has a nonzero constant term");
        if (std::find(f.vars().begin(), f.vars().end(), name) == f.vars().end())
            throw Error(ErrorKind::VariableMismatch, "no variable " + name + " to substitute");
        g = std::min<long long>(g, s.guarantee());
    }
    const int cap = clamp_guarantee(g);

    std::vector<TruncSeries> replacement;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        auto it = assignment.find(f.vars()[i]);
        if (it != assignment.end()) {
            replacement.push_back(it->second);
            continue;
        }
        auto pos = std::find(target.begin(), target.end(), f.vars()[i]);
        if (pos == target.end()) {
            bool used = std::any_of(f.terms().begin(), f.terms().end(),
                                    [i](const auto& t) { return t.first[i] != 0; });
            if (used) throw Error(ErrorKind::VariableMismatch, "variable " + f.vars()[i] + " has no image");
            replacement.emplace_back(target, kExactGuarantee);
            continue;
        }
        replacement.push_back(TruncSeries::variable(target, static_cast<std::size_t>(pos - target.begin()), kExactGuarantee));
    }

    std::vector<std::vector<TruncSeries>> powers(f.nvars());
    auto power = [&](std::size_t i, int k) -> const TruncSeries& {
        auto& p = powers[i];
        if (p.empty()) p.push_back(TruncSeries::constant(target, GradedCoeff(1), kExactGuarantee));
        while (static_cast<int>(p.size()) <= k) p.push_back(ts_mul(p.back(), replacement[i], cap));
        return p[static_cast<std::size_t>(k)];
    };

    std::map<Exponents, TruncSeries> memo;
    std::function<const TruncSeries&(const Exponents&)> product = [&](const Exponents& e) -> const TruncSeries& {
        auto it = memo.find(e);
        if (it != memo.end()) return it->second;
        std::size_t last = e.size();
        for (std::size_t i = e.size(); i-- > 0;)
            if (e[i] != 0) {
                last = i;
                break;
            }
        TruncSeries value = [&] {
            if (last == e.size()) return TruncSeries::constant(target, GradedCoeff(1), kExactGuarantee);
            Exponents prefix = e;
            prefix[last] = 0;
            return ts_mul(product(prefix), power(last, e[last]), cap);
        }();
        return memo.emplace(e, std::move(value)).first->second;
    };

    TruncSeries out(target, cap);
    for (const auto& [e, c] : f.terms()) {
        if (total_degree(e) > cap) break;
        const TruncSeries& p = product(e);
        for (const auto& [pe, pc] : p.terms()) out.add_term(pe, pc * c);
    }
    return out;
}

TruncSeries ts_invert_unit(const TruncSeries& f)
{
    GradedCoeff c0 = f.constant_term();
    if (c0.is_zero()) throw Error(ErrorKind::NotInvertible, "constant term is zero");
    if (!c0.is_rational())
        throw Error(ErrorKind::NotInvertible,
                    "constant term " + c0.render() + " is not a rational; only nonzero rationals are units of Q[m]");
    const Rational r = c0.rational_part();
    const Rational rinv = 1 / r;
    if (is_exact(f.guarantee())) {
        if (f.highest_degree() > 0)
            throw Error(ErrorKind::InvalidArgument, "inverse of a non-constant polynomial needs a finite truncation");
        return TruncSeries::constant(f.vars(), GradedCoeff(rinv), kExactGuarantee);
    }
    const int G = f.guarantee();
    std::vector<Terms> flayers(static_cast<std::size_t>(G + 1));
    for (const auto& [e, c] : f.terms()) flayers[static_cast<std::size_t>(total_degree(e))].emplace(e, c);
    std::vector<Terms> glayers(static_cast<std::size_t>(G + 1));
    glayers[0].emplace(Exponents(f.nvars(), 0), GradedCoeff(rinv));
    for (int k = 1; k <= G; ++k) {
        Terms acc;
        for (int j = 1; j <= k; ++j) multiply_into(acc, flayers[static_cast<std::size_t>(j)], glayers[static_cast<std::size_t>(k - j)], k);
        for (auto& [e, c] : acc) {
            c *= -rinv;
            glayers[static_cast<std::size_t>(k)].emplace(e, std::move(c));
        }
    }
    TruncSeries out(f.vars(), G);
    for (const auto& layer : glayers)
        for (const auto& [e, c] : layer) out.add_term(e, c);
    return out;
}

namespace {

// Solve gE * q = r for a homogeneous layer r when the leading coefficient of
// gE is not a rational: a linear system over Q in the Lazard-monomial
// coordinates of q.
Terms solve_layer_linear(const Terms& r, const Terms& gE, std::size_t nvars, int qdeg, int max_gen)
{
    Terms q;
    if (r.empty()) return q;
    int rmin = INT_MAX, rmax = INT_MIN, gmin = INT_MAX, gmax = INT_MIN;
    for (const auto& [e, c] : r) {
        rmin = std::min(rmin, c.min_weight());
        rmax = std::max(rmax, c.max_weight());
    }
    for (const auto& [e, c] : gE) {
        gmin = std::min(gmin, c.min_weight());
        gmax = std::max(gmax, c.max_weight());
    }
    int wlo = rmin - gmin, whi = rmax - gmax;
    if (whi < wlo || whi < 0) throw Error(ErrorKind::NotDivisible, "layer weights incompatible with divisor");
    wlo = std::max(wlo, 0);

    std::vector<std::pair<Exponents, Exponents>> unknowns;
    for (const Exponents& t : monomials_of_degree(nvars, qdeg))
        for (int w = wlo; w <= whi; ++w)
            for (const Exponents& m : lazard_monomials_of_weight(max_gen, w)) unknowns.emplace_back(t, m);

    std::map<std::pair<Exponents, Exponents>, std::size_t> rows;
    auto row_of = [&rows](const Exponents& t, const Exponents& m) {
        return rows.try_emplace({t, m}, rows.size()).first->second;
    };
    std::vector<std::vector<std::pair<std::size_t, Rational>>> cols(unknowns.size());
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        for (const auto& [eg, cg] : gE)
            for (const auto& [mg, qg] : cg.terms()) {
                Exponents m = add_exponents(unknowns[u].second, mg);
                trim_trailing_zeros(m);
                cols[u].emplace_back(row_of(add_exponents(unknowns[u].first, eg), m), qg);
            }
    }
    std::vector<std::pair<std::size_t, Rational>> rhs;
    for (const auto& [e, c] : r)
        for (const auto& [m, qv] : c.terms()) rhs.emplace_back(row_of(e, m), qv);

    RationalMatrix a(rows.size(), unknowns.size());
    for (std::size_t u = 0; u < cols.size(); ++u)
        for (const auto& [row, v] : cols[u]) a(row, u) += v;
    RationalVector b(rows.size());
    for (const auto& [row, v] : rhs) b[row] += v;
    LinearSolver solver(a);
    auto x = solver.solve(b);
    if (!x) throw Error(ErrorKind::NotDivisible, "layer equation has no solution");
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        if ((*x)[u] == 0) continue;
        q[unknowns[u].first].add_term(unknowns[u].second, (*x)[u]);
    }
    for (auto it = q.begin(); it != q.end();) it = it->second.is_zero() ? q.erase(it) : std::next(it);
    return q;
}

} // namespace

TruncSeries ts_divide_exact(const TruncSeries& f, const TruncSeries& g)
{
    if (f.vars() != g.vars()) throw Error(ErrorKind::VariableMismatch, "division of series with different variables");
    if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "divisor is zero through its guarantee");
    const int E = g.lowest_degree();
    const bool exact = is_exact(f.guarantee()) && is_exact(g.guarantee());
    const int cap = std::min(f.guarantee(), g.guarantee());

    Terms gE;
    for (const auto& [e, c] : g.terms()) {
        if (total_degree(e) != E) break;
        gE.emplace(e, c);
    }
    const Exponents& lead = gE.begin()->first;
    const GradedCoeff& lead_coeff = gE.begin()->second;
    const bool rational_lead = lead_coeff.is_rational();
    const Rational lead_inv = rational_lead ? Rational(1 / lead_coeff.rational_part()) : Rational(0);
    const int max_gen = std::max(f.max_generator(), g.max_generator());

    Terms rem;
    for (const auto& [e, c] : f.terms()) {
        if (total_degree(e) > cap) break;
        rem.emplace_hint(rem.end(), e, c);
    }
    if (!rem.empty() && total_degree(rem.begin()->first) < E)
        throw Error(ErrorKind::NotDivisible, "dividend has terms below the divisor's lowest degree");

    const int last = exact ? (rem.empty() ? E - 1 : total_degree(rem.rbegin()->first)) : cap;
    TruncSeries q(f.vars(), exact ? kExactGuarantee : cap - E);
    for (int d = E; d <= last; ++d) {
        if (rational_lead) {
            while (!rem.empty() && total_degree(rem.begin()->first) == d) {
                const auto& [er, cr] = *rem.begin();
                if (!divides(lead, er))
                    throw Error(ErrorKind::NotDivisible, "leading monomial not divisible at degree " + std::to_string(d));
                Exponents shift = sub_exponents(er, lead);
                GradedCoeff coeff = cr * lead_inv;
                q.add_term(shift, coeff);
                subtract_scaled_into(rem, shift, coeff, g.terms(), cap);
            }
        } else {
            Terms layer;
            while (!rem.empty() && total_degree(rem.begin()->first) == d) {
                layer.insert(*rem.begin());
                rem.erase(rem.begin());
            }
            Terms qk = solve_layer_linear(layer, gE, f.nvars(), d - E, max_gen);
            for (const auto& [e, c] : qk) {
                q.add_term(e, c);
                // Layer d itself has already been removed; only higher layers of
                // q_k * g remain to be subtracted.
                for (const auto& [eg, cg] : g.terms()) {
                    if (total_degree(eg) == E) continue;
                    if (d + total_degree(eg) - E > cap) break;
                    GradedCoeff prod = c * cg;
                    auto [it, inserted] = rem.try_emplace(add_exponents(e, eg), -prod);
                    if (!inserted) {
                        it->second -= prod;
                        if (it->second.is_zero()) rem.erase(it);
                    }
                }
            }
        }
    }
    if (exact && !rem.empty()) throw Error(ErrorKind::NotDivisible, "nonzero remainder");
    return q;
}

bool ts_divides(const TruncSeries& g, const TruncSeries& f)
{
    try {
        ts_divide_exact(f, g);
        return true;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotDivisible) return false;
        throw;
    }
}

TruncSeries ts_compositional_inverse(const TruncSeries& g)
{
    if (g.nvars() != 1) throw Error(ErrorKind::InvalidArgument, "compositional inverse needs a one-variable series");
    if (is_exact(g.guarantee()) && g.highest_degree() > 1)
        throw Error(ErrorKind::InvalidArgument, "compositional inverse of a polynomial needs a finite truncation");
    if (!g.constant_term().is_zero()) throw Error(ErrorKind::InvalidArgument, "series has a nonzero constant term");
    GradedCoeff lin = g.coefficient(Exponents{1});
    if (lin.is_zero() || !lin.is_rational())
        throw Error(ErrorKind::NotInvertible, "linear coefficient is not an invertible rational");
    const Rational cinv = 1 / lin.rational_part();
    const int G = is_exact(g.guarantee()) ? kExactGuarantee : g.guarantee();
    const std::string& u = g.vars()[0];
    TruncSeries h(g.vars(), G);
    h.add_term(Exponents{1}, GradedCoeff(cinv));
    if (is_exact(G)) return h;
    // Degree k of g(h) depends on h_k only through c*h_k.
    for (int k = 2; k <= G; ++k) {
        TruncSeries composed = ts_substitute(g.truncated(k), {{u, h.truncated(k)}});
        GradedCoeff r = composed.coefficient(Exponents{k});
        h.add_term(Exponents{k}, r * (-cinv));
    }
    return h;
}

} // namespace cobordism
