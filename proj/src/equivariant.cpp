#include "cobordism/equivariant.hpp"

#include <numeric>
#include <sstream>

#include "cobordism/errors.hpp"
#include "cobordism/linalg.hpp"

namespace cobordism {

Character Character::basis(std::size_t rank, std::size_t index)
{
    std::vector<long> w(rank, 0);
    w.at(index) = 1;
    return Character(std::move(w));
}

bool Character::is_zero() const noexcept
{
    for (long x : weights_)
        if (x != 0) return false;
    return true;
}

long Character::content() const
{
    long g = 0;
    for (long x : weights_) g = std::gcd(g, x);
    return g;
}

Character Character::primitive_part() const
{
    long g = content();
    if (g == 0) throw Error(ErrorKind::ZeroCharacter, "zero character has no primitive part");
    std::vector<long> w(weights_);
    for (long& x : w) x /= g;
    return Character(std::move(w));
}

bool Character::proportional_to(const Character& o) const
{
    if (rank() != o.rank() || is_zero() || o.is_zero()) return false;
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = i + 1; j < rank(); ++j)
            if (weights_[i] * o.weights_[j] - weights_[j] * o.weights_[i] != 0) return false;
    return true;
}

Character Character::operator-() const
{
    std::vector<long> w(weights_);
    for (long& x : w) x = -x;
    return Character(std::move(w));
}

Character operator+(const Character& a, const Character& b)
{
    if (a.rank() != b.rank()) throw Error(ErrorKind::InvalidArgument, "characters of different rank");
    std::vector<long> w(a.weights_);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += b.weights_[i];
    return Character(std::move(w));
}

std::string Character::render() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < weights_.size(); ++i) os << (i ? "," : "") << weights_[i];
    os << ']';
    return os.str();
}

bool extends_to_basis(const Character& a, const Character& b)
{
    if (a.rank() != b.rank()) return false;
    long g = 0;
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = i + 1; j < a.rank(); ++j) g = std::gcd(g, a[i] * b[j] - a[j] * b[i]);
    return g == 1;
}

TorusContext::TorusContext(std::size_t rank, std::shared_ptr<const FGLContext> fgl) : rank_(rank), fgl_(std::move(fgl))
{
    if (!fgl_) throw Error(ErrorKind::InvalidArgument, "torus context needs a formal group law");
    for (std::size_t j = 0; j < rank_; ++j) vars_.push_back("t" + std::to_string(j + 1));
}

TruncSeries TorusContext::t(std::size_t j) const { return TruncSeries::variable(vars_, j, degree()); }
TruncSeries TorusContext::one() const { return constant(GradedCoeff(1)); }
TruncSeries TorusContext::zero() const { return TruncSeries(vars_, degree()); }
TruncSeries TorusContext::constant(const GradedCoeff& c) const { return TruncSeries::constant(vars_, c, degree()); }

TruncSeries chern_in(const FGLContext& fgl, const std::vector<std::string>& vars, const Character& chi)
{
    if (chi.rank() != vars.size())
        throw Error(ErrorKind::InvalidArgument, "character " + chi.render() + " does not match torus rank " + std::to_string(vars.size()));
    std::vector<TruncSeries> summands;
    for (std::size_t j = 0; j < vars.size(); ++j) {
        if (chi[j] == 0) continue;
        TruncSeries tj = TruncSeries::variable(vars, j, fgl.degree());
        summands.push_back(fgl.multiple(static_cast<int>(chi[j]), tj));
    }
    return fgl.formal_sum(vars, summands);
}

TruncSeries TorusContext::chern(const Character& chi) const { return chern_in(*fgl_, vars_, chi); }

TruncSeries TorusContext::linear_form(const Character& chi) const
{
    if (chi.rank() != rank_) throw Error(ErrorKind::InvalidArgument, "character rank mismatch");
    TruncSeries out = zero();
    for (std::size_t j = 0; j < rank_; ++j) out += t(j) * GradedCoeff(Rational(chi[j]));
    return out;
}

TruncSeries TorusContext::euler(const std::vector<Character>& weights) const
{
    TruncSeries out = TruncSeries::constant(vars_, GradedCoeff(1), kExactGuarantee);
    for (const auto& w : weights) out = ts_mul(out, chern(w));
    return out;
}

namespace {

// a*x + b*y = g >= 0.
void extended_gcd(long a, long b, long& g, long& x, long& y)
{
    long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        long q = old_r / r;
        long tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r; old_s = -old_s; old_t = -old_t;
    }
    g = old_r; x = old_s; y = old_t;
}

} // namespace

CoordinateTransform::CoordinateTransform(const TorusContext& ctx, const Character& chi0)
{
    const std::size_t n = ctx.rank();
    if (chi0.rank() != n) throw Error(ErrorKind::InvalidArgument, "character rank mismatch");
    if (!chi0.is_primitive()) throw Error(ErrorKind::InvalidArgument, "character " + chi0.render() + " is not primitive");

    // Column operations V with chi0 * V = e_1; then basis = V^{-1} has first row chi0.
    std::vector<long> r = chi0.weights();
    std::vector<std::vector<long>> v(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) v[i][i] = 1;
    auto combine = [&](std::size_t j) {
        long a = r[0], b = r[j];
        if (b == 0) return;
        long g, x, y;
        extended_gcd(a, b, g, x, y);
        for (std::size_t i = 0; i < n; ++i) {
            long c0 = v[i][0], cj = v[i][j];
            v[i][0] = x * c0 + y * cj;
            v[i][j] = (-b / g) * c0 + (a / g) * cj;
        }
        r[0] = g;
        r[j] = 0;
    };
    for (std::size_t j = 1; j < n; ++j) combine(j);
    if (r[0] == -1)
        for (std::size_t i = 0; i < n; ++i) v[i][0] = -v[i][0];

    // Invert V exactly.
    RationalMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = v[i][j];
        aug(i, n + i) = 1;
    }
    LinearSolver solver([&] {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i][j];
        return m;
    }());
    std::vector<std::vector<long>> b(n, std::vector<long>(n, 0));
    for (std::size_t col = 0; col < n; ++col) {
        RationalVector e(n, Rational(0));
        e[col] = 1;
        auto x = solver.solve(e);
        for (std::size_t i = 0; i < n; ++i) {
            Rational val = (*x)[i];
            if (val.get_den() != 1) throw Error(ErrorKind::InvalidArgument, "basis completion is not unimodular");
            b[i][col] = val.get_num().get_si();
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        basis_.emplace_back(b[i]);
        inverse_.emplace_back(v[i]);
    }

    for (std::size_t k = 0; k < n; ++k) adapted_vars_.push_back("s" + std::to_string(k + 1));
    const FGLContext& fgl = ctx.fgl();
    // t_j = c_1(e_j) = c_1(sum_k V[j][k] b_k) written in s; s_k = c_1(b_k) in t.
    for (std::size_t j = 0; j < n; ++j) forward_.emplace(ctx.vars()[j], chern_in(fgl, adapted_vars_, inverse_[j]));
    for (std::size_t k = 0; k < n; ++k) backward_.emplace(adapted_vars_[k], chern_in(fgl, ctx.vars(), basis_[k]));
}

long CoordinateTransform::determinant() const
{
    const std::size_t n = basis_.size();
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = basis_[i][j];
    // Bareiss-free: eliminate over Q and multiply pivots.
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            Rational f = m(r, c) / m(c, c);
            for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
        }
    }
    return det.get_num().get_si();
}

TruncSeries CoordinateTransform::to_adapted(const TruncSeries& f) const
{
    if (f.vars().size() != forward_.size()) throw Error(ErrorKind::VariableMismatch, "series is not in torus coordinates");
    return ts_substitute(f, forward_);
}

TruncSeries CoordinateTransform::from_adapted(const TruncSeries& f) const
{
    if (f.vars() != adapted_vars_) throw Error(ErrorKind::VariableMismatch, "series is not in adapted coordinates");
    return ts_substitute(f, backward_);
}

CoordinateTransform adapt_coordinates(const TorusContext& ctx, const Character& chi0)
{
    return CoordinateTransform(ctx, chi0);
}

TruncSeries divide_by_chern(const TorusContext& ctx, const TruncSeries& f, const Character& chi, int d)
{
    if (chi.is_zero()) throw Error(ErrorKind::ZeroCharacter, "cannot divide by the Chern class of the zero character");
    if (d < 0) throw Error(ErrorKind::InvalidArgument, "multiplicity must be >= 0");
    if (f.vars() != ctx.vars()) throw Error(ErrorKind::VariableMismatch, "series is not in torus coordinates");
    if (d == 0) return f;
    const long m = chi.content();
    CoordinateTransform transform(ctx, chi.primitive_part());
    TruncSeries adapted = transform.to_adapted(f);

    const auto& svars = transform.adapted_vars();
    TruncSeries stripped(svars, adapted.guarantee() - d);
    for (const auto& [e, c] : adapted.terms()) {
        if (e[0] < d)
            throw Error(ErrorKind::NotDivisible,
                        "not divisible by c1(L" + chi.render() + ")^" + std::to_string(d));
        Exponents shifted = e;
        shifted[0] -= d;
        stripped.add_term(shifted, c);
    }

    // [m]_F s_1 = s_1 * w(s_1) with w(0) = m.
    TruncSeries nser = ctx.fgl().n_series(static_cast<int>(m));
    TruncSeries unit({"u"}, nser.guarantee() - 1);
    for (const auto& [e, c] : nser.terms()) unit.add_term(Exponents{e[0] - 1}, c);
    Exponents first(svars.size(), 0);
    first[0] = 1;
    TruncSeries unit_s = ts_substitute(unit, {{"u", TruncSeries::monomial(svars, first, GradedCoeff(1), kExactGuarantee)}});
    TruncSeries unit_inv = ts_invert_unit(unit_s);
    TruncSeries quotient = ts_mul(stripped, ts_pow(unit_inv, d));
    return transform.from_adapted(quotient);
}

MembershipResult ideal_membership_product(const TorusContext& ctx, const std::vector<ChernFactor>& factors,
                                          const TruncSeries& f)
{
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].chi.is_zero()) throw Error(ErrorKind::ZeroCharacter, "zero character in factor list");
        if (factors[i].multiplicity < 0) throw Error(ErrorKind::InvalidArgument, "negative multiplicity");
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            if (!extends_to_basis(factors[i].chi, factors[j].chi))
                throw Error(ErrorKind::HypothesisViolation, factors[i].chi.render() + " and " + factors[j].chi.render() +
                                                                 " do not extend to a basis of the character lattice");
    }
    MembershipResult out;
    out.in_intersection = true;
    for (const auto& factor : factors) {
        try {
            divide_by_chern(ctx, f, factor.chi, factor.multiplicity);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotDivisible) throw;
            out.in_intersection = false;
            break;
        }
    }
    TruncSeries product = TruncSeries::constant(ctx.vars(), GradedCoeff(1), kExactGuarantee);
    for (const auto& factor : factors) product = ts_mul(product, ts_pow(ctx.chern(factor.chi), factor.multiplicity));
    out.in_product = product.is_zero() ? f.is_zero() : ts_divides(product, f);
    return out;
}

GradedCoeff augmentation(const TruncSeries& f) { return f.constant_term(); }

} // namespace cobordism
