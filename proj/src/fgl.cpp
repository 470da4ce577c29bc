#include "cobordism/fgl.hpp"

#include "cobordism/errors.hpp"

namespace cobordism {

namespace {
const std::vector<std::string> kU{"u"};
const std::vector<std::string> kUV{"u", "v"};
} // namespace

Specialization Specialization::parse(const std::string& text)
{
    if (text == "universal") return universal();
    if (text == "additive") return additive();
    const std::string prefix = "multiplicative";
    if (text.rfind(prefix, 0) == 0) {
        std::string rest = text.substr(prefix.size());
        if (rest.empty()) return multiplicative(1);
        if (rest[0] != ':' && rest[0] != '=')
            throw Error(ErrorKind::InvalidArgument, "unknown specialization '" + text + "'");
        Rational beta;
        try {
            beta = Rational(rest.substr(1));
        } catch (const std::invalid_argument&) {
            throw Error(ErrorKind::InvalidArgument, "bad multiplicative parameter '" + rest.substr(1) + "'");
        }
        beta.canonicalize();
        return multiplicative(beta);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown specialization '" + text + "'");
}

std::string Specialization::name() const
{
    switch (kind) {
    case Kind::Universal: return "universal";
    case Kind::Additive: return "additive";
    case Kind::Multiplicative: return "multiplicative:" + to_string(beta);
    }
    return "universal";
}

std::optional<Rational> Specialization::value(int i) const
{
    switch (kind) {
    case Kind::Universal: return std::nullopt;
    case Kind::Additive: return Rational(0);
    case Kind::Multiplicative: {
        // -log(1 - beta*u)/beta = u + sum beta^i u^(i+1)/(i+1)
        Rational p = 1;
        for (int k = 0; k < i; ++k) p *= beta;
        Rational v = p / (i + 1);
        v.canonicalize();
        return v;
    }
    }
    return std::nullopt;
}

GradedCoeff FGLContext::log_coefficient(int i) const
{
    if (auto v = spec_.value(i)) return GradedCoeff(*v);
    return GradedCoeff::generator(i);
}

GradedCoeff FGLContext::specialize(const GradedCoeff& c) const
{
    return c.specialize([this](int i) { return spec_.value(i); });
}

FGLContext::FGLContext(int coeff_index, int degree, Specialization spec)
    : coeff_index_(coeff_index), degree_(degree), spec_(std::move(spec))
{
    if (coeff_index < 0) throw Error(ErrorKind::InvalidArgument, "coefficient index must be >= 0");
    if (degree < 1) throw Error(ErrorKind::InvalidArgument, "series degree must be >= 1");

    log_ = TruncSeries::variable(kU, 0, degree_);
    for (int i = 1; i <= coeff_index_ && i + 1 <= degree_; ++i) log_.add_term(Exponents{i + 1}, log_coefficient(i));
    exp_ = ts_compositional_inverse(log_);

    TruncSeries lu = log_.embed(kUV);
    TruncSeries lv = ts_substitute(log_, {{"u", TruncSeries::variable(kUV, 1, kExactGuarantee)}});
    law_ = ts_substitute(exp_, {{"u", lu + lv}});

    // Solve F(u, rho) = 0 one degree at a time: the u^k coefficient of
    // F(u, rho) is b_k plus terms in lower coefficients of rho.
    const TruncSeries u = TruncSeries::variable(kU, 0, kExactGuarantee);
    rho_ = TruncSeries(kU, degree_);
    rho_.add_term(Exponents{1}, GradedCoeff(-1));
    for (int k = 2; k <= degree_; ++k) {
        TruncSeries val = ts_substitute(law_.truncated(k), {{"u", u}, {"v", rho_.truncated(k)}});
        rho_.add_term(Exponents{k}, -val.coefficient(Exponents{k}));
    }
}

TruncSeries FGLContext::inverse_via_log() const
{
    return ts_substitute(exp_, {{"u", -log_}});
}

GradedCoeff FGLContext::a_coeff(int i, int j) const
{
    if (i < 0 || j < 0 || i + j > degree_)
        throw Error(ErrorKind::InvalidArgument,
                    "a(" + std::to_string(i) + "," + std::to_string(j) + ") lies beyond truncation degree " +
                        std::to_string(degree_));
    return law_.coefficient(Exponents{i, j});
}

TruncSeries FGLContext::add(const TruncSeries& a, const TruncSeries& b) const
{
    return ts_substitute(law_, {{"u", a}, {"v", b}});
}

TruncSeries FGLContext::negate(const TruncSeries& a) const
{
    return ts_substitute(rho_, {{"u", a}});
}

TruncSeries FGLContext::n_series(int n) const
{
    return multiple(n, TruncSeries::variable(kU, 0, degree_));
}

TruncSeries FGLContext::multiple(int n, const TruncSeries& a) const
{
    if (n == 0) return TruncSeries(a.vars(), std::min(a.guarantee(), degree_));
    if (n < 0) return multiple(-n, negate(a));
    TruncSeries acc = a.truncated(degree_);
    for (int k = 2; k <= n; ++k) acc = add(acc, a);
    return acc;
}

TruncSeries FGLContext::formal_sum(const std::vector<std::string>& vars, const std::vector<TruncSeries>& summands) const
{
    if (summands.empty()) return TruncSeries(vars, degree_);
    for (const auto& s : summands)
        if (!s.constant_term().is_zero())
            throw Error(ErrorKind::InvalidArgument, "formal sum needs summands with zero constant term");
    TruncSeries acc = summands.front().truncated(degree_);
    for (std::size_t i = 1; i < summands.size(); ++i) acc = add(acc, summands[i]);
    return acc;
}

} // namespace cobordism
