#ifndef COBORDISM_FGL_HPP
#define COBORDISM_FGL_HPP

#include <optional>
#include <string>
#include <vector>

#include "cobordism/graded_coeff.hpp"
#include "cobordism/rational.hpp"
#include "cobordism/series.hpp"

namespace cobordism {

// Which formal group law the Lazard generators are sent to.
struct Specialization {
    enum class Kind { Universal, Additive, Multiplicative };
    Kind kind = Kind::Universal;
    Rational beta = 0; // multiplicative parameter

    static Specialization universal() { return {}; }
    static Specialization additive() { return {Kind::Additive, 0}; }
    static Specialization multiplicative(const Rational& beta) { return {Kind::Multiplicative, beta}; }

    // "universal", "additive", "multiplicative:<beta>" (beta rational, default 1).
    static Specialization parse(const std::string& text);
    std::string name() const;

    // Value assigned to the logarithm coefficient m_i, or nullopt when m_i
    // stays symbolic.
    std::optional<Rational> value(int i) const;
};

// The formal group law over Q[m_1..m_Dc] obtained from the logarithm
// l(u) = u + sum_i m_i u^(i+1): F(u,v) = e(l(u) + l(v)) with e the
// compositional inverse of l. All series are truncated at total degree D.
class FGLContext {
public:
    // coeff_index (Dc) >= 0, degree (D) >= 1.
    FGLContext(int coeff_index, int degree, Specialization spec = Specialization::universal());

    int coeff_index() const noexcept { return coeff_index_; }
    int degree() const noexcept { return degree_; }
    const Specialization& specialization() const noexcept { return spec_; }

    const TruncSeries& log() const noexcept { return log_; }      // in u
    const TruncSeries& exp() const noexcept { return exp_; }      // in u
    const TruncSeries& law() const noexcept { return law_; }      // in u, v
    const TruncSeries& inverse() const noexcept { return rho_; }  // rho(u), solved from F(u, rho) = 0

    // rho computed as e(-l(u)); agrees with inverse() through D.
    TruncSeries inverse_via_log() const;

    // Coefficient of u^i v^j in F; requires i + j <= D.
    GradedCoeff a_coeff(int i, int j) const;

    // [n]_F u for any integer n.
    TruncSeries n_series(int n) const;

    // F(a, b) for series a, b in a common variable list with zero constant term.
    TruncSeries add(const TruncSeries& a, const TruncSeries& b) const;
    // rho(a).
    TruncSeries negate(const TruncSeries& a) const;
    // [n]_F a.
    TruncSeries multiple(int n, const TruncSeries& a) const;
    // Left fold of F over the summands; zero series in `vars` when empty.
    TruncSeries formal_sum(const std::vector<std::string>& vars, const std::vector<TruncSeries>& summands) const;

    // Coefficient attached to m_i in the logarithm under the specialization.
    GradedCoeff log_coefficient(int i) const;
    // Apply the specialization to a universal coefficient.
    GradedCoeff specialize(const GradedCoeff& c) const;

private:
    int coeff_index_;
    int degree_;
    Specialization spec_;
    TruncSeries log_;
    TruncSeries exp_;
    TruncSeries law_;
    TruncSeries rho_;
};

} // namespace cobordism

#endif
