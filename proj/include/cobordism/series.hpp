#ifndef COBORDISM_SERIES_HPP
#define COBORDISM_SERIES_HPP

#include <climits>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cobordism/graded_coeff.hpp"
#include "cobordism/monomial.hpp"

namespace cobordism {

// Guarantee used for exact polynomials. Large enough that no computation
// reaches it, small enough that guarantee arithmetic never overflows.
inline constexpr int kExactGuarantee = 1 << 20;

// Multivariate power series with Lazard coefficients, truncated by total
// degree in the series variables. Every stored monomial has total degree at
// most guarantee(); coefficients in degrees up to the guarantee are exact and
// nothing is known beyond it. A guarantee of -1 means nothing is known.
//
// The cohomological degree of a term c*t^a is |a| - weight(c); a series is
// homogeneous when all its terms share that degree.
class TruncSeries {
public:
    using Terms = std::map<Exponents, GradedCoeff, SeriesOrder>;

    TruncSeries() = default;
    TruncSeries(std::vector<std::string> vars, int guarantee);

    static TruncSeries constant(std::vector<std::string> vars, const GradedCoeff& c, int guarantee);
    static TruncSeries variable(std::vector<std::string> vars, std::size_t index, int guarantee);
    static TruncSeries monomial(std::vector<std::string> vars, Exponents e, const GradedCoeff& c,
                                int guarantee);

    const std::vector<std::string>& vars() const noexcept { return vars_; }
    std::size_t nvars() const noexcept { return vars_.size(); }
    int guarantee() const noexcept { return guarantee_; }
    const Terms& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    // Lowest total degree of a stored term; guarantee()+1 for the zero series.
    int lowest_degree() const;
    // Highest total degree of a stored term; -1 for the zero series.
    int highest_degree() const;
    GradedCoeff coefficient(const Exponents& e) const;
    GradedCoeff constant_term() const;
    std::optional<int> homogeneous_degree() const;
    // Largest Lazard generator index occurring in any coefficient.
    int max_generator() const;

    // Adds c*t^e; ignored beyond the guarantee.
    void add_term(const Exponents& e, const GradedCoeff& c);

    TruncSeries truncated(int guarantee) const;
    // Homogeneous component of total t-degree d.
    TruncSeries layer(int d) const;
    // Component of cohomological degree j.
    TruncSeries cohomological_component(int j) const;
    // Distinct cohomological degrees present, ascending.
    std::vector<int> cohomological_degrees() const;
    TruncSeries map_coefficients(const std::function<GradedCoeff(const GradedCoeff&)>& fn) const;
    // Same series viewed in another variable list; every variable with a
    // nonzero exponent must appear in `target` (matched by name).
    TruncSeries embed(const std::vector<std::string>& target) const;
    TruncSeries renamed(std::vector<std::string> vars) const;

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    TruncSeries& operator*=(const GradedCoeff& c);
    TruncSeries operator-() const;
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(TruncSeries a, const GradedCoeff& c) { return a *= c; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

    // Exact equality of variables, guarantee and terms.
    friend bool operator==(const TruncSeries& a, const TruncSeries& b);

    // Canonical text with ascending degree, graded-lex within a degree.
    // Monomials of one degree sharing a multi-term coefficient are grouped:
    // "u + v - 2*m1*u*v + (4*m1^2 - 3*m2)*(u^2*v + u*v^2)".
    std::string render() const;
    std::string render(const std::vector<std::string>& names) const;

private:
    void check_compatible(const TruncSeries& o, const char* op) const;

    std::vector<std::string> vars_;
    int guarantee_ = -1;
    Terms terms_;
};

// Agreement of a and b in every degree through min of both guarantees.
bool equal_through(const TruncSeries& a, const TruncSeries& b);
bool equal_through(const TruncSeries& a, const TruncSeries& b, int degree);

// Product. Guarantee is min(G_a + low(b), G_b + low(a)), which is never below
// min(G_a, G_b).
TruncSeries ts_mul(const TruncSeries& a, const TruncSeries& b);
// Product computed only through `cap` (guarantee min(natural, cap)).
TruncSeries ts_mul(const TruncSeries& a, const TruncSeries& b, int cap);
TruncSeries ts_pow(const TruncSeries& a, int k);

// Substitute series for variables of f. All assigned series share one
// variable list, which becomes the result's; variables of f without an
// assignment must occur there too and map to themselves. Assigned series must
// have zero constant term. Guarantee: min(G_f, G_assigned).
TruncSeries ts_substitute(const TruncSeries& f, const std::map<std::string, TruncSeries>& assignment);

// Multiplicative inverse of a series whose constant term is a nonzero
// rational. Guarantee unchanged.
TruncSeries ts_invert_unit(const TruncSeries& f);

// q with q*g = f. E is the lowest degree of g; the result has guarantee
// min(G_f, G_g) - E. Solved layer by layer: the lowest homogeneous part of g
// is divided into each layer of the running remainder. Throws NotDivisible
// when the layer equations are inconsistent.
TruncSeries ts_divide_exact(const TruncSeries& f, const TruncSeries& g);
// Divisibility test that does not throw.
bool ts_divides(const TruncSeries& g, const TruncSeries& f);

// Compositional inverse h of a one-variable g = c*u + O(u^2) (c a nonzero
// rational): g(h(u)) = u through G_g.
TruncSeries ts_compositional_inverse(const TruncSeries& g);

} // namespace cobordism

#endif
