#ifndef COBORDISM_GRADED_COEFF_HPP
#define COBORDISM_GRADED_COEFF_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "cobordism/monomial.hpp"
#include "cobordism/rational.hpp"

namespace cobordism {

// Element of the rationalized Lazard ring Q[m_1, m_2, ...]. Generator m_i has
// cohomological degree -i. Stored sparsely; no zero coefficients are kept.
class GradedCoeff {
public:
    using Terms = std::map<Exponents, Rational, LazardOrder>;

    GradedCoeff() = default;
    GradedCoeff(const Rational& q); // NOLINT(google-explicit-constructor)
    GradedCoeff(long n) : GradedCoeff(Rational(n)) {} // NOLINT(google-explicit-constructor)

    // The generator m_index (index >= 1).
    static GradedCoeff generator(int index);
    static GradedCoeff monomial(Exponents e, const Rational& c);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    // No generator content at all (possibly zero).
    bool is_rational() const noexcept;
    // Coefficient of the unit monomial.
    Rational rational_part() const;
    Rational coefficient(const Exponents& e) const;

    // Cohomological degree if every term has the same weight; the zero
    // element reports nullopt.
    std::optional<int> homogeneous_degree() const;
    int min_weight() const;
    int max_weight() const;
    // Largest generator index occurring, 0 for rationals.
    int max_generator() const;

    // Component of cohomological degree `degree`.
    GradedCoeff degree_component(int degree) const;

    void add_term(const Exponents& e, const Rational& c);

    GradedCoeff& operator+=(const GradedCoeff& o);
    GradedCoeff& operator-=(const GradedCoeff& o);
    GradedCoeff& operator*=(const Rational& q);
    GradedCoeff operator-() const;

    friend GradedCoeff operator+(GradedCoeff a, const GradedCoeff& b) { return a += b; }
    friend GradedCoeff operator-(GradedCoeff a, const GradedCoeff& b) { return a -= b; }
    friend GradedCoeff operator*(const GradedCoeff& a, const GradedCoeff& b);
    friend GradedCoeff operator*(GradedCoeff a, const Rational& q) { return a *= q; }
    friend bool operator==(const GradedCoeff& a, const GradedCoeff& b) { return a.terms_ == b.terms_; }

    // Replace generator m_i by value(i) when value returns a rational;
    // generators for which it returns nullopt are kept symbolic.
    GradedCoeff specialize(const std::function<std::optional<Rational>(int)>& value) const;
    // Drop every term that mentions a generator beyond max_generator.
    GradedCoeff truncate_generators(int max_generator) const;

    // Canonical text, terms in ascending weight with lex tie-break:
    // "4*m1^2 - 3*m2", "-2/3", "0".
    std::string render() const;
    // True when render() is a single signed term (no parentheses needed when
    // used as a factor).
    bool is_single_term() const noexcept { return terms_.size() <= 1; }

private:
    Terms terms_;
};

} // namespace cobordism

#endif
