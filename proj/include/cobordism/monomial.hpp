#ifndef COBORDISM_MONOMIAL_HPP
#define COBORDISM_MONOMIAL_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace cobordism {

// Exponent vector of a monomial. Series variables always use a vector of the
// full variable count; Lazard monomials drop trailing zeros so that m1 and
// m1*m2^0 compare equal.
using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e)
{
    int d = 0;
    for (int x : e) d += x;
    return d;
}

// Weight of a Lazard monomial: generator m_i contributes i per power, so the
// cohomological degree of the monomial is -weight.
inline int lazard_weight(const Exponents& e)
{
    int w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += static_cast<int>(i + 1) * e[i];
    return w;
}

inline void trim_trailing_zeros(Exponents& e)
{
    while (!e.empty() && e.back() == 0) e.pop_back();
}

inline Exponents add_exponents(const Exponents& a, const Exponents& b)
{
    Exponents r(a.size() > b.size() ? a : b);
    const Exponents& s = a.size() > b.size() ? b : a;
    for (std::size_t i = 0; i < s.size(); ++i) r[i] += s[i];
    return r;
}

// True when b divides a (componentwise a >= b).
inline bool divides(const Exponents& b, const Exponents& a)
{
    for (std::size_t i = 0; i < b.size(); ++i) {
        int ai = i < a.size() ? a[i] : 0;
        if (b[i] > ai) return false;
    }
    return true;
}

inline Exponents sub_exponents(const Exponents& a, const Exponents& b)
{
    Exponents r(a);
    if (r.size() < b.size()) r.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

namespace detail {
// Lexicographic with the larger leading exponent first: u^2*v precedes u*v^2.
inline bool lex_greater(const Exponents& a, const Exponents& b)
{
    std::size_t n = a.size() > b.size() ? a.size() : b.size();
    for (std::size_t i = 0; i < n; ++i) {
        int x = i < a.size() ? a[i] : 0;
        int y = i < b.size() ? b[i] : 0;
        if (x != y) return x > y;
    }
    return false;
}
} // namespace detail

// Graded-lex order on series monomials: ascending total degree, then lex.
struct SeriesOrder {
    bool operator()(const Exponents& a, const Exponents& b) const
    {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return detail::lex_greater(a, b);
    }
};

// Graded-lex order on Lazard monomials: ascending weight, then lex.
struct LazardOrder {
    bool operator()(const Exponents& a, const Exponents& b) const
    {
        int wa = lazard_weight(a), wb = lazard_weight(b);
        if (wa != wb) return wa < wb;
        return detail::lex_greater(a, b);
    }
};

// "m1^2*m3" / "t1*t2^3"; empty string for the unit monomial.
std::string render_monomial(const Exponents& e, const std::vector<std::string>& names);

// Names m1, m2, ... for Lazard generators.
std::string lazard_generator_name(std::size_t index);

// All exponent vectors in `nvars` variables of total degree exactly d, in
// SeriesOrder.
std::vector<Exponents> monomials_of_degree(std::size_t nvars, int d);

// All Lazard monomials in generators m_1..m_{max_generator} of weight exactly w.
std::vector<Exponents> lazard_monomials_of_weight(int max_generator, int w);

} // namespace cobordism

#endif
