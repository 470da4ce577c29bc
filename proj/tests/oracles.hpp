#ifndef COBORDISM_TESTS_ORACLES_HPP
#define COBORDISM_TESTS_ORACLES_HPP

// Dense reference arithmetic, written without the library's series code.

#include <vector>

#include "cobordism/graded_coeff.hpp"
#include "cobordism/series.hpp"

namespace oracle {

using cobordism::GradedCoeff;
using cobordism::Rational;

using Poly1 = std::vector<GradedCoeff>;              // p[k] = coefficient of u^k
using Poly2 = std::vector<std::vector<GradedCoeff>>; // p[i][j] = coefficient of u^i v^j

inline GradedCoeff m(int i) { return GradedCoeff::generator(i); }

inline Poly1 zero1(int n) { return Poly1(static_cast<std::size_t>(n + 1)); }
inline Poly2 zero2(int n) { return Poly2(static_cast<std::size_t>(n + 1), Poly1(static_cast<std::size_t>(n + 1))); }

inline Poly1 mul(const Poly1& a, const Poly1& b, int n)
{
    Poly1 out = zero1(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) out[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    return out;
}

inline Poly2 mul(const Poly2& a, const Poly2& b, int n)
{
    Poly2 out = zero2(n);
    for (int i1 = 0; i1 <= n; ++i1)
        for (int j1 = 0; i1 + j1 <= n; ++j1)
            for (int i2 = 0; i1 + j1 + i2 <= n; ++i2)
                for (int j2 = 0; i1 + j1 + i2 + j2 <= n; ++j2)
                    out[static_cast<std::size_t>(i1 + i2)][static_cast<std::size_t>(j1 + j2)] +=
                        a[static_cast<std::size_t>(i1)][static_cast<std::size_t>(j1)] * b[static_cast<std::size_t>(i2)][static_cast<std::size_t>(j2)];
    return out;
}

// Universal logarithm u + sum m_i u^(i+1).
inline Poly1 universal_log(int n)
{
    Poly1 l = zero1(n);
    l[1] = 1;
    for (int i = 1; i + 1 <= n; ++i) l[static_cast<std::size_t>(i + 1)] = m(i);
    return l;
}

// Compositional inverse of l = u + ..., by the fixed point e = u - (l(e) - e).
inline Poly1 compositional_inverse(const Poly1& l, int n)
{
    Poly1 e = zero1(n);
    e[1] = 1;
    for (int iter = 0; iter < n; ++iter) {
        Poly1 next = zero1(n);
        next[1] = 1;
        Poly1 power = e;
        for (int k = 2; k <= n; ++k) {
            power = mul(power, e, n);
            for (int d = 0; d <= n; ++d) next[static_cast<std::size_t>(d)] -= l[static_cast<std::size_t>(k)] * power[static_cast<std::size_t>(d)];
        }
        e = next;
    }
    return e;
}

// e(l(u) + l(v)) by dense composition.
inline Poly2 law_from_log(const Poly1& l, int n)
{
    Poly1 e = compositional_inverse(l, n);
    Poly2 s = zero2(n);
    for (int i = 1; i <= n; ++i) {
        s[static_cast<std::size_t>(i)][0] += l[static_cast<std::size_t>(i)];
        s[0][static_cast<std::size_t>(i)] += l[static_cast<std::size_t>(i)];
    }
    Poly2 out = zero2(n);
    Poly2 power = zero2(n);
    power[0][0] = 1;
    for (int k = 1; k <= n; ++k) {
        power = mul(power, s, n);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j)
                out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(k)] * power[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return out;
}

inline Poly1 from_series(const cobordism::TruncSeries& f, int n)
{
    Poly1 out = zero1(n);
    for (const auto& [e, c] : f.terms())
        if (e[0] <= n) out[static_cast<std::size_t>(e[0])] += c;
    return out;
}

inline cobordism::TruncSeries to_series(const std::vector<std::string>& vars, const Poly1& p, int guarantee)
{
    cobordism::TruncSeries out(vars, guarantee);
    for (std::size_t k = 0; k < p.size(); ++k) out.add_term({static_cast<int>(k)}, p[k]);
    return out;
}

inline cobordism::TruncSeries to_series(const Poly2& p, int guarantee)
{
    cobordism::TruncSeries out({"u", "v"}, guarantee);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; i + j < p.size(); ++j) out.add_term({static_cast<int>(i), static_cast<int>(j)}, p[i][j]);
    return out;
}

} // namespace oracle

#endif
