#ifndef COBORDISM_RATIONAL_HPP
#define COBORDISM_RATIONAL_HPP

#include <string>

#include <gmpxx.h>

namespace cobordism {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q" with q > 0 and gcd(p, q) = 1; integers print without a denominator.
inline std::string to_string(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

inline Rational make_rational(long num, long den = 1)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace cobordism

#endif
