#ifndef COBORDISM_FLAG_HPP
#define COBORDISM_FLAG_HPP

#include <vector>

#include "cobordism/gkm.hpp"

namespace cobordism {

// x1..xn
std::vector<std::string> flag_vars(int n);

// h_k(x_1..x_i) as an exact polynomial in x1..xn.
TruncSeries complete_symmetric(int n, int i, int k);
// e_k(x_1..x_n).
TruncSeries elementary_symmetric(int n, int k);

// Representative of p modulo (e_1..e_n) supported on the Artin monomials
// x^a, a_i <= n - i. Reduces with h_{n-i+1}(x_1..x_i), whose leading term
// in the lex order x_n > ... > x_1 is x_i^{n-i+1}.
TruncSeries coinv_normal_form(int n, const TruncSeries& p);

struct CoinvariantRank {
    long rank = 0;
    std::vector<Exponents> basis;
};
CoinvariantRank coinv_rank(int n);

// Value p(t_{w(1)}, ..., t_{w(n)}) at each vertex w of the flag graph.
PiecewiseClass flag_restriction(const TorusContext& ctx, const GKMGraph& g, const TruncSeries& p);

struct KernelCheck {
    bool normal_form_zero = false;
    bool gkm_zero = false;
    std::vector<GradedCoeff> coordinates; // non-equivariant coordinates in the Artin basis
    bool agree() const noexcept { return normal_form_zero == gkm_zero; }
};

// Is p in the ideal? Decided by the normal form and, independently, by
// expanding the restriction of p in the Artin-monomial basis of the flag
// graph and augmenting the coefficients.
KernelCheck flag_kernel_check(const TorusContext& ctx, const TruncSeries& p);

} // namespace cobordism

#endif
