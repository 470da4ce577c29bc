#ifndef COBORDISM_RANDOM_HPP
#define COBORDISM_RANDOM_HPP

#include <cstdint>
#include <random>

#include "cobordism/equivariant.hpp"
#include "cobordism/series.hpp"

namespace cobordism {

// Seeded source of small random algebraic objects for property checks.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : gen_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
    bool coin() { return integer(0, 1) == 1; }

    // p/q with |p| <= range, 1 <= q <= 3.
    Rational rational(long range = 3)
    {
        Rational q(integer(-range, range), integer(1, 3));
        q.canonicalize();
        return q;
    }

    Rational nonzero_rational(long range = 3)
    {
        Rational q;
        do q = rational(range);
        while (q == 0);
        return q;
    }

    // Random element of L of weight w (degree -w) in m_1..m_max_gen.
    GradedCoeff lazard(int weight, int max_gen, int max_terms = 2)
    {
        if (weight == 0) return GradedCoeff(rational());
        auto monos = lazard_monomials_of_weight(max_gen, weight);
        GradedCoeff out;
        if (monos.empty()) return out;
        for (int k = 0; k < max_terms; ++k) {
            const auto& e = monos[static_cast<std::size_t>(integer(0, static_cast<long>(monos.size()) - 1))];
            out += GradedCoeff::monomial(e, rational());
        }
        return out;
    }

    // Homogeneous series of cohomological degree j with t-degree in [low, high].
    TruncSeries homogeneous(const std::vector<std::string>& vars, int j, int low, int high, int guarantee, int max_gen,
                            int max_terms = 4)
    {
        TruncSeries out(vars, guarantee);
        for (int k = 0; k < max_terms; ++k) {
            int d = static_cast<int>(integer(std::max(low, std::max(0, j)), std::max(std::max(low, std::max(0, j)), high)));
            int w = d - j;
            if (w < 0 || d > guarantee) continue;
            auto monos = monomials_of_degree(vars.size(), d);
            const auto& e = monos[static_cast<std::size_t>(integer(0, static_cast<long>(monos.size()) - 1))];
            out.add_term(e, lazard(w, max_gen, 1));
        }
        return out;
    }

    // Polynomial in vars with rational coefficients and degree <= high.
    TruncSeries polynomial(const std::vector<std::string>& vars, int high, int guarantee, int max_terms = 4)
    {
        TruncSeries out(vars, guarantee);
        for (int k = 0; k < max_terms; ++k) {
            int d = static_cast<int>(integer(0, high));
            auto monos = monomials_of_degree(vars.size(), d);
            const auto& e = monos[static_cast<std::size_t>(integer(0, static_cast<long>(monos.size()) - 1))];
            out.add_term(e, GradedCoeff(rational()));
        }
        return out;
    }

    Character character(std::size_t rank, long range)
    {
        std::vector<long> w(rank);
        for (auto& x : w) x = integer(-range, range);
        return Character(std::move(w));
    }

    Character nonzero_character(std::size_t rank, long range)
    {
        Character c;
        do c = character(rank, range);
        while (c.is_zero());
        return c;
    }

    template <class T>
    void shuffle(std::vector<T>& v)
    {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(integer(0, static_cast<long>(i) - 1))]);
    }

private:
    std::mt19937_64 gen_;
};

} // namespace cobordism

#endif
