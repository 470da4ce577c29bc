#ifndef COBORDISM_EQUIVARIANT_HPP
#define COBORDISM_EQUIVARIANT_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cobordism/fgl.hpp"
#include "cobordism/series.hpp"

namespace cobordism {

// Element of the character lattice Z^n, in coordinates of a fixed basis.
class Character {
public:
    Character() = default;
    explicit Character(std::vector<long> weights) : weights_(std::move(weights)) {}

    static Character basis(std::size_t rank, std::size_t index);

    const std::vector<long>& weights() const noexcept { return weights_; }
    std::size_t rank() const noexcept { return weights_.size(); }
    long operator[](std::size_t i) const { return weights_.at(i); }

    bool is_zero() const noexcept;
    // gcd of the entries; 0 for the zero character.
    long content() const;
    bool is_primitive() const { return content() == 1; }
    // Primitive vector with the same direction (content() > 0 required).
    Character primitive_part() const;
    // Proportional over Q (the zero character is proportional to nothing).
    bool proportional_to(const Character& o) const;

    Character operator-() const;
    friend Character operator+(const Character& a, const Character& b);
    friend Character operator-(const Character& a, const Character& b) { return a + (-b); }
    friend bool operator==(const Character&, const Character&) = default;
    friend auto operator<=>(const Character&, const Character&) = default;

    // "[1,-1]"
    std::string render() const;

private:
    std::vector<long> weights_;
};

// Do {a, b} extend to a basis of Z^n? All 2x2 minors must have gcd 1.
bool extends_to_basis(const Character& a, const Character& b);

// The ring S(T) = L[[t_1..t_n]] for a split torus of rank n, with t_j the
// first Chern class of the j-th basis character.
class TorusContext {
public:
    TorusContext(std::size_t rank, std::shared_ptr<const FGLContext> fgl);

    std::size_t rank() const noexcept { return rank_; }
    const std::vector<std::string>& vars() const noexcept { return vars_; }
    const FGLContext& fgl() const noexcept { return *fgl_; }
    std::shared_ptr<const FGLContext> fgl_ptr() const noexcept { return fgl_; }
    int degree() const noexcept { return fgl_->degree(); }

    TruncSeries t(std::size_t j) const;
    TruncSeries one() const;
    TruncSeries zero() const;
    TruncSeries constant(const GradedCoeff& c) const;

    // c_1^T(L_chi) = sum_F [chi_j]_F t_j.
    TruncSeries chern(const Character& chi) const;
    // The linear form sum chi_j t_j.
    TruncSeries linear_form(const Character& chi) const;
    // Product of chern(chi) over the list.
    TruncSeries euler(const std::vector<Character>& weights) const;

private:
    std::size_t rank_;
    std::shared_ptr<const FGLContext> fgl_;
    std::vector<std::string> vars_;
};

// c_1 of chi in coordinates `vars` (same FGL), as used for adapted bases.
TruncSeries chern_in(const FGLContext& fgl, const std::vector<std::string>& vars, const Character& chi);

// Change of basis of the character lattice whose first vector is a given
// primitive character, together with the induced automorphism of S(T).
// In adapted coordinates s_k = c_1(L_{b_k}) for the rows b_k of basis().
class CoordinateTransform {
public:
    CoordinateTransform(const TorusContext& ctx, const Character& chi0);

    // Rows b_1..b_n; b_1 = chi0, det = +-1.
    const std::vector<Character>& basis() const noexcept { return basis_; }
    // Rows of the inverse matrix: e_j = sum_k inverse()[j][k] b_k.
    const std::vector<Character>& inverse() const noexcept { return inverse_; }
    long determinant() const;
    const std::vector<std::string>& adapted_vars() const noexcept { return adapted_vars_; }

    // Series in t_1..t_n rewritten in s_1..s_n.
    TruncSeries to_adapted(const TruncSeries& f) const;
    // Series in s_1..s_n rewritten in t_1..t_n.
    TruncSeries from_adapted(const TruncSeries& f) const;

private:
    std::vector<Character> basis_;
    std::vector<Character> inverse_;
    std::vector<std::string> adapted_vars_;
    std::map<std::string, TruncSeries> forward_;
    std::map<std::string, TruncSeries> backward_;
};

CoordinateTransform adapt_coordinates(const TorusContext& ctx, const Character& chi0);

// q with q * c_1(L_chi)^d = f. Writes chi = m*chi0 with chi0 primitive, moves
// to coordinates where c_1(L_chi0) = s_1, strips s_1^d and divides by the
// d-th power of the unit [m]_F(s_1)/s_1. Guarantee drops by d.
TruncSeries divide_by_chern(const TorusContext& ctx, const TruncSeries& f, const Character& chi, int d);

struct ChernFactor {
    Character chi;
    int multiplicity = 1;
};

struct MembershipResult {
    bool in_product = false;      // f in (prod gamma_j)
    bool in_intersection = false; // f in every (gamma_j)
    bool consistent() const noexcept { return in_product == in_intersection; }
};

// Membership of f in (gamma_1 ... gamma_s) and in the intersection of the
// (gamma_j), gamma_j = c_1(L_chi_j)^d_j, computed independently. Requires
// every pair of characters to extend to a lattice basis.
MembershipResult ideal_membership_product(const TorusContext& ctx, const std::vector<ChernFactor>& factors,
                                          const TruncSeries& f);

// Image in L = S/(t_1..t_n).
GradedCoeff augmentation(const TruncSeries& f);

} // namespace cobordism

#endif
