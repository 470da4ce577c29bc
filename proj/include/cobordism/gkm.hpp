#ifndef COBORDISM_GKM_HPP
#define COBORDISM_GKM_HPP

#include <optional>
#include <string>
#include <vector>

#include "cobordism/equivariant.hpp"

namespace cobordism {

// Edge of a GKM graph; chi is the tangent character at v (at w it is -chi).
struct GKMEdge {
    std::string v;
    std::string w;
    Character chi;
};

// Which generator produced a graph, if any. Lets callers rebuild the
// distinguished classes of the family.
struct GraphFamily {
    enum class Kind { None, P1, Pn, Flag };
    Kind kind = Kind::None;
    Character chi; // P1
    int n = 0;     // Pn, Flag
};

class GKMGraph {
public:
    struct Incidence {
        std::size_t edge;
        std::size_t neighbor;
        Character chi; // tangent character at the vertex itself
    };

    GKMGraph() = default;
    GKMGraph(std::size_t rank, int dim, std::vector<std::string> vertices, std::vector<GKMEdge> edges);

    std::size_t rank() const noexcept { return rank_; }
    int dim() const noexcept { return dim_; }
    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    const std::vector<GKMEdge>& edges() const noexcept { return edges_; }
    const GraphFamily& family() const noexcept { return family_; }
    void set_family(GraphFamily f) { family_ = std::move(f); }

    std::optional<std::size_t> index_of(const std::string& id) const;
    std::vector<Incidence> incident(std::size_t v) const;
    std::vector<Character> tangent_weights(std::size_t v) const;

private:
    std::size_t rank_ = 0;
    int dim_ = 0;
    std::vector<std::string> vertices_;
    std::vector<GKMEdge> edges_;
    GraphFamily family_;
};

struct Diagnostic {
    std::string location;
    std::string message;
};

// Empty result means the graph is valid.
std::vector<Diagnostic> gkm_validate(const GKMGraph& g);
// Throws HypothesisViolation naming the first problem.
void require_valid(const GKMGraph& g);

// One series per vertex, in the order of GKMGraph::vertices().
class PiecewiseClass {
public:
    PiecewiseClass() = default;
    explicit PiecewiseClass(std::vector<TruncSeries> values) : values_(std::move(values)) {}

    std::size_t size() const noexcept { return values_.size(); }
    const TruncSeries& operator[](std::size_t i) const { return values_.at(i); }
    TruncSeries& operator[](std::size_t i) { return values_.at(i); }
    const std::vector<TruncSeries>& values() const noexcept { return values_; }

    // Smallest guarantee among the components.
    int guarantee() const;
    PiecewiseClass truncated(int guarantee) const;
    // Same series multiplied into every component.
    PiecewiseClass scaled(const TruncSeries& s) const;

    PiecewiseClass& operator+=(const PiecewiseClass& o);
    PiecewiseClass& operator-=(const PiecewiseClass& o);
    friend PiecewiseClass operator+(PiecewiseClass a, const PiecewiseClass& b) { return a += b; }
    friend PiecewiseClass operator-(PiecewiseClass a, const PiecewiseClass& b) { return a -= b; }
    // Pointwise product.
    friend PiecewiseClass operator*(const PiecewiseClass& a, const PiecewiseClass& b);
    friend bool operator==(const PiecewiseClass& a, const PiecewiseClass& b) { return a.values_ == b.values_; }

private:
    std::vector<TruncSeries> values_;
};

PiecewiseClass constant_class(const GKMGraph& g, const TruncSeries& s);

// Ideal used for the edge congruences: the Euler class c_1(L_chi) or the
// linear form sum chi_j t_j.
enum class Congruence { Chern, LinearForm };

// Index of the first edge whose congruence fails, if any. Throws
// TruncationInsufficient when the class is known through degree < 1.
std::optional<std::size_t> gkm_first_violation(const TorusContext& ctx, const GKMGraph& g, const PiecewiseClass& a,
                                               Congruence mode = Congruence::Chern);
bool gkm_is_class(const TorusContext& ctx, const GKMGraph& g, const PiecewiseClass& a,
                  Congruence mode = Congruence::Chern);

// Product of c_1 over the tangent characters at v.
TruncSeries gkm_euler_class(const TorusContext& ctx, const GKMGraph& g, std::size_t v);
// s * e_v at v and 0 elsewhere.
PiecewiseClass gkm_pushforward_point(const TorusContext& ctx, const GKMGraph& g, std::size_t v, const TruncSeries& s);

// numerator / denominator, the denominator's lowest layer in degree euler_degree.
struct LocalizedTerm {
    TruncSeries numerator;
    TruncSeries denominator;
    int euler_degree = 0;
};

// a + b over the common denominator. The numerator is kept through degree
// cap + euler degree of the sum, the denominator through denominator_cap.
LocalizedTerm add_localized(const LocalizedTerm& a, const LocalizedTerm& b, int cap, int denominator_cap);

struct IntegrationResult {
    TruncSeries value; // the pushforward to a point, in S(T)
    GradedCoeff lazard; // its image in L
    // No t-content through the guarantee.
    bool pure() const;
};

// Sum over vertices of a_v / e_v. The class is checked first (NotAClass).
// The result is known through at most G_a - dim, and through less when the
// Euler classes (known through the FGL degree D) are the limit: for P1 with
// G_a = D it is D - 2. TruncationInsufficient when G_a < dim or nothing is
// left. `order` permutes the fold; the result does not depend on it.
IntegrationResult gkm_integrate(const TorusContext& ctx, const GKMGraph& g, const PiecewiseClass& a,
                                const std::vector<std::size_t>& order = {});

// Coefficients c_k in S(T) with sum c_k * basis_k = a through the common
// guarantee (optionally lowered to `truncation`). Basis classes must be
// homogeneous. c_k is known through degree G - deg(basis_k).
std::vector<TruncSeries> gkm_basis_expand(const GKMGraph& g, const std::vector<PiecewiseClass>& basis,
                                          const PiecewiseClass& a, std::optional<int> truncation = std::nullopt);
// Augmentations of the basis coefficients.
std::vector<GradedCoeff> gkm_tensor_with_L(const GKMGraph& g, const std::vector<PiecewiseClass>& basis,
                                           const PiecewiseClass& a, std::optional<int> truncation = std::nullopt);

// Generators. Vertex ids: p1 "0","inf"; pn "0".."n"; flag permutations in
// one-line notation ("123", "213", ...) ordered by length, then lexicographically.
GKMGraph gkm_generate_p1(const Character& chi);
GKMGraph gkm_generate_pn(int n);
GKMGraph gkm_generate_flag(int n);
// kind is "p1", "pn" or "flag"; params is the character (p1) or {n}.
GKMGraph gkm_generate(const std::string& kind, const std::vector<long>& params);

// Permutations of 1..n in the flag vertex order.
std::vector<std::vector<int>> flag_permutations(int n);
std::string permutation_id(const std::vector<int>& w);
// Exponent vectors a with 0 <= a_i <= n - i, in graded order.
std::vector<Exponents> artin_exponents(int n);

// x_k restricted to w is t_{w(k)}.
std::vector<PiecewiseClass> tautological_classes(const TorusContext& ctx, const GKMGraph& g);
// h at vertex j is t_j, with t_0 = 0.
PiecewiseClass hyperplane_class(const TorusContext& ctx, const GKMGraph& g);
// A free homogeneous S(T)-basis for generated graphs:
// p1: 1 and the point class at "0"; pn: linear subspaces; flag: Artin monomials in the x_k.
std::vector<PiecewiseClass> standard_basis(const TorusContext& ctx, const GKMGraph& g);

} // namespace cobordism

#endif
