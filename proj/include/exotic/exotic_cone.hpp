#ifndef EXOTIC_EXOTIC_CONE_HPP
#define EXOTIC_EXOTIC_CONE_HPP

#include "exotic/common.hpp"
#include "exotic/subspace.hpp"

#include <string>
#include <vector>

namespace exotic {

// Coarse type of the line L relative to Im a and ker b (Im a <= ker b):
//   I:   L inside Im a            (needs r >= 1)
//   II:  L inside ker b, not Im a (needs r+s < p)
//   III: L not inside ker b       (needs s >= 1)
enum class ExoticType { I, II, III };

// Type II splits: IIstar when q = r+s <= p-2 and q < min{k, n-k}, else II0.
enum class RefinedType { I, II0, IIstar, III };

std::string to_string(ExoticType t);
std::string to_string(RefinedType t);

// K-orbit of the exotic nilpotent cone P(V1) x N(s)_2^k. The shift sequence
// mu is not stored; it is determined by (p, q, r, s, type) and recomputed by
// mu_of, so label and mu can never disagree.
struct ExoticOrbitLabel {
    Ambient ambient;
    unsigned r = 0;
    unsigned s = 0;
    ExoticType typ = ExoticType::II;

    bool operator==(const ExoticOrbitLabel&) const = default;
};

// A point (L, z) with z = [[0,a],[b,0]], ab = 0, ba = 0. L is a line in V1,
// stored in the ambient Q^n.
struct ExoticPoint {
    Ambient ambient;
    Subspace L;  // dim 1, inside V1
    RatMatrix a; // p x q
    RatMatrix b; // q x p
};

// All labels of Pi_2^k, ordered by (r+s desc, r desc, type asc).
std::vector<ExoticOrbitLabel> enumerate_pi2k(const Ambient& amb);

// The shift sequence mu of length n-(r+s); entries in {-1,0,1,2}.
std::vector<int> mu_of(const ExoticOrbitLabel& lab);

RefinedType refine_type(const ExoticOrbitLabel& lab);

// dim O_(r,s) = (r+s)(n-(r+s)).
unsigned long dim_s_orbit(unsigned r, unsigned s, const Ambient& amb);

// dim of the exotic orbit: dim O_(r,s) + sum_i ceil(mu_i / 2) - 1.
unsigned long dim_exotic_orbit(const ExoticOrbitLabel& lab);

// Standard-basis representative: a maps f_j -> e_j for j <= r, b maps
// e_(p-s+j) -> f_(q-s+j) for j <= s, and L = <e_1> / <e_(r+1)> / <e_p>
// for types I / II / III.
ExoticPoint representative(const ExoticOrbitLabel& lab);

// Inverse of the parametrization: r = rk a, s = rk b, type from the position
// of L. Throws InvariantViolation when the point is not in the cone.
ExoticOrbitLabel classify_exotic_point(const ExoticPoint& pt);

// Striped signed diagram. ASCII alphabet: '+', '-', ':' (empty cell),
// '|' (the thick line between columns -1 and 0, drawn only next to a box).
std::string render_striped_diagram(const ExoticOrbitLabel& lab, RenderFormat fmt);

// Subspaces V1 = <e_1..e_p> and V2 = <f_1..f_q> of the ambient Q^n.
Subspace v1_subspace(const Ambient& amb);
Subspace v2_subspace(const Ambient& amb);

// Line <e_index> (0-based) as a subspace of Q^n.
Subspace coordinate_line(std::size_t ambient_dim, std::size_t index);

// Action of g = (g1, g2) in GL(V1) x GL(V2):
// L -> g1 L, a -> g1 a g2^(-1), b -> g2 b g1^(-1).
ExoticPoint apply_k(const ExoticPoint& pt, const RatMatrix& g1, const RatMatrix& g2);

} // namespace exotic

#endif
