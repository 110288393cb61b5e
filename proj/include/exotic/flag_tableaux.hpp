#ifndef EXOTIC_FLAG_TABLEAUX_HPP
#define EXOTIC_FLAG_TABLEAUX_HPP

#include "exotic/common.hpp"
#include "exotic/subspace.hpp"

#include <string>
#include <vector>

namespace exotic {

// Marked (1,2)-tableau, stored as the orbit invariants rather than a digit
// grid: n1 / n2 = number of 2's in columns 1 / 2, ell = number of 1's in
// each column, mark in {0,1,2} occurring in column 1. The digit columns are
// recovered for rendering as 0^(p-nj-ell) 1^ell 2^nj, top to bottom.
struct MarkedTableau {
    Ambient ambient;
    unsigned n1 = 0;
    unsigned n2 = 0;
    unsigned ell = 0;
    unsigned mark = 0;

    bool operator==(const MarkedTableau&) const = default;
};

// A point (W, L) of Gr_k(V) x P(V1), both in the ambient Q^n.
struct FlagPair {
    Ambient ambient;
    Subspace W; // dim k
    Subspace L; // dim 1, inside V1
};

bool tableau_valid(const MarkedTableau& t);

// All of Theta_2^k, ordered by (n1+n2 desc, n1 desc, mark asc).
std::vector<MarkedTableau> enumerate_theta2k(const Ambient& amb);

// n1 = dim(W ^ V1), n2 = dim(W ^ V2), ell = k - n1 - n2;
// mark = 2 if L <= W, 1 if L <= W+V2 but L !<= W, 0 otherwise.
MarkedTableau classify_flag_pair(const FlagPair& fp);

// W = <e_1..e_n1> + <f_1..f_n2> + <e_(n1+j) + f_(n2+j) : j <= ell>,
// L = <e_1> / <e_(n1+1)> / <e_p> for marks 2 / 1 / 0.
FlagPair representative_flag(const MarkedTableau& t);

// ASCII: "(00/0/2, i=2)" -- the two digit columns row by row, '/'-separated.
std::string render_tableau(const MarkedTableau& t, RenderFormat fmt);

// Action of g = (g1, g2): W -> g W, L -> g1 L.
FlagPair apply_k(const FlagPair& fp, const RatMatrix& g1, const RatMatrix& g2);

} // namespace exotic

#endif
