// Lines of one slope on the n x n board.
//
// For a move (c,d) the board's squares split into maximal lines of slope
// d/c.  The multiset of line sizes determines the attack-pair counts:
//   alpha (ordered collinear pairs)  = sum of l^2 over lines,
//   beta  (ordered collinear triples) = sum of l^3.
// Both are computed two ways: by direct grouping of squares (the oracle)
// and from the closed multiplicity table, which also yields the exact
// constituent polynomials of alpha and beta per residue of n mod dhat.
#pragma once

#include "riders/core.hpp"
#include "riders/poly.hpp"
#include "riders/rational.hpp"

#include <map>

namespace riders {

struct LineMultiset {
    std::map<long, long> entries;  // line size -> multiplicity, no zero entries
    int n = 0;
    Move move;

    Integer total_squares() const;  // sum of size * multiplicity
};

// Oracle: group the n^2 squares by the line through them.
LineMultiset line_multiset_enumerated(Move move, BoardSize board);

// Closed multiplicity table: sizes 1..floor(n/dhat)-1 with multiplicity
// 2*chat*dhat, then the two boundary sizes.  Empty for n = 0.
LineMultiset line_multiset_closed(Move move, BoardSize board);

// sum over the closed multiset of l^power; power = 1 gives n^2.
Integer attack_power_sum(Move move, BoardSize board, int power);

// Constituent polynomials of alpha/beta for residue nbar = n mod dhat.
// The invariant part is the nbar = 0 constituent; the periodic part
// vanishes at nbar = 0.
Poly alpha_invariant(MoveNormalized m);
Poly alpha_periodic(MoveNormalized m, long nbar);
Poly alpha_constituent(MoveNormalized m, long nbar);
Poly beta_invariant(MoveNormalized m);
Poly beta_periodic(MoveNormalized m, long nbar);
Poly beta_constituent(MoveNormalized m, long nbar);

// Exact closed-form values; defined for all integers n via the Euclidean
// residue (used at n = -1 by the combinatorial-type checks).
Integer alpha_closed(Move move, BoardSize board);
Integer beta_closed(Move move, BoardSize board);
Integer alpha_closed_at(Move move, long n);
Integer beta_closed_at(Move move, long n);

}  // namespace riders
