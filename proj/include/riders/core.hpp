// Basic move directions, rider pieces, and board sizes.
//
// A rider attacks along every integer multiple of each of its basic moves
// (c,d).  A move and its negation span the same line, so moves are stored
// in a canonical orientation: d > 0, or d = 0 and c = 1.  All values are
// immutable after construction.
#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace riders {

struct ZeroMove : std::invalid_argument {
    ZeroMove() : std::invalid_argument("move (0,0) is not a direction") {}
};
struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& w) : std::invalid_argument(w) {}
};
struct ParallelMoves : std::invalid_argument {
    explicit ParallelMoves(const std::string& w) : std::invalid_argument(w) {}
};
struct EmptyPiece : std::invalid_argument {
    EmptyPiece() : std::invalid_argument("piece has no moves") {}
};

// A reduced direction (c,d), slope d/c; d/c = 1/0 is the horizontal move (1,0).
struct Move {
    int c = 0;
    int d = 0;
    friend auto operator<=>(const Move& a, const Move& b) {
        return std::pair(a.d, a.c) <=> std::pair(b.d, b.c);
    }
    friend bool operator==(const Move&, const Move&) = default;
};

// (chat, dhat) = (min, max) of |c|, |d|.  The closed formulas are stated
// for this orientation; the board's symmetries make it equivalent.
struct MoveNormalized {
    int chat = 0;
    int dhat = 1;
};

struct BoardSize {
    int n = 0;
};

// Reduce by the gcd and canonicalize the orientation.  (c,d) and (-c,-d)
// map to the same Move.
Move normalize_move(long cx, long dy);

MoveNormalized normalized(Move m);

struct Piece {
    std::vector<Move> moves;  // sorted, pairwise non-parallel, nonempty
    std::string name;         // optional label ("Q", "N", ...)

    bool operator==(const Piece& o) const { return moves == o.moves; }
};

// Accepts a named alias (Q, R, B, N, or a partial-queen code Qod with
// o,d in 0..2 counting orthogonal and diagonal moves) or a
// semicolon-separated move list "c,d;c,d;...".
Piece parse_piece(const std::string& text);

// "c,d;c,d;..." in sorted canonical order; parse_piece of this is the
// identity on the move set.
std::string canonical_text(const Piece& piece);

Piece make_piece(std::vector<Move> moves, std::string name = "");

// Lambda = lcm of dhat over the piece's moves; the two-piece period bound.
long lambda_of(const Piece& piece);

}  // namespace riders
