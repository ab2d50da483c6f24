// Every explicit counting formula for nonattacking riders on the square
// board: attacking-pair counts and the two-piece formula for arbitrary
// pieces, the codimension-1 contribution A1 with its coefficients, the
// closed leading coefficients of the counting quasipolynomial, and the
// exact formulas for one-move riders with up to four pieces.
#pragma once

#include "riders/core.hpp"
#include "riders/line_geometry.hpp"
#include "riders/poly.hpp"
#include "riders/rational.hpp"

#include <stdexcept>

namespace riders {

struct UnsupportedQ : std::invalid_argument {
    explicit UnsupportedQ(const std::string& w) : std::invalid_argument(w) {}
};
struct TypeCountMismatch : std::runtime_error {
    explicit TypeCountMismatch(const std::string& w) : std::runtime_error(w) {}
};

// Ordered attacking pairs of an arbitrary piece, coincident squares
// counted once per square: sum over moves of alpha minus (|M|-1) n^2.
Integer a_attacking_pairs(const Piece& piece, BoardSize board);

// u_P(2;n): the closed two-piece count, per-move residues nbar_r.
Integer u2_closed(const Piece& piece, BoardSize board);
Integer u2_closed_at(const Piece& piece, long n);

// Evaluates the two-piece formula at n = -1 (every nbar_r = dhat_r - 1);
// must equal the number of basic moves, else throws TypeCountMismatch.
Integer u2_at_minus_one(const Piece& piece);

// A1(n) = sum over moves of alpha^m(n) = a10 n^3 + a12(n) n + a13(n).
// a10 is constant; a12 and a13 depend on n through the per-move residues
// and have period dividing lambda_of(piece).
class A1Data {
  public:
    explicit A1Data(const Piece& piece);
    const Rational& a10() const { return a10_; }
    Rational a12_at(long n) const;
    Rational a13_at(long n) const;
    Rational value_at(long n) const;  // A1(n)

  private:
    std::vector<MoveNormalized> moves_;
    Rational a10_;
};

// Closed coefficients of u_P(q;n) = gamma_0 n^{2q} + gamma_1 n^{2q-1} + ...
// and the closed entries of the falling-factorial decomposition
// q! gamma_i = (q)_{2i} theta(i,2i) + ... + (q)_2 theta(i,2).
class GammaClosed {
  public:
    GammaClosed(const Piece& piece, long q);
    Rational gamma0() const;  // 1/q!
    Rational gamma1() const;  // -(q)_2 a10 / (2 q!)
    Rational theta_i2(int i, long n = 0) const;  // -a10/2, (|M|-1)/2, -a12/2, -a13/2, then 0
    Rational theta_i2i(int i) const;             // (-a10/2)^i / i!
    const Rational& b10() const { return b10_; }
    const A1Data& a1() const { return a1_; }

  private:
    long q_;
    long move_count_;
    A1Data a1_;
    Rational b10_;
};

// Exact count for a one-move rider, q = 1..4: the closed per-residue
// constituent polynomial evaluated at n.  Throws UnsupportedQ otherwise.
Integer one_move_closed(Move move, int q, BoardSize board);
Integer one_move_closed_at(Move move, int q, long n);

// The residue-nbar constituent polynomial behind one_move_closed.
Poly one_move_constituent(Move move, int q, long nbar);

// Independent mid-speed oracle: the inclusion-exclusion binomial sums
// evaluated directly over the line multiset, q = 2..4.
Integer one_move_count_via_lines(Move move, int q, BoardSize board);

// Periodic part of gamma_3 for a one-move rider (q >= 2):
//   -(1/(q-2)!) * nbar(d-nbar)(d-c) / (2 d^2).
Rational gamma3_periodic_one_move(Move move, long q, long nbar);

}  // namespace riders
