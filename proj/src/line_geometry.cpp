#include "riders/line_geometry.hpp"

namespace riders {

Integer LineMultiset::total_squares() const {
    Integer t = 0;
    for (const auto& [size, mult] : entries) t += Integer(size) * mult;
    return t;
}

LineMultiset line_multiset_enumerated(Move move, BoardSize board) {
    const int n = board.n;
    LineMultiset result;
    result.n = n;
    result.move = move;
    if (n <= 0) return result;

    // Walk each square back along -(c,d) to the unique base point of its
    // line; canonical orientation guarantees termination (y decreases, or
    // x does for the horizontal move).
    std::map<std::pair<int, int>, long> line_sizes;
    for (int y = 1; y <= n; ++y) {
        for (int x = 1; x <= n; ++x) {
            int bx = x, by = y;
            while (bx - move.c >= 1 && bx - move.c <= n && by - move.d >= 1 && by - move.d <= n) {
                bx -= move.c;
                by -= move.d;
            }
            ++line_sizes[{bx, by}];
        }
    }
    for (const auto& [base, size] : line_sizes) ++result.entries[size];
    return result;
}

LineMultiset line_multiset_closed(Move move, BoardSize board) {
    const int n = board.n;
    LineMultiset result;
    result.n = n;
    result.move = move;
    if (n <= 0) return result;

    const MoveNormalized m = normalized(move);
    const long c = m.chat, d = m.dhat;
    const long nbar = n % d;
    const long delta = n / d;

    auto add = [&result](long size, long mult) {
        if (size > 0 && mult > 0) result.entries[size] += mult;
    };
    for (long l = 1; l < delta; ++l) add(l, 2 * c * d);
    add(delta, (d - nbar) * (n - c * delta) + c * (nbar + d));
    add(delta + 1, nbar * (n - c * delta));
    return result;
}

Integer attack_power_sum(Move move, BoardSize board, int power) {
    Integer total = 0;
    for (const auto& [size, mult] : line_multiset_closed(move, board).entries) {
        Integer p = 1;
        for (int i = 0; i < power; ++i) p *= size;
        total += p * mult;
    }
    return total;
}

Poly alpha_invariant(MoveNormalized m) {
    const Rational c(m.chat), d(m.dhat);
    return Poly::monomial(3, (3 * d - c) / (3 * d * d)) + Poly::monomial(1, c / 3);
}

Poly alpha_periodic(MoveNormalized m, long nbar) {
    const Rational c(m.chat), d(m.dhat), r(nbar);
    const Rational scale = r * (d - r) / (d * d);
    return (Poly::monomial(1, d - c) - Poly::constant(c * (d - 2 * r) / 3)) * scale;
}

Poly alpha_constituent(MoveNormalized m, long nbar) {
    return alpha_invariant(m) + alpha_periodic(m, nbar);
}

Poly beta_invariant(MoveNormalized m) {
    const Rational c(m.chat), d(m.dhat);
    return Poly::monomial(4, (2 * d - c) / (2 * d * d * d)) + Poly::monomial(2, c / (2 * d));
}

Poly beta_periodic(MoveNormalized m, long nbar) {
    const Rational c(m.chat), d(m.dhat), r(nbar);
    const Rational scale = r * (d - r) / (d * d * d);
    // Middle sign: expanding the multiset cube sums gives +(d-2c)(d-2r);
    // the opposite sign fails the oracle already at d = 3, n = 1.
    return (Poly::monomial(2, 3 * (d - c)) + Poly::monomial(1, (d - 2 * c) * (d - 2 * r)) +
            Poly::constant(3 * c * r * (d - r) / 2)) *
           scale;
}

Poly beta_constituent(MoveNormalized m, long nbar) {
    return beta_invariant(m) + beta_periodic(m, nbar);
}

Integer alpha_closed_at(Move move, long n) {
    const MoveNormalized m = normalized(move);
    const Poly p = alpha_constituent(m, euclid_mod(n, m.dhat));
    return to_integer(p(Rational(n)), "alpha_closed");
}

Integer beta_closed_at(Move move, long n) {
    const MoveNormalized m = normalized(move);
    const Poly p = beta_constituent(m, euclid_mod(n, m.dhat));
    return to_integer(p(Rational(n)), "beta_closed");
}

Integer alpha_closed(Move move, BoardSize board) { return alpha_closed_at(move, board.n); }
Integer beta_closed(Move move, BoardSize board) { return beta_closed_at(move, board.n); }

}  // namespace riders
