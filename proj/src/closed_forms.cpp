#include "riders/closed_forms.hpp"

#include <sstream>

namespace riders {

Integer a_attacking_pairs(const Piece& piece, BoardSize board) {
    Integer total = 0;
    for (const Move& m : piece.moves) total += alpha_closed(m, board);
    total -= Integer(piece.moves.size() - 1) * Integer(board.n) * Integer(board.n);
    return total;
}

Integer u2_closed_at(const Piece& piece, long n) {
    // Six-term expansion of (n^4 - a_P(2;n)) / 2 with per-move residues.
    // The constant term carries 1/6, not the 1/3 a naive reading of the
    // theorem suggests; 1/6 is what the alpha sum expands to and the only
    // choice that keeps the result integral.
    const Rational nn(n);
    Rational total = nn * nn * nn * nn / 2;
    total += Rational(Integer(piece.moves.size()) - 1) / 2 * nn * nn;
    for (const Move& mv : piece.moves) {
        const MoveNormalized m = normalized(mv);
        const Rational c(m.chat), d(m.dhat);
        const Rational r(euclid_mod(n, m.dhat));
        total -= (3 * d - c) / (d * d) * nn * nn * nn / 6;
        total -= c * nn / 6;
        total -= r * (d - r) * (d - c) / (d * d) * nn / 2;
        total += c * (d - r) * (d - 2 * r) * r / (d * d) / 6;
    }
    return to_integer(total, "u2_closed");
}

Integer u2_closed(const Piece& piece, BoardSize board) { return u2_closed_at(piece, board.n); }

Integer u2_at_minus_one(const Piece& piece) {
    Integer v = u2_closed_at(piece, -1);
    if (v != Integer(piece.moves.size())) {
        std::ostringstream msg;
        msg << "u_P(2;-1) = " << v << " but piece '" << canonical_text(piece) << "' has "
            << piece.moves.size() << " moves";
        throw TypeCountMismatch(msg.str());
    }
    return v;
}

A1Data::A1Data(const Piece& piece) {
    for (const Move& m : piece.moves) moves_.push_back(normalized(m));
    a10_ = 0;
    for (const MoveNormalized& m : moves_) {
        const Rational c(m.chat), d(m.dhat);
        a10_ += (3 * d - c) / (3 * d * d);
    }
}

Rational A1Data::a12_at(long n) const {
    Rational v = 0;
    for (const MoveNormalized& m : moves_) {
        const Rational c(m.chat), d(m.dhat), r(euclid_mod(n, m.dhat));
        v += (c * d * d + 3 * (d - c) * r * (d - r)) / (3 * d * d);
    }
    return v;
}

Rational A1Data::a13_at(long n) const {
    Rational v = 0;
    for (const MoveNormalized& m : moves_) {
        const Rational c(m.chat), d(m.dhat), r(euclid_mod(n, m.dhat));
        v -= c / (3 * d * d) * r * (d - r) * (d - 2 * r);
    }
    return v;
}

Rational A1Data::value_at(long n) const {
    const Rational nn(n);
    return a10_ * nn * nn * nn + a12_at(n) * nn + a13_at(n);
}

GammaClosed::GammaClosed(const Piece& piece, long q)
    : q_(q), move_count_(static_cast<long>(piece.moves.size())), a1_(piece) {
    if (q < 1) throw UnsupportedQ("gamma_closed requires q >= 1");
    b10_ = 0;
    for (const Move& m : piece.moves) {
        const MoveNormalized mn = normalized(m);
        const Rational c(mn.chat), d(mn.dhat);
        b10_ += (2 * d - c) / (2 * d * d * d);
    }
}

Rational GammaClosed::gamma0() const { return Rational(1, factorial(q_)); }

Rational GammaClosed::gamma1() const {
    return -Rational(falling_factorial(q_, 2)) * a1_.a10() / (2 * Rational(factorial(q_)));
}

Rational GammaClosed::theta_i2(int i, long n) const {
    switch (i) {
        case 1: return -a1_.a10() / 2;
        case 2: return Rational(move_count_ - 1, 2);
        case 3: return -a1_.a12_at(n) / 2;
        case 4: return -a1_.a13_at(n) / 2;
        default: return 0;
    }
}

Rational GammaClosed::theta_i2i(int i) const {
    Rational v = 1;
    for (int k = 0; k < i; ++k) v *= -a1_.a10() / 2;
    return v / Rational(factorial(i));
}

namespace {

// Bivariate helper for the one-move identities: a polynomial in the line
// size l whose coefficients are polynomials in the board side x.
struct PolyInL {
    std::vector<Poly> c;  // c[k] multiplies l^k

    static PolyInL from_l_poly(const Poly& p) {
        PolyInL r;
        for (long k = 0; k <= p.degree(); ++k) r.c.push_back(Poly::constant(p.coeff(k)));
        return r;
    }
    static PolyInL from_x_poly(const Poly& p) { return PolyInL{{p}}; }

    PolyInL operator+(const PolyInL& o) const {
        PolyInL r;
        r.c.resize(std::max(c.size(), o.c.size()));
        for (size_t k = 0; k < r.c.size(); ++k) {
            if (k < c.size()) r.c[k] = r.c[k] + c[k];
            if (k < o.c.size()) r.c[k] = r.c[k] + o.c[k];
        }
        return r;
    }
    PolyInL operator-(const PolyInL& o) const { return *this + (o * Rational(-1)); }
    PolyInL operator*(const Rational& s) const {
        PolyInL r = *this;
        for (auto& p : r.c) p = p * s;
        return r;
    }
    PolyInL operator*(const PolyInL& o) const {
        PolyInL r;
        if (c.empty() || o.c.empty()) return r;
        r.c.resize(c.size() + o.c.size() - 1);
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] = r.c[i + j] + c[i] * o.c[j];
        return r;
    }
    Poly substitute_l(const Poly& lval) const {
        Poly acc;
        for (size_t k = c.size(); k-- > 0;) acc = acc * lval + c[k];
        return acc;
    }
    // sum over l = 1..upper(x); requires zero constant term in l so the
    // empty range (upper = -1) also evaluates to zero.
    Poly prefix_sum_to(const Poly& upper) const {
        Poly acc;
        for (size_t k = 0; k < c.size(); ++k)
            acc = acc + c[k] * prefix_sum(Poly::monomial(static_cast<long>(k))).compose(upper);
        return acc;
    }
};

// Constituent polynomial for residue r built from the line-multiset
// identities (binomial inclusion-exclusion collapsed with hockey-stick
// sums).  Valid for q = 2..4 and any residue 0 <= r < d.
Poly constituent_from_lines(int chat, int dhat, long r, int q) {
    const Rational c(chat), d(dhat), rr(r);
    const Poly x = Poly::monomial(1);
    const Poly x2 = x * x;
    const Poly delta({-rr / d, 1 / d});  // (x - r)/d
    const Poly base = x - delta * c;     // x - c*delta
    const Poly mult_lo = base * (d - rr) + Poly::constant(c * (rr + d));  // size delta
    const Poly mult_hi = base * rr;                                       // size delta + 1
    const Rational side_mult = 2 * c * d;                                 // sizes 1..delta-1

    auto sum_over_lines = [&](const PolyInL& f) -> Poly {
        Poly s = f.prefix_sum_to(delta - Poly::constant(1)) * side_mult;
        s = s + mult_lo * f.substitute_l(delta);
        s = s + mult_hi * f.substitute_l(delta + Poly::constant(1));
        return s;
    };

    const PolyInL l1{{Poly(), Poly::constant(1)}};  // the variable l itself
    const PolyInL choose2 = PolyInL::from_l_poly(binom_poly(2));
    const PolyInL choose3 = PolyInL::from_l_poly(binom_poly(3));
    const PolyInL choose4 = PolyInL::from_l_poly(binom_poly(4));
    const PolyInL board_minus_l = PolyInL::from_x_poly(x2) - l1;

    Poly u = binom_poly(q).compose(x2);
    u = u - sum_over_lines(q == 2 ? choose2 : q == 3 ? choose3 : choose4);
    if (q >= 3) {
        const PolyInL next = q == 3 ? choose2 : choose3;
        u = u - sum_over_lines(next * board_minus_l);
    }
    if (q == 4) {
        const Poly s2 = sum_over_lines(choose2);
        // unordered pairs of distinct lines, both with an attacking pair
        u = u - (s2 * s2 - sum_over_lines(choose2 * choose2)) * Rational(1, 2);
        // one attacking pair on a line, the other two pieces unattacked
        const PolyInL remaining =
            (board_minus_l * (board_minus_l - PolyInL::from_x_poly(Poly::constant(1)))) *
                Rational(1, 2) -
            PolyInL::from_x_poly(s2) + choose2;
        u = u - sum_over_lines(choose2 * remaining);
    }
    return u;
}

Poly printed_constituent(int chat, int dhat, long r, int q) {
    const Rational c(chat), d(dhat), rr(r);
    if (q == 2) {
        Poly inv = (Poly::monomial(4) + Poly::monomial(3, (c - 3 * d) / (3 * d * d)) -
                    Poly::monomial(1, c / 3)) *
                   Rational(1, 2);
        Poly per = (Poly::monomial(1, 3 * (c - d)) + Poly::constant(c * (d - 2 * rr))) *
                   (rr * (d - rr) / (6 * d * d));
        return inv + per;
    }
    // q == 3
    Poly inv = (Poly::monomial(6) + Poly::monomial(5, (c - 3 * d) / (d * d)) -
                Poly::monomial(4, (c - 2 * d) / (d * d * d)) - Poly::monomial(3, c) +
                Poly::monomial(2, c / d)) *
               Rational(1, 6);
    Poly per = (Poly::monomial(3, 3 * d * (c - d)) +
                Poly::monomial(2, 6 * d + c * d * d - 2 * c * d * rr - 6 * c) +
                Poly::monomial(1, 2 * (d - 2 * c) * (d - 2 * rr)) +
                Poly::constant(3 * c * (d - rr) * rr)) *
               (rr * (d - rr) / (6 * d * d * d));
    return inv + per;
}

}  // namespace

Poly one_move_constituent(Move move, int q, long nbar) {
    const MoveNormalized m = normalized(move);
    if (q == 1) return Poly::monomial(2);
    if (q == 2 || q == 3) return printed_constituent(m.chat, m.dhat, nbar, q);
    if (q == 4) return constituent_from_lines(m.chat, m.dhat, nbar, 4);
    throw UnsupportedQ("one-move closed formulas cover q = 1..4, got q = " + std::to_string(q));
}

Integer one_move_closed_at(Move move, int q, long n) {
    const MoveNormalized m = normalized(move);
    const Poly p = one_move_constituent(move, q, euclid_mod(n, m.dhat));
    return to_integer(p(Rational(n)), "one_move_closed");
}

Integer one_move_closed(Move move, int q, BoardSize board) {
    return one_move_closed_at(move, q, board.n);
}

Integer one_move_count_via_lines(Move move, int q, BoardSize board) {
    if (q < 2 || q > 4) throw UnsupportedQ("one_move_count_via_lines covers q = 2..4");
    const Integer squares = Integer(board.n) * board.n;
    const LineMultiset lines = line_multiset_closed(move, board);

    Integer s2 = 0;  // sum of C(l,2) over lines
    for (const auto& [l, mult] : lines.entries) s2 += binomial(Integer(l), 2) * mult;

    Integer u = binomial(squares, q);
    for (const auto& [l, mult] : lines.entries) {
        const Integer bl2 = binomial(Integer(l), 2);
        const Integer bl3 = binomial(Integer(l), 3);
        switch (q) {
            case 2:
                u -= bl2 * mult;
                break;
            case 3:
                u -= bl3 * mult;
                u -= bl2 * (squares - l) * mult;
                break;
            case 4:
                u -= binomial(Integer(l), 4) * mult;
                u -= bl3 * (squares - l) * mult;
                u -= bl2 * (binomial(squares - l, 2) - s2 + bl2) * mult;
                break;
        }
    }
    if (q == 4) {
        Integer sq_sum = 0;
        for (const auto& [l, mult] : lines.entries) {
            const Integer bl2 = binomial(Integer(l), 2);
            sq_sum += bl2 * bl2 * mult;
        }
        u -= (s2 * s2 - sq_sum) / 2;
    }
    return u;
}

Rational gamma3_periodic_one_move(Move move, long q, long nbar) {
    if (q < 2) throw UnsupportedQ("gamma_3 periodic part defined for q >= 2");
    const MoveNormalized m = normalized(move);
    const Rational c(m.chat), d(m.dhat), r(euclid_mod(nbar, m.dhat));
    return -Rational(1, factorial(q - 2)) * r * (d - r) * (d - c) / (2 * d * d);
}

}  // namespace riders
