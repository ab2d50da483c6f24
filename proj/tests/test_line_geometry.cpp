#include "riders/line_geometry.hpp"

#include <doctest.h>

#include <numeric>

using namespace riders;

namespace {

std::vector<Move> normalized_moves(int dhat_max) {
    std::vector<Move> out;
    for (int d = 1; d <= dhat_max; ++d)
        for (int c = 0; c <= d; ++c)
            if (std::gcd(c == 0 ? d : c, d) == 1) out.push_back(normalize_move(c, d));
    return out;
}

}  // namespace

TEST_CASE("multiset examples") {
    using Entries = std::map<long, long>;
    CHECK(line_multiset_enumerated(normalize_move(1, 0), {3}).entries == Entries{{3, 3}});
    CHECK(line_multiset_enumerated(normalize_move(1, 1), {3}).entries ==
          Entries{{1, 2}, {2, 2}, {3, 1}});
    CHECK(line_multiset_enumerated(normalize_move(1, 2), {3}).entries == Entries{{1, 5}, {2, 2}});
    CHECK(line_multiset_closed(normalize_move(1, 2), {3}).entries == Entries{{1, 5}, {2, 2}});
    CHECK(line_multiset_closed(normalize_move(1, 1), {4}).entries ==
          Entries{{1, 2}, {2, 2}, {3, 2}, {4, 1}});
    CHECK(line_multiset_closed(normalize_move(0, 1), {5}).entries == Entries{{5, 5}});
    CHECK(line_multiset_closed(normalize_move(1, 2), {0}).entries.empty());
}

TEST_CASE("closed equals enumerated and sums to n^2") {
    for (const Move m : normalized_moves(4)) {
        for (int n = 0; n <= 16; ++n) {
            const LineMultiset a = line_multiset_enumerated(m, {n});
            const LineMultiset b = line_multiset_closed(m, {n});
            CHECK(a.entries == b.entries);
            CHECK(b.total_squares() == Integer(n) * n);
        }
    }
    // orientation reduction: reflected moves give the same multiset
    for (int n = 0; n <= 10; ++n) {
        CHECK(line_multiset_enumerated(normalize_move(-1, 2), {n}).entries ==
              line_multiset_closed(normalize_move(-1, 2), {n}).entries);
        CHECK(line_multiset_closed(normalize_move(-1, 2), {n}).entries ==
              line_multiset_closed(normalize_move(1, 2), {n}).entries);
        CHECK(line_multiset_closed(normalize_move(2, 1), {n}).entries ==
              line_multiset_closed(normalize_move(1, 2), {n}).entries);
    }
}

TEST_CASE("attack power sums") {
    CHECK(attack_power_sum(normalize_move(1, 2), {3}, 2) == 13);
    CHECK(attack_power_sum(normalize_move(1, 1), {2}, 3) == 10);
    CHECK(attack_power_sum(normalize_move(1, 0), {4}, 2) == 64);
    for (const Move m : normalized_moves(5))
        for (int n = 0; n <= 12; ++n)
            CHECK(attack_power_sum(m, {n}, 1) == Integer(n) * n);
}

TEST_CASE("alpha and beta closed forms") {
    CHECK(alpha_closed(normalize_move(1, 2), {3}) == 13);
    CHECK(alpha_closed(normalize_move(1, 1), {3}) == 19);
    CHECK(alpha_closed(normalize_move(1, 0), {3}) == 27);
    CHECK(beta_closed(normalize_move(1, 2), {3}) == 21);
    CHECK(beta_closed(normalize_move(1, 1), {2}) == 10);
    CHECK(beta_closed(normalize_move(0, 1), {3}) == 81);

    for (const Move m : normalized_moves(6)) {
        for (int n = 0; n <= 30; ++n) {
            CHECK(alpha_closed(m, {n}) == attack_power_sum(m, {n}, 2));
            CHECK(beta_closed(m, {n}) == attack_power_sum(m, {n}, 3));
        }
    }
}

TEST_CASE("invariant part is the nbar = 0 constituent") {
    for (const Move mv : normalized_moves(6)) {
        const MoveNormalized m = normalized(mv);
        CHECK(alpha_periodic(m, 0).is_zero());
        CHECK(beta_periodic(m, 0).is_zero());
        CHECK(alpha_constituent(m, 0) == alpha_invariant(m));
    }
}

TEST_CASE("no second leading term") {
    for (const Move mv : normalized_moves(6)) {
        const MoveNormalized m = normalized(mv);
        for (long r = 0; r < m.dhat; ++r) {
            CHECK(alpha_constituent(m, r).coeff(2) == 0);
            CHECK(beta_constituent(m, r).coeff(3) == 0);
        }
    }
}

TEST_CASE("alternating symmetry of periodic coefficients") {
    // replacing nbar by d - nbar multiplies the coefficient of n^(e-i) by (-1)^i
    for (const Move mv : normalized_moves(6)) {
        const MoveNormalized m = normalized(mv);
        for (long r = 1; r < m.dhat; ++r) {
            const Poly pa = alpha_periodic(m, r);
            const Poly pa_ref = alpha_periodic(m, m.dhat - r);
            for (int i = 0; i <= 3; ++i) {
                const Rational sign = i % 2 ? -1 : 1;
                CHECK(pa_ref.coeff(3 - i) == sign * pa.coeff(3 - i));
            }
            const Poly pb = beta_periodic(m, r);
            const Poly pb_ref = beta_periodic(m, m.dhat - r);
            for (int i = 0; i <= 4; ++i) {
                const Rational sign = i % 2 ? -1 : 1;
                CHECK(pb_ref.coeff(4 - i) == sign * pb.coeff(4 - i));
            }
        }
    }
}
