#include "riders/quasipoly.hpp"

#include "riders/closed_forms.hpp"
#include "riders/line_geometry.hpp"

#include <doctest.h>

using namespace riders;

namespace {

std::map<long, Integer> one_move_data(Move m, int q, long n_max) {
    std::map<long, Integer> data;
    for (long n = 0; n <= n_max; ++n) data[n] = one_move_closed_at(m, q, n);
    return data;
}

std::map<long, Integer> u2_data(const Piece& piece, long n_max) {
    std::map<long, Integer> data;
    for (long n = 0; n <= n_max; ++n) data[n] = u2_closed_at(piece, n);
    return data;
}

// The (1,2) rider's q = 2 constituents, frozen reference values from
// the closed form {n^4/2 - 5n^3/24 - 11n/48} + (-1)^n n/16.
Quasipolynomial rider12_q2_reference() {
    const Poly even({Rational(0), Rational(-11, 48) + Rational(1, 16), Rational(0),
                     Rational(-5, 24), Rational(1, 2)});
    const Poly odd({Rational(0), Rational(-11, 48) - Rational(1, 16), Rational(0),
                    Rational(-5, 24), Rational(1, 2)});
    return Quasipolynomial(2, {even, odd});
}

}  // namespace

TEST_CASE("fit recovers the (1,2) two-piece constituents") {
    const Quasipolynomial qp =
        fit_quasipolynomial(one_move_data(normalize_move(1, 2), 2, 17), 4, 2);
    CHECK(qp == rider12_q2_reference());
    for (long n = 0; n <= 17; ++n)
        CHECK(qp.evaluate(n) == Rational(one_move_closed_at(normalize_move(1, 2), 2, n)));
}

TEST_CASE("fit of a constant") {
    std::map<long, Integer> data;
    for (long n = 0; n <= 3; ++n) data[n] = 7;
    const Quasipolynomial qp = fit_quasipolynomial(data, 0, 1);
    CHECK(qp.degree() == 0);
    CHECK(qp.evaluate(123) == 7);
}

TEST_CASE("queen q=2 fit has the closed n^3 coefficient") {
    const Quasipolynomial qp = fit_quasipolynomial(u2_data(parse_piece("Q"), 8), 4, 1);
    CHECK(qp.coefficient(0, 3) == Rational(-5, 3));
    CHECK(qp.coefficient(0, 4) == Rational(1, 2));
}

TEST_CASE("fit errors") {
    std::map<long, Integer> sparse{{0, 0}, {2, 8}, {4, 44}};
    CHECK_THROWS_AS(fit_quasipolynomial(sparse, 4, 1), InsufficientData);
    // period-1 hypothesis on genuinely period-2 data
    CHECK_THROWS_AS(fit_quasipolynomial(one_move_data(normalize_move(1, 2), 2, 20), 4, 1),
                    InconsistentData);
}

TEST_CASE("minimal periods of two-piece counts") {
    CHECK(minimal_period(u2_data(parse_piece("Q"), 14), 4, 4) == 1);
    CHECK(minimal_period(one_move_data(normalize_move(1, 2), 2, 25), 4, 6) == 2);
    CHECK(minimal_period(one_move_data(normalize_move(1, 3), 2, 40), 4, 6) == 3);
    CHECK_THROWS_AS(minimal_period(one_move_data(normalize_move(1, 3), 2, 40), 4, 2),
                    NoPeriodFound);
    CHECK_THROWS_AS(minimal_period(one_move_data(normalize_move(1, 3), 2, 10), 4, 6),
                    InsufficientData);
}

TEST_CASE("refit at a multiple of the period agrees residue by residue") {
    const auto data = one_move_data(normalize_move(1, 2), 2, 35);
    const Quasipolynomial p2 = fit_quasipolynomial(data, 4, 2);
    const Quasipolynomial p6 = fit_quasipolynomial(data, 4, 6);
    for (long r = 0; r < 6; ++r) CHECK(p6.constituent(r) == p2.constituent(r % 2));
    // the minimal period divides any period the data fits
    CHECK(minimal_period(data, 4, 6) == 2);
    for (long p : {2, 4, 6}) {
        CHECK_NOTHROW(fit_quasipolynomial(data, 4, p));
        CHECK(p % 2 == 0);
    }
}

TEST_CASE("coefficient table periods") {
    const CoefficientTable t12 = coefficient_table(rider12_q2_reference());
    CHECK(t12.row_period == std::vector<long>{1, 1, 1, 2, 1});

    const Quasipolynomial queen = fit_quasipolynomial(u2_data(parse_piece("Q"), 8), 4, 1);
    CHECK(coefficient_table(queen).row_period == std::vector<long>{1, 1, 1, 1, 1});

    const Quasipolynomial rider3 =
        fit_quasipolynomial(one_move_data(normalize_move(1, 2), 3, 17), 6, 2);
    const CoefficientTable t3 = coefficient_table(rider3);
    CHECK(t3.row_period[3] == 2);
    // the (-1)^n {n^3/16 - ...} periodic part
    CHECK(rider3.coefficient(0, 3) - rider3.coefficient(1, 3) == Rational(1, 8));
}

TEST_CASE("evaluate at -1 gives combinatorial types") {
    const Quasipolynomial queen = fit_quasipolynomial(u2_data(parse_piece("Q"), 8), 4, 1);
    CHECK(queen.evaluate(-1) == 4);
    for (int q = 2; q <= 4; ++q) {
        const Quasipolynomial qp =
            fit_quasipolynomial(one_move_data(normalize_move(1, 2), q, 2 * (2 * q + 2) + 1), 2 * q, 2);
        CHECK(qp.evaluate(-1) == 1);
    }
}

TEST_CASE("parity of subspace constituents") {
    auto alpha_fit = [](Move m, long n_max) {
        std::map<long, Integer> data;
        for (long n = 0; n <= n_max; ++n) data[n] = alpha_closed_at(m, n);
        return fit_quasipolynomial(data, 3, normalized(m).dhat);
    };
    auto beta_fit = [](Move m, long n_max) {
        std::map<long, Integer> data;
        for (long n = 0; n <= n_max; ++n) data[n] = beta_closed_at(m, n);
        return fit_quasipolynomial(data, 4, normalized(m).dhat);
    };

    CHECK(parity_check(alpha_fit(normalize_move(1, 2), 24), 3));
    CHECK(parity_check(beta_fit(normalize_move(1, 2), 24), 4));
    CHECK(parity_check(alpha_fit(normalize_move(1, 1), 12), 3));
    CHECK(parity_check(beta_fit(normalize_move(2, 3), 40), 4));

    // period 3: the quasipolynomial is odd though no single constituent is
    const Quasipolynomial a31 = alpha_fit(normalize_move(1, 3), 40);
    CHECK(parity_check(a31, 3));
    const Poly c1 = a31.constituent(1);
    CHECK_FALSE(c1.reflected() == -c1);

    // wrong dimension parity must fail
    CHECK_FALSE(parity_check(alpha_fit(normalize_move(1, 2), 24), 4));
}

TEST_CASE("coefficient parity across residues") {
    // gammabar_{p-i,j} = (-1)^j gammabar_{i,j}; in particular odd-j
    // coefficients vanish at residue 0 and at p/2 for even p
    for (const char* mv : {"1,2", "1,3", "1,4", "2,5"}) {
        const Move m = parse_piece(mv).moves.front();
        const long p = normalized(m).dhat;
        std::map<long, Integer> data;
        for (long n = 0; n <= 14 * p; ++n) data[n] = beta_closed_at(m, n);
        const Quasipolynomial qp = fit_quasipolynomial(data, 4, p);
        for (long j = 0; j <= 4; ++j) {
            const Rational sign = j % 2 ? -1 : 1;
            for (long i = 0; i < p; ++i)
                CHECK(qp.coefficient(euclid_mod(p - i, p), 4 - j) == sign * qp.coefficient(i, 4 - j));
            if (j % 2) {
                CHECK(qp.coefficient(0, 4 - j) == 0);
                if (p % 2 == 0) CHECK(qp.coefficient(p / 2, 4 - j) == 0);
            }
        }
    }
}

TEST_CASE("generating functions") {
    const Quasipolynomial queen = fit_quasipolynomial(u2_data(parse_piece("Q"), 8), 4, 1);
    const RationalGF gf = generating_function(queen);
    CHECK(gf.recurrence_length == 5);
    CHECK(gf.denominator == std::vector<Integer>{1, -5, 10, -10, 5, -1});  // (1-x)^5
    const auto series = gf.series(13);
    for (long n = 0; n <= 12; ++n) CHECK(series[static_cast<size_t>(n)] == queen.evaluate(n));

    const Quasipolynomial one = Quasipolynomial(1, {Poly::constant(1)});
    const RationalGF gf1 = generating_function(one);
    CHECK(gf1.recurrence_length == 1);
    CHECK(gf1.numerator == std::vector<Integer>{1});
    CHECK(gf1.denominator == std::vector<Integer>{1, -1});

    const Quasipolynomial rider = rider12_q2_reference();
    const RationalGF gf12 = generating_function(rider);
    CHECK(gf12.recurrence_length <= 10);
    CHECK(gf12.recurrence_length < (rider.degree() + 1) * rider.period());
    const auto s12 = gf12.series(21);
    for (long n = 0; n <= 20; ++n) CHECK(s12[static_cast<size_t>(n)] == rider.evaluate(n));
}

TEST_CASE("generating function series reproduces long prefixes") {
    for (const char* text : {"N", "1,3"}) {
        const Piece piece = parse_piece(text);
        const Quasipolynomial qp =
            fit_quasipolynomial(u2_data(piece, 12 * lambda_of(piece)), 4, lambda_of(piece));
        const RationalGF gf = generating_function(qp);
        const long want = 3 * (qp.degree() + 1) * qp.period();
        const auto series = gf.series(want);
        for (long n = 0; n < want; ++n) CHECK(series[static_cast<size_t>(n)] == qp.evaluate(n));
    }
}

TEST_CASE("falling factorial decomposition") {
    // single unknown: q! gamma_1 = (q)_2 theta, theta = -a10/2
    {
        const Piece queen = parse_piece("Q");
        std::map<long, Rational> values;
        for (long q = 2; q <= 4; ++q) {
            const GammaClosed gc(queen, q);
            values[q] = Rational(factorial(q)) * gc.gamma1();
        }
        const auto theta = falling_factorial_decomposition(values, 2);
        CHECK(theta.at(2) == Rational(-5, 3));
    }
    // three unknowns for i = 2 with a consistency row at q = 5
    {
        std::map<long, Rational> values;
        const Rational t2(0), t3(7, 5), t4(25, 1152);
        for (long q = 2; q <= 5; ++q)
            values[q] = Rational(falling_factorial(q, 2)) * t2 +
                        Rational(falling_factorial(q, 3)) * t3 +
                        Rational(falling_factorial(q, 4)) * t4;
        const auto theta = falling_factorial_decomposition(values, 4);
        CHECK(theta.at(2) == t2);
        CHECK(theta.at(3) == t3);
        CHECK(theta.at(4) == t4);
    }
    // inconsistency must be detected
    {
        std::map<long, Rational> values{{2, 2}, {3, 6}, {4, 13}};
        CHECK_THROWS_AS(falling_factorial_decomposition(values, 2), InconsistentSystem);
    }
    {
        std::map<long, Rational> values{{2, 2}};
        CHECK_THROWS_AS(falling_factorial_decomposition(values, 4), InsufficientData);
    }
}

TEST_CASE("json round trip") {
    const Quasipolynomial rider = rider12_q2_reference();
    const nlohmann::json j = quasipoly_to_json(rider);
    CHECK(j["period"] == 2);
    CHECK(j["degree"] == 4);
    CHECK(j["constituents"][0][0] == "1/2");
    const Quasipolynomial back = quasipoly_from_json(j);
    CHECK(back == rider);
}
