#include "riders/analysis.hpp"

#include <doctest.h>

using namespace riders;

TEST_CASE("two-piece theorem check") {
    const CheckReport r =
        verify_two_piece_theorem({parse_piece("Q"), parse_piece("1,2")}, 20);
    CHECK(r.verdict == Verdict::pass);
    const auto& tested = r.witness.at("pieces");
    CHECK(tested[0].at("period") == 1);
    CHECK(tested[1].at("period") == 2);

    // tiny data budget cannot certify the period
    const CheckReport small = verify_two_piece_theorem({parse_piece("1,3")}, 8);
    CHECK(small.verdict == Verdict::inconclusive);
}

TEST_CASE("parity theorem check") {
    const CheckReport r =
        verify_parity_theorem({normalize_move(1, 2), normalize_move(1, 1), normalize_move(2, 3)}, 30);
    CHECK(r.verdict == Verdict::pass);
}

TEST_CASE("gamma theorem check") {
    CHECK(verify_gamma_theorem(parse_piece("Q"), 2, 11).verdict == Verdict::pass);
    CHECK(verify_gamma_theorem(parse_piece("N"), 2, 11).verdict == Verdict::pass);
    CHECK(verify_gamma_theorem(parse_piece("1,2"), 3, 15).verdict == Verdict::pass);
    // five points per parity class cannot validate the period-2 fit
    CHECK(verify_gamma_theorem(parse_piece("N"), 2, 9).verdict == Verdict::inconclusive);
}

TEST_CASE("conjecture harness") {
    const auto results = test_conjectures({parse_piece("1,2")}, 2, 3, 19);
    bool saw_one_move = false, saw_gamma3 = false, saw_gamma4 = false, saw_monotone_q2 = false;
    for (const auto& r : results) {
        if (r.id == "one-move-period-is-dhat") {
            saw_one_move = true;
            CHECK(r.consistent);
        }
        if (r.id == "gamma3-period-1-or-lambda") {
            saw_gamma3 = true;
            CHECK(r.consistent);
        }
        if (r.id == "gamma4-period-divides-lambda") {
            saw_gamma4 = true;
            CHECK(r.consistent);
        }
        if (r.id == "coefficient-periods-divide-upward" && r.tested.at("q") == 2) {
            // honest counterexample: p_3 = 2 but p_4 = 1 for the (1,2)
            // rider at q = 2, so the strong monotonicity form fails
            saw_monotone_q2 = true;
            CHECK_FALSE(r.consistent);
        }
    }
    CHECK(saw_one_move);
    CHECK(saw_gamma3);
    CHECK(saw_gamma4);
    CHECK(saw_monotone_q2);
}

TEST_CASE("type counts from fits") {
    const FittedCount queen = fit_board_count(parse_piece("Q"), 2, 2, 11, {});
    CHECK(type_count(parse_piece("Q"), 2, queen.qp) == 4);
    const FittedCount rider = fit_board_count(parse_piece("1,2"), 3, 4, 17, {});
    CHECK(type_count(parse_piece("1,2"), 3, rider.qp) == 1);
    const FittedCount night = fit_board_count(parse_piece("N"), 2, 4, 13, {});
    CHECK(type_count(parse_piece("N"), 2, night.qp) == 4);
}

TEST_CASE("recurrence reports") {
    const FittedCount queen = fit_board_count(parse_piece("Q"), 2, 2, 12, {});
    const CheckReport rq = recurrence_report(parse_piece("Q"), 2, queen.qp, queen.data);
    CHECK(rq.verdict == Verdict::pass);
    CHECK(rq.params.at("naive_length") == 5);
    CHECK(rq.params.at("recurrence_length") == 5);
    CHECK(rq.params.at("reduced") == false);

    const FittedCount rider = fit_board_count(parse_piece("1,2"), 2, 4, 30, {});
    const CheckReport rr = recurrence_report(parse_piece("1,2"), 2, rider.qp, rider.data);
    CHECK(rr.verdict == Verdict::pass);
    CHECK(rr.params.at("naive_length") == 10);
    CHECK(rr.params.at("recurrence_length") < 10);
    CHECK(rr.params.at("reduced") == true);
}

TEST_CASE("reports serialize to json lines") {
    const CheckReport r = verify_gamma_theorem(parse_piece("Q"), 2, 11);
    const nlohmann::json j = report_to_json(r);
    CHECK(j.at("check") == "gamma-coefficients");
    CHECK(j.at("verdict") == "pass");
    CHECK(j.at("params").at("q") == 2);
}

TEST_CASE("cache makes sweeps reproducible") {
    CacheStore cache;  // in-memory only (empty path)
    AnalysisOptions opts;
    opts.cache = &cache;
    const auto first = count_sweep(parse_piece("N"), 2, 8, opts);
    CHECK(cache.size() == 9);
    const auto second = count_sweep(parse_piece("N"), 2, 8, opts);
    CHECK(first == second);
}
