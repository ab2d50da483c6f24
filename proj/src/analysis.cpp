#include "riders/analysis.hpp"

#include <algorithm>
#include <sstream>

namespace riders {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

nlohmann::json report_to_json(const CheckReport& report) {
    nlohmann::json j;
    j["check"] = report.check;
    if (!report.piece.empty()) j["piece"] = report.piece;
    j["params"] = report.params;
    j["verdict"] = to_string(report.verdict);
    if (!report.reason.empty()) j["reason"] = report.reason;
    if (!report.witness.is_null()) j["witness"] = report.witness;
    return j;
}

nlohmann::json conjecture_to_json(const ConjectureResult& result) {
    nlohmann::json j;
    j["conjecture"] = result.id;
    if (!result.piece.empty()) j["piece"] = result.piece;
    j["tested"] = result.tested;
    j["consistent"] = result.consistent;
    if (!result.notes.empty()) j["notes"] = result.notes;
    return j;
}

Integer counted(const Piece& piece, long q, long n, const AnalysisOptions& options) {
    const std::string key = canonical_text(piece);
    if (options.cache) {
        if (const Integer* hit = options.cache->find(key, q, n)) return *hit;
    }
    CountOptions copts;
    copts.threads = options.threads;
    copts.max_nodes = options.node_budget;
    CountRecord rec = count_nonattacking(piece, q, BoardSize{static_cast<int>(n)}, copts);
    if (options.cache) options.cache->put(rec);
    return rec.count;
}

std::map<long, Integer> count_sweep(const Piece& piece, long q, long n_max,
                                    const AnalysisOptions& options) {
    std::map<long, Integer> data;
    for (long n = 0; n <= n_max; ++n) data[n] = counted(piece, q, n, options);
    return data;
}

FittedCount fit_board_count(const Piece& piece, long q, long p_max, long n_max,
                            const AnalysisOptions& options) {
    FittedCount fc;
    fc.data = count_sweep(piece, q, n_max, options);
    fc.period = minimal_period(fc.data, 2 * q, p_max);
    fc.qp = fit_quasipolynomial(fc.data, 2 * q, fc.period);
    return fc;
}

namespace {

Verdict combine(Verdict a, Verdict b) {
    if (a == Verdict::fail || b == Verdict::fail) return Verdict::fail;
    if (a == Verdict::inconclusive || b == Verdict::inconclusive) return Verdict::inconclusive;
    return Verdict::pass;
}

}  // namespace

CheckReport verify_two_piece_theorem(const std::vector<Piece>& pieces, long n_max,
                                     const AnalysisOptions& options) {
    CheckReport report;
    report.check = "two-piece-theorem";
    report.params = {{"n_max", n_max}, {"q", 2}};
    report.verdict = Verdict::pass;
    nlohmann::json tested = nlohmann::json::array();

    for (const Piece& piece : pieces) {
        const std::string text = canonical_text(piece);
        const long lambda = lambda_of(piece);
        std::map<long, Integer> data;
        try {
            data = count_sweep(piece, 2, n_max, options);
        } catch (const ResourceLimit& e) {
            report.verdict = combine(report.verdict, Verdict::inconclusive);
            report.reason = std::string("budget: ") + e.what();
            continue;
        }
        for (const auto& [n, brute] : data) {
            const Integer closed = u2_closed_at(piece, n);
            if (closed != brute) {
                report.verdict = Verdict::fail;
                report.reason = "u2_closed disagrees with enumeration";
                report.witness = {{"piece", text}, {"n", n}, {"expected", brute.str()},
                                  {"actual", closed.str()}};
                return report;
            }
        }
        long period = 0;
        try {
            period = minimal_period(data, 4, 2 * lambda);
        } catch (const InsufficientData& e) {
            report.verdict = combine(report.verdict, Verdict::inconclusive);
            report.reason = std::string("period detection: ") + e.what();
            continue;
        }
        if (period != lambda) {
            report.verdict = Verdict::fail;
            report.reason = "fitted minimal period differs from Lambda";
            report.witness = {{"piece", text}, {"period", period}, {"lambda", lambda}};
            return report;
        }
        tested.push_back({{"piece", text}, {"lambda", lambda}, {"period", period}});
    }
    report.witness = {{"pieces", tested}};
    return report;
}

CheckReport verify_parity_theorem(const std::vector<Move>& moves, long n_max,
                                  const AnalysisOptions& options) {
    (void)options;
    CheckReport report;
    report.check = "parity-theorem";
    report.params = {{"n_max", n_max}};
    report.verdict = Verdict::pass;
    nlohmann::json tested = nlohmann::json::array();

    for (const Move& move : moves) {
        const MoveNormalized m = normalized(move);
        std::ostringstream move_text;
        move_text << move.c << "," << move.d;
        struct Subspace {
            const char* name;
            long degree;
            int dim;
        };
        for (const Subspace sub : {Subspace{"alpha", 3, 3}, Subspace{"beta", 4, 4}}) {
            std::map<long, Integer> data;
            for (long n = 0; n <= n_max; ++n)
                data[n] = sub.dim == 3 ? alpha_closed_at(move, n) : beta_closed_at(move, n);
            Quasipolynomial qp;
            try {
                qp = fit_quasipolynomial(data, sub.degree, m.dhat);
            } catch (const InsufficientData& e) {
                report.verdict = combine(report.verdict, Verdict::inconclusive);
                report.reason = std::string(sub.name) + " fit: " + e.what();
                continue;
            }
            if (!parity_check(qp, sub.dim)) {
                report.verdict = Verdict::fail;
                report.reason = "constituent parity violated";
                report.witness = {{"move", move_text.str()}, {"subspace", sub.name}};
                return report;
            }
            for (long r = 0; r < qp.period(); ++r) {
                if (qp.coefficient(r, sub.degree - 1) != 0) {
                    report.verdict = Verdict::fail;
                    report.reason = "second leading coefficient not zero";
                    report.witness = {{"move", move_text.str()},
                                      {"subspace", sub.name},
                                      {"residue", r},
                                      {"coefficient", qp.coefficient(r, sub.degree - 1).str()}};
                    return report;
                }
            }
            tested.push_back({{"move", move_text.str()}, {"subspace", sub.name},
                              {"period", qp.period()}});
        }
    }
    report.witness = {{"fits", tested}};
    return report;
}

CheckReport verify_gamma_theorem(const Piece& piece, long q, long n_max,
                                 const AnalysisOptions& options) {
    CheckReport report;
    report.check = "gamma-coefficients";
    report.piece = canonical_text(piece);
    report.params = {{"q", q}, {"n_max", n_max}};

    const long lambda = lambda_of(piece);
    FittedCount fc;
    try {
        fc = fit_board_count(piece, q, 2 * lambda, n_max, options);
    } catch (const ResourceLimit& e) {
        report.verdict = Verdict::inconclusive;
        report.reason = std::string("budget: ") + e.what();
        return report;
    } catch (const InsufficientData& e) {
        report.verdict = Verdict::inconclusive;
        report.reason = std::string("data: ") + e.what();
        return report;
    } catch (const NoPeriodFound& e) {
        report.verdict = Verdict::inconclusive;
        report.reason = e.what();
        return report;
    }

    const GammaClosed closed(piece, q);
    auto fail = [&](const std::string& reason, nlohmann::json witness) {
        report.verdict = Verdict::fail;
        report.reason = reason;
        report.witness = std::move(witness);
        return report;
    };

    const long D = 2 * q;
    for (long r = 0; r < fc.period; ++r) {
        if (fc.qp.coefficient(r, D) != closed.gamma0())
            return fail("gamma_0 differs from 1/q!",
                        {{"residue", r}, {"actual", fc.qp.coefficient(r, D).str()}});
        if (fc.qp.coefficient(r, D - 1) != closed.gamma1())
            return fail("gamma_1 differs from closed value",
                        {{"residue", r},
                         {"actual", fc.qp.coefficient(r, D - 1).str()},
                         {"expected", closed.gamma1().str()}});
        if (fc.qp.coefficient(r, D - 2) != fc.qp.coefficient(0, D - 2))
            return fail("gamma_2 varies with the residue",
                        {{"residue", r}, {"actual", fc.qp.coefficient(r, D - 2).str()}});
    }
    if (piece.moves.size() == 1 && q >= 2) {
        const Move move = piece.moves.front();
        const Rational base = fc.qp.coefficient(0, D - 3);
        for (long r = 0; r < fc.period; ++r) {
            const Rational periodic = fc.qp.coefficient(r, D - 3) - base;
            const Rational expected = gamma3_periodic_one_move(move, q, r);
            if (periodic != expected)
                return fail("gamma_3 periodic part differs from closed expression",
                            {{"residue", r},
                             {"actual", periodic.str()},
                             {"expected", expected.str()}});
        }
    }
    report.verdict = Verdict::pass;
    report.witness = {{"period", fc.period},
                      {"gamma1", closed.gamma1().str()},
                      {"gamma2", fc.qp.coefficient(0, D - 2).str()}};
    return report;
}

std::vector<ConjectureResult> test_conjectures(const std::vector<Piece>& pieces, long q_min,
                                               long q_max, long n_max,
                                               const AnalysisOptions& options) {
    std::vector<ConjectureResult> results;
    for (const Piece& piece : pieces) {
        const std::string text = canonical_text(piece);
        const long lambda = lambda_of(piece);
        const bool one_move = piece.moves.size() == 1;
        const long dhat = normalized(piece.moves.front()).dhat;

        for (long q = q_min; q <= q_max; ++q) {
            if (!one_move && q > 2) continue;  // default budget: multi-move fits at q = 2 only
            ConjectureResult entry;
            entry.piece = text;
            FittedCount fc;
            try {
                fc = fit_board_count(piece, q, std::max(2 * lambda, one_move ? dhat : 1), n_max,
                                     options);
            } catch (const std::exception& e) {
                entry.id = "fit";
                entry.consistent = true;
                entry.notes = std::string("inconclusive at q=") + std::to_string(q) + ": " + e.what();
                entry.tested = {{"q", q}};
                results.push_back(std::move(entry));
                continue;
            }
            const CoefficientTable table = coefficient_table(fc.qp);
            std::vector<long> periods = table.row_period;
            nlohmann::json tested = {{"q", q},
                                     {"period", fc.period},
                                     {"coefficient_periods", periods},
                                     {"n_max", n_max}};

            if (one_move) {
                ConjectureResult c;
                c.id = "one-move-period-is-dhat";
                c.piece = text;
                c.tested = tested;
                c.consistent = fc.period == dhat;
                if (!c.consistent)
                    c.notes = "period " + std::to_string(fc.period) + " != dhat " + std::to_string(dhat);
                results.push_back(std::move(c));
            }
            {
                ConjectureResult c;
                c.id = "gamma3-period-1-or-lambda";
                c.piece = text;
                c.tested = tested;
                const long p3 = periods.at(3);
                c.consistent = p3 == 1 || p3 == lambda;
                if (!c.consistent) c.notes = "p_3 = " + std::to_string(p3) + ", Lambda = " + std::to_string(lambda);
                results.push_back(std::move(c));
            }
            {
                ConjectureResult c;
                c.id = "gamma4-period-divides-lambda";
                c.piece = text;
                c.tested = tested;
                const long p4 = periods.at(4);
                c.consistent = lambda % p4 == 0;
                if (!c.consistent) c.notes = "p_4 = " + std::to_string(p4) + ", Lambda = " + std::to_string(lambda);
                results.push_back(std::move(c));
            }
            {
                ConjectureResult c;
                c.id = "coefficient-periods-divide-upward";
                c.piece = text;
                c.tested = tested;
                for (size_t i = 0; i + 1 < periods.size(); ++i) {
                    if (periods[i + 1] % periods[i] != 0) {
                        c.consistent = false;
                        c.notes = "p_" + std::to_string(i) + " = " + std::to_string(periods[i]) +
                                  " does not divide p_" + std::to_string(i + 1) + " = " +
                                  std::to_string(periods[i + 1]);
                        break;
                    }
                }
                results.push_back(std::move(c));
            }
        }
    }
    {
        ConjectureResult c;
        c.id = "period-equals-denominator";
        c.consistent = true;
        c.notes = "not machine-checkable here: inside-out polytope denominators D(square,A_P) "
                  "and D_i^q are out of scope";
        results.push_back(std::move(c));
    }
    return results;
}

Integer type_count(const Piece& piece, long q, const Quasipolynomial& fitted) {
    const Rational v = fitted.evaluate(-1);
    const Integer types = to_integer(v, "type_count");
    std::ostringstream msg;
    if (q == 2 && types != Integer(piece.moves.size())) {
        msg << "u(2;-1) = " << types << " but |M| = " << piece.moves.size() << " for "
            << canonical_text(piece);
        throw TypeCountMismatch(msg.str());
    }
    if (piece.moves.size() == 1 && q >= 2 && types != 1) {
        msg << "one-move rider has u(" << q << ";-1) = " << types << ", expected 1";
        throw TypeCountMismatch(msg.str());
    }
    return types;
}

CheckReport recurrence_report(const Piece& piece, long q, const Quasipolynomial& fitted,
                              const std::map<long, Integer>& data) {
    CheckReport report;
    report.check = "recurrence";
    report.piece = canonical_text(piece);
    const long naive = (fitted.degree() + 1) * fitted.period();
    const RationalGF gf = generating_function(fitted);
    report.params = {{"q", q},
                     {"naive_length", naive},
                     {"recurrence_length", gf.recurrence_length},
                     {"reduced", gf.recurrence_length < naive}};

    long n_hi = 0;
    for (const auto& [n, v] : data) n_hi = std::max(n_hi, n);
    const std::vector<Rational> series = gf.series(n_hi + 1);
    for (const auto& [n, v] : data) {
        if (n < 0) continue;
        if (series[static_cast<size_t>(n)] != Rational(v)) {
            report.verdict = Verdict::fail;
            report.reason = "reduced generating function fails to reproduce counts";
            report.witness = {{"n", n},
                              {"expected", v.str()},
                              {"actual", series[static_cast<size_t>(n)].str()}};
            return report;
        }
    }
    report.verdict = Verdict::pass;
    return report;
}

}  // namespace riders
