#include "riders/quasipoly.hpp"

#include <algorithm>
#include <numeric>

namespace riders {

Quasipolynomial::Quasipolynomial(long period, std::vector<Poly> constituents)
    : period_(period), constituents_(std::move(constituents)) {
    if (period_ < 1 || constituents_.size() != static_cast<size_t>(period_))
        throw std::invalid_argument("quasipolynomial needs one constituent per residue");
    degree_ = 0;
    for (const Poly& p : constituents_) degree_ = std::max(degree_, p.degree());
}

Quasipolynomial fit_quasipolynomial(const std::map<long, Integer>& values, long degree,
                                    long period) {
    if (period < 1) throw std::invalid_argument("period must be >= 1");
    std::vector<std::vector<std::pair<long, Integer>>> classes(static_cast<size_t>(period));
    for (const auto& [n, v] : values)
        classes[static_cast<size_t>(euclid_mod(n, period))].emplace_back(n, v);

    std::vector<Poly> constituents;
    constituents.reserve(static_cast<size_t>(period));
    for (long r = 0; r < period; ++r) {
        auto& pts = classes[static_cast<size_t>(r)];
        const long need = degree + 1;
        if (static_cast<long>(pts.size()) < need)
            throw InsufficientData(r, static_cast<long>(pts.size()), need);
        std::vector<std::pair<Rational, Rational>> base;
        base.reserve(static_cast<size_t>(need));
        for (long i = 0; i < need; ++i)
            base.emplace_back(Rational(pts[static_cast<size_t>(i)].first),
                              Rational(pts[static_cast<size_t>(i)].second));
        Poly fit = interpolate(base);
        for (size_t i = static_cast<size_t>(need); i < pts.size(); ++i) {
            const Rational predicted = fit(Rational(pts[i].first));
            if (predicted != Rational(pts[i].second))
                throw InconsistentData(pts[i].first, predicted, pts[i].second);
        }
        constituents.push_back(std::move(fit));
    }
    return Quasipolynomial(period, std::move(constituents));
}

long minimal_period(const std::map<long, Integer>& values, long degree, long p_max) {
    if (p_max < 1) throw std::invalid_argument("period bound must be >= 1");
    std::vector<long> candidates;
    for (long p = 1; p <= p_max; ++p)
        if (p_max % p == 0) candidates.push_back(p);
    for (long p = 1; p <= p_max; ++p)
        if (p_max % p != 0) candidates.push_back(p);

    std::string last_detail;
    for (long p : candidates) {
        // A candidate only counts when every class keeps at least one
        // point beyond the D+1 used to interpolate; otherwise any period
        // would "fit" vacuously.  InsufficientData propagates: minimality
        // cannot be certified without testing this candidate.
        std::vector<long> class_size(static_cast<size_t>(p), 0);
        for (const auto& [n, v] : values) ++class_size[static_cast<size_t>(euclid_mod(n, p))];
        for (long r = 0; r < p; ++r)
            if (class_size[static_cast<size_t>(r)] < degree + 2)
                throw InsufficientData(r, class_size[static_cast<size_t>(r)], degree + 2);
        try {
            fit_quasipolynomial(values, degree, p);
            return p;
        } catch (const InconsistentData& e) {
            last_detail = "period " + std::to_string(p) + ": " + e.what();
        }
    }
    throw NoPeriodFound(p_max, last_detail);
}

long cyclic_min_period(const std::vector<Rational>& values) {
    const long p = static_cast<long>(values.size());
    for (long t = 1; t <= p; ++t) {
        if (p % t != 0) continue;
        bool ok = true;
        for (long r = 0; r < p && ok; ++r)
            ok = values[static_cast<size_t>(r)] == values[static_cast<size_t>((r + t) % p)];
        if (ok) return t;
    }
    return p;
}

CoefficientTable coefficient_table(const Quasipolynomial& qp) {
    CoefficientTable table;
    table.period = qp.period();
    table.degree = qp.degree();
    for (long i = 0; i <= table.degree; ++i) {
        std::vector<Rational> row;
        row.reserve(static_cast<size_t>(table.period));
        for (long r = 0; r < table.period; ++r) row.push_back(qp.coefficient(r, table.degree - i));
        table.row_period.push_back(cyclic_min_period(row));
        table.rows.push_back(std::move(row));
    }
    return table;
}

bool parity_check(const Quasipolynomial& qp, int dim) {
    const Rational sign = dim % 2 ? -1 : 1;
    const long p = qp.period();
    const Poly& first = qp.constituent(0);
    if (!(first.reflected() == first * sign)) return false;
    if (p % 2 == 0) {
        const Poly& mid = qp.constituent(p / 2);
        if (!(mid.reflected() == mid * sign)) return false;
    }
    for (long i = 1; i < p; ++i)
        if (!(qp.constituent(p - i) == qp.constituent(i).reflected() * sign)) return false;
    return true;
}

namespace {

// Scale numerator and denominator by one common factor so both become
// integer vectors with no shared content; the quotient is unchanged.
std::pair<std::vector<Integer>, std::vector<Integer>> clear_to_integers(const Poly& num_poly,
                                                                        const Poly& den_poly) {
    Integer lcm_den = 1;
    for (const Rational& c : num_poly.coeffs())
        lcm_den = boost::multiprecision::lcm(lcm_den, den(c));
    for (const Rational& c : den_poly.coeffs())
        lcm_den = boost::multiprecision::lcm(lcm_den, den(c));
    auto scaled = [&lcm_den](const Poly& p) {
        std::vector<Integer> out;
        out.reserve(p.coeffs().size());
        for (const Rational& c : p.coeffs()) out.push_back(num(c * lcm_den));
        return out;
    };
    std::vector<Integer> n = scaled(num_poly), d = scaled(den_poly);
    Integer content = 0;
    for (const Integer& v : n) content = boost::multiprecision::gcd(content, v);
    for (const Integer& v : d) content = boost::multiprecision::gcd(content, v);
    if (content > 1) {
        for (Integer& v : n) v /= content;
        for (Integer& v : d) v /= content;
    }
    return {std::move(n), std::move(d)};
}

}  // namespace

std::vector<Rational> RationalGF::series(long count) const {
    std::vector<Rational> s(static_cast<size_t>(count), Rational(0));
    const Rational d0(denominator.at(0));
    for (long k = 0; k < count; ++k) {
        Rational acc = k < static_cast<long>(numerator.size()) ? Rational(numerator[static_cast<size_t>(k)])
                                                               : Rational(0);
        for (long j = 1; j < static_cast<long>(denominator.size()) && j <= k; ++j)
            acc -= Rational(denominator[static_cast<size_t>(j)]) * s[static_cast<size_t>(k - j)];
        s[static_cast<size_t>(k)] = acc / d0;
    }
    return s;
}

RationalGF generating_function(const Quasipolynomial& qp) {
    const long p = qp.period();
    const long D = std::max<long>(qp.degree(), 0);
    const long den_degree = p * (D + 1);

    // (1 - x^p)^(D+1)
    Poly one_minus_xp = Poly::constant(1) - Poly::monomial(p);
    Poly denom = Poly::constant(1);
    for (long i = 0; i <= D; ++i) denom = denom * one_minus_xp;

    // f = (series of qp) * denom; the product truncates to degree < p(D+1)
    // because the (D+1)-st difference of each constituent vanishes.  The
    // guard band checks just that.
    const long guard = 2 * p;
    std::vector<Rational> series_vals;
    series_vals.reserve(static_cast<size_t>(den_degree + guard));
    for (long k = 0; k < den_degree + guard; ++k) series_vals.push_back(qp.evaluate(k));
    std::vector<Rational> f(static_cast<size_t>(den_degree + guard), Rational(0));
    for (long k = 0; k < den_degree + guard; ++k) {
        Rational acc = 0;
        for (long j = 0; j <= std::min(k, denom.degree()); ++j)
            acc += denom.coeff(j) * series_vals[static_cast<size_t>(k - j)];
        f[static_cast<size_t>(k)] = acc;
    }
    for (long k = den_degree; k < den_degree + guard; ++k)
        if (f[static_cast<size_t>(k)] != 0)
            throw InconsistentSystem("generating function numerator fails to truncate");
    f.resize(static_cast<size_t>(den_degree));
    Poly fpoly(std::move(f));

    Poly g = poly_gcd(fpoly, denom);
    Poly num_red = fpoly;
    Poly den_red = denom;
    if (g.degree() > 0) {
        num_red = poly_divmod(fpoly, g).first;
        den_red = poly_divmod(denom, g).first;
    }

    RationalGF gf;
    std::tie(gf.numerator, gf.denominator) = clear_to_integers(num_red, den_red);
    if (gf.denominator.empty() || gf.denominator[0] == 0)
        throw InconsistentSystem("reduced denominator vanishes at 0");
    if (gf.denominator[0] < 0) {
        for (Integer& v : gf.numerator) v = -v;
        for (Integer& v : gf.denominator) v = -v;
    }
    gf.recurrence_length = static_cast<long>(gf.denominator.size()) - 1;
    if (gf.numerator.empty()) gf.numerator.push_back(0);
    return gf;
}

std::map<long, Rational> falling_factorial_decomposition(const std::map<long, Rational>& values,
                                                         int kappa_max) {
    const long unknowns = kappa_max - 1;  // kappa = 2..kappa_max
    if (unknowns < 1) throw std::invalid_argument("kappa_max must be at least 2");
    if (static_cast<long>(values.size()) < unknowns)
        throw InsufficientData(0, static_cast<long>(values.size()), unknowns);

    // rows of [ (q)_2 ... (q)_kappa_max | value ]
    std::vector<std::vector<Rational>> rows;
    for (const auto& [q, v] : values) {
        std::vector<Rational> row;
        for (long kappa = 2; kappa <= kappa_max; ++kappa)
            row.push_back(Rational(falling_factorial(q, kappa)));
        row.push_back(v);
        rows.push_back(std::move(row));
    }

    // rational Gaussian elimination with partial pivoting
    const size_t ncols = static_cast<size_t>(unknowns);
    size_t rank = 0;
    std::vector<size_t> pivot_row(ncols, SIZE_MAX);
    for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        size_t pivot = SIZE_MAX;
        for (size_t r = rank; r < rows.size(); ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == SIZE_MAX) continue;
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const Rational factor = rows[r][col] / rows[rank][col];
            for (size_t cidx = col; cidx <= ncols; ++cidx)
                rows[r][cidx] -= factor * rows[rank][cidx];
        }
        pivot_row[col] = rank;
        ++rank;
    }
    for (size_t r = rank; r < rows.size(); ++r)
        if (rows[r][ncols] != 0)
            throw InconsistentSystem("falling-factorial system is inconsistent (residual " +
                                     rows[r][ncols].str() + ")");
    std::map<long, Rational> theta;
    for (size_t col = 0; col < ncols; ++col) {
        if (pivot_row[col] == SIZE_MAX)
            throw InsufficientData(0, static_cast<long>(rank), static_cast<long>(ncols));
        const auto& row = rows[pivot_row[col]];
        theta[static_cast<long>(col) + 2] = row[ncols] / row[col];
    }
    return theta;
}

nlohmann::json quasipoly_to_json(const Quasipolynomial& qp) {
    nlohmann::json out;
    out["period"] = qp.period();
    out["degree"] = qp.degree();
    nlohmann::json cons = nlohmann::json::array();
    for (long r = 0; r < qp.period(); ++r) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (long k = qp.degree(); k >= 0; --k)
            coeffs.push_back(rational_to_string(qp.coefficient(r, k)));
        cons.push_back(std::move(coeffs));
    }
    out["constituents"] = std::move(cons);
    return out;
}

Quasipolynomial quasipoly_from_json(const nlohmann::json& j) {
    const long period = j.at("period").get<long>();
    const long degree = j.at("degree").get<long>();
    std::vector<Poly> constituents;
    for (const auto& arr : j.at("constituents")) {
        if (static_cast<long>(arr.size()) != degree + 1)
            throw std::invalid_argument("constituent has wrong coefficient count");
        std::vector<Rational> coeffs(static_cast<size_t>(degree) + 1);
        for (long k = 0; k <= degree; ++k)
            coeffs[static_cast<size_t>(degree - k)] =
                rational_from_string(arr[static_cast<size_t>(k)].get<std::string>());
        constituents.emplace_back(std::move(coeffs));
    }
    return Quasipolynomial(period, std::move(constituents));
}

}  // namespace riders
