// Exact quasipolynomial machinery: interpolation from integer count data,
// minimal-period detection by fit-and-validate, per-coefficient period
// tables, constituent parity checks, rational generating functions with
// minimal recurrences, and falling-factorial decompositions.
//
// Constituent selection always uses the Euclidean remainder, so negative
// arguments (the combinatorial-type count lives at n = -1) are well
// defined.
#pragma once

#include "riders/poly.hpp"
#include "riders/rational.hpp"

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace riders {

struct InsufficientData : std::runtime_error {
    InsufficientData(long residue_, long have_, long need_)
        : std::runtime_error("residue class " + std::to_string(residue_) + " has " +
                             std::to_string(have_) + " points, needs " + std::to_string(need_)),
          residue(residue_), have(have_), need(need_) {}
    long residue, have, need;
};

struct InconsistentData : std::runtime_error {
    InconsistentData(long n_, const Rational& expected_, const Integer& actual_)
        : std::runtime_error("value at n = " + std::to_string(n_) + ": fit predicts " +
                             expected_.str() + ", data says " + actual_.str()),
          n(n_), expected(expected_), actual(actual_) {}
    long n;
    Rational expected;
    Integer actual;
};

struct NoPeriodFound : std::runtime_error {
    NoPeriodFound(long p_max, const std::string& detail)
        : std::runtime_error("no period <= " + std::to_string(p_max) + " fits the data" +
                             (detail.empty() ? "" : " (" + detail + ")")) {}
};

struct InconsistentSystem : std::runtime_error {
    explicit InconsistentSystem(const std::string& w) : std::runtime_error(w) {}
};

class Quasipolynomial {
  public:
    Quasipolynomial() = default;
    Quasipolynomial(long period, std::vector<Poly> constituents);

    long period() const { return period_; }
    long degree() const { return degree_; }  // max degree attained by a constituent
    const Poly& constituent(long residue) const {
        return constituents_[static_cast<size_t>(euclid_mod(residue, period_))];
    }
    const std::vector<Poly>& constituents() const { return constituents_; }

    Rational evaluate(long n) const { return constituent(n)(Rational(n)); }

    // coefficient of n^k in the constituent for the given residue
    Rational coefficient(long residue, long k) const { return constituent(residue).coeff(k); }

    bool operator==(const Quasipolynomial& o) const = default;

  private:
    long period_ = 1;
    long degree_ = 0;
    std::vector<Poly> constituents_;
};

// Per-residue exact interpolation.  Every residue class mod `period` must
// contain at least degree+1 arguments; classes with more points must be
// reproduced exactly or InconsistentData is thrown.
Quasipolynomial fit_quasipolynomial(const std::map<long, Integer>& values, long degree,
                                    long period);

// Smallest period <= p_max whose fit reproduces all data; divisors of
// p_max are tried first (ascending), then the remaining integers.
long minimal_period(const std::map<long, Integer>& values, long degree, long p_max);

struct CoefficientTable {
    long period = 1;
    long degree = 0;
    // rows[i] = values across residues 0..period-1 of the coefficient of
    // n^(degree-i); row_period[i] = its minimal period (a divisor).
    std::vector<std::vector<Rational>> rows;
    std::vector<long> row_period;
};

CoefficientTable coefficient_table(const Quasipolynomial& qp);

// Minimal period of one cyclic sequence of rationals (smallest divisor of
// its length under which it is shift-invariant).
long cyclic_min_period(const std::vector<Rational>& values);

// Constituent parity for a subspace count of dimension `dim`:
// the residue-0 constituent satisfies p(-n) = (-1)^dim p(n), the middle
// constituent likewise when the period is even, and constituent p-i is
// (-1)^dim times constituent i reflected.
bool parity_check(const Quasipolynomial& qp, int dim);

struct RationalGF {
    std::vector<Integer> numerator;    // ascending powers, primitive
    std::vector<Integer> denominator;  // ascending powers, primitive, den[0] > 0
    long recurrence_length = 0;        // degree of the reduced denominator

    // First `count` series coefficients of numerator/denominator.
    std::vector<Rational> series(long count) const;
};

// sum_{n>=0} qp(n) x^n written as f(x)/(1-x^p)^(D+1) and reduced to lowest
// terms over the rationals, then cleared to primitive integer polynomials.
RationalGF generating_function(const Quasipolynomial& qp);

// Solve  value(q) = sum_{kappa=2..kappa_max} (q)_kappa * theta_kappa  for
// the theta coefficients; extra equations must be consistent.  The result
// maps kappa -> theta_kappa.
std::map<long, Rational> falling_factorial_decomposition(const std::map<long, Rational>& values,
                                                         int kappa_max);

nlohmann::json quasipoly_to_json(const Quasipolynomial& qp);
Quasipolynomial quasipoly_from_json(const nlohmann::json& j);

}  // namespace riders
