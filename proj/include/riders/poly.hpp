// Dense univariate polynomials with exact rational coefficients, plus the
// handful of algebraic operations the quasipolynomial machinery needs:
// Lagrange/Newton interpolation, discrete prefix sums (via the binomial
// basis), composition, reflection, and monic Euclidean gcd.
#pragma once

#include "riders/rational.hpp"

#include <utility>
#include <vector>

namespace riders {

class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const Rational& v);
    static Poly monomial(long k, const Rational& coeff = 1);

    // coefficient of x^k (0 beyond the stored degree)
    const Rational& coeff(long k) const;
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for the zero poly
    bool is_zero() const { return c_.empty(); }

    Rational operator()(const Rational& x) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& s) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    // p(q(x))
    Poly compose(const Poly& inner) const;
    // p(-x)
    Poly reflected() const;

    const std::vector<Rational>& coeffs() const { return c_; }
    std::string str() const;

  private:
    void trim();
    std::vector<Rational> c_;  // c_[k] = coefficient of x^k; no trailing zeros
    static const Rational kZero;
};

// Unique polynomial of degree < points.size() through the given points.
// Arguments must be pairwise distinct.
Poly interpolate(const std::vector<std::pair<Rational, Rational>>& points);

// The binomial-coefficient polynomial x(x-1)...(x-k+1)/k!.
Poly binom_poly(long k);

// Q with Q(m) = sum_{l=1}^{m} p(l), exact for every integer m >= 0; also
// correct at m = -1 (empty sum) whenever p(0) = 0.
Poly prefix_sum(const Poly& p);

// Monic gcd over the rationals; gcd(0,0) = 0.
Poly poly_gcd(Poly a, Poly b);

// (quotient, remainder) with deg r < deg b.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

}  // namespace riders
