#include "riders/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace riders {

const Rational Poly::kZero = Rational(0);

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Rational& v) {
    Poly p;
    if (v != 0) p.c_ = {v};
    return p;
}

Poly Poly::monomial(long k, const Rational& coeff) {
    Poly p;
    if (coeff != 0) {
        p.c_.assign(static_cast<size_t>(k) + 1, Rational(0));
        p.c_.back() = coeff;
    }
    return p;
}

const Rational& Poly::coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(c_.size())) return kZero;
    return c_[static_cast<size_t>(k)];
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<Rational> r = c_;
    for (auto& v : r) v = -v;
    return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (c_.empty() || o.c_.empty()) return Poly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
}

Poly Poly::operator*(const Rational& s) const {
    std::vector<Rational> r = c_;
    for (auto& v : r) v *= s;
    return Poly(std::move(r));
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * inner + Poly::constant(c_[i]);
    return acc;
}

Poly Poly::reflected() const {
    std::vector<Rational> r = c_;
    for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return Poly(std::move(r));
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) out << " + ";
        out << "(" << c_[i].str() << ")";
        if (i > 0) out << "*n^" << i;
        first = false;
    }
    return out.str();
}

Poly interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    // Newton divided differences, then expansion to the power basis.
    const size_t m = points.size();
    if (m == 0) return Poly();
    std::vector<Rational> coef(m);
    for (size_t i = 0; i < m; ++i) coef[i] = points[i].second;
    for (size_t level = 1; level < m; ++level) {
        for (size_t i = m - 1; i >= level; --i) {
            Rational dx = points[i].first - points[i - level].first;
            if (dx == 0) throw std::invalid_argument("interpolate: repeated abscissa");
            coef[i] = (coef[i] - coef[i - 1]) / dx;
        }
    }
    Poly acc;
    for (size_t i = m; i-- > 0;) {
        Poly shift({-points[i].first, Rational(1)});  // (x - x_i)
        acc = acc * shift + Poly::constant(coef[i]);
    }
    return acc;
}

Poly binom_poly(long k) {
    Poly p = Poly::constant(1);
    for (long i = 0; i < k; ++i) p = p * Poly({Rational(-i), Rational(1)});
    return p * Rational(Integer(1), factorial(k));
}

Poly prefix_sum(const Poly& p) {
    // Express p in the binomial basis, p(x) = sum_j a_j C(x, j), with
    // a_j the j-th finite difference of p at 0.  Then
    //   sum_{l=0}^{m} C(l, j) = C(m+1, j+1),
    // so Q(m) = sum_j a_j C(m+1, j+1) - a_0 (removing the l = 0 term).
    long d = p.degree();
    if (d < 0) return Poly();
    std::vector<Rational> vals(static_cast<size_t>(d) + 1);
    for (long k = 0; k <= d; ++k) vals[static_cast<size_t>(k)] = p(Rational(k));
    // forward differences in place: vals[j] becomes Delta^j p(0)
    for (long level = 1; level <= d; ++level)
        for (long j = d; j >= level; --j)
            vals[static_cast<size_t>(j)] -= vals[static_cast<size_t>(j) - 1];
    Poly shifted({Rational(1), Rational(1)});  // m + 1
    Poly q;
    for (long j = 0; j <= d; ++j)
        q = q + binom_poly(j + 1).compose(shifted) * vals[static_cast<size_t>(j)];
    return q - Poly::constant(vals[0]);
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
    std::vector<Rational> rem(a.coeffs());
    long db = b.degree();
    Rational lead = b.coeff(db);
    if (a.degree() < db) return {Poly(), a};
    std::vector<Rational> quo(static_cast<size_t>(a.degree() - db) + 1, Rational(0));
    for (long k = a.degree(); k >= db; --k) {
        Rational q = rem[static_cast<size_t>(k)] / lead;
        if (q == 0) continue;
        quo[static_cast<size_t>(k - db)] = q;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<size_t>(k - db + j)] -= q * b.coeff(j);
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (Rational(1) / a.coeff(a.degree()));  // monic
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
}

}  // namespace riders
