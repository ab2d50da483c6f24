// Exact arithmetic used everywhere in this project: arbitrary-precision
// integers and canonical rationals backed by GMP.  Floating point is not
// used anywhere in the counting or fitting paths.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace riders {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Raised when a formula that must produce an integer yields a proper
// fraction.  Signals a transcription bug, never a data problem.
struct NonIntegerResult : std::runtime_error {
    explicit NonIntegerResult(const std::string& what_arg)
        : std::runtime_error(what_arg) {}
};

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

inline Integer to_integer(const Rational& r, const char* context) {
    if (!is_integer(r)) {
        throw NonIntegerResult(std::string(context) + ": got non-integer " + r.str());
    }
    return num(r);
}

// Euclidean remainder, always in [0, m).
inline long euclid_mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

inline Integer factorial(long k) {
    Integer f = 1;
    for (long i = 2; i <= k; ++i) f *= i;
    return f;
}

// Falling factorial (q)_k = q(q-1)...(q-k+1).
inline Integer falling_factorial(long q, long k) {
    Integer f = 1;
    for (long i = 0; i < k; ++i) f *= Integer(q - i);
    return f;
}

inline Integer binomial(const Integer& n, long k) {
    if (k < 0) return 0;
    Integer p = 1;
    for (long i = 0; i < k; ++i) {
        p *= (n - i);
        p /= (i + 1);  // exact at every step: product of i+1 consecutive integers
    }
    return p;
}

inline std::string rational_to_string(const Rational& r) { return r.str(); }

Rational rational_from_string(const std::string& s);

}  // namespace riders
