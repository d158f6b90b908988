#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pslopes {

using Rational = mpq_class;
using Integer = mpz_class;

struct SpecError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Parses "a", "-a", "a/b". Decimal or exponent notation is refused.
Rational parse_rational(const std::string& s);

// a/b in canonical form; the two-argument mpq constructor does not reduce.
Rational frac(const Integer& a, const Integer& b);

std::string to_string(const Rational& q);

Integer floor_q(const Rational& q);
Integer ceil_q(const Rational& q);

// Exponent of p in n (n != 0).
long vp_int(const Integer& n, long p);

// v_p(n!) by Legendre's formula.
long vp_factorial(long n, long p);

}  // namespace pslopes
