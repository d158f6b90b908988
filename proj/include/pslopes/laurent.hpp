#pragma once

// Laurent polynomials over K on an exponent window.
//
// A polynomial is exact unless one of its window ends is flagged truncated,
// in which case every coefficient beyond that end is unknown.

#include "pslopes/padic.hpp"
#include "pslopes/valgeom.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace pslopes {

struct WindowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Annulus = TInterval;

class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(Ctx ctx);  // exact zero
    LaurentPoly(Ctx ctx, long lo, std::vector<KElem> coeffs, bool trunc_lo = false,
                bool trunc_hi = false);

    static LaurentPoly monomial(const KElem& c, long e);
    static LaurentPoly constant(Ctx ctx, const Rational& q);
    static LaurentPoly from_terms(Ctx ctx, const std::map<long, KElem>& terms);

    const Ctx& ctx() const { return ctx_; }
    bool empty() const { return c_.empty(); }
    long lo() const { return lo_; }
    long hi() const { return lo_ + static_cast<long>(c_.size()) - 1; }
    bool trunc_lo() const { return trunc_lo_; }
    bool trunc_hi() const { return trunc_hi_; }
    bool truncated() const { return trunc_lo_ || trunc_hi_; }

    // Coefficient of x^e; exact zero outside the window of an exact polynomial.
    KElem coeff(long e) const;
    const std::vector<KElem>& coeffs() const { return c_; }

    bool is_exact_zero() const;
    // Every coefficient is zero at precision or exact zero, and at least one is inexact.
    bool is_zero_at_prec() const;

    LaurentPoly trimmed() const;
    LaurentPoly shifted(long n) const;            // x^n * f
    LaurentPoly truncated_to(long lo, long hi) const;

    std::string str() const;

private:
    Ctx ctx_;
    long lo_ = 0;
    std::vector<KElem> c_;
    bool trunc_lo_ = false;
    bool trunc_hi_ = false;
};

LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly operator-(const LaurentPoly& f);
LaurentPoly operator*(const LaurentPoly& f, const KElem& c);
LaurentPoly operator*(const LaurentPoly& f, const Rational& c);

// Product with an OpenMP loop over output exponents.
LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g);
// Serial reference product, same summation order per coefficient.
LaurentPoly mul_serial(const LaurentPoly& f, const LaurentPoly& g);
inline LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) { return mul(f, g); }

LaurentPoly derivative(const LaurentPoly& f);
LaurentPoly theta(const LaurentPoly& f);                 // x d/dx
LaurentPoly divided_derivative(const LaurentPoly& f, long k);  // Delta^k
LaurentPoly substitute_power(const LaurentPoly& f, long q);    // f(x^q)

bool exactly_equal(const LaurentPoly& f, const LaurentPoly& g);

// Generalized binomial coefficient C(e, k) for integer e, k >= 0.
Integer binomial(long e, long k);

PLFun gauss_profile(const LaurentPoly& f, const Annulus& ann);

struct DLog {
    long minus;
    long plus;
};
DLog dlog_sides(const LaurentPoly& f, const Rational& t);

long count_zeros(const LaurentPoly& f, const Rational& t1, const Rational& t2);

enum class Side { Plus, Minus };
long gen_ord(const LaurentPoly& f, Side side, const Rational& t, const Annulus& ann);

}  // namespace pslopes
