#pragma once

// Capped-precision arithmetic in K = Q_p(pi), pi^(p-1) = -p.
//
// Each pi-coefficient is a Q_p number that is either an exact rational or
// an approximation unit * p^val + O(p^prec). Exact values stay exact until
// their size crosses a cap, after which they are rounded to absolute
// precision N. An approximation with unit 0 is "zero at precision": its
// true valuation is only known to be >= prec.

#include "pslopes/rational.hpp"
#include "pslopes/valgeom.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pslopes {

struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class FieldCtx {
public:
    FieldCtx(long p, long precision, long window_cap = 16384);

    long p() const { return p_; }
    long precision() const { return N_; }
    long window_cap() const { return window_cap_; }
    // Exact rationals larger than this many bits are rounded to precision N.
    std::size_t exact_bits_cap() const { return exact_bits_cap_; }

    // p^k for k >= 0.
    const Integer& pow(long k) const;

    Rational omega_val() const { return frac(1, p_ - 1); }
    Rational omega_prime_val() const { return frac(1, p_); }

private:
    long p_;
    long N_;
    long window_cap_;
    std::size_t exact_bits_cap_;
    std::vector<Integer> pow_;
};

using Ctx = std::shared_ptr<const FieldCtx>;

Ctx make_ctx(long p, long precision, long window_cap = 16384);
bool is_prime(long p);

class Qp {
public:
    Qp() : exact_(true) {}
    explicit Qp(const Rational& q) : exact_(true), q_(q) {}

    static Qp approx(const FieldCtx& F, Integer unit, long val, long prec);
    static Qp zero_at(long prec);

    bool exact() const { return exact_; }
    const Rational& rational() const { return q_; }
    const Integer& unit() const { return unit_; }
    long val() const { return val_; }
    long prec() const { return prec_; }

    bool is_exact_zero() const { return exact_ && q_ == 0; }
    bool is_zero_at_prec() const { return !exact_ && unit_ == 0; }
    bool known_nonzero() const { return exact_ ? q_ != 0 : unit_ != 0; }

    // Valuation if known, else nullopt. Exact zero gives +inf.
    std::optional<Val> valuation(const FieldCtx& F) const;
    // Guaranteed lower bound on the valuation.
    Val lower_bound(const FieldCtx& F) const;

    Qp rounded(const FieldCtx& F, long prec) const;

    friend Qp add(const FieldCtx& F, const Qp& a, const Qp& b);
    friend Qp mul(const FieldCtx& F, const Qp& a, const Qp& b);
    friend Qp neg(const FieldCtx& F, const Qp& a);
    friend Qp inv(const FieldCtx& F, const Qp& a);

    bool same_as(const Qp& o) const;

private:
    bool exact_;
    Rational q_;
    Integer unit_;
    long val_ = 0;
    long prec_ = 0;
};

class KElem {
public:
    KElem() = default;
    explicit KElem(Ctx ctx);  // exact zero

    static KElem from_rational(Ctx ctx, const Rational& q, long pi_power = 0);
    static KElem pi(Ctx ctx) { return from_rational(std::move(ctx), 1, 1); }

    const Ctx& ctx() const { return ctx_; }
    const std::vector<Qp>& coeffs() const { return c_; }
    std::vector<Qp>& coeffs() { return c_; }

    bool is_exact_zero() const;
    bool is_zero_at_prec() const;
    bool all_exact() const;

    // Absolute precision in units of v(pi) scaled to v(p) = 1; +inf if exact.
    Val precision() const;

    KElem rounded(long prec) const;

    std::string str() const;

private:
    Ctx ctx_;
    std::vector<Qp> c_;
};

KElem operator+(const KElem& a, const KElem& b);
KElem operator-(const KElem& a, const KElem& b);
KElem operator-(const KElem& a);
KElem operator*(const KElem& a, const KElem& b);
KElem operator*(const KElem& a, const Rational& r);
KElem inv(const KElem& a);

// valuation(a); throws PrecisionError when the element is zero at precision
// or its leading term cannot be separated from the unknown digits.
Val valuation(const KElem& a);
std::optional<Val> try_valuation(const KElem& a);
Val lower_bound(const KElem& a);

bool exactly_equal(const KElem& a, const KElem& b);

KElem rational_embed(const Integer& num, const Integer& den, long pi_power, Ctx ctx);

// Parses "3", "-1/9", "8/27*pi", "pi^2/3", "1/9 - 1/27*pi^2".
KElem parse_kelem(const std::string& s, Ctx ctx);

}  // namespace pslopes
