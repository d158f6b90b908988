#include "pslopes/padic.hpp"

#include <cctype>

namespace pslopes {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

FieldCtx::FieldCtx(long p, long precision, long window_cap)
    : p_(p), N_(precision), window_cap_(window_cap) {
    if (!is_prime(p)) throw SpecError("p = " + std::to_string(p) + " is not prime");
    if (precision < 1) throw SpecError("precision must be >= 1");
    if (window_cap < 1) throw SpecError("window cap must be >= 1");
    long bits_per_digit = static_cast<long>(mpz_sizeinbase(Integer(p).get_mpz_t(), 2));
    exact_bits_cap_ = static_cast<std::size_t>(std::max(512L, 4 * N_ * bits_per_digit));
    long top = 4 * N_ + 256;
    pow_.reserve(static_cast<std::size_t>(top) + 1);
    pow_.emplace_back(1);
    for (long k = 1; k <= top; ++k) pow_.push_back(pow_.back() * p_);
}

const Integer& FieldCtx::pow(long k) const {
    if (k < 0) throw std::logic_error("negative power of p");
    if (static_cast<std::size_t>(k) < pow_.size()) return pow_[static_cast<std::size_t>(k)];
    thread_local Integer scratch;
    mpz_ui_pow_ui(scratch.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(k));
    return scratch;
}

Ctx make_ctx(long p, long precision, long window_cap) {
    return std::make_shared<const FieldCtx>(p, precision, window_cap);
}

namespace {

long remove_p(Integer& n, const FieldCtx& F) {
    if (n == 0) return 0;
    Integer pz(F.p());
    return static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

Integer inverse_mod(const Integer& a, const Integer& m) {
    Integer r;
    if (m == 1) return Integer(0);
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw std::logic_error("non-invertible unit");
    return r;
}

// Splits a nonzero rational as p^v * (num/den) with p coprime to num, den.
void split_rational(const FieldCtx& F, const Rational& q, long& v, Integer& num, Integer& den) {
    num = q.get_num();
    den = q.get_den();
    v = remove_p(num, F) - remove_p(den, F);
}

Qp to_approx(const FieldCtx& F, const Rational& q, long prec) {
    if (q == 0) return Qp(q);
    long v;
    Integer num, den;
    split_rational(F, q, v, num, den);
    if (v >= prec) return Qp::zero_at(prec);
    const Integer& mod = F.pow(prec - v);
    Integer u = num * inverse_mod(den, mod);
    return Qp::approx(F, std::move(u), v, prec);
}

Qp guard(const FieldCtx& F, Rational q) {
    std::size_t bits = mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
    if (bits > F.exact_bits_cap()) return to_approx(F, q, F.precision());
    return Qp(q);
}

}  // namespace

Qp Qp::zero_at(long prec) {
    Qp z;
    z.exact_ = false;
    z.unit_ = 0;
    z.val_ = prec;
    z.prec_ = prec;
    return z;
}

Qp Qp::approx(const FieldCtx& F, Integer unit, long val, long prec) {
    if (prec > F.precision()) prec = F.precision();
    if (unit == 0 || val >= prec) return zero_at(prec);
    val += remove_p(unit, F);
    if (val >= prec) return zero_at(prec);
    Qp r;
    r.exact_ = false;
    mpz_fdiv_r(unit.get_mpz_t(), unit.get_mpz_t(), F.pow(prec - val).get_mpz_t());
    r.unit_ = std::move(unit);
    r.val_ = val;
    r.prec_ = prec;
    return r;
}

std::optional<Val> Qp::valuation(const FieldCtx& F) const {
    if (exact_) {
        if (q_ == 0) return Val::infinity();
        long v;
        Integer n, d;
        split_rational(F, q_, v, n, d);
        return Val(v);
    }
    if (unit_ == 0) return std::nullopt;
    return Val(val_);
}

Val Qp::lower_bound(const FieldCtx& F) const {
    if (exact_ || unit_ != 0) return *valuation(F);
    return Val(prec_);
}

Qp Qp::rounded(const FieldCtx& F, long prec) const {
    if (exact_) return q_ == 0 ? *this : to_approx(F, q_, prec);
    if (prec >= prec_) return *this;
    return approx(F, unit_, val_, prec);
}

bool Qp::same_as(const Qp& o) const {
    if (exact_ != o.exact_) return false;
    if (exact_) return q_ == o.q_;
    return unit_ == o.unit_ && val_ == o.val_ && prec_ == o.prec_;
}

Qp add(const FieldCtx& F, const Qp& a, const Qp& b) {
    if (a.is_exact_zero()) return b;
    if (b.is_exact_zero()) return a;
    if (a.exact_ && b.exact_) return guard(F, Rational(a.q_ + b.q_));
    if (a.exact_) return add(F, to_approx(F, a.q_, b.prec_), b);
    if (b.exact_) return add(F, a, to_approx(F, b.q_, a.prec_));
    long prec = std::min(a.prec_, b.prec_);
    long v = std::min(a.val_, b.val_);
    if (v >= prec) return Qp::zero_at(prec);
    Integer s = a.unit_ * F.pow(a.val_ - v) + b.unit_ * F.pow(b.val_ - v);
    return Qp::approx(F, std::move(s), v, prec);
}

Qp mul(const FieldCtx& F, const Qp& a, const Qp& b) {
    if (a.is_exact_zero() || b.is_exact_zero()) return Qp();
    if (a.exact_ && b.exact_) return guard(F, Rational(a.q_ * b.q_));
    if (a.exact_ || b.exact_) {
        const Qp& e = a.exact_ ? a : b;
        const Qp& x = a.exact_ ? b : a;
        long v;
        Integer num, den;
        split_rational(F, e.q_, v, num, den);
        if (x.unit_ == 0) return Qp::zero_at(x.prec_ + v);
        long prec = std::min(x.prec_ + v, F.precision());
        long val = x.val_ + v;
        if (val >= prec) return Qp::zero_at(prec);
        const Integer& mod = F.pow(prec - val);
        Integer u = x.unit_ * num * inverse_mod(den, mod);
        return Qp::approx(F, std::move(u), val, prec);
    }
    long prec = std::min(a.prec_ + b.val_, b.prec_ + a.val_);
    if (a.unit_ == 0 || b.unit_ == 0) return Qp::zero_at(std::min(prec, F.precision()));
    return Qp::approx(F, a.unit_ * b.unit_, a.val_ + b.val_, prec);
}

Qp neg(const FieldCtx& F, const Qp& a) {
    if (a.exact_) return Qp(Rational(-a.q_));
    if (a.unit_ == 0) return a;
    Qp r = a;
    r.unit_ = F.pow(a.prec_ - a.val_) - a.unit_;
    return r;
}

Qp inv(const FieldCtx& F, const Qp& a) {
    if (a.exact_) {
        if (a.q_ == 0) throw DomainError("inverse of zero");
        return guard(F, Rational(1 / a.q_));
    }
    if (a.unit_ == 0) throw PrecisionError("insufficient precision: inverse of an element zero at precision");
    long rel = a.prec_ - a.val_;
    Integer u = inverse_mod(a.unit_, F.pow(rel));
    return Qp::approx(F, std::move(u), -a.val_, a.prec_ - 2 * a.val_);
}

// ---------------------------------------------------------------------------

KElem::KElem(Ctx ctx) : ctx_(std::move(ctx)) {
    c_.resize(static_cast<std::size_t>(ctx_->p() - 1));
}

KElem KElem::from_rational(Ctx ctx, const Rational& q, long pi_power) {
    long e = ctx->p() - 1;
    long a = pi_power >= 0 ? pi_power / e : -((-pi_power + e - 1) / e);
    long r = pi_power - a * e;
    Rational scale = 1;
    Rational mp(-ctx->p());
    for (long i = 0; i < std::labs(a); ++i) scale *= mp;
    if (a < 0) scale = 1 / scale;
    KElem out(ctx);
    const FieldCtx& F = *ctx;
    out.c_[static_cast<std::size_t>(r)] = guard(F, Rational(q * scale));
    return out;
}

bool KElem::is_exact_zero() const {
    for (const auto& c : c_)
        if (!c.is_exact_zero()) return false;
    return true;
}

bool KElem::is_zero_at_prec() const {
    bool any_unknown = false;
    for (const auto& c : c_) {
        if (c.known_nonzero()) return false;
        if (c.is_zero_at_prec()) any_unknown = true;
    }
    return any_unknown;
}

bool KElem::all_exact() const {
    for (const auto& c : c_)
        if (!c.exact()) return false;
    return true;
}

Val KElem::precision() const {
    Val best = Val::infinity();
    long e = ctx_->p() - 1;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].exact()) best = min(best, Val(Rational(c_[i].prec()) + frac(static_cast<long>(i), e)));
    return best;
}

KElem KElem::rounded(long prec) const {
    KElem out(ctx_);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i].rounded(*ctx_, prec);
    return out;
}

std::string KElem::str() const {
    if (is_exact_zero()) return "0";
    std::string out;
    long p = ctx_->p();
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Qp& c = c_[i];
        if (c.is_exact_zero()) continue;
        std::string term;
        if (c.exact()) {
            term = c.rational().get_str();
        } else if (c.unit() == 0) {
            term = "O(" + std::to_string(p) + "^" + std::to_string(c.prec()) + ")";
        } else {
            term = "(" + c.unit().get_str() + "*" + std::to_string(p) + "^" + std::to_string(c.val()) +
                   " + O(" + std::to_string(p) + "^" + std::to_string(c.prec()) + "))";
        }
        if (i > 0) term += "*pi" + (i > 1 ? "^" + std::to_string(i) : std::string());
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

namespace {

const FieldCtx& shared_ctx(const KElem& a, const KElem& b) {
    if (!a.ctx() || !b.ctx()) throw std::logic_error("KElem without context");
    if (a.ctx() != b.ctx() &&
        (a.ctx()->p() != b.ctx()->p() || a.ctx()->precision() != b.ctx()->precision()))
        throw std::logic_error("KElem contexts differ");
    return *a.ctx();
}

}  // namespace

KElem operator+(const KElem& a, const KElem& b) {
    const FieldCtx& F = shared_ctx(a, b);
    KElem out(a.ctx());
    for (std::size_t i = 0; i < out.coeffs().size(); ++i)
        out.coeffs()[i] = add(F, a.coeffs()[i], b.coeffs()[i]);
    return out;
}

KElem operator-(const KElem& a) {
    const FieldCtx& F = *a.ctx();
    KElem out(a.ctx());
    for (std::size_t i = 0; i < out.coeffs().size(); ++i) out.coeffs()[i] = neg(F, a.coeffs()[i]);
    return out;
}

KElem operator-(const KElem& a, const KElem& b) {
    return a + (-b);
}

KElem operator*(const KElem& a, const KElem& b) {
    const FieldCtx& F = shared_ctx(a, b);
    std::size_t e = static_cast<std::size_t>(F.p() - 1);
    std::vector<Qp> acc(2 * e);
    bool any = false;
    for (std::size_t i = 0; i < e; ++i) {
        if (a.coeffs()[i].is_exact_zero()) continue;
        for (std::size_t j = 0; j < e; ++j) {
            if (b.coeffs()[j].is_exact_zero()) continue;
            acc[i + j] = add(F, acc[i + j], mul(F, a.coeffs()[i], b.coeffs()[j]));
            any = true;
        }
    }
    KElem out(a.ctx());
    if (!any) return out;
    Qp minus_p(Rational(-F.p()));
    for (std::size_t i = 0; i < e; ++i) {
        out.coeffs()[i] = acc[i];
        if (!acc[i + e].is_exact_zero())
            out.coeffs()[i] = add(F, out.coeffs()[i], mul(F, minus_p, acc[i + e]));
    }
    return out;
}

KElem operator*(const KElem& a, const Rational& r) {
    const FieldCtx& F = *a.ctx();
    KElem out(a.ctx());
    if (r == 0) return out;
    Qp q(r);
    for (std::size_t i = 0; i < out.coeffs().size(); ++i)
        if (!a.coeffs()[i].is_exact_zero()) out.coeffs()[i] = mul(F, a.coeffs()[i], q);
    return out;
}

std::optional<Val> try_valuation(const KElem& a) {
    const FieldCtx& F = *a.ctx();
    long e = F.p() - 1;
    std::optional<Rational> known, unknown;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const Qp& c = a.coeffs()[i];
        if (c.is_exact_zero()) continue;
        Rational shift = frac(static_cast<long>(i), e);
        if (c.known_nonzero()) {
            Rational v = c.valuation(F)->value() + shift;
            if (!known || v < *known) known = v;
        } else {
            Rational v = Rational(c.prec()) + shift;
            if (!unknown || v < *unknown) unknown = v;
        }
    }
    if (!known && !unknown) return Val::infinity();
    if (known && (!unknown || *known < *unknown)) return Val(*known);
    return std::nullopt;
}

Val valuation(const KElem& a) {
    auto v = try_valuation(a);
    if (!v) throw PrecisionError("valuation unknown at precision");
    return *v;
}

Val lower_bound(const KElem& a) {
    const FieldCtx& F = *a.ctx();
    long e = F.p() - 1;
    Val best = Val::infinity();
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const Qp& c = a.coeffs()[i];
        if (c.is_exact_zero()) continue;
        best = min(best, c.lower_bound(F) + Val(frac(static_cast<long>(i), e)));
    }
    return best;
}

bool exactly_equal(const KElem& a, const KElem& b) {
    if (a.coeffs().size() != b.coeffs().size()) return false;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        if (!a.coeffs()[i].same_as(b.coeffs()[i])) return false;
    return true;
}

KElem inv(const KElem& a) {
    const FieldCtx& F = *a.ctx();
    std::size_t e = static_cast<std::size_t>(F.p() - 1);
    if (a.is_exact_zero()) throw DomainError("inverse of zero");
    if (a.all_exact()) {
        // Solve a * y = 1 over Q using the multiplication matrix in the basis 1, pi, ...
        std::vector<std::vector<Rational>> m(e, std::vector<Rational>(e + 1));
        for (std::size_t j = 0; j < e; ++j) {
            KElem basis = KElem::from_rational(a.ctx(), 1, static_cast<long>(j));
            KElem col = a * basis;
            for (std::size_t i = 0; i < e; ++i) m[i][j] = col.coeffs()[i].rational();
        }
        m[0][e] = 1;
        for (std::size_t c = 0; c < e; ++c) {
            std::size_t piv = c;
            while (piv < e && m[piv][c] == 0) ++piv;
            if (piv == e) throw DomainError("singular multiplication matrix");
            std::swap(m[piv], m[c]);
            for (std::size_t r = 0; r < e; ++r) {
                if (r == c || m[r][c] == 0) continue;
                Rational f = m[r][c] / m[c][c];
                for (std::size_t k = c; k <= e; ++k) m[r][k] -= f * m[c][k];
            }
        }
        KElem out(a.ctx());
        for (std::size_t i = 0; i < e; ++i) out.coeffs()[i] = Qp(Rational(m[i][e] / m[i][i]));
        return out;
    }
    // Leading term c*pi^j, then a geometric series in the small remainder.
    Val va = valuation(a);
    std::size_t lead = 0;
    long el = static_cast<long>(e);
    for (std::size_t i = 0; i < e; ++i) {
        const Qp& c = a.coeffs()[i];
        if (!c.known_nonzero()) continue;
        if (c.valuation(F)->value() + frac(static_cast<long>(i), el) == va.value()) lead = i;
    }
    KElem lt(a.ctx());
    lt.coeffs()[lead] = a.coeffs()[lead];
    KElem lt_inv(a.ctx());
    lt_inv.coeffs()[lead == 0 ? 0 : e - lead] = inv(F, a.coeffs()[lead]);
    if (lead != 0) lt_inv = lt_inv * frac(-1, F.p());
    KElem eps = (a - lt) * lt_inv;
    KElem sum = KElem::from_rational(a.ctx(), 1);
    KElem term = sum;
    Val target = a.precision() + Val(Rational(-va.value()));
    for (long n = 0; n < 4 * F.precision() * el + 8; ++n) {
        term = -(term * eps);
        if (term.is_exact_zero() || target <= lower_bound(term)) break;
        sum = sum + term;
    }
    return sum * lt_inv;
}

KElem rational_embed(const Integer& num, const Integer& den, long pi_power, Ctx ctx) {
    if (den == 0) throw SpecError("zero denominator");
    return KElem::from_rational(std::move(ctx), frac(num, den), pi_power);
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw SpecError("coefficient '" + s + "': " + what + " at position " + std::to_string(i));
    }
    Integer integer() {
        skip();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail("expected integer");
        return Integer(s.substr(start, i - start));
    }
    long small_int() {
        bool negative = eat('-');
        Integer n = integer();
        if (!n.fits_slong_p()) fail("exponent too large");
        return negative ? -n.get_si() : n.get_si();
    }
    // factor := integer | pi [^ int]
    void factor(Rational& q, long& pw) {
        skip();
        if (s.compare(i, 2, "pi") == 0) {
            i += 2;
            long e = 1;
            if (eat('^')) e = small_int();
            pw += e;
            return;
        }
        q *= Rational(integer());
    }
    // term := factor (('*' factor) | ('/' integer))*
    void term(Rational& q, long& pw) {
        factor(q, pw);
        while (true) {
            if (eat('*')) {
                factor(q, pw);
            } else if (eat('/')) {
                Integer d = integer();
                if (d == 0) fail("division by zero");
                q /= Rational(d);
            } else {
                break;
            }
        }
    }
};

}  // namespace

KElem parse_kelem(const std::string& s, Ctx ctx) {
    if (s.find('.') != std::string::npos || s.find_first_of("eE") != std::string::npos)
        throw SpecError("coefficient '" + s + "' is not exact (use 1/2)");
    Parser ps{s};
    KElem out(ctx);
    bool first = true;
    while (true) {
        ps.skip();
        if (ps.i >= s.size()) break;
        int sign = 1;
        if (ps.eat('-'))
            sign = -1;
        else if (!ps.eat('+') && !first)
            ps.fail("expected + or -");
        Rational q = sign;
        long pw = 0;
        ps.term(q, pw);
        out = out + KElem::from_rational(ctx, q, pw);
        first = false;
    }
    if (first) throw SpecError("empty coefficient");
    return out;
}

}  // namespace pslopes
