#include "pslopes/laurent.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace pslopes {

LaurentPoly::LaurentPoly(Ctx ctx) : ctx_(std::move(ctx)) {}

LaurentPoly::LaurentPoly(Ctx ctx, long lo, std::vector<KElem> coeffs, bool trunc_lo, bool trunc_hi)
    : ctx_(std::move(ctx)), lo_(lo), c_(std::move(coeffs)), trunc_lo_(trunc_lo), trunc_hi_(trunc_hi) {
    if (c_.empty()) {
        lo_ = 0;
        if (trunc_lo_ || trunc_hi_) throw WindowError("truncated polynomial with empty window");
    }
    if (static_cast<long>(c_.size()) > ctx_->window_cap())
        throw WindowError("window exceeds cap of " + std::to_string(ctx_->window_cap()));
}

LaurentPoly LaurentPoly::monomial(const KElem& c, long e) {
    return LaurentPoly(c.ctx(), e, {c});
}

LaurentPoly LaurentPoly::constant(Ctx ctx, const Rational& q) {
    KElem c = KElem::from_rational(ctx, q);
    return LaurentPoly(ctx, 0, {c}).trimmed();
}

LaurentPoly LaurentPoly::from_terms(Ctx ctx, const std::map<long, KElem>& terms) {
    if (terms.empty()) return LaurentPoly(ctx);
    long lo = terms.begin()->first, hi = terms.rbegin()->first;
    std::vector<KElem> c(static_cast<std::size_t>(hi - lo + 1), KElem(ctx));
    for (const auto& [e, v] : terms) c[static_cast<std::size_t>(e - lo)] = c[static_cast<std::size_t>(e - lo)] + v;
    return LaurentPoly(ctx, lo, std::move(c)).trimmed();
}

KElem LaurentPoly::coeff(long e) const {
    if (!c_.empty() && e >= lo_ && e <= hi()) return c_[static_cast<std::size_t>(e - lo_)];
    if ((trunc_lo_ && e < lo_) || (trunc_hi_ && e > hi()))
        throw WindowError("coefficient of x^" + std::to_string(e) + " lies outside the known window");
    return KElem(ctx_);
}

bool LaurentPoly::is_exact_zero() const {
    if (truncated()) return false;
    for (const auto& c : c_)
        if (!c.is_exact_zero()) return false;
    return true;
}

bool LaurentPoly::is_zero_at_prec() const {
    bool any_unknown = false;
    for (const auto& c : c_) {
        if (c.is_exact_zero()) continue;
        if (!c.is_zero_at_prec()) return false;
        any_unknown = true;
    }
    return any_unknown;
}

LaurentPoly LaurentPoly::trimmed() const {
    std::size_t a = 0, b = c_.size();
    if (!trunc_lo_)
        while (a < b && c_[a].is_exact_zero()) ++a;
    if (!trunc_hi_)
        while (b > a && c_[b - 1].is_exact_zero()) --b;
    if (a == b) {
        if (truncated()) {
            // Keep one known zero so the window stays anchored.
            std::size_t keep = trunc_lo_ ? 0 : c_.size() - 1;
            return LaurentPoly(ctx_, lo_ + static_cast<long>(keep), {c_[keep]}, trunc_lo_, trunc_hi_);
        }
        return LaurentPoly(ctx_);
    }
    if (a == 0 && b == c_.size()) return *this;
    return LaurentPoly(ctx_, lo_ + static_cast<long>(a),
                       std::vector<KElem>(c_.begin() + static_cast<long>(a), c_.begin() + static_cast<long>(b)),
                       trunc_lo_, trunc_hi_);
}

LaurentPoly LaurentPoly::shifted(long n) const {
    LaurentPoly out = *this;
    out.lo_ += n;
    return out;
}

LaurentPoly LaurentPoly::truncated_to(long lo, long hi) const {
    if (hi < lo) throw WindowError("empty truncation window");
    if (c_.empty()) return *this;
    long a = std::max(lo, trunc_lo_ ? lo_ : lo);
    long b = std::min(hi, trunc_hi_ ? this->hi() : hi);
    if (b < a) throw WindowError("truncation window disjoint from known window");
    std::vector<KElem> c;
    for (long e = a; e <= b; ++e) c.push_back(coeff(e));
    return LaurentPoly(ctx_, a, std::move(c), trunc_lo_ || a > lo_, trunc_hi_ || b < this->hi());
}

std::string LaurentPoly::str() const {
    std::string out;
    if (trunc_lo_) out += "O(x^" + std::to_string(lo_ - 1) + "-) + ";
    bool any = false;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_exact_zero()) continue;
        if (any) out += " + ";
        out += "(" + c_[i].str() + ")*x^" + std::to_string(lo_ + static_cast<long>(i));
        any = true;
    }
    if (!any) out += "0";
    if (trunc_hi_) out += " + O(x^" + std::to_string(hi() + 1) + "+)";
    return out;
}

namespace {

constexpr long kNoBound = std::numeric_limits<long>::min();

LaurentPoly combine_add(const LaurentPoly& f, const LaurentPoly& g, bool subtract) {
    if (f.empty() && !f.truncated()) return subtract ? -g : g;
    if (g.empty() && !g.truncated()) return f;
    const Ctx& ctx = f.ctx();
    long known_lo = kNoBound;
    if (f.trunc_lo()) known_lo = f.lo();
    if (g.trunc_lo()) known_lo = std::max(known_lo, g.lo());
    long known_hi = std::numeric_limits<long>::max();
    if (f.trunc_hi()) known_hi = f.hi();
    if (g.trunc_hi()) known_hi = std::min(known_hi, g.hi());
    long lo = std::min(f.empty() ? g.lo() : f.lo(), g.empty() ? f.lo() : g.lo());
    long hi = std::max(f.empty() ? g.hi() : f.hi(), g.empty() ? f.hi() : g.hi());
    lo = std::max(lo, known_lo == kNoBound ? lo : known_lo);
    hi = std::min(hi, known_hi);
    if (hi < lo) throw WindowError("sum has no known coefficients");
    std::vector<KElem> c;
    c.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (long e = lo; e <= hi; ++e) {
        KElem a = f.coeff(e), b = g.coeff(e);
        c.push_back(subtract ? a - b : a + b);
    }
    return LaurentPoly(ctx, lo, std::move(c), known_lo != kNoBound,
                       known_hi != std::numeric_limits<long>::max())
        .trimmed();
}

struct ProductWindow {
    long lo, hi;
    bool trunc_lo, trunc_hi;
};

ProductWindow product_window(const LaurentPoly& f, const LaurentPoly& g) {
    if ((f.trunc_hi() && g.trunc_lo()) || (f.trunc_lo() && g.trunc_hi()))
        throw WindowError("product of series truncated in opposite directions is undefined");
    ProductWindow w{f.lo() + g.lo(), f.hi() + g.hi(), false, false};
    if (f.trunc_hi()) w.hi = std::min(w.hi, f.hi() + g.lo()), w.trunc_hi = true;
    if (g.trunc_hi()) w.hi = std::min(w.hi, g.hi() + f.lo()), w.trunc_hi = true;
    if (f.trunc_lo()) w.lo = std::max(w.lo, f.lo() + g.hi()), w.trunc_lo = true;
    if (g.trunc_lo()) w.lo = std::max(w.lo, g.lo() + f.hi()), w.trunc_lo = true;
    if (w.hi < w.lo) throw WindowError("product has no known coefficients");
    long cap = f.ctx()->window_cap();
    if (w.hi - w.lo + 1 > cap) {
        w.hi = w.lo + cap - 1;
        w.trunc_hi = true;
    }
    return w;
}

}  // namespace

LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g) {
    return combine_add(f, g, false);
}

LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g) {
    return combine_add(f, g, true);
}

LaurentPoly operator-(const LaurentPoly& f) {
    std::vector<KElem> c;
    for (const auto& a : f.coeffs()) c.push_back(-a);
    if (c.empty()) return f;
    return LaurentPoly(f.ctx(), f.lo(), std::move(c), f.trunc_lo(), f.trunc_hi());
}

LaurentPoly operator*(const LaurentPoly& f, const KElem& k) {
    if (f.empty()) return f;
    std::vector<KElem> c;
    for (const auto& a : f.coeffs()) c.push_back(a * k);
    return LaurentPoly(f.ctx(), f.lo(), std::move(c), f.trunc_lo(), f.trunc_hi()).trimmed();
}

LaurentPoly operator*(const LaurentPoly& f, const Rational& q) {
    if (f.empty()) return f;
    std::vector<KElem> c;
    for (const auto& a : f.coeffs()) c.push_back(a * q);
    return LaurentPoly(f.ctx(), f.lo(), std::move(c), f.trunc_lo(), f.trunc_hi()).trimmed();
}

LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.empty() || g.empty()) return LaurentPoly(f.ctx());
    ProductWindow w = product_window(f, g);
    const long n = w.hi - w.lo + 1;
    std::vector<KElem> c(static_cast<std::size_t>(n), KElem(f.ctx()));
#pragma omp parallel for schedule(dynamic, 16)
    for (long idx = 0; idx < n; ++idx) {
        long e = w.lo + idx;
        long i0 = std::max(f.lo(), e - g.hi()), i1 = std::min(f.hi(), e - g.lo());
        KElem acc(f.ctx());
        for (long i = i0; i <= i1; ++i) {
            const KElem& a = f.coeffs()[static_cast<std::size_t>(i - f.lo())];
            if (a.is_exact_zero()) continue;
            const KElem& b = g.coeffs()[static_cast<std::size_t>(e - i - g.lo())];
            if (b.is_exact_zero()) continue;
            acc = acc + a * b;
        }
        c[static_cast<std::size_t>(idx)] = std::move(acc);
    }
    return LaurentPoly(f.ctx(), w.lo, std::move(c), w.trunc_lo, w.trunc_hi).trimmed();
}

LaurentPoly mul_serial(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.empty() || g.empty()) return LaurentPoly(f.ctx());
    ProductWindow w = product_window(f, g);
    std::vector<KElem> c(static_cast<std::size_t>(w.hi - w.lo + 1), KElem(f.ctx()));
    for (long i = f.lo(); i <= f.hi(); ++i) {
        const KElem& a = f.coeffs()[static_cast<std::size_t>(i - f.lo())];
        if (a.is_exact_zero()) continue;
        for (long j = g.lo(); j <= g.hi(); ++j) {
            long e = i + j;
            if (e < w.lo || e > w.hi) continue;
            const KElem& b = g.coeffs()[static_cast<std::size_t>(j - g.lo())];
            if (b.is_exact_zero()) continue;
            auto& slot = c[static_cast<std::size_t>(e - w.lo)];
            slot = slot + a * b;
        }
    }
    return LaurentPoly(f.ctx(), w.lo, std::move(c), w.trunc_lo, w.trunc_hi).trimmed();
}

LaurentPoly derivative(const LaurentPoly& f) {
    if (f.empty()) return f;
    std::vector<KElem> c;
    for (long e = f.lo(); e <= f.hi(); ++e)
        c.push_back(f.coeffs()[static_cast<std::size_t>(e - f.lo())] * Rational(e));
    return LaurentPoly(f.ctx(), f.lo() - 1, std::move(c), f.trunc_lo(), f.trunc_hi()).trimmed();
}

LaurentPoly theta(const LaurentPoly& f) {
    return derivative(f).shifted(1);
}

Integer binomial(long e, long k) {
    if (k < 0) return 0;
    Integer num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= (e - i);
        den *= (i + 1);
    }
    return num / den;
}

LaurentPoly divided_derivative(const LaurentPoly& f, long k) {
    if (k < 0) throw DomainError("negative derivative order");
    if (f.empty()) return f;
    std::vector<KElem> c;
    for (long e = f.lo(); e <= f.hi(); ++e)
        c.push_back(f.coeffs()[static_cast<std::size_t>(e - f.lo())] * Rational(binomial(e, k)));
    return LaurentPoly(f.ctx(), f.lo() - k, std::move(c), f.trunc_lo(), f.trunc_hi()).trimmed();
}

LaurentPoly substitute_power(const LaurentPoly& f, long q) {
    if (q < 1) throw DomainError("substitution power must be >= 1");
    if (f.empty()) return f;
    long n = (f.hi() - f.lo()) * q + 1;
    if (n > f.ctx()->window_cap()) throw WindowError("substitution exceeds window cap");
    std::vector<KElem> c(static_cast<std::size_t>(n), KElem(f.ctx()));
    for (long e = f.lo(); e <= f.hi(); ++e)
        c[static_cast<std::size_t>((e - f.lo()) * q)] = f.coeffs()[static_cast<std::size_t>(e - f.lo())];
    return LaurentPoly(f.ctx(), f.lo() * q, std::move(c), f.trunc_lo(), f.trunc_hi());
}

bool exactly_equal(const LaurentPoly& f, const LaurentPoly& g) {
    LaurentPoly a = f.trimmed(), b = g.trimmed();
    if (a.truncated() != b.truncated()) return false;
    if (a.empty() || b.empty()) return a.empty() && b.empty();
    if (a.lo() != b.lo() || a.hi() != b.hi()) return false;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        if (!exactly_equal(a.coeffs()[i], b.coeffs()[i])) return false;
    return true;
}

namespace {

struct Lines {
    std::vector<Line> known, bound;
    std::vector<long> known_e, bound_e;
};

Lines collect_lines(const LaurentPoly& f) {
    Lines out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const KElem& c = f.coeffs()[i];
        if (c.is_exact_zero()) continue;
        long e = f.lo() + static_cast<long>(i);
        auto v = try_valuation(c);
        if (v) {
            out.known.push_back(Line{v->value(), Rational(e)});
            out.known_e.push_back(e);
        } else {
            out.bound.push_back(Line{lower_bound(c).value(), Rational(e)});
            out.bound_e.push_back(e);
        }
    }
    if (out.known.empty()) {
        if (!out.bound.empty() || f.truncated()) throw PrecisionError("norm unknown: all coefficients zero at precision");
        throw DomainError("zero function has no norm profile");
    }
    return out;
}

// Checks that neither unknown coefficients nor truncated window ends can
// reach the envelope at the given points.
void validate_envelope(const LaurentPoly& f, const Lines& L, const std::vector<Rational>& pts,
                       const std::function<Rational(const Rational&)>& env) {
    for (const auto& t : pts) {
        Rational m = env(t);
        for (std::size_t j = 0; j < L.bound.size(); ++j)
            if (!(L.bound[j].at(t) > m))
                throw PrecisionError("norm unknown: coefficient of x^" + std::to_string(L.bound_e[j]) +
                                     " is zero at precision and may reach the envelope at t = " +
                                     to_string(t));
        if (f.trunc_lo()) {
            auto it = std::min_element(L.known_e.begin(), L.known_e.end());
            std::size_t j = static_cast<std::size_t>(it - L.known_e.begin());
            if (L.known[j].at(t) == m)
                throw WindowError("window too small: lowest known exponent " + std::to_string(*it) +
                                  " dominates at t = " + to_string(t));
        }
        if (f.trunc_hi()) {
            auto it = std::max_element(L.known_e.begin(), L.known_e.end());
            std::size_t j = static_cast<std::size_t>(it - L.known_e.begin());
            if (L.known[j].at(t) == m)
                throw WindowError("window too small: highest known exponent " + std::to_string(*it) +
                                  " dominates at t = " + to_string(t));
        }
    }
}

}  // namespace

PLFun gauss_profile(const LaurentPoly& f, const Annulus& ann) {
    Lines L = collect_lines(f);
    PLFun env = lower_envelope(L.known, ann);
    std::vector<Rational> pts{ann.lo, ann.hi};
    for (const auto& b : env.breakpoints()) pts.push_back(b);
    validate_envelope(f, L, pts, [&](const Rational& t) { return env.eval(t); });
    return env;
}

DLog dlog_sides(const LaurentPoly& f, const Rational& t) {
    Lines L = collect_lines(f);
    Rational m = L.known[0].at(t);
    for (const auto& l : L.known) m = std::min(m, l.at(t));
    validate_envelope(f, L, {t}, [&](const Rational&) { return m; });
    DLog d{std::numeric_limits<long>::max(), std::numeric_limits<long>::min()};
    for (std::size_t j = 0; j < L.known.size(); ++j) {
        if (L.known[j].at(t) != m) continue;
        d.minus = std::min(d.minus, L.known_e[j]);
        d.plus = std::max(d.plus, L.known_e[j]);
    }
    return d;
}

long count_zeros(const LaurentPoly& f, const Rational& t1, const Rational& t2) {
    if (t2 < t1) throw DomainError("count_zeros needs t1 <= t2");
    gauss_profile(f, Annulus(t1, t2));
    return dlog_sides(f, t1).plus - dlog_sides(f, t2).minus;
}

long gen_ord(const LaurentPoly& f, Side side, const Rational& t, const Annulus& ann) {
    if (!(ann.lo < t && t < ann.hi)) throw DomainError("gen_ord needs t interior to the annulus");
    if (side == Side::Plus) return dlog_sides(f, t).minus + count_zeros(f, ann.lo, t);
    return dlog_sides(f, t).plus - count_zeros(f, t, ann.hi);
}

}  // namespace pslopes
