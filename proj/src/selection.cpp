#include "pslopes/selection.hpp"

#include <algorithm>

namespace pslopes {

namespace {

using Profiles = std::vector<std::optional<PLFun>>;

std::optional<PLFun> combined_on(const Profiles& P, const std::vector<int>& lam, const TInterval& J) {
    std::optional<PLFun> out;
    for (std::size_t i = 0; i < lam.size(); ++i) {
        if (!lam[i] || !P[i]) continue;
        PLFun f = P[i]->restrict(J);
        out = out ? plf_combine(PLOp::Min, *out, f) : f;
    }
    return out;
}

bool covers(const std::optional<PLFun>& f, const PLFun& c, const TInterval& J) {
    return f && plf_leq_on(*f, c, J).holds;
}

// Closure of {t in J : w(t) > c(t)}; w - c is concave so this is an interval.
std::optional<TInterval> dip_set(const PLFun& w, const PLFun& c, const TInterval& J) {
    std::vector<Rational> pts{J.lo, J.hi};
    for (const PLFun* f : {&w, &c})
        for (const auto& b : f->breakpoints())
            if (J.lo < b && b < J.hi) pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto d = [&](const Rational& t) { return Rational(w.eval(t) - c.eval(t)); };
    std::optional<Rational> lo, hi;
    auto take = [&](const Rational& a, const Rational& b) {
        if (!lo || a < *lo) lo = a;
        if (!hi || *hi < b) hi = b;
    };
    if (pts.size() == 1 && d(pts[0]) > 0) take(pts[0], pts[0]);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const Rational &a = pts[i], &b = pts[i + 1];
        Rational da = d(a), db = d(b);
        if (da <= 0 && db <= 0) continue;
        if (da > 0 && db > 0)
            take(a, b);
        else if (da > 0)
            take(a, a + (b - a) * da / (da - db));
        else
            take(a + (b - a) * da / (da - db), b);
    }
    if (!lo) return std::nullopt;
    return TInterval(*lo, *hi);
}

struct Selector {
    const Profiles& P;
    const PLFun& c;
    int depth = 0;

    std::vector<int> run(std::size_t n, const TInterval& J, int level) {
        depth = std::max(depth, level);
        if (n == 1) return {1};
        const auto& wn = P[n - 1];
        std::optional<TInterval> S = wn ? dip_set(*wn, c, J) : std::optional<TInterval>(J);
        std::vector<int> prev;
        if (S) {
            prev = run(n - 1, *S, level + 1);
        } else {
            std::vector<int> all(n - 1, 1);
            prev = covers(combined_on(P, all, J), c, J) ? run(n - 1, J, level + 1) : std::vector<int>(n - 1, 0);
        }
        std::vector<int> lam = prev;
        lam.push_back(0);
        if (covers(combined_on(P, lam, J), c, J)) return lam;
        std::vector<int> only(n, 0);
        only[n - 1] = 1;
        if (covers(combined_on(P, only, J), c, J)) return only;
        lam.back() = 1;
        if (!covers(combined_on(P, lam, J), c, J))
            throw std::logic_error("selection merge failed on [" + to_string(J.lo) + ", " + to_string(J.hi) + "]");
        return lam;
    }
};

std::vector<CertRecord> certify(const Profiles& P, const std::vector<int>& lam, const TInterval& I) {
    std::vector<Rational> pts{I.lo, I.hi};
    auto comb = combined_on(P, lam, I);
    for (const auto& b : comb->breakpoints()) pts.push_back(b);
    for (std::size_t i = 0; i < lam.size(); ++i)
        if (lam[i] && P[i])
            for (const auto& b : P[i]->breakpoints())
                if (I.lo < b && b < I.hi) pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() == 1) pts.push_back(pts[0]);
    std::vector<CertRecord> out;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        Rational mid = (pts[k] + pts[k + 1]) / 2;
        std::size_t best = lam.size();
        for (std::size_t i = 0; i < lam.size(); ++i) {
            if (!lam[i] || !P[i]) continue;
            if (best == lam.size() || P[i]->eval(mid) < P[best]->eval(mid)) best = i;
        }
        if (!out.empty() && out.back().index == best)
            out.back().t1 = pts[k + 1];
        else
            out.push_back(CertRecord{pts[k], pts[k + 1], best});
    }
    return out;
}

}  // namespace

SelectionResult select_combination(const Profiles& profiles, const PLFun& c, const TInterval& I) {
    if (profiles.empty()) throw DomainError("select_combination needs at least one profile");
    if (!plf_is_convex(c)) throw DomainError("bound c is not log-concave (profile not convex in t)");
    for (std::size_t i = 0; i < profiles.size(); ++i)
        if (profiles[i] && !plf_is_concave(*profiles[i]))
            throw DomainError("profile " + std::to_string(i) + " is not concave");
    std::vector<int> all(profiles.size(), 1);
    auto env = combined_on(profiles, all, I);
    if (!env) throw DomainError("precondition fails: every matrix is zero");
    if (auto chk = plf_leq_on(*env, c, I); !chk.holds)
        throw DomainError("precondition fails: every norm is below c at t = " + to_string(*chk.witness));
    Selector sel{profiles, c};
    SelectionResult r;
    r.lambdas = sel.run(profiles.size(), I, 1);
    r.depth = sel.depth;
    r.combined = *combined_on(profiles, r.lambdas, I);
    r.certificate = certify(profiles, r.lambdas, I);
    return r;
}

SelectionResult select_combination(const std::vector<PLFun>& profiles, const PLFun& c, const TInterval& I) {
    return select_combination(Profiles(profiles.begin(), profiles.end()), c, I);
}

LeqResult replay_certificate(const SelectionResult& r, const Profiles& profiles, const PLFun& c,
                             const TInterval& I) {
    if (r.certificate.empty() || r.certificate.front().t0 != I.lo || r.certificate.back().t1 != I.hi)
        return LeqResult{false, I.lo};
    for (std::size_t k = 0; k < r.certificate.size(); ++k) {
        const auto& rec = r.certificate[k];
        if (k > 0 && rec.t0 != r.certificate[k - 1].t1) return LeqResult{false, rec.t0};
        if (rec.index >= profiles.size() || !r.lambdas[rec.index] || !profiles[rec.index])
            return LeqResult{false, rec.t0};
        auto chk = plf_leq_on(*profiles[rec.index], c, TInterval(rec.t0, rec.t1));
        if (!chk.holds) return chk;
    }
    return plf_leq_on(r.combined, c, I);
}

LhResult build_Lh(const DiffModule& M, long h, const Rational& beta, const TInterval& I, const Rational& t_r) {
    if (h < 0) throw DomainError("h must be >= 0");
    if (I.lo < M.ann.lo || M.ann.hi < I.hi) throw DomainError("interval outside the module annulus");
    long ph = 1;
    for (long i = 0; i < h; ++i) ph *= M.ctx->p();
    auto Gs = delta_matrices(M, ph);
    LhReport rep;
    rep.h = h;
    rep.beta = beta;
    rep.t_r = t_r;
    Rational slope = beta * ph;
    // ell(t) = slope (t - t_r)
    std::vector<MatLaurent> xs(static_cast<std::size_t>(ph + 1));
    rep.profiles.resize(static_cast<std::size_t>(ph + 1));
    for (long s = 0; s <= ph; ++s) {
        std::size_t k = static_cast<std::size_t>(s);
        if (k < Gs.size()) {
            xs[k] = shifted(Gs[k], s);
            rep.profiles[k] = matrix_profile(xs[k], I);
        }
    }
    std::vector<int> all(rep.profiles.size(), 1);
    auto env = combined_on(rep.profiles, all, I);
    if (!env) throw DomainError("all x^s G_s vanish");
    PLFun shifted_env = plf_add_line(*env, -slope * t_r, slope);
    std::vector<Rational> pts{I.lo, I.hi};
    for (const auto& b : shifted_env.breakpoints()) pts.push_back(b);
    rep.C = shifted_env.eval(I.lo);
    for (const auto& t : pts) rep.C = std::max(rep.C, shifted_env.eval(t));
    rep.M_val = std::min(shifted_env.eval(I.lo), shifted_env.eval(I.hi));
    PLFun c = PLFun::line(rep.C + slope * t_r, -slope, I);
    rep.selection = select_combination(rep.profiles, c, I);

    DiffOp L{M.ctx, OpForm::Delta, {}};
    MatLaurent sum(M.ctx, M.rank(), M.rank());
    for (std::size_t s = 0; s < rep.selection.lambdas.size(); ++s) {
        if (!rep.selection.lambdas[s]) continue;
        L.terms[static_cast<long>(s)] = LaurentPoly::monomial(KElem::from_rational(M.ctx, 1), static_cast<long>(s));
        if (rep.profiles[s]) sum = sum + xs[s];
    }
    rep.actual = matrix_profile(sum, I);
    if (rep.actual) {
        auto lo = plf_leq_on(*rep.actual, c, I);
        rep.lower_holds = lo.holds;
        rep.witness = lo.witness;
        PLFun floor = PLFun::line(rep.M_val + slope * t_r, -slope, I);
        rep.upper_holds = plf_leq_on(floor, *rep.actual, I).holds;
        rep.cancellation = !plf_leq_on(*rep.actual, rep.selection.combined, I).holds ||
                           !plf_leq_on(rep.selection.combined, *rep.actual, I).holds;
    } else {
        rep.cancellation = true;
    }
    return LhResult{std::move(L), std::move(rep)};
}

}  // namespace pslopes
