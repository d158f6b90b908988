#include "pslopes/frobenius.hpp"

#include <numeric>

namespace pslopes {

DiffModule pullback(const DiffModule& M, long q) {
    if (q < 2) throw DomainError("pullback needs q >= 2");
    MatLaurent G = shifted(substitute_power(M.G, q), q - 1) * Rational(q);
    return DiffModule{M.ctx, G, Annulus(M.ann.lo / q, M.ann.hi / q)};
}

AlphaTable alpha_table(long p, long lambda, long s) {
    if (lambda < 1 || s < 1) throw DomainError("alpha_table needs lambda, s >= 1");
    Integer pl;
    mpz_ui_pow_ui(pl.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(lambda));
    if (!pl.fits_slong_p() || pl * s > 1000000) throw DomainError("alpha_table exceeds integer budget");
    long n = pl.get_si();
    std::vector<Integer> base(static_cast<std::size_t>(n + 1));
    for (long k = 1; k <= n; ++k) base[static_cast<std::size_t>(k)] = binomial(n, k);
    std::vector<Integer> acc{1};
    for (long i = 0; i < s; ++i) {
        std::vector<Integer> next(acc.size() + base.size() - 1, 0);
        for (std::size_t a = 0; a < acc.size(); ++a) {
            if (acc[a] == 0) continue;
            for (std::size_t b = 1; b < base.size(); ++b) next[a + b] += acc[a] * base[b];
        }
        acc = std::move(next);
    }
    return AlphaTable{p, lambda, s, std::move(acc)};
}

AlphaBoundReport alpha_bound_report(const AlphaTable& T) {
    AlphaBoundReport r;
    const long p = T.p, lam = T.lambda, s = T.s;
    auto ppow = [&](long e) {
        Rational x = 1;
        for (long i = 0; i < std::labs(e); ++i) x *= p;
        return e >= 0 ? x : Rational(1 / x);
    };
    auto v = [&](long k) -> std::optional<long> {
        const Integer& a = T.alpha[static_cast<std::size_t>(k)];
        if (a == 0) return std::nullopt;
        return vp_int(a, p);
    };
    auto fail = [&](const std::string& m) { r.failures.push_back(m); };
    const long top = s * ppow(lam).get_num().get_si();
    for (long delta = 0; delta <= lam - 1; ++delta) {
        Rational scale = ppow(delta + 1 - lam);
        long k_eq1 = s * ppow(lam - delta - 1).get_num().get_si();
        long k_eq2 = s * ppow(lam - delta).get_num().get_si();
        for (long k = s; k <= top; ++k) {
            auto vk = v(k);
            if (!vk) continue;
            ++r.checks;
            Rational bound = (Rational(s * p + delta * (p - 1) * s) - k * scale) / (p - 1);
            if (Rational(*vk) < bound) {
                r.bound_holds = false;
                fail("bound fails at delta=" + std::to_string(delta) + " k=" + std::to_string(k));
            }
            bool eq = Rational(*vk) == bound;
            bool stated = k == k_eq1 || k == k_eq2;
            if (stated && !eq) {
                r.stated_equalities_hold = false;
                fail("no equality at delta=" + std::to_string(delta) + " k=" + std::to_string(k));
            }
            if (eq && !stated) ++r.extra_equalities;
        }
    }
    auto vt = v(top);
    if (!vt || *vt != 0) {
        r.special_cases_hold = false;
        fail("|alpha_{s p^lambda, s}| != 1");
    }
    if (s == 1) {
        for (long delta = 0; delta <= lam - 1; ++delta) {
            long k = ppow(lam - delta).get_num().get_si();
            auto vk = v(k);
            if (!vk || *vk != delta) {
                r.special_cases_hold = false;
                fail("|alpha_{p^(lambda-delta),1}| != |p|^delta at delta=" + std::to_string(delta));
            }
        }
    }
    return r;
}

std::vector<AlphaBoundReport> alpha_reports(const std::vector<AlphaJob>& jobs) {
    std::vector<AlphaBoundReport> out(jobs.size());
    const long n = static_cast<long>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) {
        const auto& j = jobs[static_cast<std::size_t>(i)];
        out[static_cast<std::size_t>(i)] = alpha_bound_report(alpha_table(j.p, j.lambda, j.s));
    }
    return out;
}

std::vector<AlphaBoundReport> alpha_reports_serial(const std::vector<AlphaJob>& jobs) {
    std::vector<AlphaBoundReport> out;
    for (const auto& j : jobs) out.push_back(alpha_bound_report(alpha_table(j.p, j.lambda, j.s)));
    return out;
}

std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::vector<RadiusRelation> radius_relation_checks(const DiffModule& M, long q, const std::vector<Rational>& ts,
                                                  long K) {
    DiffModule Mq = pullback(M, q);
    std::vector<Rational> qts;
    for (const auto& t : ts) qts.push_back(q * t);
    auto as = radius_estimates(Mq, ts, K);
    auto bs = radius_estimates(M, qts, K);
    std::vector<RadiusRelation> out;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        RadiusRelation r;
        r.t = ts[i];
        r.lhs = as[i].rho_val;
        r.rhs = bs[i].rho_val - (q - 1) * ts[i];
        r.equality_required = std::gcd(q, M.ctx->p()) == 1;
        if (as[i].converged && bs[i].converged) {
            bool ok = r.lhs <= r.rhs && (!r.equality_required || r.lhs == r.rhs);
            r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
        }
        out.push_back(r);
    }
    return out;
}

RadiusRelation radius_relation_check(const DiffModule& M, long q, const Rational& t, long K) {
    return radius_relation_checks(M, q, {t}, K).front();
}

bool vanishes_at_precision(const MatLaurent& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const LaurentPoly& f = a(i, j);
            if (f.truncated()) return false;
            for (const auto& c : f.coeffs())
                if (!c.is_exact_zero() && !c.is_zero_at_prec()) return false;
        }
    return true;
}

FrobeniusReport frobenius_solubility_check(const DiffModule& M, long q, const std::vector<Rational>& ts, long K,
                                           const std::optional<MatLaurent>& H) {
    const long p = M.ctx->p();
    long vq = 0;
    for (long r = q; r > 1; r /= p) {
        if (r % p != 0) throw DomainError("q = " + std::to_string(q) + " is not a power of p");
        ++vq;
    }
    if (vq == 0) throw DomainError("q must be a power of p");
    FrobeniusReport rep;
    rep.mode = H ? "intertwiner" : "inequality";
    if (H) {
        DiffModule Mq = pullback(M, q);
        MatLaurent lhs = (*H) * Mq.G + derivative(*H);
        MatLaurent rhs = M.G * (*H);
        if (!vanishes_at_precision(lhs - rhs))
            throw DomainError("not a Frobenius structure at this precision");
        rep.intertwiner_verified = true;
    }
    std::vector<Rational> all = ts;
    for (const auto& t : ts) all.push_back(q * t);
    auto rs = radius_estimates(M, all, K);
    bool any_fail = false, all_conclusive = true;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const RadiusReport& a = rs[i];
        const RadiusReport& b = rs[i + ts.size()];
        FrobeniusSample s;
        s.t = ts[i];
        s.lhs = a.rho_val;
        s.rhs = std::max(Rational(b.rho_val / q), Rational(b.rho_val - vq));
        if (!a.converged || !b.converged)
            s.status = CheckStatus::Inconclusive;
        else
            s.status = s.lhs <= s.rhs ? CheckStatus::Pass : CheckStatus::Fail;
        any_fail = any_fail || s.status == CheckStatus::Fail;
        all_conclusive = all_conclusive && s.status != CheckStatus::Inconclusive;
        rep.samples.push_back(s);
    }
    rep.status = any_fail ? CheckStatus::Fail : (all_conclusive ? CheckStatus::Pass : CheckStatus::Inconclusive);
    rep.solubility_evidence = rep.status == CheckStatus::Pass;
    return rep;
}

}  // namespace pslopes
