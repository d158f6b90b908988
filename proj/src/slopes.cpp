#include "pslopes/slopes.hpp"

#include <algorithm>

namespace pslopes {

std::vector<RadiusReport> radius_estimates(const DiffModule& M, const std::vector<Rational>& ts, long K) {
    const long p = M.ctx->p();
    if (K < p) throw DomainError("no p-power subsequence sampled: K_max < p");
    for (const auto& t : ts)
        if (!M.ann.contains(t)) throw DomainError("t = " + to_string(t) + " outside the module annulus");
    const std::size_t nt = ts.size();
    // w[k][i] = valuation of |G_k| at ts[i]; nullopt for G_k = 0.
    std::vector<std::vector<std::optional<Rational>>> w(static_cast<std::size_t>(K + 1),
                                                        std::vector<std::optional<Rational>>(nt));
    bool vanished = false;
    for_each_delta(M, K, [&](long k, const MatLaurent& Gk) {
        if (k == 0) return;
        if (Gk.is_exact_zero()) {
            if (k == K) vanished = true;
            return;
        }
        std::vector<std::optional<Rational>>& row = w[static_cast<std::size_t>(k)];
        std::vector<std::string> errors(nt);
#pragma omp parallel for schedule(static)
        for (std::size_t i = 0; i < nt; ++i) {
            try {
                row[i] = matrix_value(Gk, ts[i]);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
        for (const auto& e : errors)
            if (!e.empty()) throw PrecisionError("G_" + std::to_string(k) + ": " + e);
    });

    std::vector<long> pp;
    for (long q = p; q <= K; q *= p) {
        pp.push_back(q);
        if (q > K / p) break;
    }
    std::vector<RadiusReport> out(nt);
    for (std::size_t i = 0; i < nt; ++i) {
        RadiusReport& r = out[i];
        r.t = ts[i];
        r.K_max = K;
        r.tail_max = r.t;
        for (long k = (K + 1) / 2; k <= K; ++k) {
            const auto& wk = w[static_cast<std::size_t>(k)][i];
            if (!wk) continue;
            r.tail.emplace_back(k, -*wk / k);
            r.tail_max = std::max(r.tail_max, r.tail.back().second);
        }
        std::optional<Rational> prev_scaled;  // v(j! G_j) at the previous power
        long prev_k = 0;
        for (long q : pp) {
            const auto& wq = w[static_cast<std::size_t>(q)][i];
            if (!wq) break;
            Rational scaled = Rational(vp_factorial(q, p)) + *wq;
            TailValue tv{q, -*wq / q, frac(1, p - 1) - scaled / q, std::nullopt};
            if (prev_scaled) tv.difference = frac(1, p - 1) - (scaled - *prev_scaled) / (q - prev_k);
            r.ppowers.push_back(tv);
            prev_scaled = scaled;
            prev_k = q;
        }
        if (vanished) {
            r.rho_val = r.t;
            r.converged = true;
            r.method = "vanishing G_k";
            continue;
        }
        std::vector<Rational> diffs;
        for (const auto& v : r.ppowers)
            if (v.difference) diffs.push_back(*v.difference);
        std::size_t n = diffs.size();
        if (n >= 2 && diffs[n - 1] == diffs[n - 2]) {
            r.rho_val = std::max(r.t, diffs[n - 1]);
            r.converged = true;
            r.method = "p-power difference quotient";
        } else if (n >= 1) {
            r.rho_val = std::max(r.t, diffs[n - 1]);
            r.lower_bound_only = true;
            r.method = "p-power difference quotient (not converged)";
        } else {
            r.rho_val = r.tail_max;
            r.lower_bound_only = true;
            r.method = "tail max";
        }
    }
    return out;
}

RadiusReport radius_estimate(const DiffModule& M, const Rational& t, long K) {
    return radius_estimates(M, {t}, K).front();
}

SolubilityReport is_soluble(const DiffModule& M, const std::vector<Rational>& ts, long K,
                            const Rational& t_boundary) {
    if (ts.size() < 2) throw DomainError("solubility needs at least two samples");
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (!(ts[i] > t_boundary)) throw DomainError("samples must lie beyond the boundary");
        if (i > 0 && !(ts[i] < ts[i - 1])) throw DomainError("samples must decrease toward the boundary");
    }
    auto rs = radius_estimates(M, ts, K);
    SolubilityReport out;
    out.ts = ts;
    bool converged = true;
    for (const auto& r : rs) {
        out.gaps.push_back(r.rho_val - r.t);
        converged = converged && r.converged;
    }
    std::size_t n = ts.size();
    Rational slope = (out.gaps[n - 2] - out.gaps[n - 1]) / (ts[n - 2] - ts[n - 1]);
    out.intercept = out.gaps[n - 1] - slope * (ts[n - 1] - t_boundary);
    bool monotone = true;
    for (std::size_t i = 1; i < n; ++i) monotone = monotone && out.gaps[i] <= out.gaps[i - 1];
    Rational tol(1, K);
    out.soluble = monotone && abs(out.intercept) <= tol;
    out.conclusive = converged;
    if (!monotone)
        out.reason = "gaps not monotone along the samples";
    else if (out.soluble)
        out.reason = "gap extrapolates to 0 at the boundary within 1/K_max";
    else
        out.reason = "gap extrapolates to " + to_string(out.intercept) + " at the boundary";
    if (!converged) out.reason += "; radius estimates not converged";
    return out;
}

YoungResult young_radius(const DiffOp& P, const Rational& t) {
    DiffOp th = to_form(P, OpForm::Theta);
    long m = th.order();
    if (m < 1) throw DomainError("Young's formula needs order >= 1");
    const long p = P.ctx->p();
    Annulus pt(t, t);
    Rational wm = gauss_profile(th.coeff(m), pt).eval(t);
    std::optional<Rational> best;
    for (long i = 0; i < m; ++i) {
        const LaurentPoly& a = th.coeff(i);
        if (a.is_exact_zero() || a.is_zero_at_prec()) continue;
        Rational w = (gauss_profile(a, pt).eval(t) - wm) / (m - i);
        if (!best || w < *best) best = w;
    }
    YoungResult out;
    Rational threshold = t + frac(1, p - 1);
    if (!best) {
        out.rho_val = t;
        out.valid = false;
        return out;
    }
    out.rho_val = threshold - *best;
    out.valid = out.rho_val > threshold;
    return out;
}

Rational snap_rational(const Rational& x, long max_den) {
    if (max_den < 1) throw DomainError("denominator bound must be >= 1");
    std::optional<Rational> best;
    for (long d = 1; d <= max_den; ++d) {
        Rational scaled = x * d;
        for (const Integer& n : {floor_q(scaled), ceil_q(scaled)}) {
            Rational c(n, d);
            c.canonicalize();
            if (!best || abs(c - x) < abs(*best - x)) best = c;
        }
    }
    return *best;
}

SlopeFit largest_slope(const DiffModule& M, const std::vector<Rational>& ts, long K,
                       std::optional<Rational> tolerance) {
    if (ts.size() < 3) throw DomainError("largest_slope needs at least three samples");
    for (std::size_t i = 1; i < ts.size(); ++i)
        if (!(ts[i] < ts[i - 1])) throw DomainError("samples must decrease toward the boundary");
    SlopeFit fit;
    fit.samples = radius_estimates(M, ts, K);
    fit.tolerance = tolerance ? *tolerance : frac(1, 4 * K);
    fit.converged = true;
    for (const auto& r : fit.samples) fit.converged = fit.converged && r.converged;
    std::size_t n = ts.size();
    auto gap = [&](std::size_t i) { return Rational(fit.samples[i].rho_val - fit.samples[i].t); };
    fit.raw = (gap(n - 2) - gap(n - 1)) / (ts[n - 2] - ts[n - 1]);
    fit.previous = (gap(n - 3) - gap(n - 2)) / (ts[n - 3] - ts[n - 2]);
    fit.exact = fit.raw == fit.previous;
    if (abs(fit.raw - fit.previous) > fit.tolerance)
        throw DomainError("not yet in the linear zone; sample closer to the boundary (difference quotients " +
                          to_string(fit.previous) + " and " + to_string(fit.raw) + ")");
    Rational s = snap_rational(fit.raw, static_cast<long>(M.rank()));
    if (abs(s - fit.raw) <= fit.tolerance) {
        fit.beta = s;
        fit.snapped = s != fit.raw;
    } else {
        fit.beta = fit.raw;
    }
    return fit;
}

std::vector<std::pair<Rational, Rational>> NewtonPolygon::vertices() const {
    std::vector<std::pair<Rational, Rational>> v{{0, 0}};
    for (const auto& part : parts)
        v.emplace_back(v.back().first + part.multiplicity, v.back().second + part.slope * part.multiplicity);
    return v;
}

long NewtonPolygon::rank() const {
    long r = 0;
    for (const auto& part : parts) r += part.multiplicity;
    return r;
}

Rational NewtonPolygon::height() const {
    return vertices().back().second;
}

NewtonPolygon newton_polygon(std::vector<NewtonPart> parts) {
    for (const auto& part : parts) {
        if (part.slope < 0) throw DomainError("negative slope " + to_string(part.slope));
        if (part.multiplicity < 1) throw DomainError("multiplicity must be >= 1");
    }
    std::stable_sort(parts.begin(), parts.end(),
                     [](const NewtonPart& a, const NewtonPart& b) { return a.slope < b.slope; });
    NewtonPolygon np;
    for (const auto& part : parts) {
        if (!np.parts.empty() && np.parts.back().slope == part.slope)
            np.parts.back().multiplicity += part.multiplicity;
        else
            np.parts.push_back(part);
    }
    return np;
}

Rational irregularity(const NewtonPolygon& np) {
    Rational s = 0;
    for (const auto& part : np.parts)
        if (part.slope > 0) s += part.slope * part.multiplicity;
    return s;
}

IntegralityResult check_vertex_integrality(const NewtonPolygon& np) {
    IntegralityResult r;
    for (const auto& v : np.vertices())
        if (v.first.get_den() != 1 || v.second.get_den() != 1) {
            r.integral = false;
            r.offending = v;
            return r;
        }
    return r;
}

}  // namespace pslopes
