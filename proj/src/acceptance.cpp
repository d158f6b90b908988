#include "pslopes/acceptance.hpp"

#include "pslopes/frobenius.hpp"
#include "pslopes/index.hpp"
#include "pslopes/selection.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace pslopes {

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (!pass) detail << "; ";
            pass = false;
            detail << what;
        }
    }
};

LaurentPoly mono(const Ctx& ctx, const std::string& c, long e) {
    return LaurentPoly::monomial(parse_kelem(c, ctx), e);
}

DiffModule rank_one(const Ctx& ctx, const std::string& c, long e, const Annulus& ann) {
    DiffModule M{ctx, MatLaurent(ctx, 1, 1), ann};
    M.G(0, 0) = mono(ctx, c, e);
    return M;
}

DiffOp theta_op(const Ctx& ctx, const std::vector<std::vector<std::pair<long, std::string>>>& coeffs) {
    DiffOp P{ctx, OpForm::Theta, {}};
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        std::map<long, KElem> m;
        for (const auto& [e, s] : coeffs[k]) m.emplace(e, parse_kelem(s, ctx));
        if (!m.empty()) P.terms.emplace(static_cast<long>(k), LaurentPoly::from_terms(ctx, m));
    }
    return P;
}

// Bound on v_p(alpha_{k,s}) against an independent closed form.
void criterion1(Outcome& o) {
    std::vector<AlphaJob> jobs;
    for (long p : {2, 3, 5})
        for (long lam = 1; lam <= 3; ++lam)
            for (long s = 1; s <= 4; ++s) jobs.push_back({p, lam, s});
    auto reports = alpha_reports(jobs);
    long checks = 0, extras = 0;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const auto& jb = jobs[i];
        AlphaTable T = alpha_table(jb.p, jb.lambda, jb.s);
        long pl = 1;
        for (long k = 0; k < jb.lambda; ++k) pl *= jb.p;
        for (long k = 0; k <= jb.s * pl; ++k) {
            Integer want = 0;
            for (long j = 0; j <= jb.s; ++j) {
                Integer term = binomial(jb.s, j) * binomial(j * pl, k);
                want += ((jb.s - j) % 2 ? -term : term);
            }
            if (T.alpha[static_cast<std::size_t>(k)] != want) {
                o.require(false, "alpha table mismatch at p=" + std::to_string(jb.p) + " k=" + std::to_string(k));
                return;
            }
        }
        const auto& r = reports[i];
        checks += r.checks;
        extras += r.extra_equalities;
        for (const auto& f : r.failures)
            o.require(false, "p=" + std::to_string(jb.p) + " lambda=" + std::to_string(jb.lambda) +
                                 " s=" + std::to_string(jb.s) + ": " + f);
    }
    o.detail << (o.pass ? "" : "; ") << jobs.size() << " tables, " << checks << " bound checks, " << extras
             << " equalities beyond the two stated k";
}

// Estimator against Young's formula, with hand-derived rho values as a second oracle.
void criterion2(Outcome& o) {
    auto ctx = make_ctx(3, 60);
    const long K = 27;
    struct Case {
        DiffOp P;
        Rational t, expect;
    };
    std::vector<Case> cases = {
        {theta_op(ctx, {{{-1, "pi"}}, {{0, "1"}}}), 1, 2},
        {theta_op(ctx, {{{-2, "pi"}}, {{0, "1"}}}), frac(1, 2), frac(3, 2)},
        {theta_op(ctx, {{{-1, "1"}}, {{0, "1"}}}), frac(1, 3), frac(7, 6)},
        {theta_op(ctx, {{{-1, "pi"}, {-3, "3"}}, {{0, "1"}}}), frac(3, 4), frac(5, 2)},
        {theta_op(ctx, {{{-1, "1/3"}}, {{0, "1"}}}), frac(1, 5), frac(19, 10)},
        {theta_op(ctx, {{{-1, "pi"}}, {}, {{0, "1"}}}), 1, frac(7, 4)},
        {theta_op(ctx, {{{-3, "pi"}}, {{0, "1"}}, {{0, "1"}}}), 1, frac(11, 4)},
        {theta_op(ctx, {{{-3, "pi"}}, {{-1, "1"}}, {{0, "1"}}}), frac(2, 3), frac(23, 12)},
    };
    int idx = 0;
    for (const auto& c : cases) {
        ++idx;
        long rank = c.P.order();
        YoungResult y = young_radius(c.P, c.t);
        RadiusReport r = radius_estimate(companion_module(c.P, Annulus(0, 10)), c.t, K);
        std::string tag = "case " + std::to_string(idx) + " (rank " + std::to_string(rank) + ")";
        o.require(y.valid, tag + ": outside the valid regime");
        o.require(y.rho_val == c.expect, tag + ": young " + to_string(y.rho_val) + " != " + to_string(c.expect));
        Rational err = abs(r.rho_val - y.rho_val);
        if (rank == 1)
            o.require(err == 0, tag + ": estimate " + to_string(r.rho_val) + " != young " + to_string(y.rho_val));
        else
            o.require(err <= frac(1, K), tag + ": |estimate - young| = " + to_string(err) + " > 1/" + std::to_string(K));
    }
    o.detail << (o.pass ? "" : "; ") << "5 rank-1 and 3 rank-2 operators at K=" << K;
}

DiffOp example_639(const Ctx& ctx) {
    DiffOp P{ctx, OpForm::Dx, {}};
    P.terms.emplace(2, mono(ctx, "9", 3));
    P.terms.emplace(1, mono(ctx, "9", 2));
    P.terms.emplace(0, mono(ctx, "-1", 1) + mono(ctx, "1/3*pi^2", 0));
    return P;
}

void criterion3(Outcome& o) {
    auto ctx = make_ctx(5, 80);
    DiffModule M = companion_module(example_639(ctx), Annulus(0, 1));
    SlopeFit fit = largest_slope(M, {frac(1, 25), frac(1, 50), frac(1, 100)}, 125);
    o.require(fit.beta == frac(1, 2), "beta = " + to_string(fit.beta));
    o.require(abs(fit.raw - frac(1, 2)) <= frac(1, 20), "raw estimate " + to_string(fit.raw) + " off by more than 0.05");
    NewtonPolygon np = newton_polygon({NewtonPart{fit.beta, static_cast<long>(M.rank())}});
    o.require(np.parts.size() == 1 && np.parts[0].slope == frac(1, 2) && np.parts[0].multiplicity == 2,
              "polygon is not (1/2, 2)");
    o.require(irregularity(np) == 1, "irregularity " + to_string(irregularity(np)));
    auto v = np.vertices();
    o.require(v.back() == std::make_pair(Rational(2), Rational(1)), "end vertex is not (2, 1)");
    o.require(check_vertex_integrality(np).integral, "vertex not integral");
    o.detail << (o.pass ? "" : "; ") << "beta=" << to_string(fit.beta) << " raw=" << to_string(fit.raw)
             << (fit.converged ? " converged" : " not converged");
}

// a_k x^(2k) series solution; num(k) is the rational factor of a_k / a_{k-1} without pi^-1.
LaurentPoly series_solution(const Ctx& ctx, long degree, const std::function<Rational(long)>& num,
                            std::vector<KElem>& a) {
    a.assign(1, KElem::from_rational(ctx, 1));
    std::vector<KElem> c(static_cast<std::size_t>(2 * degree + 1), KElem(ctx));
    c[0] = a[0];
    for (long k = 1; k <= degree; ++k) {
        a.push_back(a.back() * KElem::from_rational(ctx, num(k), -1));
        c[static_cast<std::size_t>(2 * k)] = a.back();
    }
    return LaurentPoly(ctx, 0, c, false, true);
}

bool vanishes_on_window(const LaurentPoly& f) {
    for (const auto& c : f.coeffs())
        if (!c.is_exact_zero() && !c.is_zero_at_prec()) return false;
    return true;
}

void criterion4(Outcome& o) {
    auto ctx = make_ctx(7, 60);
    const long deg = 200;
    // As printed, the recursion solves (d+1/3)(d+5/3) o x^2 + (8 pi/27) d = x^2 (d+7/3)(d+11/3) + (8 pi/27) d.
    DiffOp Q = theta_op(ctx, {{{2, "77/9"}}, {{2, "6"}, {0, "8/27*pi"}}, {{2, "1"}}});
    // The printed operator x^2 (d+1/3)(d+5/3) + (8 pi/27) d pairs with the shifted recursion.
    DiffOp P = theta_op(ctx, {{{2, "5/9"}}, {{2, "2"}, {0, "8/27*pi"}}, {{2, "1"}}});
    std::vector<KElem> a, b;
    LaurentPoly g = series_solution(ctx, deg, [](long k) {
        return Rational(-27 * (2 * k + frac(1, 3)) * (2 * k + frac(5, 3)) / (16 * k));
    }, a);
    LaurentPoly h = series_solution(ctx, deg, [](long k) {
        return Rational(-27 * (2 * k - frac(5, 3)) * (2 * k - frac(1, 3)) / (16 * k));
    }, b);
    LaurentPoly Qg = apply(Q, g), Pg = apply(P, g), Ph = apply(P, h);
    o.require(vanishes_on_window(Qg), "printed recursion does not solve its operator");
    o.require(vanishes_on_window(Ph), "shifted recursion does not solve the printed operator");
    bool printed_pair = vanishes_on_window(Pg);
    // v(a_k) + 2k t must grow without bound: later blocks sit above earlier ones.
    for (const Rational& t : {frac(1, 2), frac(1, 10), frac(1, 100)}) {
        auto block_min = [&](long k0, long k1) {
            Rational m = valuation(a[static_cast<std::size_t>(k0)]).value() + 2 * k0 * t;
            for (long k = k0; k <= k1; ++k)
                m = std::min(m, Rational(valuation(a[static_cast<std::size_t>(k)]).value() + 2 * k * t));
            return m;
        };
        Rational m1 = block_min(1, 66), m2 = block_min(67, 133), m3 = block_min(134, deg);
        o.require(m1 < m2 && m2 < m3, "no growth at t=" + to_string(t) + ": " + to_string(m1) + ", " + to_string(m2) + ", " + to_string(m3));
    }
    o.detail << (o.pass ? "" : "; ") << "P g vanishes through x^" << Qg.hi() << "; printed operator with printed recursion "
             << (printed_pair ? "vanishes" : "does not vanish");
}

void criterion5(Outcome& o) {
    const long p = 3;
    auto ctx = make_ctx(p, 60);
    for (long d : {1, 2})
        for (long h : {1, 2}) {
            long ph = h == 1 ? p : p * p;
            DiffModule M = rank_one(ctx, "pi", -(d + 1), Annulus(0, 1));
            auto G = delta_matrices(M, ph);
            auto prof = matrix_profile(shifted(G[static_cast<std::size_t>(ph)], ph), M.ann);
            std::string tag = "d=" + std::to_string(d) + " h=" + std::to_string(h);
            if (!prof) {
                o.require(false, tag + ": matrix vanishes");
                continue;
            }
            // omega (r/rho)^(d p^h) in valuation form, t_r = 0; the printed sign gives the weaker bound.
            PLFun sharp = PLFun::line(M.ctx->omega_val(), -d * ph, M.ann);
            PLFun printed = PLFun::line(M.ctx->omega_val(), d * ph, M.ann);
            auto a = plf_leq_on(*prof, sharp, M.ann), b = plf_leq_on(*prof, printed, M.ann);
            o.require(a.holds, tag + ": sharp bound fails at t=" + (a.witness ? to_string(*a.witness) : "?"));
            o.require(b.holds, tag + ": printed bound fails at t=" + (b.witness ? to_string(*b.witness) : "?"));
            LhResult L = build_Lh(M, h, d, M.ann);
            o.require(L.report.lower_holds && L.report.upper_holds, tag + ": L_h sandwich fails");
        }
    o.detail << (o.pass ? "" : "; ") << "sharp and printed bounds on [0, 1], L_h sandwich for h=1,2";
}

void criterion6(Outcome& o) {
    for (long p : {3, 5})
        for (long d : {1, 2, 3}) {
            auto ctx = make_ctx(p, 60);
            DiffModule M = rank_one(ctx, "pi", -(d + 1), Annulus(0, 1));
            std::string tag = "p=" + std::to_string(p) + " d=" + std::to_string(d);
            IndexPair dom = module_index_dominated(M, 1);
            o.require(dom.disk.value == d, tag + ": dominated disk index " + std::to_string(dom.disk.value));
            o.require(dom.annulus() == 0, tag + ": dominated disk + outer = " + std::to_string(dom.annulus()));
            std::vector<Rational> ts{frac(1, 25), frac(1, 50), frac(1, 100)};
            long K = p == 3 ? 27 : 125;
            IndexPair slope = module_index(M, ts, K);
            SolubilityReport sol = is_soluble(M, ts, K);
            o.require(slope.disk.value == d, tag + ": slope formula gives " + std::to_string(slope.disk.value) +
                                                 (sol.soluble ? "" : " (module not soluble at the boundary: " + sol.reason + ")"));
            o.require(slope.annulus() == 0, tag + ": slope disk + outer = " + std::to_string(slope.annulus()));
        }
    if (o.pass) o.detail << "dominated and slope-formula indices agree for all six modules";
}

// Root valuations from the lower convex hull of (e, v(c_e)).
std::vector<std::pair<Rational, long>> root_valuations(const LaurentPoly& f) {
    std::vector<std::pair<long, Rational>> pts;
    for (long e = f.lo(); e <= f.hi(); ++e) {
        KElem c = f.coeff(e);
        if (!c.is_exact_zero()) pts.emplace_back(e, valuation(c).value());
    }
    std::vector<std::pair<long, Rational>> hull;
    for (const auto& q : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            // drop b when it lies on or above segment a-q
            if ((b.second - a.second) * (q.first - a.first) >= (q.second - a.second) * (b.first - a.first))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(q);
    }
    std::vector<std::pair<Rational, long>> out;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        long len = hull[i + 1].first - hull[i].first;
        Rational slope = (hull[i + 1].second - hull[i].second) / len;
        out.emplace_back(-slope, len);
    }
    return out;
}

MatLaurent random_matrix(const Ctx& ctx, std::size_t m, std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(1, 3), expo(-2, 2), unit(1, 4), pw(-1, 2), sign(0, 1);
    MatLaurent u(ctx, m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            std::map<long, KElem> terms;
            int n = nterms(rng);
            for (int k = 0; k < n; ++k) {
                Rational c = unit(rng) * (sign(rng) ? 1 : -1);
                int e = pw(rng);
                for (int r = 0; r < std::abs(e); ++r) c = e > 0 ? Rational(c * ctx->p()) : Rational(c / ctx->p());
                long ex = expo(rng);
                auto it = terms.find(ex);
                KElem v = KElem::from_rational(ctx, c);
                if (it == terms.end())
                    terms.emplace(ex, v);
                else
                    it->second = it->second + v;
            }
            u(i, j) = LaurentPoly::from_terms(ctx, terms);
        }
    return u;
}

void criterion7(Outcome& o) {
    std::mt19937 rng(20240607);
    auto ctx = make_ctx(5, 60);
    Annulus ann(0, 2);
    std::uniform_int_distribution<int> size(1, 3), tq(1, 7);
    std::vector<MatLaurent> us;
    while (us.size() < 20) {
        MatLaurent u = random_matrix(ctx, static_cast<std::size_t>(size(rng)), rng);
        if (!det(u).trimmed().is_exact_zero()) us.push_back(u);
    }
    int n = 0;
    for (std::size_t i = 0; i < us.size(); ++i) {
        const MatLaurent& u = us[i];
        Rational t = frac(tq(rng), 4);
        std::string tag = "instance " + std::to_string(i);
        long disk = gen_index_function(u, IndexSide::Disk, t, ann).value;
        long outer = gen_index_function(u, IndexSide::Outer, t, ann).value;
        o.require(disk + outer == annulus_index_function(u, ann), tag + ": splitting fails");
        LaurentPoly d = det(u).trimmed();
        long low = d.lo(), in_disk = 0, inside = 0;
        for (const auto& [r, m] : root_valuations(d)) {
            if (r >= ann.lo) in_disk += m;
            if (r > ann.hi) inside += m;
        }
        o.require(disk == -(low + in_disk), tag + ": disk " + std::to_string(disk) + " != oracle " +
                                                std::to_string(-(low + in_disk)));
        o.require(outer == low + inside, tag + ": outer " + std::to_string(outer) + " != oracle " +
                                               std::to_string(low + inside));
        // Pair with a fresh matrix of the same size for multiplicativity.
        MatLaurent v = random_matrix(ctx, u.rows(), rng);
        if (det(v).trimmed().is_exact_zero()) continue;
        for (IndexSide s : {IndexSide::Disk, IndexSide::Outer}) {
            long uv = gen_index_function(u * v, s, t, ann).value;
            long sum = gen_index_function(u, s, t, ann).value + gen_index_function(v, s, t, ann).value;
            o.require(uv == sum, tag + ": " + side_name(s) + " index not multiplicative");
        }
        ++n;
    }
    o.detail << (o.pass ? "" : "; ") << us.size() << " matrices, " << n << " products";
}

void criterion8(Outcome& o) {
    for (long p : {5, 7})
        for (long q : {2L, 3L, p}) {
            auto ctx = make_ctx(p, 60);
            DiffModule M = rank_one(ctx, "pi", -2, Annulus(0, 2));
            std::vector<Rational> ts{Rational(frac(2, 3) / q), Rational(frac(1, 2) / q), Rational(frac(1, 3) / q)};
            auto rel = radius_relation_checks(M, q, ts, p * p * p);
            std::string tag = "p=" + std::to_string(p) + " q=" + std::to_string(q);
            for (const auto& r : rel)
                o.require(r.status == CheckStatus::Pass,
                          tag + " t=" + to_string(r.t) + ": " + status_name(r.status) + " (" + to_string(r.lhs) + " vs " + to_string(r.rhs) + ")");
            if (q == p) continue;
            // Slopes of rho_val - t on both sides, from the same samples.
            auto slope = [](const Rational& t0, const Rational& v0, const Rational& t1, const Rational& v1) {
                return Rational(((v0 - t0) - (v1 - t1)) / (t0 - t1));
            };
            Rational bq = slope(ts[1], rel[1].lhs, ts[2], rel[2].lhs);
            Rational b = slope(q * ts[1], rel[1].rhs + (q - 1) * ts[1], q * ts[2], rel[2].rhs + (q - 1) * ts[2]);
            o.require(bq == q * b, tag + ": pullback slope " + to_string(bq) + " != q * " + to_string(b));
        }
    o.detail << (o.pass ? "" : "; ") << "radius equality for q in {2,3}, inequality for q = p, slopes scale by q";
}

PLFun concave_profile(std::mt19937& rng, const TInterval& I) {
    std::uniform_int_distribution<int> n(1, 3), slope(-3, 3), icpt(-4, 8);
    std::vector<Line> lines;
    for (int i = n(rng); i > 0; --i) lines.push_back(Line{frac(icpt(rng), 2), slope(rng)});
    return lower_envelope(lines, I);
}

PLFun convex_bound(std::mt19937& rng, const TInterval& I) {
    return plf_scale(concave_profile(rng, I), -1);
}

void criterion9(Outcome& o) {
    TInterval I(0, 4);
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> nsz(1, 6);
    int families = 0, tried = 0, multi = 0;
    while (families < 50) {
        ++tried;
        std::vector<std::optional<PLFun>> P;
        for (int i = nsz(rng); i > 0; --i) P.push_back(concave_profile(rng, I));
        PLFun c = convex_bound(rng, I);
        std::optional<PLFun> env;
        for (const auto& f : P) env = env ? plf_combine(PLOp::Min, *env, *f) : *f;
        if (!plf_leq_on(*env, c, I).holds) continue;
        ++families;
        SelectionResult r = select_combination(P, c, I);
        SelectionResult again = select_combination(P, c, I);
        auto replay = replay_certificate(r, P, c, I);
        std::string tag = "family " + std::to_string(families);
        o.require(replay.holds, tag + ": certificate fails at t=" + (replay.witness ? to_string(*replay.witness) : "?"));
        o.require(r.lambdas == again.lambdas, tag + ": not deterministic");
        o.require(r.depth <= static_cast<int>(P.size()), tag + ": depth " + std::to_string(r.depth));
        if (std::count(r.lambdas.begin(), r.lambdas.end(), 1) > 1) ++multi;
    }
    // Base cases: n = 1, and the three n = 2 outcomes of the interval logic.
    TInterval J(0, 1);
    PLFun c = PLFun::constant(frac(1, 2), J);
    PLFun x = PLFun::line(0, 1, J), px = PLFun::line(1, -1, J), low = PLFun::constant(0, J), high = PLFun::constant(1, J);
    o.require(select_combination(std::vector<PLFun>{low}, c, J).lambdas == std::vector<int>{1}, "n=1 base case");
    o.require(select_combination(std::vector<PLFun>{x, px}, c, J).lambdas == std::vector<int>{1, 1}, "n=2 crossing");
    o.require(select_combination(std::vector<PLFun>{low, high}, c, J).lambdas == std::vector<int>{1, 0}, "n=2 first covers");
    o.require(select_combination(std::vector<PLFun>{high, low}, c, J).lambdas == std::vector<int>{0, 1}, "n=2 last covers");
    bool threw = false;
    try {
        TInterval W(0, 2);
        select_combination(std::vector<PLFun>{PLFun::constant(1, W), PLFun::line(0, 1, W)}, PLFun::constant(frac(3, 4), W), W);
    } catch (const DomainError&) {
        threw = true;
    }
    o.require(threw, "violated precondition not reported");
    o.detail << (o.pass ? "" : "; ") << families << " families (" << tried << " drawn), " << multi
             << " needing more than one matrix";
}

void criterion10(Outcome& o) {
    auto ctx = make_ctx(3, 60);
    std::vector<Rational> ts{frac(1, 2), frac(1, 4), frac(1, 8)};
    for (long alpha : {0, 1, 2}) {
        DiffModule M = rank_one(ctx, std::to_string(alpha), -1, Annulus(0, 1));
        std::string tag = "alpha=" + std::to_string(alpha);
        for (const auto& r : radius_estimates(M, ts, 27))
            o.require(r.rho_val == r.t && !r.lower_bound_only, tag + ": rho_val " + to_string(r.rho_val) + " at t=" + to_string(r.t));
        SlopeFit fit = largest_slope(M, ts, 27);
        o.require(fit.beta == 0, tag + ": slope " + to_string(fit.beta));
        IndexPair ip = module_index(M, ts, 27);
        o.require(ip.disk.value == 0 && ip.outer.value == 0, tag + ": index not zero");
    }
    o.detail << (o.pass ? "" : "; ") << "R = rho at t in {1/2, 1/4, 1/8}, slope 0, index 0";
}

void criterion11(Outcome& o) {
    auto ctx = make_ctx(5, 60);
    for (long d : {1, 2, 3}) {
        long local = module_index_dominated(rank_one(ctx, "pi", -(d + 1), Annulus(0, 1)), 1).disk.value;
        EulerPoincare ep = euler_poincare(1, 0, {{"0", local}, {"inf", 0}});
        o.require(ep.value == -d, "d=" + std::to_string(d) + ": chi = " + std::to_string(ep.value));
    }
    o.require(euler_poincare(2, 0, {{"0", 1}}).value == -1, "rank-2 slope-1/2 assembly");
    o.detail << (o.pass ? "" : "; ") << "chi = -d for d in {1,2,3}";
}

struct Criterion {
    int id;
    const char* title;
    double budget;
    void (*run)(Outcome&);
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "alpha_{k,s} valuation bounds", 10, criterion1},
        {2, "estimator vs Young's formula", 60, criterion2},
        {3, "slope 1/2 of the rank-2 p=5 operator", 300, criterion3},
        {4, "series solution with p=7", 60, criterion4},
        {5, "lower bound for x^{p^h} Delta^{p^h}", 60, criterion5},
        {6, "index triangle for rank-1 slope-d modules", 10, criterion6},
        {7, "function index suite", 30, criterion7},
        {8, "Frobenius pullback radius relations", 60, criterion8},
        {9, "selection certificates", 30, criterion9},
        {10, "Robba modules", 5, criterion10},
        {11, "Euler-Poincare assembly", 1, criterion11},
    };
    return all;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::vector<int>& only) {
    std::vector<CriterionResult> out;
    for (const auto& c : criteria()) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        CriterionResult r;
        r.id = c.id;
        r.title = c.title;
        r.budget = c.budget;
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("error: ") + e.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (r.seconds > r.budget) o.require(false, "over the time budget");
        r.pass = o.pass;
        r.detail = o.detail.str();
        out.push_back(std::move(r));
    }
    return out;
}

std::string format_line(const CriterionResult& r) {
    std::ostringstream s;
    s << "criterion " << r.id << " " << (r.pass ? "PASS" : "FAIL") << " [" << r.title << "] ";
    s.setf(std::ios::fixed);
    s.precision(2);
    s << r.seconds << "s/" << r.budget << "s: " << r.detail;
    return s.str();
}

}  // namespace pslopes
