#include "pslopes/jobs.hpp"

#include "pslopes/acceptance.hpp"
#include "pslopes/frobenius.hpp"
#include "pslopes/index.hpp"

#include <numeric>
#include <sstream>

namespace pslopes {

namespace {

const DiffModule& need_module(const JobSpec& job) {
    if (!job.module) {
        if (job.op) throw DomainError("operator has no companion module (leading coefficient must be a monomial)");
        throw SpecError("this command needs an 'operator' or 'module'");
    }
    return *job.module;
}

const std::vector<Rational>& need_ts(const JobSpec& job, std::size_t n) {
    if (job.ts.size() < n)
        throw SpecError("this command needs at least " + std::to_string(n) + " t-sample(s) (--t or params.t)");
    return job.ts;
}

ojson rational_list(const std::vector<Rational>& v) {
    ojson a = ojson::array();
    for (const auto& q : v) a.push_back(rstr(q));
    return a;
}

ojson radius_json(const RadiusReport& r) {
    ojson j{{"t", rstr(r.t)},
            {"rho_val", rstr(r.rho_val)},
            {"method", r.method},
            {"converged", r.converged},
            {"lower_bound_only", r.lower_bound_only},
            {"K_max", r.K_max},
            {"tail_max", rstr(r.tail_max)}};
    ojson pp = ojson::array();
    for (const auto& v : r.ppowers) {
        ojson e{{"k", v.k}, {"raw", rstr(v.raw)}, {"normalized", rstr(v.normalized)}};
        e["difference"] = v.difference ? ojson(rstr(*v.difference)) : ojson(nullptr);
        pp.push_back(e);
    }
    j["p_powers"] = pp;
    return j;
}

ojson index_json(const IndexReport& r) {
    return ojson{{"side", side_name(r.side)},
                 {"value", r.value},
                 {"method", r.method},
                 {"hypotheses", r.hypotheses},
                 {"provenance", r.provenance}};
}

ojson polygon_json(const NewtonPolygon& np) {
    ojson parts = ojson::array(), verts = ojson::array();
    for (const auto& part : np.parts) parts.push_back(ojson::array({rstr(part.slope), part.multiplicity}));
    for (const auto& [x, y] : np.vertices()) verts.push_back(ojson::array({rstr(x), rstr(y)}));
    auto integ = check_vertex_integrality(np);
    ojson j{{"parts", parts}, {"vertices", verts}, {"height", rstr(np.height())}, {"integral", integ.integral}};
    if (integ.offending)
        j["offending_vertex"] = ojson::array({rstr(integ.offending->first), rstr(integ.offending->second)});
    return j;
}

// Polygon from the spec, or a pure polygon from the measured largest slope.
std::pair<NewtonPolygon, ojson> polygon_for(const JobSpec& job) {
    if (job.polygon) return {*job.polygon, ojson{{"source", "spec"}}};
    const DiffModule& M = need_module(job);
    SlopeFit fit = largest_slope(M, need_ts(job, 3), job.kmax);
    ojson src{{"source", "measured"},
              {"assumption", "pure slope"},
              {"beta", rstr(fit.beta)},
              {"raw", rstr(fit.raw)},
              {"converged", fit.converged}};
    return {newton_polygon({NewtonPart{fit.beta, static_cast<long>(M.rank())}}), src};
}

void norms(const JobSpec& job, JobOutput& out, std::ostringstream& txt) {
    ojson& r = out.report;
    if (job.op) {
        PLFun W = operator_profile(*job.op, job.gamma, job.ann);
        r["object"] = "operator";
        r["gamma"] = rstr(job.gamma);
        r["profile"] = plf_to_json(W);
        ojson vals = ojson::array();
        for (const auto& t : job.ts) vals.push_back(ojson{{"t", rstr(t)}, {"W", rstr(W.eval(t))}});
        r["values"] = vals;
        txt << "W(P, " << rstr(job.gamma) << ", t) on [" << rstr(job.ann.lo) << ", " << rstr(job.ann.hi) << "]:\n";
        for (const auto& s : W.segments())
            txt << "  [" << rstr(s.t0) << ", " << rstr(s.t1) << "]  " << rstr(s.intercept) << " + " << rstr(s.slope) << " t\n";
    } else {
        const DiffModule& M = need_module(job);
        auto prof = matrix_profile(M.G, job.ann);
        r["object"] = "module";
        r["profile"] = prof ? plf_to_json(*prof) : ojson(nullptr);
        txt << "|G| profile: " << (prof ? "" : "zero matrix") << "\n";
        if (prof)
            for (const auto& s : prof->segments())
                txt << "  [" << rstr(s.t0) << ", " << rstr(s.t1) << "]  " << rstr(s.intercept) << " + " << rstr(s.slope) << " t\n";
    }
}

void radius(const JobSpec& job, JobOutput& out, std::ostringstream& txt) {
    const DiffModule& M = need_module(job);
    auto reps = radius_estimates(M, need_ts(job, 1), job.kmax);
    ojson arr = ojson::array();
    out.csv.push_back({"t", "rho_val", "converged", "lower_bound_only"});
    bool inconclusive = false;
    for (const auto& r : reps) {
        ojson j = radius_json(r);
        if (job.op && job.op->form != OpForm::Delta) {
            try {
                YoungResult y = young_radius(to_form(*job.op, OpForm::Theta), r.t);
                j["young"] = ojson{{"rho_val", rstr(y.rho_val)}, {"valid", y.valid}};
            } catch (const DomainError&) {
            }
        }
        arr.push_back(j);
        out.csv.push_back({rstr(r.t), rstr(r.rho_val), r.converged ? "1" : "0", r.lower_bound_only ? "1" : "0"});
        txt << "t=" << rstr(r.t) << "  rho_val=" << rstr(r.rho_val) << "  " << r.method << "\n";
        inconclusive = inconclusive || !r.converged;
    }
    out.report["samples"] = arr;
    out.report["inconclusive"] = inconclusive;
}

void soluble(const JobSpec& job, JobOutput& out, std::ostringstream& txt) {
    SolubilityReport s = is_soluble(need_module(job), need_ts(job, 2), job.kmax, job.t_boundary);
    out.report["soluble"] = s.soluble;
    out.report["conclusive"] = s.conclusive;
    out.report["inconclusive"] = !s.conclusive;
    out.report["t"] = rational_list(s.ts);
    out.report["gaps"] = rational_list(s.gaps);
    out.report["intercept"] = rstr(s.intercept);
    out.report["reason"] = s.reason;
    txt << (s.soluble ? "soluble" : "not soluble") << (s.conclusive ? "" : " (inconclusive)") << ": " << s.reason << "\n";
}

void slope(const JobSpec& job, JobOutput& out, std::ostringstream& txt) {
    SlopeFit f = largest_slope(need_module(job), need_ts(job, 3), job.kmax);
    ojson& r = out.report;
    r["beta"] = rstr(f.beta);
    r["raw"] = rstr(f.raw);
    r["previous"] = rstr(f.previous);
    r["snapped"] = f.snapped;
    r["exact"] = f.exact;
    r["converged"] = f.converged;
    r["inconclusive"] = !f.converged;
    r["tolerance"] = rstr(f.tolerance);
    r["method"] = "difference quotient of rho_val - t toward the boundary";
    ojson arr = ojson::array();
    out.csv.push_back({"t", "rho_val", "converged", "lower_bound_only"});
    for (const auto& s : f.samples) {
        arr.push_back(radius_json(s));
        out.csv.push_back({rstr(s.t), rstr(s.rho_val), s.converged ? "1" : "0", s.lower_bound_only ? "1" : "0"});
    }
    r["samples"] = arr;
    txt << "beta=" << rstr(f.beta) << " raw=" << rstr(f.raw) << (f.snapped ? " (snapped)" : "")
        << (f.converged ? "" : " (inconclusive)") << "\n";
}

void newton(const JobSpec& job, JobOutput& out, std::ostringstream& txt) {
    auto [np, src] = polygon_for(job);
    out.report["polygon"] = polygon_json(np);
    out.report["polygon_source"] = src;
    out.report["irregularity"] = rstr(irregularity(np));
    auto integ = check_vertex_integrality(np);
    if (!integ.integral) out.exit_code = 1;
    txt << "vertices:";
    for (const auto& [x, y] : np.vertices()) txt << " (" << rstr(x) << ", " << rstr(y) << ")";
    txt << "\nirregularity " << rstr(irregularity(np)) << (integ.integral ? "" : "; vertex not integral") << "\n";
}

void irr(const JobSpec& job, JobOutput& out, std::ostringstream& txt) {
    auto [np, src] = polygon_for(job);
    out.report["polygon_source"] = src;
    try {
        IndexPair ip = module_index(np);
        out.report["irregularity"] = ip.disk.value;
        out.report["index"] = ojson{index_json(ip.disk), index_json(ip.outer)};
        txt << "irregularity " << ip.disk.value << "\n";
    } catch (const DomainError& e) {
        out.report["irregularity"] = nullptr;
        out.report["error"] = e.what();
        out.exit_code = 1;
        txt << e.what() << "\n";
    }
}

void index(const JobSpec& job, JobOutput& out, std::ostringstream& txt) {
    ojson arr = ojson::array();
    for (const auto& t : need_ts(job, 1)) {
        IndexPair ip = job.op ? gen_index_dominated(*job.op, t) : module_index_dominated(need_module(job), t);
        arr.push_back(ojson{{"t", rstr(t)}, {"disk", index_json(ip.disk)}, {"outer", index_json(ip.outer)},
                            {"annulus", ip.annulus()}});
        txt << "t=" << rstr(t) << "  disk " << ip.disk.value << "  outer " << ip.outer.value << "  (dominated)\n";
    }
    out.report["dominated"] = arr;
    if (job.polygon) {
        IndexPair ip = module_index(*job.polygon);
        out.report["slope_formula"] = ojson{index_json(ip.disk), index_json(ip.outer)};
        txt << "slope formula: disk " << ip.disk.value << "  outer " << ip.outer.value << "\n";
    }
}

void frobenius(const JobSpec& job, JobOutput& out, std::ostringstream& txt) {
    const DiffModule& M = need_module(job);
    if (!job.q) throw SpecError("frobenius needs --q");
    long q = *job.q, p = M.ctx->p();
    out.report["q"] = q;
    CheckStatus status;
    if (std::gcd(q, p) == 1) {
        auto rel = radius_relation_checks(M, q, need_ts(job, 1), job.kmax);
        ojson arr = ojson::array();
        status = CheckStatus::Pass;
        for (const auto& r : rel) {
            arr.push_back(ojson{{"t", rstr(r.t)}, {"pullback_rho_val", rstr(r.lhs)}, {"bound", rstr(r.rhs)},
                                {"equality_required", r.equality_required}, {"status", status_name(r.status)}});
            if (r.status == CheckStatus::Fail) status = CheckStatus::Fail;
            if (r.status == CheckStatus::Inconclusive && status == CheckStatus::Pass) status = CheckStatus::Inconclusive;
            txt << "t=" << rstr(r.t) << "  " << rstr(r.lhs) << " vs " << rstr(r.rhs) << "  " << status_name(r.status) << "\n";
        }
        out.report["mode"] = "radius_relation";
        out.report["samples"] = arr;
    } else {
        std::optional<MatLaurent> H;
        if (job.mode == "intertwiner") {
            if (!job.intertwiner) throw SpecError("intertwiner mode needs params.intertwiner");
            H = job.intertwiner;
        }
        FrobeniusReport fr = frobenius_solubility_check(M, q, need_ts(job, 1), job.kmax, H);
        ojson arr = ojson::array();
        for (const auto& s : fr.samples) {
            arr.push_back(ojson{{"t", rstr(s.t)}, {"rho_val", rstr(s.lhs)}, {"bound", rstr(s.rhs)},
                                {"status", status_name(s.status)}});
            txt << "t=" << rstr(s.t) << "  " << rstr(s.lhs) << " <= " << rstr(s.rhs) << "  " << status_name(s.status) << "\n";
        }
        out.report["mode"] = fr.mode;
        out.report["intertwiner_verified"] = fr.intertwiner_verified;
        out.report["samples"] = arr;
        out.report["solubility_evidence"] = fr.solubility_evidence;
        status = fr.status;
    }
    out.report["status"] = status_name(status);
    out.report["inconclusive"] = status == CheckStatus::Inconclusive;
    if (status == CheckStatus::Fail) out.exit_code = 1;
}

ojson selection_json(const SelectionResult& r) {
    ojson cert = ojson::array();
    for (const auto& c : r.certificate)
        cert.push_back(ojson{{"t0", rstr(c.t0)}, {"t1", rstr(c.t1)}, {"index", c.index}});
    return ojson{{"lambdas", r.lambdas}, {"depth", r.depth}, {"combined", plf_to_json(r.combined)}, {"certificate", cert}};
}

void select(const JobSpec& job, JobOutput& out, std::ostringstream& txt) {
    if (job.select) {
        const auto& s = *job.select;
        SelectionResult r = select_combination(s.profiles, s.c, s.interval);
        auto replay = replay_certificate(r, s.profiles, s.c, s.interval);
        out.report["selection"] = selection_json(r);
        out.report["replay"] = replay.holds;
        if (!replay.holds) out.exit_code = 1;
        txt << "lambda =";
        for (int l : r.lambdas) txt << " " << l;
        txt << (replay.holds ? "  certificate replays" : "  certificate FAILS") << "\n";
        return;
    }
    const DiffModule& M = need_module(job);
    if (!job.h || !job.beta) throw SpecError("select on a module needs params.h and params.beta");
    LhResult L = build_Lh(M, *job.h, *job.beta, job.ann, job.t_boundary);
    const LhReport& b = L.report;
    out.report["selection"] = selection_json(b.selection);
    out.report["C"] = rstr(b.C);
    out.report["M_val"] = rstr(b.M_val);
    out.report["actual_profile"] = b.actual ? plf_to_json(*b.actual) : ojson(nullptr);
    out.report["lower_holds"] = b.lower_holds;
    out.report["upper_holds"] = b.upper_holds;
    out.report["cancellation"] = b.cancellation;
    if (!b.lower_holds || !b.upper_holds) out.exit_code = 1;
    txt << "lambda =";
    for (int l : b.selection.lambdas) txt << " " << l;
    txt << "\nC=" << rstr(b.C) << " M=" << rstr(b.M_val) << " lower " << (b.lower_holds ? "holds" : "fails") << ", upper "
        << (b.upper_holds ? "holds" : "fails") << "\n";
}

}  // namespace

const std::vector<std::string>& job_commands() {
    static const std::vector<std::string> c{"norms", "radius", "soluble", "slope", "newton",
                                            "irr",   "index",  "frobenius", "select", "selftest"};
    return c;
}

JobOutput run_job(const std::string& command, const JobSpec& job) {
    JobOutput out;
    std::ostringstream txt;
    out.report["command"] = command;
    if (job.ctx) {
        out.report["p"] = job.ctx->p();
        out.report["precision"] = job.ctx->precision();
        out.report["K_max"] = job.kmax;
    }
    if (command == "norms")
        norms(job, out, txt);
    else if (command == "radius")
        radius(job, out, txt);
    else if (command == "soluble")
        soluble(job, out, txt);
    else if (command == "slope")
        slope(job, out, txt);
    else if (command == "newton")
        newton(job, out, txt);
    else if (command == "irr")
        irr(job, out, txt);
    else if (command == "index")
        index(job, out, txt);
    else if (command == "frobenius")
        frobenius(job, out, txt);
    else if (command == "select")
        select(job, out, txt);
    else if (command == "selftest") {
        ojson arr = ojson::array();
        for (const auto& r : run_acceptance()) {
            arr.push_back(ojson{{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
            txt << format_line(r) << "\n";
            if (!r.pass) out.exit_code = 1;
        }
        out.report["criteria"] = arr;
    } else
        throw SpecError("unknown command '" + command + "'");
    out.text = txt.str();
    return out;
}

}  // namespace pslopes
