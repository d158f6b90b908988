#include "pslopes/spec_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace pslopes {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw SpecError("at " + where + ": " + what);
}

void only_keys(const ojson& j, const std::string& where, const std::set<std::string>& allowed) {
    if (!j.is_object()) bad(where, "expected an object");
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k)) bad(where, "unknown field '" + k + "'");
}

Rational rational_at(const ojson& j, const std::string& where) {
    if (j.is_number_float()) bad(where, "float literal " + j.dump() + " is not exact (use 1/2)");
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) bad(where, "expected a rational string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const SpecError& e) {
        bad(where, e.what());
    }
}

long integer_at(const ojson& j, const std::string& where) {
    if (j.is_number_float()) bad(where, "expected an integer, got " + j.dump());
    if (j.is_number_integer()) return j.get<long>();
    Rational q = rational_at(j, where);
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) bad(where, "expected an integer");
    return q.get_num().get_si();
}

std::vector<Rational> rationals_at(const ojson& j, const std::string& where) {
    if (!j.is_array()) bad(where, "expected an array");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_at(j[i], where + "/" + std::to_string(i)));
    return out;
}

TInterval interval_at(const ojson& j, const std::string& where) {
    auto v = rationals_at(j, where);
    if (v.size() != 2) bad(where, "expected [t_lo, t_hi]");
    if (v[1] < v[0]) bad(where, "empty interval");
    return TInterval(v[0], v[1]);
}

MatLaurent matrix_at(const ojson& j, const Ctx& ctx, long rank, const std::string& where) {
    if (!j.is_array() || static_cast<long>(j.size()) != rank) bad(where, "expected " + std::to_string(rank) + " rows");
    MatLaurent G(ctx, static_cast<std::size_t>(rank), static_cast<std::size_t>(rank));
    for (long i = 0; i < rank; ++i) {
        const auto& row = j[static_cast<std::size_t>(i)];
        std::string wr = where + "/" + std::to_string(i);
        if (!row.is_array() || static_cast<long>(row.size()) != rank)
            bad(wr, "expected " + std::to_string(rank) + " entries");
        for (long k = 0; k < rank; ++k)
            G(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) =
                laurent_from_json(row[static_cast<std::size_t>(k)], ctx, wr + "/" + std::to_string(k));
    }
    return G;
}

std::string read_text(const std::string& text_or_path) {
    auto first = text_or_path.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text_or_path[first] == '{') return text_or_path;
    std::ifstream in(text_or_path);
    if (!in) throw SpecError("cannot open spec file '" + text_or_path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

LaurentPoly laurent_from_json(const ojson& j, const Ctx& ctx, const std::string& where) {
    if (!j.is_array()) bad(where, "expected a list of [exponent, coefficient]");
    std::map<long, KElem> terms;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string w = where + "/" + std::to_string(i);
        const auto& t = j[i];
        if (!t.is_array() || t.size() != 2) bad(w, "expected [exponent, coefficient]");
        long e = integer_at(t[0], w + "/0");
        if (!t[1].is_string()) bad(w + "/1", "coefficient must be a string such as \"1/3*pi^2\"");
        KElem c(ctx);
        try {
            c = parse_kelem(t[1].get<std::string>(), ctx);
        } catch (const SpecError& err) {
            bad(w + "/1", err.what());
        }
        auto it = terms.find(e);
        if (it == terms.end())
            terms.emplace(e, c);
        else
            it->second = it->second + c;
    }
    return LaurentPoly::from_terms(ctx, terms);
}

ojson laurent_to_json(const LaurentPoly& f) {
    ojson out = ojson::array();
    for (long e = f.lo(); e <= f.hi(); ++e) {
        KElem c = f.coeff(e);
        if (!c.is_exact_zero()) out.push_back(ojson::array({e, c.str()}));
    }
    return out;
}

ojson plf_to_json(const PLFun& f) {
    ojson segs = ojson::array();
    for (const auto& s : f.segments())
        segs.push_back(ojson{{"t0", rstr(s.t0)}, {"t1", rstr(s.t1)}, {"slope", rstr(s.slope)},
                             {"intercept", rstr(s.intercept)}});
    return segs;
}

PLFun plf_from_points(const ojson& j, const std::string& where) {
    if (!j.is_array() || j.empty()) bad(where, "expected [[t, v], ...]");
    std::vector<std::pair<Rational, Rational>> pts;
    for (std::size_t i = 0; i < j.size(); ++i) {
        auto v = rationals_at(j[i], where + "/" + std::to_string(i));
        if (v.size() != 2) bad(where + "/" + std::to_string(i), "expected [t, v]");
        if (!pts.empty() && !(pts.back().first < v[0])) bad(where, "t must increase");
        pts.emplace_back(v[0], v[1]);
    }
    if (pts.size() == 1) return PLFun::constant(pts[0].second, TInterval(pts[0].first, pts[0].first));
    std::vector<Segment> segs;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const auto& [a, fa] = pts[i];
        const auto& [b, fb] = pts[i + 1];
        Rational slope = (fb - fa) / (b - a);
        segs.push_back(Segment{a, b, slope, fa - slope * a});
    }
    return PLFun(TInterval(pts.front().first, pts.back().first), std::move(segs));
}

JobSpec parse_spec(const std::string& text_or_path, std::optional<long> precision_override) {
    ojson j;
    try {
        j = ojson::parse(read_text(text_or_path));
    } catch (const ojson::parse_error& e) {
        throw SpecError(std::string("malformed JSON: ") + e.what());
    }
    only_keys(j, "/", {"ctx", "annulus", "operator", "module", "params", "polygon", "select"});
    if (!j.contains("ctx")) bad("/", "missing 'ctx'");
    only_keys(j["ctx"], "/ctx", {"p", "precision"});
    if (!j["ctx"].contains("p")) bad("/ctx", "missing 'p'");
    long p = integer_at(j["ctx"]["p"], "/ctx/p");
    if (!is_prime(p)) bad("/ctx/p", std::to_string(p) + " is not prime");
    long N = j["ctx"].contains("precision") ? integer_at(j["ctx"]["precision"], "/ctx/precision") : 60;
    if (precision_override) N = *precision_override;
    if (N < 1) bad("/ctx/precision", "precision must be positive");

    JobSpec job;
    job.ctx = make_ctx(p, N);
    if (j.contains("annulus")) job.ann = interval_at(j["annulus"], "/annulus");

    if (j.contains("operator") && j.contains("module")) bad("/", "give either 'operator' or 'module'");
    if (j.contains("operator")) {
        const auto& o = j["operator"];
        only_keys(o, "/operator", {"form", "terms"});
        DiffOp P{job.ctx, OpForm::Delta, {}};
        try {
            P.form = parse_form(o.value("form", "delta"));
        } catch (const SpecError& e) {
            bad("/operator/form", e.what());
        }
        if (!o.contains("terms") || !o["terms"].is_array()) bad("/operator", "missing 'terms'");
        for (std::size_t i = 0; i < o["terms"].size(); ++i) {
            std::string w = "/operator/terms/" + std::to_string(i);
            const auto& t = o["terms"][i];
            if (!t.is_array() || t.size() != 2) bad(w, "expected [order, laurent]");
            long k = integer_at(t[0], w + "/0");
            if (k < 0) bad(w + "/0", "negative order");
            LaurentPoly c = laurent_from_json(t[1], job.ctx, w + "/1");
            if (P.terms.count(k)) bad(w, "order " + std::to_string(k) + " given twice");
            P.terms.emplace(k, c);
        }
        job.op = P;
        try {
            job.module = companion_module(P, job.ann);
        } catch (const DomainError&) {
            // Norms and dominated indices do not need the module.
        }
    }
    if (j.contains("module")) {
        const auto& m = j["module"];
        only_keys(m, "/module", {"rank", "connection", "convention"});
        long rank = integer_at(m.value("rank", ojson(0)), "/module/rank");
        if (rank < 1) bad("/module/rank", "rank must be >= 1");
        if (!m.contains("connection")) bad("/module", "missing 'connection'");
        MatLaurent G = matrix_at(m["connection"], job.ctx, rank, "/module/connection");
        std::string conv = m.value("convention", "dx");
        if (conv == "dx")
            job.module = DiffModule{job.ctx, G, job.ann};
        else if (conv == "theta")
            job.module = DiffModule::from_theta(G, job.ann);
        else
            bad("/module/convention", "expected dx or theta");
    }

    job.kmax = p * p * p;
    if (j.contains("params")) {
        const auto& q = j["params"];
        only_keys(q, "/params",
                  {"t", "kmax", "q", "h", "gamma", "beta", "t_boundary", "mode", "intertwiner"});
        if (q.contains("t")) job.ts = rationals_at(q["t"], "/params/t");
        if (q.contains("kmax")) job.kmax = integer_at(q["kmax"], "/params/kmax");
        if (q.contains("q")) job.q = integer_at(q["q"], "/params/q");
        if (q.contains("h")) job.h = integer_at(q["h"], "/params/h");
        if (q.contains("gamma")) job.gamma = rational_at(q["gamma"], "/params/gamma");
        if (q.contains("beta")) job.beta = rational_at(q["beta"], "/params/beta");
        if (q.contains("t_boundary")) job.t_boundary = rational_at(q["t_boundary"], "/params/t_boundary");
        if (q.contains("mode")) {
            job.mode = q["mode"].get<std::string>();
            if (job.mode != "inequality" && job.mode != "intertwiner")
                bad("/params/mode", "expected inequality or intertwiner");
        }
        if (q.contains("intertwiner")) {
            if (!job.module) bad("/params/intertwiner", "needs a module");
            job.intertwiner =
                matrix_at(q["intertwiner"], job.ctx, static_cast<long>(job.module->rank()), "/params/intertwiner");
        }
    }
    for (std::size_t i = 0; i < job.ts.size(); ++i)
        if (!job.ann.contains(job.ts[i]))
            bad("/params/t/" + std::to_string(i), "t = " + rstr(job.ts[i]) + " outside the annulus");

    if (j.contains("polygon")) {
        const auto& g = j["polygon"];
        if (!g.is_array()) bad("/polygon", "expected [[slope, multiplicity], ...]");
        std::vector<NewtonPart> parts;
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::string w = "/polygon/" + std::to_string(i);
            if (!g[i].is_array() || g[i].size() != 2) bad(w, "expected [slope, multiplicity]");
            parts.push_back(NewtonPart{rational_at(g[i][0], w + "/0"), integer_at(g[i][1], w + "/1")});
        }
        try {
            job.polygon = newton_polygon(parts);
        } catch (const DomainError& e) {
            bad("/polygon", e.what());
        }
    }

    if (j.contains("select")) {
        const auto& s = j["select"];
        only_keys(s, "/select", {"interval", "profiles", "c"});
        if (!s.contains("interval") || !s.contains("profiles") || !s.contains("c"))
            bad("/select", "needs interval, profiles and c");
        SelectSpec sel{interval_at(s["interval"], "/select/interval"), {}, plf_from_points(s["c"], "/select/c")};
        if (!s["profiles"].is_array()) bad("/select/profiles", "expected an array");
        for (std::size_t i = 0; i < s["profiles"].size(); ++i) {
            const auto& f = s["profiles"][i];
            if (f.is_null())
                sel.profiles.push_back(std::nullopt);
            else
                sel.profiles.push_back(plf_from_points(f, "/select/profiles/" + std::to_string(i)));
        }
        job.select = std::move(sel);
    }
    return job;
}

}  // namespace pslopes
