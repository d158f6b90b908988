#include "pslopes/index.hpp"

namespace pslopes {

std::string side_name(IndexSide s) {
    return s == IndexSide::Disk ? "disk" : "outer";
}

namespace {

LaurentPoly nonsingular_det(const MatLaurent& u) {
    if (u.rows() != u.cols()) throw DomainError("index of a non-square matrix");
    LaurentPoly d = det(u).trimmed();
    if (d.is_exact_zero() || d.is_zero_at_prec()) throw PrecisionError("singular at precision");
    return d;
}

}  // namespace

IndexReport gen_index_function(const MatLaurent& u, IndexSide side, const Rational& t, const Annulus& ann) {
    LaurentPoly d = nonsingular_det(u);
    IndexReport r;
    r.side = side;
    r.method = "function_ord";
    r.hypotheses.push_back("det(u) nonzero at precision");
    if (side == IndexSide::Disk) {
        r.value = -gen_ord(d, Side::Plus, t, ann);
        r.provenance.push_back("-ord+ of det(u) at t = " + to_string(t));
    } else {
        r.value = gen_ord(d, Side::Minus, t, ann);
        r.provenance.push_back("ord- of det(u) at t = " + to_string(t));
    }
    return r;
}

long annulus_index_function(const MatLaurent& u, const Annulus& ann) {
    return -count_zeros(nonsingular_det(u), ann.lo, ann.hi);
}

IndexPair gen_index_dominated(const DiffOp& P, const Rational& t) {
    DiffOp D = to_form(P, OpForm::Delta);
    if (!D.terms.count(0)) throw DomainError("hypothesis not satisfied: no order-zero term");
    LaurentPoly a = D.terms.at(0).trimmed();
    Annulus pt(t, t);
    if (a.is_exact_zero()) throw DomainError("hypothesis not satisfied: order-zero term vanishes");
    Rational wa = gauss_profile(a, pt).eval(t);
    DiffOp P0 = D;
    P0.terms.erase(0);
    std::string wp = "inf";
    bool nonzero = false;
    for (const auto& [k, c] : P0.terms)
        if (!c.is_exact_zero()) nonzero = true;
    if (nonzero) {
        Rational W = operator_profile(P0, 0, pt).eval(t);
        wp = to_string(W);
        if (!(W > wa))
            throw DomainError("hypothesis not satisfied: W(P - a, 0, t) = " + wp + " <= w(a, t) = " + to_string(wa));
    }
    DLog dl = dlog_sides(a, t);
    std::string hyp = "W(P - a, 0, " + to_string(t) + ") = " + wp + " > w(a) = " + to_string(wa);
    IndexPair out;
    out.disk = IndexReport{IndexSide::Disk, -dl.plus, "dominated", {hyp}, {"-dLog+ of a = " + std::to_string(-dl.plus)}};
    out.outer = IndexReport{IndexSide::Outer, dl.minus, "dominated", {hyp}, {"dLog- of a = " + std::to_string(dl.minus)}};
    return out;
}

IndexPair module_index(const NewtonPolygon& np) {
    Rational irr = 0;
    std::vector<std::string> prov;
    for (const auto& part : np.parts) {
        if (part.slope < 0) throw DomainError("negative slope in Newton polygon");
        Rational c = part.slope * part.multiplicity;
        if (c.get_den() != 1)
            throw DomainError("Hasse-Arf violation: " + std::to_string(part.multiplicity) + " * " +
                              to_string(part.slope) + " is not an integer");
        if (part.slope > 0) {
            irr += c;
            prov.push_back(std::to_string(part.multiplicity) + " * " + to_string(part.slope));
        }
    }
    long v = irr.get_num().get_si();
    std::vector<std::string> hyp{"slopes integral per vertex"};
    IndexPair out;
    out.disk = IndexReport{IndexSide::Disk, v, "slope_formula", hyp, prov};
    out.outer = IndexReport{IndexSide::Outer, -v, "slope_formula", hyp, prov};
    return out;
}

IndexPair module_index(const DiffModule& M, const std::vector<Rational>& ts, long K) {
    SlopeFit fit = largest_slope(M, ts, K);
    IndexPair out = module_index(newton_polygon({NewtonPart{fit.beta, static_cast<long>(M.rank())}}));
    std::string h = "pure slope assumed; largest slope " + to_string(fit.beta) + (fit.converged ? "" : " (not converged)");
    out.disk.hypotheses.push_back(h);
    out.outer.hypotheses.push_back(h);
    return out;
}

IndexPair module_index_dominated(const DiffModule& M, const Rational& t) {
    CyclicResult cv = cyclic_vector(M);
    LaurentPoly dH = cv.denominator.trimmed();
    IndexPair out = gen_index_dominated(cv.op, t);
    DLog dl = dlog_sides(dH, t);
    out.disk.value += dl.plus;
    out.outer.value -= dl.minus;
    std::string h = "cyclic vector after " + std::to_string(cv.trials) + " trial(s), det H = " + dH.str();
    for (auto* r : {&out.disk, &out.outer}) r->hypotheses.push_back(h);
    out.disk.provenance.push_back("+dLog+ of det H = " + std::to_string(dl.plus));
    out.outer.provenance.push_back("-dLog- of det H = " + std::to_string(dl.minus));
    return out;
}

EulerPoincare euler_poincare(long m, long chi_U, const std::vector<std::pair<std::string, long>>& irr) {
    EulerPoincare r;
    r.value = m * chi_U;
    r.provenance.push_back("m * chi(U) = " + std::to_string(m) + " * " + std::to_string(chi_U));
    for (const auto& [label, v] : irr) {
        if (v < 0) throw DomainError("negative irregularity at " + label);
        r.value -= v;
        r.provenance.push_back("- Irr_" + label + " = " + std::to_string(v));
    }
    return r;
}

AdditivityReport additivity_check(const DiffModule& M1, const DiffModule& M2, const DiffModule& M, IndexSide side,
                                  const Rational& t) {
    auto pick = [&](const DiffModule& X) {
        IndexPair p = module_index_dominated(X, t);
        return side == IndexSide::Disk ? p.disk.value : p.outer.value;
    };
    AdditivityReport r;
    r.side = side;
    r.i1 = pick(M1);
    r.i2 = pick(M2);
    r.i = pick(M);
    r.holds = r.i == r.i1 + r.i2;
    return r;
}

}  // namespace pslopes
