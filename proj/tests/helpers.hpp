#pragma once

#include "pslopes/diffmod.hpp"

#include <doctest.h>

#include <map>
#include <string>
#include <vector>

namespace th {

using namespace pslopes;

inline LaurentPoly poly(const Ctx& ctx, const std::map<long, std::string>& terms) {
    std::map<long, KElem> m;
    for (const auto& [e, s] : terms) m.emplace(e, parse_kelem(s, ctx));
    return LaurentPoly::from_terms(ctx, m);
}

inline DiffModule rank_one(const Ctx& ctx, const std::map<long, std::string>& g, Annulus ann = Annulus(0, 1)) {
    DiffModule M{ctx, MatLaurent(ctx, 1, 1), ann};
    M.G(0, 0) = poly(ctx, g);
    return M;
}

inline DiffOp op(const Ctx& ctx, OpForm form, const std::vector<std::map<long, std::string>>& coeffs) {
    DiffOp P{ctx, form, {}};
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (!coeffs[k].empty()) P.terms.emplace(static_cast<long>(k), poly(ctx, coeffs[k]));
    return P;
}

inline Rational q(const char* s) { return parse_rational(s); }

// Brute-force min over terms of v(c_e) + e t.
inline Rational gauss_oracle(const LaurentPoly& f, const Rational& t) {
    bool any = false;
    Rational best;
    for (long e = f.lo(); e <= f.hi(); ++e) {
        KElem c = f.coeff(e);
        if (c.is_exact_zero()) continue;
        Rational v = valuation(c).value() + e * t;
        if (!any || v < best) best = v;
        any = true;
    }
    REQUIRE(any);
    return best;
}

}  // namespace th
