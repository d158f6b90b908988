#pragma once

#include "pslopes/slopes.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pslopes {

// G'(x) = q x^(q-1) G(x^q) on the annulus t' = t/q.
DiffModule pullback(const DiffModule& M, long q);

// Coefficients of ((x+1)^(p^lambda) - 1)^s, indexed by k = 0 .. s p^lambda.
struct AlphaTable {
    long p = 0, lambda = 0, s = 0;
    std::vector<Integer> alpha;
};

AlphaTable alpha_table(long p, long lambda, long s);

struct AlphaBoundReport {
    long checks = 0;
    bool bound_holds = true;
    bool stated_equalities_hold = true;
    bool special_cases_hold = true;
    // Equalities of the bound at k other than the two stated ones.
    long extra_equalities = 0;
    std::vector<std::string> failures;
    bool ok() const { return bound_holds && stated_equalities_hold && special_cases_hold; }
};

AlphaBoundReport alpha_bound_report(const AlphaTable& T);

struct AlphaJob {
    long p, lambda, s;
};
// Tables and reports for many jobs; OpenMP over jobs.
std::vector<AlphaBoundReport> alpha_reports(const std::vector<AlphaJob>& jobs);
std::vector<AlphaBoundReport> alpha_reports_serial(const std::vector<AlphaJob>& jobs);

enum class CheckStatus { Pass, Fail, Inconclusive };
std::string status_name(CheckStatus s);

struct RadiusRelation {
    Rational t;
    Rational lhs;  // rho_val of the pullback at t
    Rational rhs;  // rho_val of M at q t, minus (q - 1) t
    bool equality_required = false;
    CheckStatus status = CheckStatus::Inconclusive;
};

RadiusRelation radius_relation_check(const DiffModule& M, long q, const Rational& t, long K);
// One G_k stream per module for all samples.
std::vector<RadiusRelation> radius_relation_checks(const DiffModule& M, long q, const std::vector<Rational>& ts, long K);

struct FrobeniusSample {
    Rational t;
    Rational lhs;  // rho_val(t)
    Rational rhs;  // max(rho_val(q t) / q, rho_val(q t) - v_p(q))
    CheckStatus status = CheckStatus::Inconclusive;
};

struct FrobeniusReport {
    std::string mode;  // "intertwiner" or "inequality"
    bool intertwiner_verified = false;
    std::vector<FrobeniusSample> samples;
    CheckStatus status = CheckStatus::Inconclusive;
    bool solubility_evidence = false;
};

// With an intertwiner H, H G_phi + H' = G H is verified first.
FrobeniusReport frobenius_solubility_check(const DiffModule& M, long q, const std::vector<Rational>& ts, long K,
                                           const std::optional<MatLaurent>& H = std::nullopt);

bool vanishes_at_precision(const MatLaurent& a);

}  // namespace pslopes
