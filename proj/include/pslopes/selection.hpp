#pragma once

// {0,1}-combinations of matrices whose norm stays above a log-concave bound.
// Profiles are valuations: norm >= c means profile <= c_profile.

#include "pslopes/slopes.hpp"

#include <optional>
#include <vector>

namespace pslopes {

// On [t0, t1] the selected profile `index` lies on or below c.
struct CertRecord {
    Rational t0, t1;
    std::size_t index;
};

struct SelectionResult {
    std::vector<int> lambdas;
    PLFun combined;  // max rule: min of the selected profiles
    std::vector<CertRecord> certificate;
    int depth = 0;
};

// A missing profile stands for the zero matrix. Endpoints of the interval
// are included in every comparison.
SelectionResult select_combination(const std::vector<std::optional<PLFun>>& profiles, const PLFun& c,
                                   const TInterval& I);
SelectionResult select_combination(const std::vector<PLFun>& profiles, const PLFun& c, const TInterval& I);

// Re-checks the certificate against the declared profiles.
LeqResult replay_certificate(const SelectionResult& r, const std::vector<std::optional<PLFun>>& profiles,
                             const PLFun& c, const TInterval& I);

struct LhReport {
    long h = 0;
    Rational beta, t_r;
    Rational C;      // w_c(t) = C - beta p^h (t - t_r)
    Rational M_val;  // every profile of x^s G_s stays >= M_val - beta p^h (t - t_r)
    std::vector<std::optional<PLFun>> profiles;  // x^s G_s, s = 0 .. p^h
    SelectionResult selection;
    std::optional<PLFun> actual;  // profile of the summed matrix
    bool lower_holds = false;
    bool upper_holds = false;
    bool cancellation = false;  // actual profile differs from the max rule
    std::optional<Rational> witness;
};

struct LhResult {
    DiffOp L;  // Delta form
    LhReport report;
};

LhResult build_Lh(const DiffModule& M, long h, const Rational& beta, const TInterval& I,
                  const Rational& t_r = 0);

}  // namespace pslopes
