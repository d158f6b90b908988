#pragma once

#include "pslopes/diffmod.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pslopes {

struct TailValue {
    long k;
    Rational raw;         // -w_k / k
    Rational normalized;  // 1/(p-1) - v(k! G_k) / k
    // 1/(p-1) - (v(k! G_k) - v(j! G_j)) / (k - j) for the previous power j = k/p.
    std::optional<Rational> difference;
};

// rho_val is -log_p R(M, rho) at t = -log_p rho.
//
// The estimate is the difference quotient of v(k! G_k) along k = p^h. It is
// declared converged when the last two quotients agree. Otherwise rho_val is
// the last quotient and lower_bound_only is set: the value is an estimate
// without a convergence witness.
struct RadiusReport {
    Rational t;
    Rational rho_val;
    long K_max = 0;
    std::vector<std::pair<long, Rational>> tail;  // (k, -w_k / k), ceil(K/2) <= k <= K
    Rational tail_max;
    std::vector<TailValue> ppowers;
    bool converged = false;
    bool lower_bound_only = false;
    std::string method;
};

std::vector<RadiusReport> radius_estimates(const DiffModule& M, const std::vector<Rational>& ts, long K);
RadiusReport radius_estimate(const DiffModule& M, const Rational& t, long K);

struct SolubilityReport {
    bool soluble = false;
    bool conclusive = false;
    std::vector<Rational> ts, gaps;
    Rational intercept;  // gap extrapolated to the boundary
    std::string reason;
};

SolubilityReport is_soluble(const DiffModule& M, const std::vector<Rational>& ts, long K,
                            const Rational& t_boundary = 0);

struct YoungResult {
    Rational rho_val;
    bool valid = false;
};

// Young's formula on a theta-form operator; the leading coefficient need not be 1.
YoungResult young_radius(const DiffOp& P, const Rational& t);

struct SlopeFit {
    Rational beta;       // snapped if snapping applied
    Rational raw;        // last difference quotient
    Rational previous;   // difference quotient of the earlier pair
    bool exact = false;  // last three samples collinear
    bool snapped = false;
    bool converged = false;
    Rational tolerance;
    std::vector<RadiusReport> samples;
};

// Samples must decrease toward the boundary t_r.
SlopeFit largest_slope(const DiffModule& M, const std::vector<Rational>& ts, long K,
                       std::optional<Rational> tolerance = std::nullopt);

// Nearest rational with denominator <= max_den to x; ties to the smaller denominator.
Rational snap_rational(const Rational& x, long max_den);

struct NewtonPart {
    Rational slope;
    long multiplicity;
};

struct NewtonPolygon {
    std::vector<NewtonPart> parts;
    std::vector<std::pair<Rational, Rational>> vertices() const;
    long rank() const;
    Rational height() const;
};

NewtonPolygon newton_polygon(std::vector<NewtonPart> parts);
Rational irregularity(const NewtonPolygon& np);

struct IntegralityResult {
    bool integral = true;
    std::optional<std::pair<Rational, Rational>> offending;
};
IntegralityResult check_vertex_integrality(const NewtonPolygon& np);

}  // namespace pslopes
