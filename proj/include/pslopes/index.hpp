#pragma once

#include "pslopes/slopes.hpp"

#include <string>
#include <vector>

namespace pslopes {

enum class IndexSide { Disk, Outer };
std::string side_name(IndexSide s);

struct IndexReport {
    IndexSide side = IndexSide::Disk;
    long value = 0;
    std::string method;  // function_ord | dominated | slope_formula
    std::vector<std::string> hypotheses;
    std::vector<std::string> provenance;
};

struct IndexPair {
    IndexReport disk, outer;
    long annulus() const { return disk.value + outer.value; }
};

// Index of multiplication by u, from the generalized ord of det(u).
IndexReport gen_index_function(const MatLaurent& u, IndexSide side, const Rational& t, const Annulus& ann);
// Minus the number of zeros of det(u) in the closed annulus.
long annulus_index_function(const MatLaurent& u, const Annulus& ann);

// P = P0 + a with a of order zero and W(P0, 0, t) > w(a, t).
IndexPair gen_index_dominated(const DiffOp& P, const Rational& t);

// Slope formula: disk = sum of m_i beta_i over positive slopes, outer = -disk.
IndexPair module_index(const NewtonPolygon& np);
// Pure-slope module: beta from largest_slope, multiplicity = rank.
IndexPair module_index(const DiffModule& M, const std::vector<Rational>& ts, long K);
// Dominated route through a cyclic vector; corrects by the index of det H.
IndexPair module_index_dominated(const DiffModule& M, const Rational& t);

struct EulerPoincare {
    long value = 0;
    std::vector<std::string> provenance;
};

EulerPoincare euler_poincare(long m, long chi_U, const std::vector<std::pair<std::string, long>>& irr);

struct AdditivityReport {
    IndexSide side = IndexSide::Disk;
    long i1 = 0, i2 = 0, i = 0;
    bool holds = false;
};

AdditivityReport additivity_check(const DiffModule& M1, const DiffModule& M2, const DiffModule& M, IndexSide side,
                                  const Rational& t);

}  // namespace pslopes
