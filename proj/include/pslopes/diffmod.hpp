#pragma once

// Differential operators and modules over Laurent polynomials.
//
// Module convention: Y' = G Y in d/dx form, theta Y = A Y with A = x G in
// theta = x d/dx form.

#include "pslopes/laurent.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace pslopes {

class MatLaurent {
public:
    MatLaurent() = default;
    MatLaurent(Ctx ctx, std::size_t rows, std::size_t cols);
    MatLaurent(Ctx ctx, std::size_t m) : MatLaurent(std::move(ctx), m, m) {}

    static MatLaurent identity(Ctx ctx, std::size_t m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Ctx& ctx() const { return ctx_; }

    LaurentPoly& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool is_exact_zero() const;

private:
    Ctx ctx_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<LaurentPoly> e_;
};

MatLaurent operator+(const MatLaurent& a, const MatLaurent& b);
MatLaurent operator-(const MatLaurent& a, const MatLaurent& b);
MatLaurent operator*(const MatLaurent& a, const MatLaurent& b);
MatLaurent mat_mul_serial(const MatLaurent& a, const MatLaurent& b);
MatLaurent operator*(const MatLaurent& a, const Rational& q);
MatLaurent derivative(const MatLaurent& a);
MatLaurent shifted(const MatLaurent& a, long n);
MatLaurent substitute_power(const MatLaurent& a, long q);
bool exactly_equal(const MatLaurent& a, const MatLaurent& b);

LaurentPoly det(const MatLaurent& a);
MatLaurent adjugate(const MatLaurent& a);

// Valuation profile of max-of-entries norm; nullopt for the zero matrix.
std::optional<PLFun> matrix_profile(const MatLaurent& a, const Annulus& ann);
// Same at a single t; nullopt for the zero matrix.
std::optional<Rational> matrix_value(const MatLaurent& a, const Rational& t);

enum class OpForm { Delta, Theta, Dx };

OpForm parse_form(const std::string& s);
std::string form_name(OpForm f);

// P = sum_k a_k D_k with D_k = Delta^k, theta^k or (d/dx)^k per form.
struct DiffOp {
    Ctx ctx;
    OpForm form = OpForm::Delta;
    std::map<long, LaurentPoly> terms;

    long order() const;
    const LaurentPoly& coeff(long k) const;
};

DiffOp to_form(const DiffOp& P, OpForm form);
bool exactly_equal(const DiffOp& P, const DiffOp& Q);

// W(P, gamma, t) = min_k (w(a_k, t) - (gamma + 1) k t), on the Delta form.
PLFun operator_profile(const DiffOp& P, const Rational& gamma, const Annulus& ann);

LaurentPoly apply(const DiffOp& P, const LaurentPoly& f);

// Composition P o Q.
DiffOp compose(const DiffOp& P, const DiffOp& Q);

struct DiffModule {
    Ctx ctx;
    MatLaurent G;  // d/dx form
    Annulus ann;

    std::size_t rank() const { return G.rows(); }
    MatLaurent theta_matrix() const { return shifted(G, 1); }

    static DiffModule from_theta(const MatLaurent& A, const Annulus& ann);
};

// Companion module of an operator whose leading coefficient is a monomial.
DiffModule companion_module(const DiffOp& P, const Annulus& ann);

// G_0 .. G_K with G_{k+1} = (G_k' + G_k G) / (k + 1).
std::vector<MatLaurent> delta_matrices(const DiffModule& M, long K);
std::vector<MatLaurent> delta_matrices_serial(const DiffModule& M, long K);
// Streams G_k to fn without keeping the sequence; stops early once G_k = 0.
void for_each_delta(const DiffModule& M, long K, const std::function<void(long, const MatLaurent&)>& fn);

void check_headroom(const FieldCtx& F, long K);

struct CyclicResult {
    DiffOp op;                // theta form, leading coefficient = denominator
    LaurentPoly denominator;  // det H
    MatLaurent H;             // rows c_0 .. c_{m-1}, Z = H Y
    std::vector<LaurentPoly> vector;
    int trials = 0;
};

CyclicResult cyclic_vector(const DiffModule& M, long budget = 8);

}  // namespace pslopes
