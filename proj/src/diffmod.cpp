#include "pslopes/diffmod.hpp"

#include <algorithm>

namespace pslopes {

MatLaurent::MatLaurent(Ctx ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), e_(rows * cols, LaurentPoly(ctx_)) {}

MatLaurent MatLaurent::identity(Ctx ctx, std::size_t m) {
    MatLaurent I(ctx, m);
    for (std::size_t i = 0; i < m; ++i) I(i, i) = LaurentPoly::constant(ctx, 1);
    return I;
}

bool MatLaurent::is_exact_zero() const {
    for (const auto& f : e_)
        if (!f.is_exact_zero()) return false;
    return true;
}

namespace {

void require_same_shape(const MatLaurent& a, const MatLaurent& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("matrix shapes differ");
}

template <class Mul>
MatLaurent mat_mul_with(const MatLaurent& a, const MatLaurent& b, Mul mulf) {
    if (a.cols() != b.rows()) throw DomainError("matrix shapes do not chain");
    MatLaurent out(a.ctx(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            LaurentPoly acc(a.ctx());
            for (std::size_t k = 0; k < a.cols(); ++k) {
                if (a(i, k).is_exact_zero() || b(k, j).is_exact_zero()) continue;
                acc = acc + mulf(a(i, k), b(k, j));
            }
            out(i, j) = acc;
        }
    return out;
}

}  // namespace

MatLaurent operator+(const MatLaurent& a, const MatLaurent& b) {
    require_same_shape(a, b);
    MatLaurent out(a.ctx(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

MatLaurent operator-(const MatLaurent& a, const MatLaurent& b) {
    require_same_shape(a, b);
    MatLaurent out(a.ctx(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

MatLaurent operator*(const MatLaurent& a, const MatLaurent& b) {
    return mat_mul_with(a, b, [](const LaurentPoly& f, const LaurentPoly& g) { return mul(f, g); });
}

MatLaurent mat_mul_serial(const MatLaurent& a, const MatLaurent& b) {
    return mat_mul_with(a, b, [](const LaurentPoly& f, const LaurentPoly& g) { return mul_serial(f, g); });
}

MatLaurent operator*(const MatLaurent& a, const Rational& q) {
    MatLaurent out(a.ctx(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) * q;
    return out;
}

MatLaurent derivative(const MatLaurent& a) {
    MatLaurent out(a.ctx(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = derivative(a(i, j));
    return out;
}

MatLaurent shifted(const MatLaurent& a, long n) {
    MatLaurent out(a.ctx(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).shifted(n);
    return out;
}

MatLaurent substitute_power(const MatLaurent& a, long q) {
    MatLaurent out(a.ctx(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = substitute_power(a(i, j), q);
    return out;
}

bool exactly_equal(const MatLaurent& a, const MatLaurent& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!exactly_equal(a(i, j), b(i, j))) return false;
    return true;
}

namespace {

MatLaurent minor_of(const MatLaurent& a, std::size_t r, std::size_t c) {
    std::size_t m = a.rows();
    MatLaurent out(a.ctx(), m - 1);
    for (std::size_t i = 0, ii = 0; i < m; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0, jj = 0; j < m; ++j) {
            if (j == c) continue;
            out(ii, jj++) = a(i, j);
        }
        ++ii;
    }
    return out;
}

}  // namespace

LaurentPoly det(const MatLaurent& a) {
    if (a.rows() != a.cols()) throw DomainError("determinant of a non-square matrix");
    std::size_t m = a.rows();
    if (m == 0) return LaurentPoly::constant(a.ctx(), 1);
    if (m == 1) return a(0, 0);
    if (m == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    LaurentPoly acc(a.ctx());
    for (std::size_t j = 0; j < m; ++j) {
        if (a(0, j).is_exact_zero()) continue;
        LaurentPoly term = a(0, j) * det(minor_of(a, 0, j));
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

MatLaurent adjugate(const MatLaurent& a) {
    std::size_t m = a.rows();
    MatLaurent out(a.ctx(), m);
    if (m == 1) {
        out(0, 0) = LaurentPoly::constant(a.ctx(), 1);
        return out;
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            LaurentPoly c = det(minor_of(a, i, j));
            out(j, i) = ((i + j) % 2 == 0) ? c : -c;
        }
    return out;
}

std::optional<PLFun> matrix_profile(const MatLaurent& a, const Annulus& ann) {
    std::optional<PLFun> best;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const LaurentPoly& f = a(i, j);
            if (f.is_exact_zero()) continue;
            PLFun g = gauss_profile(f, ann);
            best = best ? plf_combine(PLOp::Min, *best, g) : g;
        }
    return best;
}

std::optional<Rational> matrix_value(const MatLaurent& a, const Rational& t) {
    auto prof = matrix_profile(a, Annulus(t, t));
    if (!prof) return std::nullopt;
    return prof->eval(t);
}

OpForm parse_form(const std::string& s) {
    if (s == "delta") return OpForm::Delta;
    if (s == "theta") return OpForm::Theta;
    if (s == "dx") return OpForm::Dx;
    throw SpecError("unknown operator form '" + s + "' (delta|theta|dx)");
}

std::string form_name(OpForm f) {
    switch (f) {
        case OpForm::Delta: return "delta";
        case OpForm::Theta: return "theta";
        case OpForm::Dx: return "dx";
    }
    return "?";
}

long DiffOp::order() const {
    for (auto it = terms.rbegin(); it != terms.rend(); ++it)
        if (!it->second.is_exact_zero()) return it->first;
    return -1;
}

const LaurentPoly& DiffOp::coeff(long k) const {
    static thread_local LaurentPoly zero;
    auto it = terms.find(k);
    if (it != terms.end()) return it->second;
    zero = LaurentPoly(ctx);
    return zero;
}

namespace {

Integer factorial(long n) {
    Integer f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

// S2[k][j]: theta^k = sum_j S2[k][j] x^j D^j.
std::vector<std::vector<Integer>> stirling2(long n) {
    std::vector<std::vector<Integer>> S(static_cast<std::size_t>(n + 1),
                                        std::vector<Integer>(static_cast<std::size_t>(n + 1), 0));
    S[0][0] = 1;
    for (long k = 1; k <= n; ++k)
        for (long j = 1; j <= k; ++j)
            S[k][j] = S[k - 1][j - 1] + Integer(j) * S[k - 1][j];
    return S;
}

// S1[j][i]: x^j D^j = theta (theta - 1) ... (theta - j + 1) = sum_i S1[j][i] theta^i.
std::vector<std::vector<Integer>> stirling1(long n) {
    std::vector<std::vector<Integer>> S(static_cast<std::size_t>(n + 1),
                                        std::vector<Integer>(static_cast<std::size_t>(n + 1), 0));
    S[0][0] = 1;
    for (long j = 1; j <= n; ++j)
        for (long i = 1; i <= j; ++i)
            S[j][i] = S[j - 1][i - 1] - Integer(j - 1) * S[j - 1][i];
    return S;
}

void add_term(DiffOp& P, long k, const LaurentPoly& a) {
    if (a.is_exact_zero()) return;
    auto it = P.terms.find(k);
    if (it == P.terms.end())
        P.terms.emplace(k, a);
    else
        it->second = it->second + a;
}

DiffOp to_dx(const DiffOp& P) {
    DiffOp out{P.ctx, OpForm::Dx, {}};
    if (P.form == OpForm::Dx) return P;
    if (P.form == OpForm::Delta) {
        for (const auto& [k, a] : P.terms) add_term(out, k, a * frac(1, factorial(k)));
        return out;
    }
    long n = P.order();
    auto S = stirling2(std::max(n, 0L));
    for (const auto& [k, a] : P.terms)
        for (long j = 0; j <= k; ++j)
            if (S[k][j] != 0) add_term(out, j, a.shifted(j) * Rational(S[k][j]));
    return out;
}

}  // namespace

DiffOp to_form(const DiffOp& P, OpForm form) {
    if (P.form == form) return P;
    DiffOp d = to_dx(P);
    if (form == OpForm::Dx) return d;
    DiffOp out{P.ctx, form, {}};
    if (form == OpForm::Delta) {
        for (const auto& [k, a] : d.terms) add_term(out, k, a * Rational(factorial(k)));
        return out;
    }
    long n = d.order();
    auto S = stirling1(std::max(n, 0L));
    for (const auto& [j, a] : d.terms)
        for (long i = 0; i <= j; ++i)
            if (S[j][i] != 0) add_term(out, i, a.shifted(-j) * Rational(S[j][i]));
    return out;
}

bool exactly_equal(const DiffOp& P, const DiffOp& Q) {
    DiffOp a = to_form(P, OpForm::Dx), b = to_form(Q, OpForm::Dx);
    long n = std::max(a.order(), b.order());
    for (long k = 0; k <= n; ++k)
        if (!exactly_equal(a.coeff(k), b.coeff(k))) return false;
    return true;
}

PLFun operator_profile(const DiffOp& P, const Rational& gamma, const Annulus& ann) {
    if (gamma < 0) throw DomainError("gamma must be >= 0");
    DiffOp d = to_form(P, OpForm::Delta);
    std::optional<PLFun> best;
    for (const auto& [k, a] : d.terms) {
        if (a.is_exact_zero()) continue;
        PLFun g = plf_add_line(gauss_profile(a, ann), 0, -(gamma + 1) * k);
        best = best ? plf_combine(PLOp::Min, *best, g) : g;
    }
    if (!best) throw DomainError("zero operator has no norm profile");
    return *best;
}

LaurentPoly apply(const DiffOp& P, const LaurentPoly& f) {
    DiffOp d = to_form(P, OpForm::Delta);
    LaurentPoly acc(P.ctx);
    for (const auto& [k, a] : d.terms) {
        if (a.is_exact_zero()) continue;
        acc = acc + a * divided_derivative(f, k);
    }
    return acc;
}

DiffOp compose(const DiffOp& P, const DiffOp& Q) {
    DiffOp a = to_form(P, OpForm::Dx), b = to_form(Q, OpForm::Dx);
    DiffOp out{P.ctx, OpForm::Dx, {}};
    // (a D^i)(b D^j) = a sum_l C(i,l) b^(l) D^(i-l+j)
    for (const auto& [i, ai] : a.terms)
        for (const auto& [j, bj] : b.terms) {
            LaurentPoly der = bj;
            for (long l = 0; l <= i; ++l) {
                if (l > 0) der = derivative(der);
                if (der.is_exact_zero()) break;
                add_term(out, i - l + j, ai * der * Rational(binomial(i, l)));
            }
        }
    return to_form(out, P.form);
}

DiffModule DiffModule::from_theta(const MatLaurent& A, const Annulus& ann) {
    return DiffModule{A.ctx(), shifted(A, -1), ann};
}

DiffModule companion_module(const DiffOp& P, const Annulus& ann) {
    DiffOp d = to_form(P, OpForm::Dx);
    long m = d.order();
    if (m < 1) throw DomainError("companion module needs order >= 1");
    LaurentPoly lead = d.coeff(m).trimmed();
    if (lead.truncated() || lead.coeffs().size() != 1)
        throw DomainError("leading coefficient is not a monomial");
    KElem c_inv = inv(lead.coeffs()[0]);
    long shift = -lead.lo();
    std::size_t mm = static_cast<std::size_t>(m);
    MatLaurent G(P.ctx, mm);
    for (std::size_t i = 0; i + 1 < mm; ++i) G(i, i + 1) = LaurentPoly::constant(P.ctx, 1);
    for (long i = 0; i < m; ++i)
        G(mm - 1, static_cast<std::size_t>(i)) = -(d.coeff(i) * c_inv).shifted(shift);
    return DiffModule{P.ctx, G, ann};
}

void check_headroom(const FieldCtx& F, long K) {
    long loss = vp_factorial(K, F.p());
    if (F.precision() <= loss)
        throw PrecisionError("raise precision: 1/K! costs " + std::to_string(loss) + " digits at K = " +
                             std::to_string(K) + " but N = " + std::to_string(F.precision()));
}

namespace {

template <class MatMul>
void run_delta(const DiffModule& M, long K, MatMul mm, const std::function<void(long, const MatLaurent&)>& fn) {
    if (K < 1) throw DomainError("K_max must be >= 1");
    check_headroom(*M.ctx, K);
    MatLaurent Gk = MatLaurent::identity(M.ctx, M.rank());
    fn(0, Gk);
    for (long k = 0; k < K; ++k) {
        if (Gk.is_exact_zero()) {
            fn(k + 1, Gk);
            continue;
        }
        Gk = (derivative(Gk) + mm(Gk, M.G)) * frac(1, k + 1);
        fn(k + 1, Gk);
    }
}

}  // namespace

void for_each_delta(const DiffModule& M, long K, const std::function<void(long, const MatLaurent&)>& fn) {
    run_delta(M, K, [](const MatLaurent& a, const MatLaurent& b) { return a * b; }, fn);
}

std::vector<MatLaurent> delta_matrices(const DiffModule& M, long K) {
    std::vector<MatLaurent> out;
    for_each_delta(M, K, [&](long, const MatLaurent& g) { out.push_back(g); });
    return out;
}

std::vector<MatLaurent> delta_matrices_serial(const DiffModule& M, long K) {
    std::vector<MatLaurent> out;
    run_delta(M, K, [](const MatLaurent& a, const MatLaurent& b) { return mat_mul_serial(a, b); },
              [&](long, const MatLaurent& g) { out.push_back(g); });
    return out;
}

namespace {

bool certainly_nonzero(const LaurentPoly& f) {
    for (const auto& c : f.coeffs())
        if (try_valuation(c) && !try_valuation(c)->is_inf()) return true;
    return false;
}

}  // namespace

CyclicResult cyclic_vector(const DiffModule& M, long budget) {
    std::size_t m = M.rank();
    const Ctx& ctx = M.ctx;
    MatLaurent A = M.theta_matrix();
    auto next = [&](const std::vector<LaurentPoly>& c) {
        std::vector<LaurentPoly> out(m, LaurentPoly(ctx));
        for (std::size_t j = 0; j < m; ++j) {
            LaurentPoly acc = theta(c[j]);
            for (std::size_t i = 0; i < m; ++i)
                if (!c[i].is_exact_zero() && !A(i, j).is_exact_zero()) acc = acc + c[i] * A(i, j);
            out[j] = acc;
        }
        return out;
    };
    std::vector<std::vector<LaurentPoly>> candidates;
    {
        std::vector<LaurentPoly> e1(m, LaurentPoly(ctx));
        e1[0] = LaurentPoly::constant(ctx, 1);
        candidates.push_back(e1);
        for (std::size_t i = 1; i < m; ++i)
            for (long j = 0; j <= budget; ++j) {
                auto c = e1;
                c[i] = LaurentPoly::monomial(KElem::from_rational(ctx, 1), j);
                candidates.push_back(c);
            }
    }
    int trials = 0;
    for (const auto& c0 : candidates) {
        ++trials;
        MatLaurent H(ctx, m);
        std::vector<LaurentPoly> c = c0;
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t j = 0; j < m; ++j) H(r, j) = c[j];
            c = next(c);
        }
        LaurentPoly d = det(H);
        if (!certainly_nonzero(d)) continue;
        MatLaurent adj = adjugate(H);
        DiffOp op{ctx, OpForm::Theta, {}};
        op.terms.emplace(static_cast<long>(m), d);
        for (std::size_t i = 0; i < m; ++i) {
            LaurentPoly s(ctx);
            for (std::size_t j = 0; j < m; ++j)
                if (!c[j].is_exact_zero() && !adj(j, i).is_exact_zero()) s = s + c[j] * adj(j, i);
            if (!s.is_exact_zero()) op.terms.emplace(static_cast<long>(i), -s);
        }
        return CyclicResult{op, d, H, c0, trials};
    }
    throw DomainError("no cyclic vector found within budget " + std::to_string(budget));
}

}  // namespace pslopes
