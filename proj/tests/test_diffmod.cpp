#include "helpers.hpp"

#include <random>

using namespace pslopes;
using th::op;
using th::poly;
using th::q;

TEST_CASE("operator forms convert both ways") {
    auto ctx = make_ctx(5, 40);
    DiffOp P = op(ctx, OpForm::Dx, {{{1, "-1"}, {0, "1/3*pi^2"}}, {{2, "9"}}, {{3, "9"}}});
    for (OpForm f : {OpForm::Delta, OpForm::Theta}) {
        DiffOp Q = to_form(P, f);
        CHECK(exactly_equal(to_form(Q, OpForm::Dx), P));
    }
    LaurentPoly g = poly(ctx, {{-2, "1"}, {3, "pi"}, {7, "2/3"}});
    LaurentPoly a = apply(P, g);
    CHECK(exactly_equal(apply(to_form(P, OpForm::Delta), g), a));
    CHECK(exactly_equal(apply(to_form(P, OpForm::Theta), g), a));
}

TEST_CASE("composition agrees with successive application") {
    auto ctx = make_ctx(3, 40);
    DiffOp P = op(ctx, OpForm::Theta, {{{-1, "pi"}}, {{0, "1"}, {2, "3"}}, {{1, "1"}}});
    DiffOp Q = op(ctx, OpForm::Dx, {{{0, "2"}}, {{-1, "1"}, {1, "1"}}});
    DiffOp PQ = compose(P, Q);
    for (auto g : {poly(ctx, {{0, "1"}}), poly(ctx, {{4, "1"}, {-3, "5"}}), poly(ctx, {{2, "pi"}})})
        CHECK(exactly_equal(apply(PQ, g), apply(P, apply(Q, g))));
}

TEST_CASE("G_k of x^alpha are binomials") {
    auto ctx = make_ctx(5, 60);
    for (long alpha : {-2, 0, 3, 7}) {
        DiffModule M = th::rank_one(ctx, {{-1, std::to_string(alpha)}});
        auto G = delta_matrices(M, 12);
        for (long k = 0; k <= 12; ++k) {
            Rational b = 1;
            for (long i = 0; i < k; ++i) b = b * (alpha - i) / (i + 1);
            LaurentPoly want = b == 0 ? LaurentPoly(ctx) : poly(ctx, {{-k, to_string(b)}});
            CHECK(exactly_equal(G[static_cast<std::size_t>(k)](0, 0).trimmed(), want.trimmed()));
        }
    }
}

TEST_CASE("parallel and serial recursions agree") {
    auto ctx = make_ctx(3, 60);
    DiffModule M = companion_module(op(ctx, OpForm::Theta, {{{-3, "pi"}}, {{-1, "1"}}, {{0, "1"}}}), Annulus(0, 2));
    auto a = delta_matrices(M, 27), b = delta_matrices_serial(M, 27);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(exactly_equal(a[k], b[k]));
    MatLaurent X = M.G * M.G;
    CHECK(exactly_equal(X, mat_mul_serial(M.G, M.G)));
}

TEST_CASE("determinant and adjugate") {
    auto ctx = make_ctx(3, 30);
    MatLaurent A(ctx, 3, 3);
    const char* e[3][3] = {{"1", "pi", "0"}, {"2", "1", "3"}, {"0", "1/3", "1"}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) A(i, j) = poly(ctx, {{static_cast<long>(i) - static_cast<long>(j), e[i][j]}});
    LaurentPoly d = det(A);
    MatLaurent P = A * adjugate(A);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(exactly_equal(P(i, j).trimmed(), i == j ? d.trimmed() : LaurentPoly(ctx)));
}

TEST_CASE("cyclic vector recovers an equivalent operator") {
    auto ctx = make_ctx(3, 60);
    DiffOp P = op(ctx, OpForm::Theta, {{{-2, "1"}}, {{-1, "1"}}, {{0, "1"}}});
    DiffModule M = companion_module(P, Annulus(0, 1));
    CyclicResult c = cyclic_vector(M);
    CHECK(c.op.order() == 2);
    CHECK(c.op.form == OpForm::Theta);
    CHECK(exactly_equal(det(c.H).trimmed(), c.denominator.trimmed()));
    MatLaurent Z(ctx, 1, 1);
    Z(0, 0) = LaurentPoly(ctx);
    DiffModule trivial{ctx, Z, Annulus(0, 1)};
    CHECK(cyclic_vector(trivial).trials == 1);
}

TEST_CASE("operator norms") {
    auto ctx = make_ctx(3, 30);
    DiffOp P = op(ctx, OpForm::Delta, {{{-1, "pi"}}, {{1, "1"}}});
    PLFun W = operator_profile(P, 0, Annulus(0, 2));
    CHECK(W.eval(0) == 0);
    CHECK(W.eval(2) == q("-3/2"));
    CHECK_THROWS(companion_module(op(ctx, OpForm::Dx, {{{0, "1"}}, {{0, "1"}, {1, "1"}}}), Annulus(0, 1)));
}

TEST_CASE("precision headroom") {
    auto ctx = make_ctx(7, 20);
    DiffModule M = th::rank_one(ctx, {{-2, "pi"}});
    CHECK_THROWS_AS(delta_matrices(M, 343), PrecisionError);
}

TEST_CASE("matrix and operator profiles") {
    auto ctx = make_ctx(3, 30);
    Annulus ann(0, 2);
    CHECK(matrix_profile(MatLaurent::identity(ctx, 2), ann)->eval(1) == 0);
    MatLaurent D = MatLaurent::identity(ctx, 2);
    D(0, 0) = th::poly(ctx, {{1, "1"}});
    D(1, 1) = th::poly(ctx, {{0, "3"}});
    PLFun w = *matrix_profile(D, ann);
    CHECK(w.eval(q("1/2")) == q("1/2"));
    CHECK(w.eval(2) == 1);
    MatLaurent Z(ctx, 1, 1);
    Z(0, 0) = LaurentPoly(ctx);
    CHECK_FALSE(matrix_profile(Z, ann).has_value());
    DiffOp xD = op(ctx, OpForm::Delta, {{}, {{1, "1"}}});
    CHECK(operator_profile(xD, 0, ann).eval(1) == 0);
    CHECK(operator_profile(xD, 1, ann).eval(1) == -1);
    CHECK(operator_profile(op(ctx, OpForm::Delta, {{}, {{0, "1"}}}), 2, ann).eval(1) == -3);
}

TEST_CASE("applying operators") {
    auto ctx = make_ctx(5, 30);
    LaurentPoly x = th::poly(ctx, {{1, "1"}});
    CHECK(apply(op(ctx, OpForm::Theta, {{{0, "-1"}}, {{0, "1"}}}), x).trimmed().is_exact_zero());
    CHECK(exactly_equal(apply(op(ctx, OpForm::Delta, {{}, {}, {{0, "1"}}}), th::poly(ctx, {{3, "1"}})),
                        th::poly(ctx, {{1, "3"}})));
}
