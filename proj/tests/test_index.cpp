#include "helpers.hpp"

#include "pslopes/index.hpp"
#include "pslopes/slopes.hpp"

using namespace pslopes;
using th::op;
using th::q;

TEST_CASE("index of a function matrix") {
    auto ctx = make_ctx(3, 40);
    MatLaurent u(ctx, 1, 1);
    u(0, 0) = th::poly(ctx, {{1, "1"}});
    CHECK(gen_index_function(u, IndexSide::Disk, q("1/2"), Annulus(q("1/4"), 1)).value == -1);
    MatLaurent I = MatLaurent::identity(ctx, 2);
    CHECK(gen_index_function(I, IndexSide::Disk, q("1/2"), Annulus(0, 1)).value == 0);
    CHECK(gen_index_function(I, IndexSide::Outer, q("1/2"), Annulus(0, 1)).value == 0);
    MatLaurent d = MatLaurent::identity(ctx, 2);
    d(0, 0) = th::poly(ctx, {{0, "3"}, {2, "1"}});
    CHECK(gen_index_function(d, IndexSide::Disk, 1, Annulus(0, 2)).value == -2);
    MatLaurent z(ctx, 1, 1);
    z(0, 0) = LaurentPoly(ctx);
    CHECK_THROWS(gen_index_function(z, IndexSide::Disk, q("1/2"), Annulus(0, 1)));
}

TEST_CASE("dominated index") {
    auto ctx = make_ctx(3, 40);
    for (long d : {1, 2, 3}) {
        DiffOp P = op(ctx, OpForm::Delta, {{{-d, "pi"}}, {{1, "1"}}});
        CHECK(gen_index_dominated(P, 1).disk.value == d);
    }
    CHECK(gen_index_dominated(op(ctx, OpForm::Delta, {{{0, "1/3"}}, {{1, "1"}}}), q("1/2")).disk.value == 0);
    CHECK_THROWS_WITH_AS(gen_index_dominated(op(ctx, OpForm::Delta, {{{0, "pi"}}, {{1, "1"}}}), q("1/2")),
                         doctest::Contains("hypothesis not satisfied"), DomainError);
}

TEST_CASE("slope formula") {
    CHECK(module_index(newton_polygon({{q("1/2"), 2}})).disk.value == 1);
    IndexPair z = module_index(newton_polygon({{0, 3}}));
    CHECK(z.disk.value == 0);
    CHECK(z.outer.value == 0);
    CHECK_THROWS(module_index(newton_polygon({{q("1/2"), 1}})));
}

TEST_CASE("the two index methods agree on a slope-one module") {
    auto ctx = make_ctx(3, 60);
    DiffModule M = th::rank_one(ctx, {{-2, "pi"}});
    long dom = module_index_dominated(M, 1).disk.value;
    long slope = module_index(M, {q("1/25"), q("1/50"), q("1/100")}, 27).disk.value;
    CHECK(dom == 1);
    CHECK(slope == dom);
}

TEST_CASE("Euler-Poincare") {
    CHECK(euler_poincare(1, 0, {{"0", 3}, {"inf", 0}}).value == -3);
    CHECK(euler_poincare(2, -1, {{"0", 0}}).value == -2);
    CHECK(euler_poincare(2, 0, {{"0", 1}}).value == -1);
}

TEST_CASE("additivity") {
    auto ctx = make_ctx(3, 40);
    DiffModule A = th::rank_one(ctx, {{-2, "pi"}}), B = th::rank_one(ctx, {{-3, "pi"}});
    DiffModule S{ctx, MatLaurent(ctx, 2, 2), Annulus(0, 1)};
    S.G(0, 0) = A.G(0, 0);
    S.G(1, 1) = B.G(0, 0);
    S.G(0, 1) = LaurentPoly(ctx);
    S.G(1, 0) = LaurentPoly(ctx);
    AdditivityReport r = additivity_check(A, B, S, IndexSide::Disk, 1);
    CHECK(r.holds);
    CHECK(r.i == 3);
    DiffModule T = S;
    T.G(0, 1) = th::poly(ctx, {{-1, "1"}, {2, "5"}});
    CHECK(additivity_check(A, B, T, IndexSide::Disk, 1).holds);
    // Exponent 1/3 at 0: dominated with index 0.
    DiffModule triv = th::rank_one(ctx, {{-1, "1/3"}});
    DiffModule U{ctx, MatLaurent(ctx, 2, 2), Annulus(0, 1)};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) U.G(i, j) = LaurentPoly(ctx);
    U.G(0, 0) = triv.G(0, 0);
    U.G(1, 1) = B.G(0, 0);
    AdditivityReport t = additivity_check(triv, B, U, IndexSide::Disk, 1);
    CHECK(t.holds);
    CHECK(t.i1 == 0);
    CHECK(t.i == t.i2);
}
