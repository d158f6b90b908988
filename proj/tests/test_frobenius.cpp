#include "helpers.hpp"

#include "pslopes/frobenius.hpp"

using namespace pslopes;
using th::q;

TEST_CASE("alpha tables") {
    AlphaTable T = alpha_table(2, 1, 1);
    REQUIRE(T.alpha.size() >= 3);
    CHECK(T.alpha[1] == 2);
    CHECK(T.alpha[2] == 1);
    AlphaTable U = alpha_table(3, 1, 1);
    CHECK(U.alpha[1] == 3);
    CHECK(U.alpha[2] == 3);
    CHECK(U.alpha[3] == 1);
    // s = 2: ((x+1)^3 - 1)^2 = x^6 + 6x^5 + 15x^4 + 18x^3 + 9x^2.
    AlphaTable V = alpha_table(3, 1, 2);
    std::vector<long> want{0, 0, 9, 18, 15, 6, 1};
    for (std::size_t k = 0; k < want.size(); ++k) CHECK(V.alpha[k] == want[k]);
    CHECK(alpha_bound_report(V).ok());
}

TEST_CASE("parallel and serial bound reports agree") {
    std::vector<AlphaJob> jobs;
    for (long p : {2, 3, 5})
        for (long l = 1; l <= 3; ++l)
            for (long s = 1; s <= 3; ++s) jobs.push_back({p, l, s});
    auto a = alpha_reports(jobs), b = alpha_reports_serial(jobs);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].ok());
        CHECK(a[i].checks == b[i].checks);
        CHECK(a[i].extra_equalities == b[i].extra_equalities);
    }
}

TEST_CASE("pullback") {
    auto ctx = make_ctx(5, 40);
    DiffModule M = th::rank_one(ctx, {{-1, "3/2"}});
    DiffModule N = pullback(M, 2);
    CHECK(exactly_equal(N.G(0, 0), th::poly(ctx, {{-1, "3"}})));
    DiffModule P = pullback(th::rank_one(ctx, {{-2, "pi"}}, Annulus(0, 2)), 3);
    CHECK(exactly_equal(P.G(0, 0), th::poly(ctx, {{-4, "3*pi"}})));
    CHECK(P.ann.hi == q("2/3"));
}

TEST_CASE("radius relation") {
    auto ctx = make_ctx(5, 60);
    auto r = radius_relation_check(th::rank_one(ctx, {{-1, "1"}}), 2, q("1/3"), 125);
    CHECK(r.status == CheckStatus::Pass);
    CHECK(r.lhs == r.rhs);
    CHECK(r.lhs == q("1/3"));
}

TEST_CASE("Frobenius solubility check") {
    auto ctx = make_ctx(3, 60);
    MatLaurent Z(ctx, 1, 1);
    Z(0, 0) = LaurentPoly(ctx);
    DiffModule trivial{ctx, Z, Annulus(0, 1)};
    std::vector<Rational> ts{q("1/9"), q("1/27")};
    FrobeniusReport f = frobenius_solubility_check(trivial, 3, ts, 27, MatLaurent::identity(ctx, 1));
    CHECK(f.intertwiner_verified);
    CHECK(f.status == CheckStatus::Pass);
    FrobeniusReport g = frobenius_solubility_check(trivial, 3, ts, 27);
    CHECK(g.mode == "inequality");
    CHECK(g.status != CheckStatus::Fail);
    CHECK_THROWS(frobenius_solubility_check(trivial, 2, ts, 27));
    DiffModule robba = th::rank_one(ctx, {{-1, "1"}});
    CHECK_THROWS_WITH(frobenius_solubility_check(robba, 3, ts, 27, MatLaurent::identity(ctx, 1)),
                      doctest::Contains("not a Frobenius structure"));
}
