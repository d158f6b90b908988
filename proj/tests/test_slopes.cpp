#include "helpers.hpp"

#include "pslopes/slopes.hpp"

using namespace pslopes;
using th::op;
using th::q;

TEST_CASE("Robba modules have rho_val = t") {
    auto ctx = make_ctx(3, 60);
    for (const char* alpha : {"1", "2", "-3", "5"}) {
        DiffModule M = th::rank_one(ctx, {{-1, alpha}});
        for (Rational t : {q("1/2"), q("1/8"), Rational(1)}) {
            RadiusReport r = radius_estimate(M, t, 27);
            CHECK(r.rho_val == t);
            CHECK_FALSE(r.lower_bound_only);
        }
    }
    RadiusReport one = radius_estimate(th::rank_one(ctx, {{-1, "1"}}), q("1/2"), 27);
    CHECK(one.converged);
    CHECK(one.method == "vanishing G_k");
    CHECK_THROWS(radius_estimate(th::rank_one(ctx, {{-1, "1"}}), q("1/2"), 2));
}

TEST_CASE("Young formula") {
    auto ctx = make_ctx(3, 80);
    DiffOp P = op(ctx, OpForm::Theta, {{{-1, "pi"}}, {{0, "1"}}});
    YoungResult y = young_radius(P, 1);
    CHECK(y.valid);
    CHECK(y.rho_val == 2);
    CHECK_FALSE(young_radius(P, q("1/4")).valid);
    YoungResult u = young_radius(op(ctx, OpForm::Theta, {{{0, "1"}}, {{0, "1"}}}), q("1/3"));
    CHECK_FALSE(u.valid);
    CHECK(u.rho_val == q("1/3") + q("1/2"));
    // Young's value agrees with the estimator where it is valid.
    DiffModule M = companion_module(P, Annulus(0, 2));
    CHECK(radius_estimate(M, q("3/2"), 81).rho_val == young_radius(P, q("3/2")).rho_val);
}

TEST_CASE("solubility") {
    auto ctx = make_ctx(3, 60);
    std::vector<Rational> ts{q("1/25"), q("1/50"), q("1/100")};
    CHECK(is_soluble(th::rank_one(ctx, {{-1, "1"}}), ts, 27).soluble);
    SolubilityReport s = is_soluble(th::rank_one(ctx, {{-2, "pi"}}), ts, 27);
    CHECK(s.soluble);
    CHECK(s.intercept == 0);
}

TEST_CASE("largest slope") {
    auto ctx = make_ctx(3, 60);
    std::vector<Rational> ts{q("1/25"), q("1/50"), q("1/100")};
    CHECK(largest_slope(th::rank_one(ctx, {{-1, "1"}}), ts, 27).beta == 0);
    SlopeFit f = largest_slope(th::rank_one(ctx, {{-2, "pi"}}), ts, 27);
    CHECK(f.beta == 1);
    CHECK(f.converged);
}

TEST_CASE("snap_rational") {
    CHECK(snap_rational(q("49/100"), 2) == q("1/2"));
    CHECK(snap_rational(q("1/3"), 2) == q("1/2"));
    CHECK(snap_rational(q("-7/5"), 3) == q("-4/3"));
    CHECK(snap_rational(q("1/4"), 2) == 0);
    CHECK(snap_rational(3, 1) == 3);
}

TEST_CASE("Newton polygons") {
    NewtonPolygon np = newton_polygon({{q("1/2"), 2}, {0, 1}});
    auto v = np.vertices();
    REQUIRE(v.size() == 3);
    CHECK(v[1] == std::pair<Rational, Rational>(1, 0));
    CHECK(v[2] == std::pair<Rational, Rational>(3, 1));
    CHECK(irregularity(np) == 1);
    CHECK(np.rank() == 3);
    CHECK(irregularity(newton_polygon({{0, 4}})) == 0);
    CHECK(newton_polygon({{3, 1}}).height() == 3);
    CHECK(check_vertex_integrality(newton_polygon({{q("1/2"), 2}})).integral);
    IntegralityResult bad = check_vertex_integrality(newton_polygon({{q("1/2"), 1}}));
    CHECK_FALSE(bad.integral);
    CHECK(bad.offending->second == q("1/2"));
    CHECK(check_vertex_integrality(newton_polygon({{0, 1}, {2, 1}})).integral);
    CHECK_THROWS(newton_polygon({{q("-1"), 1}}));
}
