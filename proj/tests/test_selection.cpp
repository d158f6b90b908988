#include "helpers.hpp"

#include "pslopes/selection.hpp"

using namespace pslopes;
using th::q;

TEST_CASE("single profile above the bound") {
    TInterval I(0, 1);
    auto r = select_combination(std::vector<PLFun>{PLFun::line(0, 1, I)}, PLFun::constant(2, I), I);
    CHECK(r.lambdas == std::vector<int>{1});
}

TEST_CASE("crossing profiles select both") {
    TInterval I(0, 1);
    std::vector<std::optional<PLFun>> prof{PLFun::line(0, 1, I), PLFun::line(1, -1, I)};
    PLFun c = PLFun::constant(q("1/2"), I);
    SelectionResult r = select_combination(prof, c, I);
    CHECK(r.lambdas == std::vector<int>{1, 1});
    CHECK(r.combined.eval(q("1/2")) == q("1/2"));
    CHECK(plf_leq_on(r.combined, c, I).holds);
    CHECK(replay_certificate(r, prof, c, I).holds);
    // Tampering with the certificate is detected.
    SelectionResult bad = r;
    for (auto& rec : bad.certificate) rec.index = 1 - rec.index;
    CHECK_FALSE(replay_certificate(bad, prof, c, I).holds);
}

TEST_CASE("precondition failure reports a witness") {
    TInterval I(0, 2);
    std::vector<PLFun> prof{PLFun::constant(1, I), PLFun::line(0, 1, I)};
    CHECK_THROWS_WITH_AS(select_combination(prof, PLFun::constant(q("3/4"), I), I),
                         doctest::Contains("precondition fails"), DomainError);
}

TEST_CASE("shape checks") {
    TInterval I(0, 2);
    PLFun bump = plf_combine(PLOp::Max, PLFun::line(0, 1, I), PLFun::line(2, -1, I));
    CHECK_THROWS(select_combination(std::vector<PLFun>{bump}, PLFun::constant(3, I), I));
}

TEST_CASE("missing profiles are skipped") {
    TInterval I(0, 1);
    std::vector<std::optional<PLFun>> prof{std::nullopt, PLFun::constant(0, I)};
    auto r = select_combination(prof, PLFun::constant(1, I), I);
    CHECK(r.lambdas == std::vector<int>{0, 1});
}

TEST_CASE("build_Lh") {
    auto ctx = make_ctx(3, 60);
    TInterval I(0, 1);
    LhResult robba = build_Lh(th::rank_one(ctx, {{-1, "1"}}), 1, 0, I);
    CHECK(robba.report.selection.lambdas.front() == 1);
    CHECK(robba.report.lower_holds);
    CHECK(robba.report.upper_holds);
    LhResult zero = build_Lh(th::rank_one(ctx, {{-2, "pi"}}), 0, 1, I);
    CHECK(zero.report.selection.lambdas.size() == 2);
    CHECK(zero.report.lower_holds);
    for (long h : {1, 2}) {
        LhResult L = build_Lh(th::rank_one(ctx, {{-2, "pi"}}), h, 1, I);
        CHECK(L.report.lower_holds);
        CHECK(L.report.upper_holds);
        CHECK(L.L.form == OpForm::Delta);
    }
}
