#include "helpers.hpp"

#include <random>

using namespace pslopes;
using th::poly;
using th::q;

namespace {

LaurentPoly random_poly(const Ctx& ctx, std::mt19937& rng, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> e(lo, hi), u(-6, 6), pw(-1, 2), n(1, 4);
    std::map<long, KElem> terms;
    for (int i = n(rng); i > 0; --i) {
        int c = u(rng);
        if (c == 0) c = 1;
        KElem k = KElem::from_rational(ctx, c, pw(rng));
        long ex = e(rng);
        auto it = terms.find(ex);
        if (it == terms.end())
            terms.emplace(ex, k);
        else
            it->second = it->second + k;
    }
    return LaurentPoly::from_terms(ctx, terms);
}

}  // namespace

TEST_CASE("ring operations") {
    auto ctx = make_ctx(3, 30);
    CHECK(exactly_equal(derivative(poly(ctx, {{2, "1"}})), poly(ctx, {{1, "2"}})));
    CHECK(exactly_equal(poly(ctx, {{-1, "1"}}) * poly(ctx, {{1, "1"}}), LaurentPoly::constant(ctx, 1)));
    for (long k : {-3, 0, 5}) CHECK(exactly_equal(theta(poly(ctx, {{k, "1"}})), poly(ctx, {{k, std::to_string(k)}})));
    CHECK(exactly_equal(divided_derivative(poly(ctx, {{5, "1"}}), 2), poly(ctx, {{3, "10"}})));
    CHECK(exactly_equal(substitute_power(poly(ctx, {{-1, "2"}, {2, "1"}}), 3), poly(ctx, {{-3, "2"}, {6, "1"}})));
}

TEST_CASE("parallel and serial products are identical") {
    auto ctx = make_ctx(5, 40);
    std::mt19937 rng(3);
    for (int i = 0; i < 50; ++i) {
        LaurentPoly f = random_poly(ctx, rng, -20, 20), g = random_poly(ctx, rng, -20, 20);
        CHECK(exactly_equal(mul(f, g), mul_serial(f, g)));
    }
}

TEST_CASE("gauss profile matches the termwise minimum") {
    auto ctx = make_ctx(3, 40);
    std::mt19937 rng(8);
    Annulus ann(-1, 2);
    for (int i = 0; i < 60; ++i) {
        LaurentPoly f = random_poly(ctx, rng);
        if (f.trimmed().is_exact_zero()) continue;
        PLFun w = gauss_profile(f, ann);
        CHECK(plf_is_concave(w));
        for (int k = -4; k <= 8; ++k) CHECK(w.eval(frac(k, 4)) == th::gauss_oracle(f, frac(k, 4)));
        LaurentPoly g = random_poly(ctx, rng);
        if (g.trimmed().is_exact_zero()) continue;
        PLFun wfg = gauss_profile(f * g, ann), sum = plf_combine(PLOp::Add, w, gauss_profile(g, ann));
        CHECK(plf_leq_on(wfg, sum, ann).holds);
        CHECK(plf_leq_on(sum, wfg, ann).holds);
    }
}

TEST_CASE("profile examples") {
    auto ctx = make_ctx(3, 30);
    PLFun w = gauss_profile(poly(ctx, {{-1, "pi"}, {1, "1"}}), Annulus(0, 1));
    CHECK(w.breakpoints() == std::vector<Rational>{q("1/4")});
    CHECK(w.eval(0) == 0);
    CHECK(w.eval(1) == q("-1/2"));
    LaurentPoly f = poly(ctx, {{0, "3"}, {2, "1"}});
    DLog a = dlog_sides(f, q("1/2")), b = dlog_sides(f, 1);
    CHECK(a.minus == 0);
    CHECK(a.plus == 2);
    CHECK(b.minus == 0);
    CHECK(b.plus == 0);
    CHECK(count_zeros(f, q("1/4"), 1) == 2);
    CHECK(count_zeros(poly(ctx, {{1, "1"}}), q("1/4"), 1) == 0);
    CHECK(gen_ord(poly(ctx, {{1, "1"}}), Side::Plus, q("1/2"), Annulus(q("1/4"), 1)) == 1);
    CHECK(gen_ord(f, Side::Plus, 1, Annulus(0, 2)) == 2);
}

TEST_CASE("zero counts are additive and gen_ord does not depend on t") {
    auto ctx = make_ctx(3, 40);
    std::mt19937 rng(21);
    Annulus ann(0, 2);
    for (int i = 0; i < 40; ++i) {
        LaurentPoly f = random_poly(ctx, rng).trimmed(), g = random_poly(ctx, rng).trimmed();
        if (f.is_exact_zero() || g.is_exact_zero()) continue;
        CHECK(count_zeros(f, 0, 1) + count_zeros(f, 1, 2) - count_zeros(f, 1, 1) == count_zeros(f, 0, 2));
        for (Side s : {Side::Plus, Side::Minus}) {
            long a = gen_ord(f, s, q("1/3"), ann);
            CHECK(gen_ord(f, s, 1, ann) == a);
            CHECK(gen_ord(f, s, q("7/4"), ann) == a);
            CHECK(gen_ord(f * g, s, 1, ann) == a + gen_ord(g, s, 1, ann));
        }
    }
}

TEST_CASE("truncated windows") {
    auto ctx = make_ctx(3, 30);
    std::vector<KElem> c{KElem::from_rational(ctx, 1), KElem::from_rational(ctx, 1), KElem::from_rational(ctx, 1)};
    LaurentPoly up(ctx, 0, c, false, true), down(ctx, -2, c, true, false);
    LaurentPoly prod = up * poly(ctx, {{1, "1"}});
    CHECK(prod.trunc_hi());
    CHECK(prod.hi() == 3);
    CHECK_THROWS_AS(up * down, WindowError);
    CHECK_THROWS(up.coeff(5));
    // The top known exponent attains the envelope somewhere on the annulus.
    CHECK_THROWS(gauss_profile(up, Annulus(0, 1)));
    LaurentPoly geometric(ctx, 0, {KElem::from_rational(ctx, 1), KElem::from_rational(ctx, 3), KElem::from_rational(ctx, 9)}, false, true);
    CHECK_NOTHROW(gauss_profile(geometric, Annulus(q("-1/2"), 1)));
    CHECK_THROWS_AS(gauss_profile(geometric, Annulus(-3, 1)), WindowError);
}
