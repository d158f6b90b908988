#include "helpers.hpp"

#include <random>

using namespace pslopes;
using th::q;

TEST_CASE("parse_rational refuses decimals") {
    CHECK(parse_rational("-6/4") == q("-3/2"));
    CHECK_THROWS_WITH_AS(parse_rational("0.5"), doctest::Contains("use 1/2"), SpecError);
    CHECK_THROWS_AS(parse_rational("1e3"), SpecError);
}

TEST_CASE("pi^(p-1) = -p") {
    for (long p : {2, 3, 5, 7}) {
        auto ctx = make_ctx(p, 40);
        KElem x = KElem::from_rational(ctx, 1);
        for (long i = 0; i < p - 1; ++i) x = x * KElem::pi(ctx);
        CHECK(exactly_equal(x, KElem::from_rational(ctx, -p)));
        CHECK(valuation(KElem::pi(ctx)) == Val(frac(1, p - 1)));
    }
}

TEST_CASE("exact arithmetic matches rationals") {
    auto ctx = make_ctx(5, 40);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-200, 200), den(1, 60);
    for (int i = 0; i < 200; ++i) {
        Rational a = frac(num(rng), den(rng)), b = frac(num(rng), den(rng));
        KElem A = KElem::from_rational(ctx, a), B = KElem::from_rational(ctx, b);
        CHECK(exactly_equal(A + B, KElem::from_rational(ctx, a + b)));
        CHECK(exactly_equal(A * B, KElem::from_rational(ctx, a * b)));
        if (a != 0) {
            CHECK(exactly_equal(inv(A), KElem::from_rational(ctx, 1 / a)));
            CHECK(valuation(A) == Val(vp_int(a.get_num(), 5) - vp_int(a.get_den(), 5)));
        }
    }
}

TEST_CASE("inverse of a mixed element") {
    auto ctx = make_ctx(3, 40);
    KElem x = parse_kelem("1 + pi", ctx);
    KElem y = x * inv(x);
    CHECK(exactly_equal(y, KElem::from_rational(ctx, 1)));
    KElem z = parse_kelem("3 + 2*pi", ctx);
    CHECK(valuation(z) == Val(frac(1, 2)));
}

TEST_CASE("parse_kelem grammar") {
    auto ctx = make_ctx(5, 30);
    CHECK(exactly_equal(parse_kelem("1/1*pi^0", ctx), KElem::from_rational(ctx, 1)));
    CHECK(exactly_equal(parse_kelem("1/3*pi^2", ctx), KElem::from_rational(ctx, frac(1, 3), 2)));
    CHECK(exactly_equal(parse_kelem("pi^4", ctx), KElem::from_rational(ctx, -5)));
    CHECK_THROWS_AS(parse_kelem("0.2", ctx), SpecError);
    CHECK_THROWS_AS(parse_kelem("", ctx), SpecError);
}

TEST_CASE("rounded values keep precision and valuation") {
    auto ctx = make_ctx(3, 20);
    KElem x = KElem::from_rational(ctx, frac(7, 2));
    KElem r = x.rounded(10);
    CHECK_FALSE(r.all_exact());
    CHECK(valuation(r) == Val(0));
    KElem d = r - x;
    CHECK(d.is_zero_at_prec());
    CHECK(lower_bound(d) >= Val(10));
    CHECK_THROWS_AS(valuation(d), PrecisionError);
}

TEST_CASE("contexts") {
    CHECK(is_prime(7));
    CHECK_FALSE(is_prime(9));
    CHECK_THROWS(make_ctx(4, 10));
    CHECK(vp_factorial(25, 5) == 6);
}

TEST_CASE("embedded rationals") {
    auto ctx = make_ctx(5, 30);
    CHECK(valuation(rational_embed(8, 27, 1, ctx)) == Val(frac(1, 4)));
    CHECK(valuation(rational_embed(1, 3, 2, ctx)) == Val(frac(1, 2)));
    CHECK(valuation(parse_kelem("8/27*pi", ctx)) == Val(frac(1, 4)));
    KElem a = parse_kelem("2 - pi^3", ctx);
    CHECK((a - a).is_exact_zero());
}
