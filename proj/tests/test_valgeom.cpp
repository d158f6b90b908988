#include "helpers.hpp"

#include <random>

using namespace pslopes;
using th::q;

TEST_CASE("lower envelope agrees with pointwise minimum") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> slope(-4, 4), icpt(-10, 10), n(1, 5);
    TInterval dom(-2, 3);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Line> lines;
        for (int i = n(rng); i > 0; --i) lines.push_back(Line{frac(icpt(rng), 3), slope(rng)});
        PLFun f = lower_envelope(lines, dom);
        CHECK(plf_is_concave(f));
        for (int k = -24; k <= 36; ++k) {
            Rational t = frac(k, 12);
            Rational m = lines[0].at(t);
            for (const auto& l : lines) m = std::min(m, l.at(t));
            CHECK(f.eval(t) == m);
        }
    }
}

TEST_CASE("empty envelope is refused") {
    CHECK_THROWS_AS(lower_envelope({}, TInterval(0, 1)), DomainError);
}

TEST_CASE("combine, restrict and side slopes") {
    TInterval dom(0, 4);
    PLFun f = PLFun::line(0, 1, dom), g = PLFun::constant(2, dom);
    PLFun m = plf_combine(PLOp::Min, f, g);
    CHECK(m.breakpoints() == std::vector<Rational>{2});
    CHECK(m.eval(1) == 1);
    CHECK(m.eval(3) == 2);
    PLFun M = plf_combine(PLOp::Max, f, g);
    CHECK(M.eval(1) == 2);
    CHECK(plf_is_convex(M));
    auto s = plf_side_slopes(m, 2);
    CHECK(*s.left == 1);
    CHECK(*s.right == 0);
    CHECK(m.restrict(TInterval(3, 4)).segments().size() == 1);
    CHECK(plf_add_line(f, 1, -1).eval(3) == 1);
    CHECK(plf_scale(f, -2).eval(1) == -2);
}

TEST_CASE("leq reports the worst point") {
    TInterval dom(0, 2);
    PLFun f = PLFun::line(0, 1, dom), c = PLFun::constant(q("1/2"), dom);
    auto r = plf_leq_on(f, c, dom);
    CHECK_FALSE(r.holds);
    CHECK(*r.witness == 2);
    CHECK(plf_leq_on(f, c, TInterval(0, q("1/2"))).holds);
}

TEST_CASE("discontinuous or empty data is refused") {
    CHECK_THROWS_AS(TInterval(1, 0), DomainError);
    CHECK_THROWS_AS(PLFun(TInterval(0, 2), {Segment{0, 1, 0, 0}, Segment{1, 2, 0, 1}}), DomainError);
}

TEST_CASE("Val arithmetic with infinity") {
    Val a(q("1/2")), inf = Val::infinity();
    CHECK((a + inf).is_inf());
    CHECK(a < inf);
    CHECK(min(a, inf) == a);
    CHECK(to_string(inf) == "inf");
}
