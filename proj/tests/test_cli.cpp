#include "helpers.hpp"

#include "pslopes/jobs.hpp"
#include "pslopes/spec_io.hpp"

using namespace pslopes;
using th::q;

TEST_CASE("minimal spec") {
    JobSpec j = parse_spec(R"({"ctx": {"p": 3}, "module": {"rank": 1, "connection": [[[[-1, "1/1*pi^0"]]]]}})");
    REQUIRE(j.module);
    CHECK(j.module->rank() == 1);
    CHECK(j.kmax == 27);
    CHECK(j.ctx->precision() == 60);
}

TEST_CASE("schema errors") {
    CHECK_THROWS_WITH(parse_spec(R"({"ctx": {"p": 3}, "params": {"t": ["0.5"]}})"), doctest::Contains("use 1/2"));
    CHECK_THROWS_WITH(parse_spec(R"({"ctx": {"p": 3}, "params": {"t": [0.5]}})"), doctest::Contains("use 1/2"));
    CHECK_THROWS_WITH(parse_spec(R"({"ctx": {"p": 3}, "colour": 1})"), doctest::Contains("colour"));
    CHECK_THROWS(parse_spec(R"({"ctx": {"p": 4}})"));
    CHECK_THROWS(parse_spec("{"));
}

TEST_CASE("operator spec converts to Delta form") {
    JobSpec j = parse_spec(R"({"ctx": {"p": 5, "precision": 80},
        "operator": {"form": "dx", "terms": [[2, [[3, "9"]]], [1, [[2, "9"]]], [0, [[1, "-1"], [0, "1/3*pi^2"]]]]}})");
    REQUIRE(j.op);
    DiffOp D = to_form(*j.op, OpForm::Delta);
    CHECK(exactly_equal(D.coeff(2), th::poly(j.ctx, {{3, "18"}})));
    CHECK(j.module.has_value());
}

TEST_CASE("jobs are deterministic") {
    JobSpec j = parse_spec(R"({"ctx": {"p": 3}, "module": {"rank": 1, "connection": [[[[-2, "pi"]]]]},
        "params": {"t": ["1/25", "1/50", "1/100"]}})");
    JobOutput a = run_job("slope", j), b = run_job("slope", j);
    CHECK(a.report.dump() == b.report.dump());
    CHECK(a.exit_code == 0);
    JobSpec np = parse_spec(R"({"ctx": {"p": 5}, "polygon": [["1/2", 2]]})");
    JobOutput irr = run_job("irr", np);
    CHECK(irr.report.at("irregularity") == 1);
    CHECK_THROWS(run_job("frobnicate", j));
}
