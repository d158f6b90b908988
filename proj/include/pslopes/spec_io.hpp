#pragma once

// JSON job specs. Every rational travels as a string such as "-3/4".

#include "pslopes/selection.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace pslopes {

using ojson = nlohmann::ordered_json;

struct SelectSpec {
    TInterval interval;
    std::vector<std::optional<PLFun>> profiles;
    PLFun c;
};

struct JobSpec {
    Ctx ctx;
    Annulus ann{0, 1};
    std::optional<DiffOp> op;
    std::optional<DiffModule> module;  // given, or the companion of op
    std::vector<Rational> ts;
    long kmax = 0;
    std::optional<long> q, h;
    Rational gamma = 0;
    std::optional<Rational> beta;
    Rational t_boundary = 0;
    std::string mode = "inequality";
    std::optional<MatLaurent> intertwiner;
    std::optional<NewtonPolygon> polygon;
    std::optional<SelectSpec> select;
};

// Text starting with '{' is parsed as JSON; anything else is a file path.
JobSpec parse_spec(const std::string& text_or_path, std::optional<long> precision_override = std::nullopt);

LaurentPoly laurent_from_json(const ojson& j, const Ctx& ctx, const std::string& where);
ojson laurent_to_json(const LaurentPoly& f);
ojson plf_to_json(const PLFun& f);
// Piecewise-linear interpolation through [[t, v], ...].
PLFun plf_from_points(const ojson& j, const std::string& where);

inline std::string rstr(const Rational& q) { return to_string(q); }

}  // namespace pslopes
