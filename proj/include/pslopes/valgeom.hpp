#pragma once

// Exact valuations and piecewise-linear profiles in t = -log_p(rho).
// Bigger valuation means smaller norm; inner radius means larger t.

#include "pslopes/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace pslopes {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

class Val {
public:
    Val() : inf_(true) {}
    Val(const Rational& q) : inf_(false), q_(q) {}  // NOLINT: implicit by design
    Val(long n) : inf_(false), q_(n) {}             // NOLINT

    static Val infinity() { return Val(); }

    bool is_inf() const { return inf_; }
    const Rational& value() const;

    friend Val operator+(const Val& a, const Val& b);
    friend bool operator==(const Val& a, const Val& b);
    friend bool operator<(const Val& a, const Val& b);
    friend bool operator<=(const Val& a, const Val& b) { return !(b < a); }
    friend bool operator>(const Val& a, const Val& b) { return b < a; }
    friend bool operator>=(const Val& a, const Val& b) { return !(a < b); }

private:
    bool inf_;
    Rational q_;
};

Val min(const Val& a, const Val& b);
std::string to_string(const Val& v);

struct TInterval {
    Rational lo, hi;
    TInterval() = default;
    TInterval(Rational a, Rational b);
    bool contains(const Rational& t) const { return lo <= t && t <= hi; }
    bool degenerate() const { return lo == hi; }
};

// Line v + slope * t.
struct Line {
    Rational intercept;
    Rational slope;
    Rational at(const Rational& t) const { return intercept + slope * t; }
};

struct Segment {
    Rational t0, t1;
    Rational slope, intercept;
    Rational at(const Rational& t) const { return intercept + slope * t; }
};

class PLFun {
public:
    PLFun() = default;
    PLFun(TInterval dom, std::vector<Segment> segs);

    static PLFun constant(const Rational& c, const TInterval& dom);
    static PLFun line(const Rational& intercept, const Rational& slope, const TInterval& dom);

    const TInterval& domain() const { return dom_; }
    const std::vector<Segment>& segments() const { return segs_; }
    std::vector<Rational> breakpoints() const;

    Rational eval(const Rational& t) const;
    PLFun restrict(const TInterval& sub) const;

private:
    TInterval dom_;
    std::vector<Segment> segs_;
};

// Lower envelope of lines over the domain.
PLFun lower_envelope(const std::vector<Line>& lines, const TInterval& dom);

// min_k (v_k + k t) over finite v_k.
PLFun plf_from_lines(const std::vector<std::pair<Val, long>>& lines, const TInterval& dom);

Val plf_eval(const PLFun& f, const Rational& t);

enum class PLOp { Add, Min, Max };
PLFun plf_combine(PLOp op, const PLFun& f, const PLFun& g);
PLFun plf_add_line(const PLFun& f, const Rational& intercept, const Rational& slope);
PLFun plf_scale(const PLFun& f, const Rational& c);

struct LeqResult {
    bool holds;
    std::optional<Rational> witness;
    explicit operator bool() const { return holds; }
};

LeqResult plf_leq_on(const PLFun& f, const PLFun& g, const TInterval& I);

struct SideSlopes {
    std::optional<Rational> left, right;
};

SideSlopes plf_side_slopes(const PLFun& f, const Rational& t);

bool plf_is_concave(const PLFun& f);
bool plf_is_convex(const PLFun& f);

}  // namespace pslopes
