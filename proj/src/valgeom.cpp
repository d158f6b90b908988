#include "pslopes/valgeom.hpp"

#include <algorithm>
#include <map>

namespace pslopes {

const Rational& Val::value() const {
    if (inf_) throw DomainError("value of infinite valuation");
    return q_;
}

Val operator+(const Val& a, const Val& b) {
    if (a.inf_ || b.inf_) return Val::infinity();
    return Val(Rational(a.q_ + b.q_));
}

bool operator==(const Val& a, const Val& b) {
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
    return a.q_ == b.q_;
}

bool operator<(const Val& a, const Val& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.q_ < b.q_;
}

Val min(const Val& a, const Val& b) {
    return b < a ? b : a;
}

std::string to_string(const Val& v) {
    return v.is_inf() ? std::string("inf") : to_string(v.value());
}

TInterval::TInterval(Rational a, Rational b) : lo(std::move(a)), hi(std::move(b)) {
    if (hi < lo) throw DomainError("empty t-interval [" + to_string(lo) + ", " + to_string(hi) + "]");
}

PLFun::PLFun(TInterval dom, std::vector<Segment> segs) : dom_(std::move(dom)) {
    if (segs.empty()) throw DomainError("PLFun without segments");
    if (segs.front().t0 != dom_.lo || segs.back().t1 != dom_.hi)
        throw DomainError("segments do not cover the domain");
    for (std::size_t i = 0; i < segs.size(); ++i) {
        if (segs[i].t1 < segs[i].t0) throw DomainError("reversed segment");
        if (i > 0) {
            if (segs[i].t0 != segs[i - 1].t1) throw DomainError("segments not contiguous");
            if (segs[i].at(segs[i].t0) != segs[i - 1].at(segs[i].t0))
                throw DomainError("PLFun discontinuous at " + to_string(segs[i].t0));
        }
    }
    // Drop zero-length pieces in non-degenerate domains, merge collinear neighbours.
    for (auto& s : segs) {
        if (!dom_.degenerate() && s.t0 == s.t1) continue;
        if (!segs_.empty() && segs_.back().slope == s.slope && segs_.back().intercept == s.intercept)
            segs_.back().t1 = s.t1;
        else
            segs_.push_back(s);
    }
}

PLFun PLFun::constant(const Rational& c, const TInterval& dom) {
    return line(c, 0, dom);
}

PLFun PLFun::line(const Rational& intercept, const Rational& slope, const TInterval& dom) {
    return PLFun(dom, {Segment{dom.lo, dom.hi, slope, intercept}});
}

std::vector<Rational> PLFun::breakpoints() const {
    std::vector<Rational> out;
    for (std::size_t i = 1; i < segs_.size(); ++i) out.push_back(segs_[i].t0);
    return out;
}

Rational PLFun::eval(const Rational& t) const {
    if (!dom_.contains(t))
        throw DomainError("t = " + to_string(t) + " outside [" + to_string(dom_.lo) + ", " +
                          to_string(dom_.hi) + "]");
    auto it = std::lower_bound(segs_.begin(), segs_.end(), t,
                               [](const Segment& s, const Rational& x) { return s.t1 < x; });
    return it->at(t);
}

namespace {

const Segment& piece_over(const PLFun& f, const Rational& a, const Rational& b) {
    Rational mid = (a + b) / 2;
    const auto& segs = f.segments();
    auto it = std::lower_bound(segs.begin(), segs.end(), mid,
                               [](const Segment& s, const Rational& x) { return s.t1 < x; });
    return *it;
}

std::vector<Rational> merged_cuts(const TInterval& dom, const PLFun& f, const PLFun& g) {
    std::vector<Rational> cuts{dom.lo, dom.hi};
    for (const auto& b : f.breakpoints())
        if (dom.lo < b && b < dom.hi) cuts.push_back(b);
    for (const auto& b : g.breakpoints())
        if (dom.lo < b && b < dom.hi) cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    return cuts;
}

}  // namespace

PLFun PLFun::restrict(const TInterval& sub) const {
    if (sub.lo < dom_.lo || dom_.hi < sub.hi) throw DomainError("restriction outside domain");
    std::vector<Segment> out;
    if (sub.degenerate()) {
        const auto& s = piece_over(*this, sub.lo, sub.hi);
        return PLFun(sub, {Segment{sub.lo, sub.hi, s.slope, s.intercept}});
    }
    for (const auto& s : segs_) {
        Rational a = std::max(s.t0, sub.lo), b = std::min(s.t1, sub.hi);
        if (a < b) out.push_back(Segment{a, b, s.slope, s.intercept});
    }
    return PLFun(sub, std::move(out));
}

PLFun lower_envelope(const std::vector<Line>& raw, const TInterval& dom) {
    if (raw.empty()) throw DomainError("zero function has no norm profile");
    // Keep the lowest line per slope.
    std::map<Rational, Rational> best;
    for (const auto& l : raw) {
        auto it = best.find(l.slope);
        if (it == best.end() || l.intercept < it->second) best[l.slope] = l.intercept;
    }
    std::vector<Line> lines;
    for (const auto& [s, b] : best) lines.push_back(Line{b, s});

    auto argmin_at = [&](const Rational& t) {
        std::size_t bi = 0;
        for (std::size_t i = 1; i < lines.size(); ++i) {
            Rational vi = lines[i].at(t), vb = lines[bi].at(t);
            if (vi < vb || (vi == vb && lines[i].slope < lines[bi].slope)) bi = i;
        }
        return bi;
    };

    std::vector<Segment> segs;
    Rational t = dom.lo;
    std::size_t cur = argmin_at(t);
    if (dom.degenerate()) {
        segs.push_back(Segment{t, t, lines[cur].slope, lines[cur].intercept});
        return PLFun(dom, std::move(segs));
    }
    while (true) {
        std::optional<Rational> next;
        std::size_t nxt = cur;
        for (std::size_t j = 0; j < lines.size(); ++j) {
            if (!(lines[j].slope < lines[cur].slope)) continue;
            Rational tc = (lines[j].intercept - lines[cur].intercept) /
                          (lines[cur].slope - lines[j].slope);
            if (!(t < tc)) continue;
            if (!next || tc < *next || (tc == *next && lines[j].slope < lines[nxt].slope)) {
                next = tc;
                nxt = j;
            }
        }
        if (!next || dom.hi <= *next) {
            segs.push_back(Segment{t, dom.hi, lines[cur].slope, lines[cur].intercept});
            break;
        }
        segs.push_back(Segment{t, *next, lines[cur].slope, lines[cur].intercept});
        t = *next;
        cur = nxt;
    }
    return PLFun(dom, std::move(segs));
}

PLFun plf_from_lines(const std::vector<std::pair<Val, long>>& lines, const TInterval& dom) {
    std::vector<Line> finite;
    for (const auto& [v, k] : lines)
        if (!v.is_inf()) finite.push_back(Line{v.value(), Rational(k)});
    return lower_envelope(finite, dom);
}

Val plf_eval(const PLFun& f, const Rational& t) {
    return Val(f.eval(t));
}

PLFun plf_combine(PLOp op, const PLFun& f, const PLFun& g) {
    Rational lo = std::max(f.domain().lo, g.domain().lo);
    Rational hi = std::min(f.domain().hi, g.domain().hi);
    if (hi < lo) throw DomainError("PLFun domains do not intersect");
    TInterval dom(lo, hi);
    auto cuts = merged_cuts(dom, f, g);
    std::vector<Segment> out;
    auto emit = [&](const Rational& a, const Rational& b, const Segment& sf, const Segment& sg) {
        if (op == PLOp::Add) {
            out.push_back(Segment{a, b, sf.slope + sg.slope, sf.intercept + sg.intercept});
            return;
        }
        bool want_min = op == PLOp::Min;
        auto pick = [&](const Rational& x) -> const Segment& {
            bool f_low = sf.at(x) <= sg.at(x);
            return (f_low == want_min) ? sf : sg;
        };
        if (sf.slope != sg.slope) {
            Rational tc = (sg.intercept - sf.intercept) / (sf.slope - sg.slope);
            if (a < tc && tc < b) {
                const auto& s1 = pick((a + tc) / 2);
                const auto& s2 = pick((tc + b) / 2);
                out.push_back(Segment{a, tc, s1.slope, s1.intercept});
                out.push_back(Segment{tc, b, s2.slope, s2.intercept});
                return;
            }
        }
        const auto& s = pick((a + b) / 2);
        out.push_back(Segment{a, b, s.slope, s.intercept});
    };
    if (dom.degenerate()) {
        emit(lo, hi, piece_over(f, lo, hi), piece_over(g, lo, hi));
    } else {
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
            emit(cuts[i], cuts[i + 1], piece_over(f, cuts[i], cuts[i + 1]),
                 piece_over(g, cuts[i], cuts[i + 1]));
    }
    return PLFun(dom, std::move(out));
}

PLFun plf_add_line(const PLFun& f, const Rational& intercept, const Rational& slope) {
    return plf_combine(PLOp::Add, f, PLFun::line(intercept, slope, f.domain()));
}

PLFun plf_scale(const PLFun& f, const Rational& c) {
    std::vector<Segment> segs = f.segments();
    for (auto& s : segs) {
        s.slope *= c;
        s.intercept *= c;
    }
    return PLFun(f.domain(), std::move(segs));
}

LeqResult plf_leq_on(const PLFun& f, const PLFun& g, const TInterval& I) {
    for (const PLFun* h : {&f, &g})
        if (I.lo < h->domain().lo || h->domain().hi < I.hi)
            throw DomainError("comparison interval outside PLFun domain");
    std::vector<Rational> pts{I.lo, I.hi};
    for (const PLFun* h : {&f, &g})
        for (const auto& b : h->breakpoints())
            if (I.lo < b && b < I.hi) pts.push_back(b);
    std::optional<Rational> worst;
    Rational worst_gap;
    for (const auto& t : pts) {
        Rational gap = f.eval(t) - g.eval(t);
        if (gap > 0 && (!worst || gap > worst_gap)) {
            worst = t;
            worst_gap = gap;
        }
    }
    if (worst) return LeqResult{false, worst};
    return LeqResult{true, std::nullopt};
}

SideSlopes plf_side_slopes(const PLFun& f, const Rational& t) {
    const auto& dom = f.domain();
    if (!dom.contains(t)) throw DomainError("t outside PLFun domain");
    SideSlopes out;
    for (const auto& s : f.segments()) {
        if (s.t0 < t && t <= s.t1) out.left = s.slope;
        if (s.t0 <= t && t < s.t1 && !out.right) out.right = s.slope;
    }
    return out;
}

bool plf_is_concave(const PLFun& f) {
    const auto& s = f.segments();
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i].slope > s[i - 1].slope) return false;
    return true;
}

bool plf_is_convex(const PLFun& f) {
    const auto& s = f.segments();
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i].slope < s[i - 1].slope) return false;
    return true;
}

}  // namespace pslopes
