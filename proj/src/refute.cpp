#include "contextlab/refute.hpp"

namespace contextlab {

namespace {

using RVec3 = std::array<Rational, 3>;

RVec3 cross(const RVec3& a, const RVec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const RVec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

bool proportional(const RVec3& a, const RVec3& b) {
    return !is_zero(a) && !is_zero(b) && is_zero(cross(a, b));
}

struct TrigPair {
    Rational c, s;  // exact cos/sin surrogate: c^2 + s^2 == 1
};

TrigPair half_angle(const Rational& t) {
    Rational t2 = t * t;
    Rational den = t2 + 1;
    return {(1 - t2) / den, 2 * t / den};
}

// Everything the derivation schedule produces at one parameter point.
struct Chain {
    RVec3 ab{Rational(1), Rational(0), Rational(0)};
    RVec3 ac{Rational(0), Rational(1), Rational(0)};
    RVec3 ad{Rational(0), Rational(0), Rational(1)};
    RVec3 bf, bh, cg, de;       // one shared letter: one free angle each
    RVec3 gh, ef;               // forced by two earlier rays
    RVec3 eg_from_g, eg_from_e; // the two competing derivations
    RVec3 cand_cross;           // cross(eg_from_g, eg_from_e)
};

Chain build_chain(const TrigPair& a1, const TrigPair& a2, const TrigPair& a3) {
    Chain ch;
    ch.bf = {Rational(0), a1.c, a1.s};
    ch.bh = {Rational(0), a1.s, -a1.c};  // completes {ab, bf}
    ch.cg = {a2.c, Rational(0), a2.s};
    ch.de = {a3.c, a3.s, Rational(0)};
    ch.gh = cross(ch.cg, ch.bh);         // orthogonal to both letter-G and letter-H partners
    ch.ef = cross(ch.de, ch.bf);
    ch.eg_from_g = cross(ch.cg, ch.gh);
    ch.eg_from_e = cross(ch.de, ch.ef);
    ch.cand_cross = cross(ch.eg_from_g, ch.eg_from_e);
    return ch;
}

// The closed forms the derivation is expected to reproduce.
RVec3 stated_gh(const TrigPair& a1, const TrigPair& a2) {
    return {-a1.s * a2.s, a1.c * a2.c, a1.s * a2.c};
}
RVec3 stated_ef(const TrigPair& a1, const TrigPair& a3) {
    return {a1.s * a3.s, -a1.s * a3.c, a1.c * a3.c};
}

// With Y, Z the middle/last cross components of the two candidate
// derivations, s3*Z*c1*c2 - s2*Y*c1*c3 == c1^2*c2*c3 * s1*(s2^2+s3^2)
// as polynomials; so Y = Z = 0 at nonzero c1,c2,c3,s1 forces
// s2^2 = -s3^2.
bool key_identity_at(const TrigPair& a1, const TrigPair& a2, const TrigPair& a3,
                     const Chain& ch) {
    const Rational& Y = ch.cand_cross[1];
    const Rational& Z = ch.cand_cross[2];
    Rational lhs = a3.s * Z * a1.c * a2.c - a2.s * Y * a1.c * a3.c;
    Rational rhs = a1.c * a1.c * a2.c * a3.c * a1.s * (a2.s * a2.s + a3.s * a3.s);
    return lhs == rhs;
}

// X component should be s1^2 + (c1 c2 c3)^2, strictly positive at generic
// parameters: the two derivations can never actually agree.
bool cross_x_matches(const TrigPair& a1, const TrigPair& a2, const TrigPair& a3,
                     const Chain& ch) {
    Rational expect = a1.s * a1.s + a1.c * a1.c * a2.c * a2.c * a3.c * a3.c;
    return ch.cand_cross[0] == expect && expect > 0;
}

RefutationSample evaluate_sample(const Rational& t1, const Rational& t2, const Rational& t3) {
    TrigPair a1 = half_angle(t1), a2 = half_angle(t2), a3 = half_angle(t3);
    Chain ch = build_chain(a1, a2, a3);
    RefutationSample s;
    s.t1 = t1;
    s.t2 = t2;
    s.t3 = t3;
    s.gh_matches_stated_form = proportional(ch.gh, stated_gh(a1, a2));
    s.ef_matches_stated_form = proportional(ch.ef, stated_ef(a1, a3));
    s.candidates_not_proportional = !is_zero(ch.cand_cross);
    s.key_identity_holds = key_identity_at(a1, a2, a3, ch);
    return s;
}

}  // namespace

RefutationReport refute_obstruction() {
    RefutationReport rep;

    // 13 values per variable: the certified identities have per-variable
    // degree at most 12 after clearing the (1+t^2) denominators, so
    // agreement on this grid is agreement as polynomials.
    const std::vector<Rational> grid = {
        parse_rational("1/2"), parse_rational("1/3"), parse_rational("1/5"),
        parse_rational("2/3"), parse_rational("3/5"), parse_rational("1/7"),
        parse_rational("2/7"), parse_rational("3/7"), parse_rational("4/7"),
        parse_rational("5/7"), parse_rational("6/7"), parse_rational("2/5"),
        parse_rational("4/5")};

    bool forms_ok = true, identity_ok = true, cross_ok = true;
    int points = 0;
    for (const Rational& t1 : grid)
        for (const Rational& t2 : grid)
            for (const Rational& t3 : grid) {
                TrigPair a1 = half_angle(t1), a2 = half_angle(t2), a3 = half_angle(t3);
                Chain ch = build_chain(a1, a2, a3);
                forms_ok = forms_ok && proportional(ch.gh, stated_gh(a1, a2)) &&
                           proportional(ch.ef, stated_ef(a1, a3));
                identity_ok = identity_ok && key_identity_at(a1, a2, a3, ch);
                cross_ok = cross_ok && cross_x_matches(a1, a2, a3, ch);
                ++points;
            }
    rep.grid_points_checked = points;
    rep.stated_forms_all_match = forms_ok;
    rep.key_identity_certified = identity_ok;
    rep.cross_positive_on_grid = cross_ok;

    // Any vanishing parameter collapses a derived ray onto one of the fixed
    // basis rays, contradicting ray distinctness; so the generic case above
    // is the only case, and it admits no solution either.
    struct Pin {
        const char* note;
        Rational t1, t2, t3;
        RVec3 Chain::* derived;
        RVec3 Chain::* fixed;
    };
    const Rational zero(0), one(1), half = parse_rational("1/2");
    const std::vector<Pin> pins = {
        {"s1=0 collapses bf onto ac", zero, half, half, &Chain::bf, &Chain::ac},
        {"c1=0 collapses bf onto ad", one, half, half, &Chain::bf, &Chain::ad},
        {"s2=0 collapses cg onto ab", half, zero, half, &Chain::cg, &Chain::ab},
        {"c2=0 collapses cg onto ad", half, one, half, &Chain::cg, &Chain::ad},
        {"s3=0 collapses de onto ab", half, half, zero, &Chain::de, &Chain::ab},
        {"c3=0 collapses de onto ac", half, half, one, &Chain::de, &Chain::ac},
    };
    bool pins_ok = true;
    for (const Pin& pin : pins) {
        Chain ch = build_chain(half_angle(pin.t1), half_angle(pin.t2), half_angle(pin.t3));
        bool holds = proportional(ch.*(pin.derived), ch.*(pin.fixed));
        pins_ok = pins_ok && holds;
        rep.degenerate_notes.push_back(std::string(pin.note) + (holds ? "" : " [FAILED]"));
    }
    rep.degenerate_cases_pinned = pins_ok;

    rep.highlighted.push_back(
        evaluate_sample(parse_rational("1/2"), parse_rational("1/3"), parse_rational("1/5")));
    rep.highlighted.push_back(
        evaluate_sample(parse_rational("2/3"), parse_rational("3/5"), parse_rational("1/7")));
    rep.highlighted.push_back(
        evaluate_sample(parse_rational("1/3"), parse_rational("1/2"), parse_rational("4/5")));

    bool all = forms_ok && identity_ok && cross_ok && pins_ok;
    for (const RefutationSample& s : rep.highlighted)
        all = all && s.gh_matches_stated_form && s.ef_matches_stated_form &&
              s.candidates_not_proportional && s.key_identity_holds;
    rep.status = all ? "refuted" : "inconclusive";
    return rep;
}

}  // namespace contextlab
