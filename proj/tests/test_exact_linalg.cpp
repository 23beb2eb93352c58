#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "contextlab/linalg.hpp"
#include "contextlab/ray.hpp"
#include "contextlab/rays_io.hpp"

using namespace contextlab;

namespace {

ExactVec ev3(long a, long b, long c) {
    ExactVec v(3);
    v[0] = RationalComplex(a);
    v[1] = RationalComplex(b);
    v[2] = RationalComplex(c);
    return v;
}

}  // namespace

TEST_CASE("rational parsing") {
    CHECK(parse_rational("2/3") == Rational(2, 3));
    CHECK(parse_rational("-5") == Rational(-5));
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(parse_rational(""), error);
    CHECK_THROWS_AS(parse_rational("x"), error);
    CHECK_THROWS_AS(parse_rational("1/0"), error);
    CHECK_THROWS_AS(make_rational(1, 0), error);
}

TEST_CASE("rational complex field operations") {
    RationalComplex a(Rational(2, 3), Rational(-1, 2));
    RationalComplex b(Rational(5), Rational(1, 7));
    RationalComplex c(Rational(-3, 4), Rational(9));

    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * (b * c) == (a * b) * c);
    CHECK(a * b == b * a);
    CHECK(a - a == RationalComplex(0));
    CHECK((a / b) * b == a);
    CHECK(conj(a * b) == conj(a) * conj(b));
    CHECK(abs2(a) == a.re * a.re + a.im * a.im);
    CHECK(abs2(a * b) == abs2(a) * abs2(b));
    CHECK_THROWS_AS(a / RationalComplex(0), error);

    CHECK(to_string(RationalComplex(Rational(1, 2))) == "1/2");
    CHECK(to_string(RationalComplex(Rational(0), Rational(-2))) == "-2i");
    CHECK(to_string(RationalComplex(Rational(1), Rational(1))) == "1+1i");
}

TEST_CASE("inner product is conjugate-linear in the first slot") {
    ExactVec u(2), v(2);
    u[0] = RationalComplex(1, 2);   // 1 + 2i
    u[1] = RationalComplex(0, -1);  // -i
    v[0] = RationalComplex(3, 0);
    v[1] = RationalComplex(1, 1);

    ExactScalar uv = inner_product(u, v);
    ExactScalar vu = inner_product(v, u);
    CHECK(uv == conj(vu));

    // <u|u> is real and positive.
    ExactScalar uu = inner_product(u, u);
    CHECK(uu.im == 0);
    CHECK(uu.re > 0);

    // Scaling the second argument scales the product linearly.
    RationalComplex s(Rational(2, 5), Rational(1, 3));
    CHECK(inner_product(u, s * v) == s * uv);
}

TEST_CASE("canonical ray representative is scale invariant") {
    ExactRay a = ExactRay::canonical(ev3(2, 2, 2));
    ExactRay b = ExactRay::canonical(ev3(-7, -7, -7));
    CHECK(ray_equal(a, b));
    CHECK(to_string(a) == "(1,1,1)");

    ExactRay c = ExactRay::canonical(ev3(0, -3, 3));
    CHECK(to_string(c) == "(0,1,-1)");

    // Complex scaling also collapses to the same representative.
    ExactVec v = ev3(1, 1, -1);
    ExactVec w = RationalComplex(0, 5) * v;  // multiply by 5i
    CHECK(ray_equal(ExactRay::canonical(v), ExactRay::canonical(w)));

    CHECK_THROWS_AS(ExactRay::canonical(ev3(0, 0, 0)), error);
}

TEST_CASE("orthogonal complement in dimension 3") {
    ExactVec u = ev3(1, 0, 0), v = ev3(0, 1, 0);
    ExactVec w = orthogonal_complement3(u, v);
    CHECK(inner_product(w, u).is_zero());
    CHECK(inner_product(w, v).is_zero());
    CHECK(ray_equal(ExactRay::canonical(w), ExactRay::canonical(ev3(0, 0, 1))));

    // Complex entries: the complement must be orthogonal under the
    // conjugating inner product, not the bilinear one.
    ExactVec a(3), b(3);
    a[0] = RationalComplex(1, 1);
    a[1] = RationalComplex(0, 2);
    a[2] = RationalComplex(3, 0);
    b[0] = RationalComplex(0, 1);
    b[1] = RationalComplex(1, -1);
    b[2] = RationalComplex(2, 2);
    ExactVec r = orthogonal_complement3(a, b);
    CHECK(inner_product(r, a).is_zero());
    CHECK(inner_product(r, b).is_zero());
}

TEST_CASE("projection and standard basis vectors") {
    ExactVec e0 = standard_basis_vector<ExactScalar>(3, 0);
    ExactVec e2 = standard_basis_vector<ExactScalar>(3, 2);
    CHECK(inner_product(e0, e2).is_zero());
    CHECK(inner_product(e0, e0) == RationalComplex(1));

    std::vector<ExactVec> span{ev3(1, 1, 0)};
    ExactVec res = project_out(ev3(1, 0, 0), span);
    CHECK(inner_product(res, span[0]).is_zero());
    CHECK_FALSE(res.is_zero());
}

TEST_CASE("pair completion in dimension 3") {
    ExactRay u = ExactRay::canonical(ev3(1, 0, 0));
    ExactRay v = ExactRay::canonical(ev3(0, 1, 1));
    ExactRay w = complete_pair_d3(u, v);
    CHECK(inner_product(w.vec(), u.vec()).is_zero());
    CHECK(inner_product(w.vec(), v.vec()).is_zero());
    CHECK(ray_equal(w, ExactRay::canonical(ev3(0, 1, -1))));
}

TEST_CASE("completion of a partial orthogonal set to a basis") {
    std::vector<ExactRay> partial{ExactRay::canonical(ev3(1, 1, 1)),
                                  ExactRay::canonical(ev3(1, -1, 0))};
    BasisCompletion<ExactScalar> comp = complete_to_basis<ExactScalar>(partial, 3);
    CHECK(comp.added.size() == 1);
    CHECK(comp.basis.members.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            CHECK(inner_product(comp.basis.members[i].vec(), comp.basis.members[j].vec())
                      .is_zero());

    // Completing a full set adds nothing.
    std::vector<ExactRay> full{ExactRay::canonical(ev3(1, 0, 0)),
                               ExactRay::canonical(ev3(0, 1, 0)),
                               ExactRay::canonical(ev3(0, 0, 1))};
    CHECK(complete_to_basis<ExactScalar>(full, 3).added.empty());
}

TEST_CASE("orthobasis rejects non-orthogonal members") {
    std::vector<ExactRay> bad{ExactRay::canonical(ev3(1, 0, 0)),
                              ExactRay::canonical(ev3(1, 1, 0)),
                              ExactRay::canonical(ev3(0, 0, 1))};
    CHECK_THROWS_AS(OrthoBasis<ExactScalar>::checked(3, bad), error);

    std::vector<ExactRay> good{ExactRay::canonical(ev3(1, 1, 0)),
                               ExactRay::canonical(ev3(1, -1, 0)),
                               ExactRay::canonical(ev3(0, 0, 1))};
    CHECK(OrthoBasis<ExactScalar>::checked(3, good).members.size() == 3);
}

TEST_CASE("ray set construction rejects duplicates") {
    std::vector<ExactVec> vecs{ev3(1, 0, 0), ev3(2, 0, 0)};
    CHECK_THROWS_AS(ExactRaySet::from_vectors(vecs), error);
}

TEST_CASE("exact/float conversion preserves orthogonality") {
    ExactVec a(3), b(3);
    a[0] = RationalComplex(1, 1);
    a[1] = RationalComplex(1, -1);
    a[2] = RationalComplex(0);
    b[0] = RationalComplex(0, 1);
    b[1] = RationalComplex(1, 0);
    b[2] = RationalComplex(0);
    // <a|b> = conj(1+i)(i) + conj(1-i)(1) = (1-i)i + (1+i) = i+1+1+i = 2+2i: not orthogonal.
    CHECK_FALSE(inner_product(a, b).is_zero());
    ExactVec c = orthogonal_complement3(a, b);
    FloatVec fa = to_float_vec(a), fc = to_float_vec(c);
    CHECK(std::abs(inner_product(fa, fc)) < 1e-12);
}

TEST_CASE("rays file round trip keeps rays, labels, and mode") {
    ExactRaySet rs = ExactRaySet::from_vectors({ev3(1, 0, 0), ev3(0, 1, 1), ev3(1, 1, -1)},
                                               {"a", "b", "c"});
    std::string text = format_rays(ModalRaySet(rs));
    std::istringstream in(text);
    ModalRaySet back = parse_rays(in);
    REQUIRE(is_exact(back));
    const ExactRaySet& brs = std::get<ExactRaySet>(back);
    REQUIRE(brs.size() == 3);
    CHECK(brs.labels == std::vector<std::string>{"a", "b", "c"});
    for (std::size_t i = 0; i < 3; ++i) CHECK(ray_equal(brs.rays[i], rs.rays[i]));
}

TEST_CASE("rays parser rejects malformed input") {
    std::istringstream bad1("(1,0\n");
    CHECK_THROWS_AS(parse_rays(bad1), error);
    std::istringstream bad2("(1,0,0)\n(1,0)\n");  // mixed dimension
    CHECK_THROWS_AS(parse_rays(bad2), error);
    std::istringstream bad3("(0,0,0)\n");
    CHECK_THROWS_AS(parse_rays(bad3), error);
}
