#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "inertia/error.hpp"
#include "inertia/hypersurface.hpp"

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace inertia;
using testfix::poly_from;

namespace {
const Field Q = Field::rationals();
const Field F7 = Field::prime(7);

// sparse evaluation stand-in for the oracle's callable interface
long long x1_affine(long long x, long long y) { return x * x * y * y + x + y; }
} // namespace

TEST_CASE("decomposition of x^2 y^2 + x + y on both axes") {
    MultiQuadric x = testfix::x1(Q);

    AxisDecomposition d1 = x.decompose(0);
    CHECK(d1.f0 == poly_from(Q, 2, {{{0, 2}, 1}})); // y^2
    CHECK(d1.f1 == poly_from(Q, 2, {{{0, 0}, 1}})); // 1
    CHECK(d1.f2 == poly_from(Q, 2, {{{0, 1}, 1}})); // y

    AxisDecomposition d2 = x.decompose(1);
    CHECK(d2.f0 == poly_from(Q, 2, {{{2, 0}, 1}})); // x^2
    CHECK(d2.f1 == poly_from(Q, 2, {{{0, 0}, 1}})); // 1
    CHECK(d2.f2 == poly_from(Q, 2, {{{1, 0}, 1}})); // x

    // independent finite-difference extraction at sampled y values
    for (long long y = -4; y <= 4; ++y) {
        oracle::FiberCoeffs fc = oracle::extract_fiber(x1_affine, y);
        std::vector<Scalar> at{Scalar::zero(Q), Scalar::from_int(Q, y)};
        CHECK(d1.f0.eval_affine(at) == Scalar::from_int(Q, fc.f0));
        CHECK(d1.f1.eval_affine(at) == Scalar::from_int(Q, fc.f1));
        CHECK(d1.f2.eval_affine(at) == Scalar::from_int(Q, fc.f2));
    }

    CHECK_THROWS_AS(x.decompose(2), structural_error);
}

TEST_CASE("decomposition of x^2 y^2 - 1") {
    AxisDecomposition d = testfix::x_squarediff(Q).decompose(0);
    CHECK(d.f0 == poly_from(Q, 2, {{{0, 2}, 1}}));
    CHECK(d.f1.is_zero());
    CHECK(d.f2 == poly_from(Q, 2, {{{0, 0}, -1}}));
}

TEST_CASE("decompose and assemble are inverse on every axis") {
    Rng rng(31);
    for (const Field& f : {Q, F7}) {
        for (int iter = 0; iter < 10; ++iter) {
            MultiQuadric x = random_multiquadric(3, f, rng);
            for (std::size_t i = 0; i < 3; ++i)
                CHECK(assemble_axis(x.decompose(i)) == x.poly());
        }
    }
}

TEST_CASE("discriminant fixtures") {
    // x^2 y^2 + x + y, axis 1: 1 - 4 y^3
    MPoly delta = testfix::x1(Q).discriminant(0);
    CHECK(delta == poly_from(Q, 2, {{{0, 0}, 1}, {{0, 3}, -4}}));
    // dense recomputation: b^2 - 4 a c with a = y^2, b = 1, c = y
    oracle::Poly1 dense = oracle::add(oracle::mul({1}, {1}),
                                      oracle::scale(oracle::mul({0, 0, 1}, {0, 1}), -4));
    CHECK(oracle::eq(dense, {1, 0, 0, -4}));
    CHECK(testfix::to_dense1(delta, 1) == dense);

    // (x y + 1)^2: 4 y^2 - 4 y^2 = 0
    CHECK(testfix::x_degenerate(Q).discriminant(0).is_zero());

    // x^2 y^2 - 1: 4 y^2
    CHECK(testfix::x_squarediff(Q).discriminant(0) == poly_from(Q, 2, {{{0, 2}, 4}}));
}

TEST_CASE("discriminant equals F1^2 - 4 F0 F2 recomputed from a fresh decomposition") {
    Rng rng(37);
    for (const Field& f : {Q, F7}) {
        for (int iter = 0; iter < 8; ++iter) {
            MultiQuadric x = random_multiquadric(3, f, rng);
            for (std::size_t i = 0; i < 3; ++i) {
                AxisDecomposition d = x.decompose(i);
                MPoly four = MPoly::constant(f, 3, Scalar::from_int(f, 4));
                CHECK(x.discriminant(i) == d.f1 * d.f1 - four * d.f0 * d.f2);
            }
        }
    }
}

TEST_CASE("genericity proxy verdicts") {
    CHECK(testfix::x1(Q).genericity().pass);

    GenericityReport degenerate = testfix::x_degenerate(Q).genericity();
    CHECK(!degenerate.pass);
    CHECK(degenerate.axes[0].delta_zero);
    CHECK(!degenerate.axes[0].f0_zero);

    MultiQuadric xsq(poly_from(Q, 2, {{{2, 0}, 1}})); // bare x^2
    GenericityReport rep = xsq.genericity();
    CHECK(!rep.pass);
    CHECK(rep.axes[0].delta_zero);
    CHECK(rep.axes[0].f1_zero);
    CHECK(rep.axes[0].f2_zero);
    CHECK(!rep.axes[0].f0_zero);
    CHECK(rep.axes[1].f0_zero); // no x2^2 term anywhere
    CHECK(rep.to_string().find("FAIL") != std::string::npos);
}

TEST_CASE("containment fixtures") {
    MultiQuadric xq = testfix::x1(Q);
    CHECK(xq.contains(testfix::affine_int(Q, {0, 0})));
    CHECK(!xq.contains(testfix::affine_int(Q, {1, 1})));
    MultiQuadric x7 = testfix::x1(F7);
    CHECK(x7.contains(testfix::affine_int(F7, {4, 1})));
}

TEST_CASE("sampling over F_7 lands on the enumerated fiber") {
    // over y = 1 the fiber quadratic is x^2 + x + 1 with roots {2, 4} mod 7
    CHECK(oracle::quadratic_roots_mod(1, 1, 1, 7) == std::vector<long long>{2, 4});
    MultiQuadric x = testfix::x1(F7);
    for (std::uint64_t seed = 0; seed < 24; ++seed) {
        Rng rng(seed);
        Point p = sample_on_x(x, 0, rng);
        CHECK(x.contains(p));
        long long xv = static_cast<long long>(p.affine_value(0).res());
        long long yv = static_cast<long long>(p.affine_value(1).res());
        auto roots = oracle::quadratic_roots_mod(
            (yv * yv) % 7, 1, yv, 7); // a = y^2, b = 1, c = y
        CHECK(std::find(roots.begin(), roots.end(), xv) != roots.end());
    }
    // determinism
    Rng a(9), b(9);
    CHECK(sample_on_x(x, 0, a) == sample_on_x(x, 0, b));
}

TEST_CASE("split fibers carry exactly two distinct roots and both lie on X") {
    const Field f = Field::prime(1000003);
    Rng rng(41);
    MultiQuadric x = random_multiquadric(3, f, rng);
    AxisDecomposition d = x.decompose(1);
    int split = 0;
    for (int iter = 0; iter < 20; ++iter) {
        Point p = sample_on_x(x, 1, rng);
        CHECK(x.contains(p));
        std::vector<Scalar> z;
        for (std::size_t j = 0; j < 3; ++j) z.push_back(p.affine_value(j));
        Scalar a = d.f0.eval_affine(z);
        Scalar b = d.f1.eval_affine(z);
        CHECK(!a.is_zero());
        if (x.discriminant(1).eval_affine(z).is_zero()) continue;
        ++split;
        // the other root through Vieta: x1 + x2 = -b/a
        Scalar other = -b / a - p.affine_value(1);
        CHECK(other != p.affine_value(1));
        Point sibling = p.with_coord(1, ProjCoord{Scalar::one(f), other});
        CHECK(x.contains(sibling));
    }
    CHECK(split >= 15); // double roots have density O(1/p)
}

TEST_CASE("a vanishing discriminant still samples the double root") {
    MultiQuadric x = testfix::x_degenerate(F7); // (x y + 1)^2
    Rng rng(3);
    for (int iter = 0; iter < 5; ++iter) {
        Point p = sample_on_x(x, 0, rng);
        CHECK(x.contains(p));
    }
}

TEST_CASE("sampling exhaustion signals after the retry budget") {
    // over F_3: x^2 + x + 2 has discriminant 1 - 8 = -7 = 2, a non-square mod 3
    CHECK(oracle::quadratic_roots_mod(1, 1, 2, 3).empty());
    const Field f3 = Field::prime(3);
    MultiQuadric x(poly_from(f3, 2, {{{2, 0}, 1}, {{1, 0}, 1}, {{0, 0}, 2}}));
    Rng rng(1);
    CHECK_THROWS_AS(sample_on_x(x, 0, rng, 64), sampling_exhausted);
}

TEST_CASE("sampling rejects rational fields and bad axes") {
    MultiQuadric x = testfix::x1(Q);
    Rng rng(1);
    CHECK_THROWS_AS(sample_on_x(x, 0, rng), structural_error);
    MultiQuadric x7 = testfix::x1(F7);
    CHECK_THROWS_AS(sample_on_x(x7, 5, rng), structural_error);
}

TEST_CASE("singularity test at the known singular point of x^2 y^2 - 1") {
    // the bihomogenization is vx^2 vy^2 - ux^2 uy^2; all four partials vanish
    // at ([0:1],[1:0])
    oracle::Grid g{};
    g[2][2] = 1;
    g[0][0] = -1;
    for (auto which : {oracle::GridPartial::DUx, oracle::GridPartial::DVx,
                       oracle::GridPartial::DUy, oracle::GridPartial::DVy})
        CHECK(oracle::grid_partial(g, which, 0, 1, 1, 0) == 0);

    MultiQuadric x = testfix::x_squarediff(Q);
    Point p = testfix::proj(Q, {{0, 1}, {1, 0}});
    REQUIRE(x.contains(p));
    CHECK(x.is_singular_at(p));
}

TEST_CASE("the origin of x^2 y^2 + x + y is a smooth point") {
    // affine gradient (2 x y^2 + 1, 2 x^2 y + 1) = (1, 1) at the origin
    oracle::Grid g{};
    g[2][2] = 1;
    g[1][0] = 1;
    g[0][1] = 1;
    CHECK(oracle::grid_partial(g, oracle::GridPartial::DVx, 1, 0, 1, 0) == 1);
    CHECK(oracle::grid_partial(g, oracle::GridPartial::DVy, 1, 0, 1, 0) == 1);

    MultiQuadric x = testfix::x1(Q);
    Point origin = testfix::affine_int(Q, {0, 0});
    CHECK(!x.is_singular_at(origin));
    CHECK_THROWS_AS(x.is_singular_at(testfix::affine_int(Q, {1, 1})), structural_error);
}

TEST_CASE("random hypersurfaces are smooth at sampled points") {
    const Field f = Field::prime(1000003);
    Rng rng(47);
    MultiQuadric x = random_multiquadric(3, f, rng);
    for (int iter = 0; iter < 10; ++iter) {
        Point p = sample_on_x(x, iter % 3, rng);
        CHECK(!x.is_singular_at(p));
    }
}

TEST_CASE("random generation is deterministic and respects the shape") {
    const Field f = Field::prime(1000003);
    Rng a(7), b(7);
    MultiQuadric xa = random_multiquadric(4, f, a);
    MultiQuadric xb = random_multiquadric(4, f, b);
    CHECK(xa.poly() == xb.poly());
    CHECK(xa.genericity().pass);
    CHECK(xa.n_plus_1() == 4);
    CHECK(xa.poly().terms().size() <= 81);
    for (std::size_t j = 0; j < 4; ++j) CHECK(xa.poly().max_exponent(j) <= 2);

    Rng c(7);
    MultiQuadric xc = random_multiquadric(4, Q, c);
    CHECK(xc.genericity().pass);
    for (const auto& [e, coeff] : xc.poly().terms()) {
        CHECK(abs(numerator(coeff.rat())) <= 20);
        CHECK(denominator(coeff.rat()) == 1);
    }
    CHECK_THROWS_AS(random_multiquadric(1, Q, c), structural_error);
}

TEST_CASE("multiquadric construction rejects bad inputs") {
    CHECK_THROWS_AS(MultiQuadric(MPoly(Q, 2)), structural_error); // zero
    CHECK_THROWS_AS(MultiQuadric(poly_from(Q, 2, {{{3, 0}, 1}})), structural_error);
    CHECK_THROWS_AS(MultiQuadric(poly_from(Q, 1, {{{1}, 1}})), structural_error);
}
