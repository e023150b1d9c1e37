#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "inertia/error.hpp"
#include "inertia/fibermap.hpp"

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace inertia;
using testfix::poly_from;

namespace {
const Field Q = Field::rationals();
const Field F7 = Field::prime(7);
} // namespace

TEST_CASE("matrices of T, S, R for x^2 y^2 + x + y") {
    MultiQuadric x = testfix::x1(Q);

    FiberMap t = FiberMap::tau(x, 0);
    CHECK(t.a() == poly_from(Q, 2, {{{0, 2}, -1}})); // -y^2
    CHECK(t.b() == poly_from(Q, 2, {{{0, 0}, -1}}));
    CHECK(t.c().is_zero());
    CHECK(t.d() == poly_from(Q, 2, {{{0, 2}, 1}}));

    FiberMap s = FiberMap::sigma(x, 0);
    CHECK(s.a().is_zero());
    CHECK(s.b() == poly_from(Q, 2, {{{0, 1}, 1}})); // y
    CHECK(s.c() == poly_from(Q, 2, {{{0, 2}, 1}})); // y^2
    CHECK(s.d().is_zero());

    FiberMap r = FiberMap::rho(x, 0);
    CHECK(r.a().is_zero());
    CHECK(r.b() == poly_from(Q, 2, {{{0, 1}, 1}}));
    CHECK(r.c() == poly_from(Q, 2, {{{0, 2}, -1}}));
    CHECK(r.d() == poly_from(Q, 2, {{{0, 0}, -1}}));

    FiberMap ri = FiberMap::rho_inv(x, 0);
    CHECK(ri.a() == poly_from(Q, 2, {{{0, 0}, -1}}));
    CHECK(ri.b() == poly_from(Q, 2, {{{0, 1}, -1}}));
    CHECK(ri.c() == poly_from(Q, 2, {{{0, 2}, 1}}));
    CHECK(ri.d().is_zero());

    // entries share one declared degree with zero on the axis
    CHECK(t.a().declared_degree() == std::vector<std::uint32_t>{0, 2});
    CHECK(s.b().declared_degree() == std::vector<std::uint32_t>{0, 2});
}

TEST_CASE("T at (1,1): the other root of the fiber through (1,1)") {
    MultiQuadric x = testfix::x1(Q);
    FiberMap t = FiberMap::tau(x, 0);
    Point p = testfix::affine_int(Q, {1, 1});

    // direct fraction arithmetic: (-1*1 - 1) / (0*1 + 1) = -2
    oracle::Frac image = oracle::moebius(-1, -1, 0, 1, {1, 1});
    CHECK(oracle::frac_eq(image, {-2, 1}));

    auto q = t.apply(p);
    REQUIRE(q.has_value());
    CHECK(*q == testfix::affine_int(Q, {-2, 1}));
    CHECK(q->to_affine_string() == "(-2, 1)");

    auto back = t.apply(*q);
    REQUIRE(back.has_value());
    CHECK(*back == p);
}

TEST_CASE("S over F_7 swaps the fiber {2,4} and fixes (1,1) over Q") {
    MultiQuadric x7 = testfix::x1(F7);
    FiberMap s7 = FiberMap::sigma(x7, 0);
    // 1/4 = 2 mod 7
    CHECK(oracle::inv_scan(4, 7) == 2);
    auto q = s7.apply(testfix::affine_int(F7, {4, 1}));
    REQUIRE(q.has_value());
    CHECK(*q == testfix::affine_int(F7, {2, 1}));

    MultiQuadric xq = testfix::x1(Q);
    auto fixed = FiberMap::sigma(xq, 0).apply(testfix::affine_int(Q, {1, 1}));
    REQUIRE(fixed.has_value());
    CHECK(*fixed == testfix::affine_int(Q, {1, 1}));
}

TEST_CASE("R fixes the on-X point (4,1) over F_7") {
    MultiQuadric x = testfix::x1(F7);
    REQUIRE(x.contains(testfix::affine_int(F7, {4, 1})));
    auto q = FiberMap::rho(x, 0).apply(testfix::affine_int(F7, {4, 1}));
    REQUIRE(q.has_value());
    CHECK(*q == testfix::affine_int(F7, {4, 1}));
}

TEST_CASE("S is indeterminate at the origin of x^2 y^2 + x + y") {
    MultiQuadric x = testfix::x1(Q);
    FiberMap s = FiberMap::sigma(x, 0);
    // new pair [F0(0)*0 + 0*1 : 0*0 + F2(0)*1] = [0 : 0]
    CHECK(!s.apply(testfix::affine_int(Q, {0, 0})).has_value());
    // T stays defined there
    CHECK(FiberMap::tau(x, 0).apply(testfix::affine_int(Q, {0, 0})).has_value());
}

TEST_CASE("apply never touches coordinates off the axis") {
    const Field f = Field::prime(1000003);
    Rng rng(53);
    MultiQuadric x = random_multiquadric(3, f, rng);
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<Scalar> vals;
        for (int j = 0; j < 3; ++j) vals.push_back(Scalar::residue(f, rng.below(f.modulus())));
        Point p = Point::affine(f, vals);
        std::size_t axis = rng.below(3);
        auto q = FiberMap::rho(x, axis).apply(p);
        if (!q) continue;
        for (std::size_t j = 0; j < 3; ++j) {
            if (j == axis) continue;
            CHECK(q->coord(j).u == p.coord(j).u);
            CHECK(q->coord(j).v == p.coord(j).v);
        }
    }
}

TEST_CASE("degenerate axes are rejected at construction") {
    // x y^2 + x + y: no x^2 term, so F0 vanishes on axis 1
    MultiQuadric no_f0(poly_from(Q, 2, {{{1, 2}, 1}, {{1, 0}, 1}, {{0, 1}, 1}}));
    CHECK_THROWS_AS(FiberMap::tau(no_f0, 0), structural_error);
    // x^2 y^2 + x: F2 vanishes on axis 1, T still fine
    MultiQuadric no_f2(poly_from(Q, 2, {{{2, 2}, 1}, {{1, 0}, 1}}));
    CHECK_NOTHROW(FiberMap::tau(no_f2, 0));
    CHECK_THROWS_AS(FiberMap::sigma(no_f2, 0), structural_error);
    CHECK_THROWS_AS(FiberMap::rho(no_f2, 0), structural_error);
}

TEST_CASE("T o T is the scalar matrix F0^2 and S o S is F0 F2") {
    // generic fixture: F0 = y^2+y+1, F2 = 2y^2+y+3, both content free
    MultiQuadric x = testfix::x_generic2(Q);
    AxisDecomposition d = x.decompose(0);

    FiberMap t = FiberMap::tau(x, 0);
    FiberMap tt = FiberMap::compose(t, t);
    auto s_tt = tt.scalar_identity();
    REQUIRE(s_tt.has_value());
    // dense recomputation of F0^2
    oracle::Poly1 f0 = testfix::to_dense1(d.f0, 1);
    CHECK(*s_tt == testfix::from_dense1(Q, 2, 1, oracle::mul(f0, f0)));
    CHECK(*s_tt == d.f0 * d.f0);

    FiberMap s = FiberMap::sigma(x, 0);
    auto s_ss = FiberMap::compose(s, s).scalar_identity();
    REQUIRE(s_ss.has_value());
    oracle::Poly1 f2 = testfix::to_dense1(d.f2, 1);
    CHECK(*s_ss == testfix::from_dense1(Q, 2, 1, oracle::mul(f0, f2)));
    CHECK(*s_ss == d.f0 * d.f2);

    auto s_rr = FiberMap::compose(FiberMap::rho(x, 0), FiberMap::rho_inv(x, 0))
                    .scalar_identity();
    REQUIRE(s_rr.has_value());
    CHECK(*s_rr == d.f0 * d.f2);
}

TEST_CASE("monomial fiber data normalizes to the stripped scalar") {
    // F0 = y^2 for x^2 y^2 + x + y: F0^2 = y^4 strips to 1
    MultiQuadric x = testfix::x1(Q);
    FiberMap t = FiberMap::tau(x, 0);
    auto s = FiberMap::compose(t, t).scalar_identity();
    REQUIRE(s.has_value());
    AxisDecomposition d = x.decompose(0);
    CHECK(*s == scalar_normal_form(d.f0 * d.f0));
    CHECK(*s == poly_from(Q, 2, {{{0, 0}, 1}}));
}

TEST_CASE("R squared for x^2 y^2 + x + y") {
    MultiQuadric x = testfix::x1(Q);
    FiberMap r = FiberMap::rho(x, 0);

    // dense 2x2 square of [[0, y], [-y^2, -1]]
    oracle::Mat1 m{{0}, {0, 1}, oracle::neg({0, 0, 1}), {-1}};
    oracle::Mat1 m2 = oracle::mat_mul(m, m);
    CHECK(oracle::eq(m2.a, {0, 0, 0, -1})); // -y^3
    CHECK(oracle::eq(m2.b, {0, -1}));       // -y
    CHECK(oracle::eq(m2.c, {0, 0, 1}));     // y^2
    CHECK(oracle::eq(m2.d, {1, 0, 0, -1})); // 1 - y^3

    FiberMap r2 = r.pow(2);
    CHECK(r2.a() == testfix::from_dense1(Q, 2, 1, m2.a));
    CHECK(r2.b() == testfix::from_dense1(Q, 2, 1, m2.b));
    CHECK(r2.c() == testfix::from_dense1(Q, 2, 1, m2.c));
    CHECK(r2.d() == testfix::from_dense1(Q, 2, 1, m2.d));

    CHECK(!r2.scalar_identity().has_value()); // off-diagonal -y survives

    // power identities
    FiberMap r1 = r.pow(1);
    CHECK(r1.a() == r.a());
    CHECK(r1.d() == r.d());
    CHECK(FiberMap::tau(x, 0).pow(2).scalar_identity().has_value());
    CHECK_THROWS_AS(r.pow(0), structural_error);
}

TEST_CASE("composing S after T equals R up to a scalar polynomial factor") {
    for (const MultiQuadric& x : {testfix::x1(Q), testfix::x_generic2(Q)}) {
        FiberMap composite =
            FiberMap::compose(FiberMap::sigma(x, 0), FiberMap::tau(x, 0));
        FiberMap cancel = FiberMap::compose(composite, FiberMap::rho_inv(x, 0));
        CHECK(cancel.scalar_identity().has_value());
    }
}

TEST_CASE("identity matrix is the constant scalar 1") {
    MPoly one = poly_from(Q, 2, {{{0, 0}, 1}});
    MPoly zero(Q, 2);
    FiberMap id = FiberMap::from_entries(0, one, zero, zero, one);
    auto s = id.scalar_identity();
    REQUIRE(s.has_value());
    CHECK(s->is_constant());
    CHECK(*s == one);
}

TEST_CASE("from_entries validates the matrix") {
    MPoly y = MPoly::variable(Q, 2, 1);
    MPoly x = MPoly::variable(Q, 2, 0);
    MPoly zero(Q, 2);
    CHECK_THROWS_AS(FiberMap::from_entries(0, y, y, y, y), structural_error); // det 0
    CHECK_THROWS_AS(FiberMap::from_entries(0, x, zero, zero, x), structural_error);
    CHECK_THROWS_AS(FiberMap::compose(FiberMap::tau(testfix::x1(Q), 0),
                                      FiberMap::tau(testfix::x1(Q), 1)),
                    structural_error);
}

TEST_CASE("involution and inverse laws hold symbolically for random instances") {
    Rng rng(61);
    for (const Field& f : {Q, Field::prime(1000003)}) {
        for (int iter = 0; iter < 6; ++iter) {
            MultiQuadric x = random_multiquadric(2 + iter % 3, f, rng);
            for (std::size_t i = 0; i < x.n_plus_1(); ++i) {
                FiberMap t = FiberMap::tau(x, i);
                FiberMap s = FiberMap::sigma(x, i);
                CHECK(FiberMap::compose(t, t).scalar_identity().has_value());
                CHECK(FiberMap::compose(s, s).scalar_identity().has_value());
                CHECK(FiberMap::compose(FiberMap::rho(x, i), FiberMap::rho_inv(x, i))
                          .scalar_identity()
                          .has_value());
            }
        }
    }
}

TEST_CASE("maps preserve X and its complement pointwise") {
    const Field f = Field::prime(1000003);
    Rng rng(67);
    MultiQuadric x = random_multiquadric(3, f, rng);
    for (int iter = 0; iter < 25; ++iter) {
        std::size_t axis = rng.below(3);
        Point p = sample_on_x(x, rng.below(3), rng);
        for (const FiberMap& m : {FiberMap::tau(x, axis), FiberMap::sigma(x, axis),
                                  FiberMap::rho(x, axis), FiberMap::rho_inv(x, axis)}) {
            auto q = m.apply(p);
            if (q) CHECK(x.contains(*q));
        }
        // inertia: R fixes points of X
        auto fixed = FiberMap::rho(x, axis).apply(p);
        if (fixed) CHECK(*fixed == p);

        // off X stays off X
        std::vector<Scalar> vals;
        for (int j = 0; j < 3; ++j) vals.push_back(Scalar::residue(f, rng.below(f.modulus())));
        Point off = Point::affine(f, vals);
        if (x.contains(off)) continue;
        auto image = FiberMap::rho(x, axis).apply(off);
        if (image) CHECK(!x.contains(*image));
    }
}

TEST_CASE("entries of R^k stay within per-axis degree 2k") {
    Rng rng(71);
    MultiQuadric x = random_multiquadric(3, Q, rng);
    FiberMap r = FiberMap::rho(x, 0);
    FiberMap power = r;
    for (std::uint64_t k = 1; k <= 5; ++k) {
        if (k > 1) power = FiberMap::compose(power, r);
        for (const MPoly* e : {&power.a(), &power.b(), &power.c(), &power.d()})
            for (std::size_t j = 0; j < 3; ++j)
                CHECK(e->max_exponent(j) <= 2 * k);
        CHECK(power.a().max_exponent(0) == 0); // never the axis variable
    }
}

TEST_CASE("binary powering matches iterated composition up to scalars") {
    Rng rng(73);
    MultiQuadric x = random_multiquadric(2, Q, rng);
    FiberMap r = FiberMap::rho(x, 0);
    FiberMap iterated = FiberMap::compose(FiberMap::compose(r, r), r);
    FiberMap powered = r.pow(3);
    CHECK(FiberMap::compose(powered, iterated.inverse()).scalar_identity().has_value());
}
