#include "inertia/fibermap.hpp"

#include <algorithm>

#include "inertia/error.hpp"

namespace inertia {

FiberMap::FiberMap(std::size_t axis, MPoly a, MPoly b, MPoly c, MPoly d)
    : axis_(axis), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    pad_common_degree();
}

void FiberMap::pad_common_degree() {
    std::vector<std::uint32_t> common(a_.nvars(), 0);
    for (const MPoly* e : {&a_, &b_, &c_, &d_})
        for (std::size_t j = 0; j < common.size(); ++j)
            common[j] = std::max(common[j], e->declared_degree()[j]);
    common[axis_] = 0;
    a_ = a_.with_declared_degree(common);
    b_ = b_.with_declared_degree(common);
    c_ = c_.with_declared_degree(common);
    d_ = d_.with_declared_degree(common);
}

namespace {

AxisDecomposition checked_decomposition(const MultiQuadric& x, std::size_t axis,
                                        bool need_f2) {
    AxisDecomposition d = x.decompose(axis);
    if (d.f0.is_zero())
        throw structural_error("degenerate axis " + std::to_string(axis) +
                               ": leading fiber coefficient F0 vanishes identically");
    if (need_f2 && d.f2.is_zero())
        throw structural_error("degenerate axis " + std::to_string(axis) +
                               ": trailing fiber coefficient F2 vanishes identically");
    return d;
}

} // namespace

FiberMap FiberMap::tau(const MultiQuadric& x, std::size_t axis) {
    AxisDecomposition d = checked_decomposition(x, axis, false);
    MPoly zero(x.field(), x.n_plus_1());
    return FiberMap(axis, -d.f0, -d.f1, zero, d.f0);
}

FiberMap FiberMap::sigma(const MultiQuadric& x, std::size_t axis) {
    AxisDecomposition d = checked_decomposition(x, axis, true);
    MPoly zero(x.field(), x.n_plus_1());
    return FiberMap(axis, zero, d.f2, d.f0, zero);
}

FiberMap FiberMap::rho(const MultiQuadric& x, std::size_t axis) {
    AxisDecomposition d = checked_decomposition(x, axis, true);
    MPoly zero(x.field(), x.n_plus_1());
    return FiberMap(axis, zero, d.f2, -d.f0, -d.f1);
}

FiberMap FiberMap::rho_inv(const MultiQuadric& x, std::size_t axis) {
    AxisDecomposition d = checked_decomposition(x, axis, true);
    MPoly zero(x.field(), x.n_plus_1());
    return FiberMap(axis, -d.f1, -d.f2, d.f0, zero);
}

FiberMap FiberMap::from_entries(std::size_t axis, MPoly a, MPoly b, MPoly c, MPoly d) {
    const std::size_t n = a.nvars();
    if (axis >= n) throw structural_error("axis out of range");
    for (const MPoly* e : {&a, &b, &c, &d}) {
        if (e->nvars() != n || e->field() != a.field())
            throw structural_error("fiber map entries disagree on ring");
        if (e->max_exponent(axis) != 0)
            throw structural_error("fiber map entry involves its own axis coordinate");
    }
    FiberMap m(axis, std::move(a), std::move(b), std::move(c), std::move(d));
    if (m.det().is_zero())
        throw structural_error("fiber map matrix is singular (AD - BC == 0)");
    return m;
}

std::optional<Point> FiberMap::apply(const Point& p) const {
    if (p.size() != nvars()) throw structural_error("point coordinate count mismatch");
    Scalar av = a_.eval_projective(p);
    Scalar bv = b_.eval_projective(p);
    Scalar cv = c_.eval_projective(p);
    Scalar dv = d_.eval_projective(p);
    const ProjCoord& fiber = p.coord(axis_);
    Scalar nu = cv * fiber.v + dv * fiber.u;
    Scalar nv = av * fiber.v + bv * fiber.u;
    if (nu.is_zero() && nv.is_zero()) return std::nullopt;
    return p.with_coord(axis_, ProjCoord{std::move(nu), std::move(nv)});
}

void FiberMap::normalize() {
    // common positive content over Q; F_p scalars are units and stay put
    if (field().is_q()) {
        BigInt g = 0, l = 1;
        for (const MPoly* e : {&a_, &b_, &c_, &d_})
            for (const auto& [exps, coeff] : e->terms()) {
                g = gcd(g, BigInt(abs(numerator(coeff.rat()))));
                l = lcm(l, denominator(coeff.rat()));
            }
        if (g != 0 && !(g == 1 && l == 1)) {
            Scalar inv = Scalar::rational(BigRational(l, g));
            a_ = a_ * inv;
            b_ = b_ * inv;
            c_ = c_ * inv;
            d_ = d_ * inv;
        }
    }
    // common monomial factor across the nonzero entries
    Exps m(nvars(), 0);
    bool seen = false;
    for (const MPoly* e : {&a_, &b_, &c_, &d_}) {
        if (e->is_zero()) continue;
        Exps em = e->min_exponents();
        if (!seen) {
            m = em;
            seen = true;
        } else {
            for (std::size_t j = 0; j < m.size(); ++j) m[j] = std::min(m[j], em[j]);
        }
    }
    bool trivial = !seen || std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
    if (!trivial) {
        std::vector<std::uint32_t> reduced = a_.declared_degree();
        for (std::size_t j = 0; j < reduced.size(); ++j) reduced[j] -= m[j];
        auto strip = [&](const MPoly& e) {
            if (e.is_zero()) return MPoly(e.field(), e.nvars()).with_declared_degree(reduced);
            return e.divided_by_monomial(m);
        };
        a_ = strip(a_);
        b_ = strip(b_);
        c_ = strip(c_);
        d_ = strip(d_);
        pad_common_degree();
    }
}

FiberMap FiberMap::compose(const FiberMap& m1, const FiberMap& m2) {
    if (m1.axis_ != m2.axis_)
        throw structural_error("composing fiber maps on different axes");
    if (m1.field() != m2.field() || m1.nvars() != m2.nvars())
        throw structural_error("composing fiber maps over different rings");
    FiberMap r(m1.axis_, m1.a_ * m2.a_ + m1.b_ * m2.c_, m1.a_ * m2.b_ + m1.b_ * m2.d_,
               m1.c_ * m2.a_ + m1.d_ * m2.c_, m1.c_ * m2.b_ + m1.d_ * m2.d_);
    r.normalize();
    return r;
}

FiberMap FiberMap::pow(std::uint64_t k) const {
    if (k == 0) throw structural_error("fiber map power must be positive");
    FiberMap base = *this;
    std::optional<FiberMap> acc;
    while (k) {
        if (k & 1) acc = acc ? compose(*acc, base) : base;
        k >>= 1;
        if (k) base = compose(base, base);
    }
    return *acc;
}

FiberMap FiberMap::inverse() const { return FiberMap(axis_, d_, -b_, -c_, a_); }

std::optional<MPoly> FiberMap::scalar_identity() const {
    if (b_.is_zero() && c_.is_zero() && a_ == d_) return a_;
    return std::nullopt;
}

std::string FiberMap::to_string() const {
    return "axis " + std::to_string(axis_ + 1) + ": [A = " + a_.to_string() +
           ", B = " + b_.to_string() + ", C = " + c_.to_string() +
           ", D = " + d_.to_string() + "]";
}

} // namespace inertia
