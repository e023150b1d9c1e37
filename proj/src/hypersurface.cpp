#include "inertia/hypersurface.hpp"

#include "inertia/error.hpp"

namespace inertia {

MultiQuadric::MultiQuadric(MPoly poly) : poly_(std::move(poly)) {
    if (poly_.is_zero()) throw structural_error("hypersurface polynomial is identically zero");
    if (poly_.nvars() < 2)
        throw structural_error("hypersurface needs at least two P^1 factors");
    for (std::size_t j = 0; j < poly_.nvars(); ++j)
        if (poly_.max_exponent(j) > 2)
            throw structural_error("degree in coordinate " + std::to_string(j) +
                                   " exceeds two");
    poly_ = poly_.with_declared_degree(std::vector<std::uint32_t>(poly_.nvars(), 2));
}

AxisDecomposition MultiQuadric::decompose(std::size_t axis) const {
    const std::size_t n1 = n_plus_1();
    if (axis >= n1) throw structural_error("axis " + std::to_string(axis) + " out of range");
    std::vector<std::uint32_t> d(n1, 2);
    d[axis] = 0;
    MPoly parts[3] = {MPoly(field(), n1), MPoly(field(), n1), MPoly(field(), n1)};
    std::vector<std::pair<Exps, Scalar>> split[3];
    for (const auto& [e, c] : poly_.terms()) {
        Exps stripped = e;
        stripped[axis] = 0;
        split[2 - e[axis]].emplace_back(std::move(stripped), c);
    }
    for (int j = 0; j < 3; ++j)
        parts[j] = MPoly::from_terms(field(), n1, split[j]).with_declared_degree(d);
    return AxisDecomposition{axis, std::move(parts[0]), std::move(parts[1]),
                             std::move(parts[2])};
}

MPoly MultiQuadric::discriminant(std::size_t axis) const {
    AxisDecomposition d = decompose(axis);
    Scalar four = Scalar::from_int(field(), 4);
    return d.f1 * d.f1 - four * (d.f0 * d.f2);
}

GenericityReport MultiQuadric::genericity() const {
    GenericityReport rep;
    rep.pass = true;
    for (std::size_t i = 0; i < n_plus_1(); ++i) {
        AxisDecomposition d = decompose(i);
        GenericityReport::AxisFlags flags;
        flags.delta_zero = discriminant(i).is_zero();
        flags.f0_zero = d.f0.is_zero();
        flags.f1_zero = d.f1.is_zero();
        flags.f2_zero = d.f2.is_zero();
        if (flags.delta_zero || flags.f0_zero || flags.f2_zero) rep.pass = false;
        rep.axes.push_back(flags);
    }
    return rep;
}

std::string GenericityReport::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < axes.size(); ++i) {
        const AxisFlags& f = axes[i];
        s += "axis " + std::to_string(i + 1) + ":";
        if (!f.delta_zero && !f.f0_zero && !f.f1_zero && !f.f2_zero) {
            s += " ok";
        } else {
            if (f.delta_zero) s += " discriminant==0";
            if (f.f0_zero) s += " F0==0";
            if (f.f1_zero) s += " F1==0";
            if (f.f2_zero) s += " F2==0";
        }
        s += "\n";
    }
    s += pass ? "genericity proxy: PASS\n" : "genericity proxy: FAIL\n";
    return s;
}

bool MultiQuadric::contains(const Point& p) const {
    return poly_.eval_projective(p).is_zero();
}

bool MultiQuadric::is_singular_at(const Point& p) const {
    if (!contains(p)) throw structural_error("singularity test at a point not on X");
    for (std::size_t j = 0; j < n_plus_1(); ++j) {
        if (!poly_.eval_projective_partial(p, j, false).is_zero()) return false;
        if (!poly_.eval_projective_partial(p, j, true).is_zero()) return false;
    }
    return true;
}

MPoly assemble_axis(const AxisDecomposition& d) {
    const Field& f = d.f0.field();
    MPoly x = MPoly::variable(f, d.f0.nvars(), d.axis);
    return d.f0 * x * x + d.f1 * x + d.f2;
}

namespace {

Scalar random_residue(const Field& f, Rng& rng) {
    return Scalar::residue(f, rng.below(f.modulus()));
}

} // namespace

Point sample_on_x(const MultiQuadric& x, std::size_t axis, Rng& rng,
                  std::size_t max_attempts) {
    if (!x.field().is_fp())
        throw structural_error("sampling on X requires a prime field");
    if (axis >= x.n_plus_1()) throw structural_error("sampling axis out of range");
    const Field& f = x.field();
    const std::size_t n1 = x.n_plus_1();
    AxisDecomposition d = x.decompose(axis);
    Scalar two = Scalar::from_int(f, 2);
    Scalar four = Scalar::from_int(f, 4);
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<Scalar> z(n1, Scalar::zero(f));
        for (std::size_t j = 0; j < n1; ++j)
            if (j != axis) z[j] = random_residue(f, rng);
        Scalar a = d.f0.eval_affine(z);
        if (a.is_zero()) continue;
        Scalar b = d.f1.eval_affine(z);
        Scalar c = d.f2.eval_affine(z);
        Scalar delta = b * b - four * a * c;
        auto root = sqrt_mod(delta);
        if (!root) continue;
        Scalar r = rng.coin() ? *root : -*root;
        z[axis] = (-b + r) / (two * a);
        return Point::affine(f, z);
    }
    throw sampling_exhausted("no split fiber found on axis " + std::to_string(axis) +
                             " within " + std::to_string(max_attempts) + " attempts");
}

MultiQuadric random_multiquadric(std::size_t n_plus_1, const Field& f, Rng& rng,
                                 const CoeffBox& box, std::size_t max_attempts) {
    if (n_plus_1 < 2) throw structural_error("need at least two P^1 factors");
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<std::pair<Exps, Scalar>> terms;
        Exps e(n_plus_1, 0);
        // odometer over {0,1,2}^{n+1} in lexicographic order
        while (true) {
            Scalar c = f.is_q()
                           ? Scalar::from_int(f, rng.int_in(-box.max_abs_num, box.max_abs_num))
                           : random_residue(f, rng);
            if (!c.is_zero()) terms.emplace_back(e, c);
            std::size_t j = n_plus_1;
            while (j > 0 && e[j - 1] == 2) e[--j] = 0;
            if (j == 0) break;
            ++e[j - 1];
        }
        if (terms.empty()) continue;
        MultiQuadric x(MPoly::from_terms(f, n_plus_1, terms));
        if (x.genericity().pass) return x;
    }
    throw sampling_exhausted("random hypersurface generation exhausted after " +
                             std::to_string(max_attempts) + " attempts");
}

} // namespace inertia
