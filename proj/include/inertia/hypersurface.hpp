#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "inertia/mpoly.hpp"
#include "inertia/rng.hpp"

namespace inertia {

/// Per-axis quadratic decomposition: poly = f0*x_i^2 + f1*x_i + f2, where
/// f0, f1, f2 do not involve x_i (they keep the full variable set with
/// exponent zero on the axis).
struct AxisDecomposition {
    std::size_t axis;
    MPoly f0;
    MPoly f1;
    MPoly f2;
};

struct GenericityReport {
    struct AxisFlags {
        bool delta_zero;
        bool f0_zero;
        bool f1_zero;
        bool f2_zero;
    };
    std::vector<AxisFlags> axes;
    bool pass;
    std::string to_string() const;
};

/// A hypersurface of multidegree (2,...,2) in (P^1)^{n+1}: a nonzero
/// polynomial of degree at most two in each coordinate, with declared
/// degree pinned to (2,...,2).
class MultiQuadric {
public:
    explicit MultiQuadric(MPoly poly);

    std::size_t n_plus_1() const { return poly_.nvars(); }
    const Field& field() const { return poly_.field(); }
    const MPoly& poly() const { return poly_; }

    AxisDecomposition decompose(std::size_t axis) const;

    /// Discriminant of the axis fiber quadratic: f1^2 - 4 f0 f2.
    MPoly discriminant(std::size_t axis) const;

    /// Necessary-condition proxy for genericity: every axis must have a not
    /// identically vanishing discriminant and nonzero leading/trailing
    /// fiber coefficients f0, f2. (f1 == 0 is reported but does not fail.)
    GenericityReport genericity() const;

    bool contains(const Point& p) const;

    /// Pointwise Jacobian test at a point of the hypersurface: true when all
    /// 2(n+1) projective partials (d/du_j and d/dv_j) vanish at p.
    bool is_singular_at(const Point& p) const;

private:
    MPoly poly_;
};

/// Reassembles f0*x^2 + f1*x + f2; inverse of MultiQuadric::decompose.
MPoly assemble_axis(const AxisDecomposition& d);

/// Draws a point of X over F_p whose axis coordinate solves the fiber
/// quadratic at uniformly random affine values of the other coordinates.
/// Retries (up to max_attempts) when the leading fiber coefficient vanishes
/// or the discriminant is a non-residue; the root choice is an rng coin.
Point sample_on_x(const MultiQuadric& x, std::size_t axis, Rng& rng,
                  std::size_t max_attempts = 256);

struct CoeffBox {
    std::int64_t max_abs_num = 20; // rational coefficients drawn from [-B, B], denominator 1
};

/// Random multiquadric with all 3^{n+1} coefficients drawn uniformly (zero
/// drops the term), regenerated until the genericity proxy passes.
MultiQuadric random_multiquadric(std::size_t n_plus_1, const Field& f, Rng& rng,
                                 const CoeffBox& box = {}, std::size_t max_attempts = 1000);

} // namespace inertia
