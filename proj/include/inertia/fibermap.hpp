#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "inertia/hypersurface.hpp"
#include "inertia/mpoly.hpp"
#include "inertia/point.hpp"

namespace inertia {

/// Birational self-map of (P^1)^{n+1} acting on one axis by the Moebius
/// rule x_i -> (A x_i + B) / (C x_i + D), with A, B, C, D polynomials in the
/// other coordinates, and fixing every other coordinate. Composition of
/// same-axis maps is the 2x2 matrix product, so (m1 after m2) has matrix
/// M1 * M2.
///
/// The four entries share one declared degree vector (zero on the axis), so
/// their projective evaluations at a point carry identical scale factors and
/// the image coordinate pair is well defined.
///
/// Composition normalizes entries by their common positive content (over Q)
/// and common monomial factor; matrices are therefore canonical only up to
/// common polynomial factors. Map equality goes through scalar_identity of
/// m1 composed with m2.inverse(), or through pointwise evaluation, never
/// through raw entry comparison.
class FiberMap {
public:
    /// x_i -> -x_i - f1/f0, as the matrix (-f0, -f1, 0, f0); swaps the two
    /// fiber roots through their sum. Needs f0 != 0.
    static FiberMap tau(const MultiQuadric& x, std::size_t axis);

    /// x_i -> f2 / (x_i f0), as the matrix (0, f2, f0, 0); swaps the two
    /// fiber roots through their product. Needs f0 != 0 and f2 != 0.
    static FiberMap sigma(const MultiQuadric& x, std::size_t axis);

    /// rho = sigma after tau, matrix (0, f2, -f0, -f1).
    static FiberMap rho(const MultiQuadric& x, std::size_t axis);

    /// rho^{-1} = tau after sigma, matrix (-f1, -f2, f0, 0).
    static FiberMap rho_inv(const MultiQuadric& x, std::size_t axis);

    /// Validated general constructor: entries must avoid the axis variable
    /// and have AD - BC != 0. Entries are padded to a common declared degree.
    static FiberMap from_entries(std::size_t axis, MPoly a, MPoly b, MPoly c, MPoly d);

    std::size_t axis() const { return axis_; }
    std::size_t nvars() const { return a_.nvars(); }
    const Field& field() const { return a_.field(); }
    const MPoly& a() const { return a_; }
    const MPoly& b() const { return b_; }
    const MPoly& c() const { return c_; }
    const MPoly& d() const { return d_; }

    /// Image of a point; nullopt when both components of the new axis pair
    /// vanish (the point lies in the indeterminacy locus).
    std::optional<Point> apply(const Point& p) const;

    /// Matrix product m1 * m2 (m1 after m2), entries normalized.
    static FiberMap compose(const FiberMap& m1, const FiberMap& m2);

    /// k-th compose power, k >= 1, by binary powering.
    FiberMap pow(std::uint64_t k) const;

    /// The adjugate matrix (d, -b, -c, a): the Moebius inverse.
    FiberMap inverse() const;

    /// The scalar s when B == C == 0 and A == D; such a map acts as the
    /// identity on every fiber where s does not vanish.
    std::optional<MPoly> scalar_identity() const;

    MPoly det() const { return a_ * d_ - b_ * c_; }

    std::string to_string() const;

private:
    FiberMap(std::size_t axis, MPoly a, MPoly b, MPoly c, MPoly d);
    void pad_common_degree();
    void normalize();

    std::size_t axis_;
    MPoly a_, b_, c_, d_;
};

} // namespace inertia
