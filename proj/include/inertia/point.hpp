#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "inertia/scalar.hpp"

namespace inertia {

/// One P^1 coordinate [u : v]; the affine value is v/u, so [1 : x] is the
/// affine point x and [0 : 1] is infinity. [0 : 0] is rejected.
struct ProjCoord {
    Scalar u;
    Scalar v;
};

/// A point of (P^1)^{n+1}: one [u : v] pair per factor, all over one field.
/// Equality is projective, by per-coordinate cross-multiplication.
class Point {
public:
    explicit Point(std::vector<ProjCoord> coords);

    static Point affine(const Field& f, const std::vector<Scalar>& values);

    std::size_t size() const { return coords_.size(); }
    const Field& field() const { return coords_.front().u.field(); }
    const ProjCoord& coord(std::size_t j) const { return coords_.at(j); }
    const std::vector<ProjCoord>& coords() const { return coords_; }

    Point with_coord(std::size_t j, ProjCoord c) const;

    bool is_finite(std::size_t j) const { return !coords_.at(j).u.is_zero(); }
    Scalar affine_value(std::size_t j) const;

    bool operator==(const Point& o) const;
    bool operator!=(const Point& o) const { return !(*this == o); }

    /// Exact homogeneous form, e.g. "([1:3],[0:1])".
    std::string to_string() const;
    /// Affine form where finite, "inf" at infinity, e.g. "(-2, 1)".
    std::string to_affine_string() const;

private:
    std::vector<ProjCoord> coords_;
};

} // namespace inertia
