#include "inertia/point.hpp"

#include "inertia/error.hpp"

namespace inertia {

Point::Point(std::vector<ProjCoord> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw structural_error("point needs at least one coordinate");
    const Field& f = coords_.front().u.field();
    for (std::size_t j = 0; j < coords_.size(); ++j) {
        const ProjCoord& c = coords_[j];
        if (c.u.field() != f || c.v.field() != f)
            throw structural_error("point coordinates span different fields");
        if (c.u.is_zero() && c.v.is_zero())
            throw structural_error("invalid point: coordinate " + std::to_string(j) +
                                   " is [0:0]");
    }
}

Point Point::affine(const Field& f, const std::vector<Scalar>& values) {
    std::vector<ProjCoord> coords;
    coords.reserve(values.size());
    for (const Scalar& x : values) coords.push_back({Scalar::one(f), x});
    return Point(std::move(coords));
}

Point Point::with_coord(std::size_t j, ProjCoord c) const {
    std::vector<ProjCoord> coords = coords_;
    coords.at(j) = std::move(c);
    return Point(std::move(coords));
}

Scalar Point::affine_value(std::size_t j) const {
    const ProjCoord& c = coords_.at(j);
    if (c.u.is_zero()) throw structural_error("affine value of a point at infinity");
    return c.v / c.u;
}

bool Point::operator==(const Point& o) const {
    if (size() != o.size())
        throw structural_error("comparing points of different coordinate counts");
    for (std::size_t j = 0; j < size(); ++j) {
        const ProjCoord& a = coords_[j];
        const ProjCoord& b = o.coords_[j];
        if (a.u * b.v != a.v * b.u) return false;
    }
    return true;
}

std::string Point::to_string() const {
    std::string s = "(";
    for (std::size_t j = 0; j < size(); ++j) {
        if (j) s += ",";
        s += "[" + coords_[j].u.to_string() + ":" + coords_[j].v.to_string() + "]";
    }
    return s + ")";
}

std::string Point::to_affine_string() const {
    std::string s = "(";
    for (std::size_t j = 0; j < size(); ++j) {
        if (j) s += ", ";
        s += is_finite(j) ? affine_value(j).to_string() : "inf";
    }
    return s + ")";
}

} // namespace inertia
