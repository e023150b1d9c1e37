#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "inertia/field.hpp"

namespace inertia {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Element of an exact field: a reduced arbitrary-precision rational, or a
/// residue in [0, p) of a prime field. All arithmetic is exact; operands of
/// different fields are rejected.
class Scalar {
public:
    Scalar() : field_(Field::rationals()) {}

    static Scalar zero(const Field& f) { return Scalar(f); }
    static Scalar one(const Field& f) { return from_int(f, 1); }
    static Scalar from_int(const Field& f, std::int64_t n);
    static Scalar rational(BigRational q);
    static Scalar residue(const Field& f, std::uint64_t r);

    // Strict text form: "<num>" or "<num>/<den>" over Q, "<residue>" over F_p.
    static Scalar parse(const Field& f, std::string_view text);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    const BigRational& rat() const;
    std::uint64_t res() const;

    std::string to_string() const;

private:
    explicit Scalar(Field f) : field_(f) {}
    void check_same_field(const Scalar& o) const;

    Field field_;
    BigRational q_;        // used when field_ is Q
    std::uint64_t r_ = 0;  // used when field_ is F_p
};

Scalar pow(const Scalar& base, std::uint64_t exp);

/// Square root in F_p: the root whose representative in [0, p) is smaller,
/// or nullopt for non-residues. sqrt(0) = 0.
std::optional<Scalar> sqrt_mod(const Scalar& a);

} // namespace inertia
