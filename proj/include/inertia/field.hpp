#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "inertia/error.hpp"
#include "inertia/modarith.hpp"

namespace inertia {

/// Coefficient field tag: the rationals, or a prime field F_p with p an
/// odd prime below 2^63.
class Field {
public:
    static Field rationals() { return Field{}; }

    static Field prime(std::uint64_t p) {
        if (p < 3 || p >= (std::uint64_t{1} << 63) || !detail::is_prime_u64(p))
            throw structural_error("field modulus must be an odd prime below 2^63, got " +
                                   std::to_string(p));
        Field f;
        f.fp_ = true;
        f.p_ = p;
        return f;
    }

    // Accepts the textual tags "Q" and "Fp:<p>".
    static Field parse(std::string_view tag);

    bool is_q() const { return !fp_; }
    bool is_fp() const { return fp_; }

    std::uint64_t modulus() const {
        if (!fp_) throw structural_error("modulus() called on the rational field");
        return p_;
    }

    bool operator==(const Field& o) const { return fp_ == o.fp_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string to_string() const { return fp_ ? "Fp:" + std::to_string(p_) : "Q"; }

private:
    bool fp_ = false;
    std::uint64_t p_ = 0;
};

} // namespace inertia
