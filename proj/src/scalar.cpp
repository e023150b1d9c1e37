#include "inertia/scalar.hpp"

#include <charconv>

namespace inertia {

namespace {

std::uint64_t parse_u64(std::string_view s, const char* what) {
    std::uint64_t v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || s.empty())
        throw parse_error(std::string("invalid ") + what + ": '" + std::string(s) + "'");
    return v;
}

BigInt parse_bigint(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos)
        throw parse_error("invalid integer literal: '" + std::string(s) + "'");
    BigInt v{std::string(s)};
    return neg ? BigInt(-v) : v;
}

} // namespace

Field Field::parse(std::string_view tag) {
    if (tag == "Q") return rationals();
    constexpr std::string_view prefix = "Fp:";
    if (tag.substr(0, prefix.size()) == prefix) {
        std::uint64_t p = parse_u64(tag.substr(prefix.size()), "field modulus");
        try {
            return prime(p);
        } catch (const structural_error& e) {
            throw parse_error(e.what());
        }
    }
    throw parse_error("invalid field tag '" + std::string(tag) + "' (expected Q or Fp:<p>)");
}

Scalar Scalar::from_int(const Field& f, std::int64_t n) {
    Scalar s(f);
    if (f.is_q()) {
        s.q_ = n;
    } else {
        std::uint64_t p = f.modulus();
        std::int64_t m = n % static_cast<std::int64_t>(p);
        if (m < 0) m += static_cast<std::int64_t>(p);
        s.r_ = static_cast<std::uint64_t>(m);
    }
    return s;
}

Scalar Scalar::rational(BigRational q) {
    Scalar s(Field::rationals());
    s.q_ = std::move(q);
    return s;
}

Scalar Scalar::residue(const Field& f, std::uint64_t r) {
    if (!f.is_fp()) throw structural_error("residue() needs a prime field");
    Scalar s(f);
    s.r_ = r % f.modulus();
    return s;
}

Scalar Scalar::parse(const Field& f, std::string_view text) {
    if (f.is_fp()) {
        std::uint64_t r = parse_u64(text, "residue");
        if (r >= f.modulus())
            throw parse_error("residue " + std::string(text) + " out of range [0, " +
                              std::to_string(f.modulus()) + ")");
        return residue(f, r);
    }
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return rational(BigRational(parse_bigint(text)));
    BigInt num = parse_bigint(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw parse_error("denominator must be a positive integer: '" + std::string(text) + "'");
    BigInt den = parse_bigint(den_text);
    if (den == 0) throw parse_error("zero denominator: '" + std::string(text) + "'");
    return rational(BigRational(num, den));
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw structural_error("mixed fields: " + field_.to_string() + " vs " +
                               o.field_.to_string());
}

bool Scalar::is_zero() const { return field_.is_q() ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return field_.is_q() ? q_ == 1 : r_ == 1; }

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s(field_);
    if (field_.is_q()) {
        s.q_ = q_ + o.q_;
    } else {
        std::uint64_t p = field_.modulus();
        std::uint64_t sum = r_ + o.r_; // p < 2^63, no overflow
        s.r_ = sum >= p ? sum - p : sum;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s(field_);
    if (field_.is_q())
        s.q_ = q_ * o.q_;
    else
        s.r_ = detail::mul_mod(r_, o.r_, field_.modulus());
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.is_q())
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : field_.modulus() - r_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw structural_error("division by zero");
    Scalar s(field_);
    if (field_.is_q())
        s.q_ = 1 / q_;
    else
        s.r_ = detail::inv_mod(r_, field_.modulus());
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    return field_.is_q() ? q_ == o.q_ : r_ == o.r_;
}

const BigRational& Scalar::rat() const {
    if (!field_.is_q()) throw structural_error("rat() called on a prime-field scalar");
    return q_;
}

std::uint64_t Scalar::res() const {
    if (!field_.is_fp()) throw structural_error("res() called on a rational scalar");
    return r_;
}

std::string Scalar::to_string() const {
    if (field_.is_fp()) return std::to_string(r_);
    std::string s = numerator(q_).str();
    if (denominator(q_) != 1) s += "/" + denominator(q_).str();
    return s;
}

Scalar pow(const Scalar& base, std::uint64_t exp) {
    Scalar acc = Scalar::one(base.field());
    Scalar b = base;
    while (exp) {
        if (exp & 1) acc = acc * b;
        b = b * b;
        exp >>= 1;
    }
    return acc;
}

std::optional<Scalar> sqrt_mod(const Scalar& a) {
    if (!a.field().is_fp()) throw structural_error("sqrt_mod needs a prime-field scalar");
    auto r = detail::sqrt_mod_prime(a.res(), a.field().modulus());
    if (!r) return std::nullopt;
    return Scalar::residue(a.field(), *r);
}

} // namespace inertia
