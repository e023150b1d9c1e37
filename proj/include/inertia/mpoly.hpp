#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "inertia/point.hpp"
#include "inertia/scalar.hpp"

namespace inertia {

using Exps = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial over an exact field, with a declared
/// per-variable degree vector used for projective (multihomogeneous)
/// evaluation.
///
/// The declared degree satisfies d[j] >= max exponent of variable j and is
/// deliberately allowed to be wider than the terms require: evaluating a
/// monomial prod x_j^{e_j} at coordinates [u_j : v_j] uses the padding
/// prod u_j^{d_j - e_j} v_j^{e_j}, so polynomials sharing a declared degree
/// homogenize consistently. Equality compares term maps only; the declared
/// degree never participates.
class MPoly {
public:
    MPoly(Field field, std::size_t nvars); // zero polynomial

    static MPoly constant(const Field& f, std::size_t nvars, const Scalar& c);
    static MPoly variable(const Field& f, std::size_t nvars, std::size_t var);
    static MPoly from_terms(const Field& f, std::size_t nvars,
                            const std::vector<std::pair<Exps, Scalar>>& terms);

    const Field& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const std::map<Exps, Scalar>& terms() const { return terms_; }
    const std::vector<std::uint32_t>& declared_degree() const { return declared_degree_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::uint32_t max_exponent(std::size_t var) const;

    /// Copy with a widened declared degree (componentwise >= current max
    /// exponents, else structural error).
    MPoly with_declared_degree(std::vector<std::uint32_t> d) const;

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator-() const;
    MPoly operator*(const Scalar& c) const;

    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    Scalar eval_affine(const std::vector<Scalar>& x) const;

    /// Value of the multihomogenization to the declared degree. Well defined
    /// up to one nonzero factor per coordinate scaling, so only zero tests
    /// and ratios of same-degree evaluations are meaningful.
    Scalar eval_projective(const Point& p) const;

    /// Pointwise value of d/du_var (wrt_v = false) or d/dv_var (wrt_v = true)
    /// of the multihomogenization, under the same scaling caveat.
    Scalar eval_projective_partial(const Point& p, std::size_t var, bool wrt_v) const;

    /// Positive common content over Q (gcd of numerators / lcm of
    /// denominators); 1 over F_p or for the zero polynomial.
    Scalar content() const;

    /// Componentwise minimum exponent across terms (all-zero for the zero
    /// polynomial).
    Exps min_exponents() const;

    /// Quotient by the monomial x^m; every term must be divisible. The
    /// declared degree drops by m.
    MPoly divided_by_monomial(const Exps& m) const;

    std::string to_string() const;

private:
    void check_compatible(const MPoly& o) const;
    void insert_term(const Exps& e, const Scalar& c); // accumulates, drops zeros
    void recompute_min_declared();

    Field field_;
    std::size_t nvars_;
    std::vector<std::uint32_t> declared_degree_;
    std::map<Exps, Scalar> terms_;
};

MPoly operator*(const Scalar& c, const MPoly& p);

/// Content/monomial normal form: content removed over Q and the common
/// monomial factor stripped. Scalars produced by fiber-map composition are
/// canonical in exactly this sense.
MPoly scalar_normal_form(const MPoly& p);

} // namespace inertia
