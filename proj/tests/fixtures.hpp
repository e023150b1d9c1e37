#pragma once

// Shared instances and generators for the test suites.

#include <cstdint>
#include <utility>
#include <vector>

#include "inertia/certify.hpp"
#include "inertia/fibermap.hpp"
#include "inertia/hypersurface.hpp"
#include "inertia/mpoly.hpp"
#include "inertia/rng.hpp"
#include "inertia/words.hpp"
#include "oracle.hpp"

namespace testfix {

using namespace inertia;

inline MPoly poly_from(const Field& f, std::size_t nvars,
                       const std::vector<std::pair<Exps, std::int64_t>>& terms) {
    std::vector<std::pair<Exps, Scalar>> scaled;
    for (const auto& [e, c] : terms) scaled.emplace_back(e, Scalar::from_int(f, c));
    return MPoly::from_terms(f, nvars, scaled);
}

// x^2 y^2 + x + y
inline MultiQuadric x1(const Field& f) {
    return MultiQuadric(poly_from(f, 2, {{{2, 2}, 1}, {{1, 0}, 1}, {{0, 1}, 1}}));
}

// (x y + 1)^2 = x^2 y^2 + 2 x y + 1; axis discriminants vanish identically
inline MultiQuadric x_degenerate(const Field& f) {
    return MultiQuadric(poly_from(f, 2, {{{2, 2}, 1}, {{1, 1}, 2}, {{0, 0}, 1}}));
}

// x^2 y^2 - 1; singular at ([0:1],[1:0])
inline MultiQuadric x_squarediff(const Field& f) {
    return MultiQuadric(poly_from(f, 2, {{{2, 2}, 1}, {{0, 0}, -1}}));
}

// x^2 (y^2+y+1) + x (y^2-2) + (2y^2+y+3): generic axis-1 fiber data with
// content-free F0^2 and F0*F2 and no common monomial factors
inline MultiQuadric x_generic2(const Field& f) {
    return MultiQuadric(poly_from(f, 2,
                                  {{{2, 0}, 1},
                                   {{2, 1}, 1},
                                   {{2, 2}, 1},
                                   {{1, 0}, -2},
                                   {{1, 2}, 1},
                                   {{0, 0}, 3},
                                   {{0, 1}, 1},
                                   {{0, 2}, 2}}));
}

inline Point affine_int(const Field& f, const std::vector<std::int64_t>& values) {
    std::vector<Scalar> scalars;
    for (std::int64_t v : values) scalars.push_back(Scalar::from_int(f, v));
    return Point::affine(f, scalars);
}

inline Point proj(const Field& f,
                  const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
    std::vector<ProjCoord> coords;
    for (const auto& [u, v] : pairs)
        coords.push_back(ProjCoord{Scalar::from_int(f, u), Scalar::from_int(f, v)});
    return Point(std::move(coords));
}

inline MPoly random_mpoly(Rng& rng, const Field& f, std::size_t nvars, std::uint32_t maxdeg,
                          std::size_t nterms) {
    std::vector<std::pair<Exps, Scalar>> terms;
    for (std::size_t t = 0; t < nterms; ++t) {
        Exps e(nvars);
        for (auto& x : e) x = static_cast<std::uint32_t>(rng.below(maxdeg + 1));
        Scalar c = f.is_q() ? Scalar::from_int(f, rng.int_in(-9, 9))
                            : Scalar::residue(f, rng.below(f.modulus()));
        terms.emplace_back(std::move(e), std::move(c));
    }
    return MPoly::from_terms(f, nvars, terms);
}

// Reduced by construction: never emits a letter cancelling its predecessor.
inline Word random_rho_word(Rng& rng, std::size_t n_plus_1, std::size_t max_len) {
    std::size_t len = 1 + rng.below(max_len);
    std::vector<Letter> letters;
    while (letters.size() < len) {
        Letter l{rng.coin() ? Gen::Rho : Gen::RhoInv, rng.below(n_plus_1)};
        if (!letters.empty()) {
            const Letter& prev = letters.back();
            bool inverse_pair = prev.axis == l.axis && prev.kind != l.kind;
            if (inverse_pair) continue;
        }
        letters.push_back(l);
    }
    return Word(std::move(letters));
}

inline Word random_iota_word(Rng& rng, std::size_t n_plus_1, std::size_t max_len) {
    std::size_t len = 1 + rng.below(max_len);
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < len; ++i)
        letters.push_back(Letter{Gen::Iota, rng.below(n_plus_1)});
    return Word(std::move(letters));
}

// Dense image of a polynomial involving only `var`; coefficients must fit
// long long (integers over Q, residues over F_p).
inline oracle::Poly1 to_dense1(const MPoly& p, std::size_t var) {
    oracle::Poly1 dense;
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t j = 0; j < e.size(); ++j)
            if (j != var && e[j] != 0) throw std::logic_error("poly not univariate in var");
        if (dense.size() <= e[var]) dense.resize(e[var] + 1, 0);
        if (p.field().is_q()) {
            if (denominator(c.rat()) != 1) throw std::logic_error("non-integer coefficient");
            dense[e[var]] = static_cast<long long>(numerator(c.rat()));
        } else {
            dense[e[var]] = static_cast<long long>(c.res());
        }
    }
    return oracle::trim(dense);
}

inline MPoly from_dense1(const Field& f, std::size_t nvars, std::size_t var,
                         const oracle::Poly1& dense) {
    std::vector<std::pair<Exps, Scalar>> terms;
    for (std::size_t k = 0; k < dense.size(); ++k) {
        if (dense[k] == 0) continue;
        Exps e(nvars, 0);
        e[var] = static_cast<std::uint32_t>(k);
        terms.emplace_back(std::move(e), Scalar::from_int(f, dense[k]));
    }
    return MPoly::from_terms(f, nvars, terms);
}

} // namespace testfix
