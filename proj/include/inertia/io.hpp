#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "inertia/certify.hpp"
#include "inertia/hypersurface.hpp"
#include "inertia/point.hpp"

namespace inertia {

/// Hypersurface file format: a JSON object
///   { "n_plus_1": <int>, "field": "Q" | "Fp:<p>",
///     "terms": [ { "exps": [e_1, ..., e_{n+1}], "coeff": "<c>" }, ... ] }
/// with 0 <= e_j <= 2, coefficients "<num>" or "<num>/<den>" over Q and a
/// residue in [0, p) over F_p, no zero coefficients and no duplicate
/// exponent vectors. Violations are reported as parse errors carrying
/// "<source>:<line>:".
MultiQuadric read_hypersurface(std::istream& in, const std::string& source_name);
MultiQuadric read_hypersurface_file(const std::string& path);

/// Canonical serialization: terms in exponent-lexicographic order, stable
/// formatting, trailing newline. Equal hypersurfaces serialize identically.
std::string write_hypersurface(const MultiQuadric& x);

/// Point syntax: comma-separated coordinates, each an affine scalar value
/// ("5", "-3/4") or a projective pair "[u:v]"; mixing is allowed. Over F_p,
/// integers reduce modulo p.
Point parse_point(std::string_view text, const Field& f, std::size_t n_plus_1);

std::string verdict_to_json(const Verdict& v);

} // namespace inertia
