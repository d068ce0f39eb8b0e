#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "super3lie/obstruction.hpp"

namespace super3lie {

using Json = nlohmann::json;

/// Reads a JSON document. Throws Error(ParseError) with the line of a syntax
/// error.
Json read_json_file(const std::filesystem::path& path);
Json parse_json_text(const std::string& text, const std::string& origin);

Rational parse_rational(const Json& j, const std::string& field);
std::string rational_string(const Rational& r);

/// {"label": "p/q", ...}, missing labels are zero.
Vector parse_vector(const Json& j, const SuperSpace& space, const std::string& field);
Json vector_json(const SuperSpace& space, std::span<const Rational> v);
Json dense_json(std::span<const Rational> v);

SuperSpace parse_space(const Json& basis, const std::string& name, const std::string& field);
Json space_json(const SuperSpace& space);

/// {"name", "basis": [{"label", "parity"}], "bracket": [{"args": [a,b,c], "value": {...}}]}
/// with super-skew completion of the stated triples.
ThreeLieSuperalgebra parse_algebra(const Json& j);
ThreeLieSuperalgebra parse_algebra_file(const std::filesystem::path& path);
/// One bracket entry per nonzero triple a <= b <= c.
Json algebra_json(const ThreeLieSuperalgebra& alg);

/// {"kind": "adjoint"} | {"kind": "zero", "module": basis}
/// | {"kind": "explicit", "module": basis, "phi": [{"args": [x,y], "columns": {v: {...}}}]}
/// Pairs not stated follow from super-skewness or are zero.
Representation parse_representation(const Json& j, const AlgebraPtr& alg);
Json representation_json(const Representation& rep);

/// {source label: {target label: value}}, the images of the source basis.
Matrix parse_matrix(const Json& j, const SuperSpace& source, const SuperSpace& target, const std::string& field);
Json matrix_json(const SuperSpace& source, const SuperSpace& target, const Matrix& m);
/// A matrix object or one of "identity", "zero".
GradedLinearMap parse_map(const Json& j, const SuperSpace& source, const SuperSpace& target, Parity degree,
                          const std::string& field);

/// {"level", "parity", "totally_skew"?, "values": [{"args": [...], "value": {...}}]}. Level-p args
/// list 2(p-1)+1 labels. With totally_skew a level-2 value is also stated on
/// every permutation of its arguments.
Cochain parse_cochain(const Json& j, const RepresentationPtr& rep);
Json cochain_json(const Cochain& f);

/// {"degree", "d_p", "d_q"}.
DerivationPair parse_pair(const Json& j, const Representation& rep);
Json pair_json(const DerivationPair& pair);

Json violation_json(const Violation& v);

}  // namespace super3lie
