#pragma once

#include "braidrep/linalg.hpp"
#include "braidrep/representation.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace braidrep {

using Json = nlohmann::ordered_json;

/// Array of row arrays of "p/q" strings.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json vector_to_json(const Vector& v);
/// {"dim": k, "basis": [[...], ...]} with canonical basis vectors.
Json subspace_to_json(const Subspace& s);

/// {"n": int, "r": int, "generators": [...], "label": string}
Json representation_to_json(const Representation& rep);
/// Throws ParseError / InputError on malformed documents.
Representation representation_from_json(const Json& j);

Representation load_representation(const std::filesystem::path& path);
void save_representation(const Representation& rep, const std::filesystem::path& path);

}  // namespace braidrep
