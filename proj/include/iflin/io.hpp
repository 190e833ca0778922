#pragma once

// JSON documents for scalars, vectors, matrices, vector sets and linear maps.
//
//   scalar   ["0.7","0.3"]  (a "0.7,0.3" string is accepted on input)
//   matrix   {"rows": m, "cols": n, "data": [[scalar, ...], ...]}
//   vector   a 1 x n matrix object (a bare array of scalars is accepted)
//   set      {"vectors": [vector, ...]}
//   map      {"basis": [vector...], "images": [vector...]}
//            {"kind": "identity"|"zero"|"scalar"|"projection"|"explicit",
//             "basis": [...], "alpha": scalar, "indices": [...], "images": [...]}
//
// Numbers are always strings so that values stay exact. Every parse error
// names the JSON pointer of the offending element.

#include <string>

#include <json.hpp>

#include "iflin/linalg.hpp"
#include "iflin/spans.hpp"
#include "iflin/transforms.hpp"

namespace iflin::io {

using Json = nlohmann::json;

/// Parses JSON text; syntax errors become MalformedInput with the byte
/// offset and `source` in the message.
Json parse_document(const std::string& text, const std::string& source);
Json read_document(const std::string& path);

IfScalar scalar_from_json(const Json& j, const std::string& where = "");
IfMatrix matrix_from_json(const Json& j, const std::string& where = "");
IfVector vector_from_json(const Json& j, const std::string& where = "");
std::vector<IfVector> vectors_from_json(const Json& j, const std::string& where = "");
VectorSet vector_set_from_json(const Json& j, const std::string& where = "");
LinearMap map_from_json(const Json& j, const std::string& where = "");

Json scalar_to_json(const IfScalar& s);
Json matrix_to_json(const IfMatrix& m);
Json vector_to_json(const IfVector& v);
Json vectors_to_json(const std::vector<IfVector>& vs);
Json vector_set_to_json(const VectorSet& s);
Json map_to_json(const LinearMap& t);

}  // namespace iflin::io
