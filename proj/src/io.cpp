#include "iflin/io.hpp"

#include <fstream>
#include <sstream>

namespace iflin::io {
namespace {

std::string at(const std::string& where) { return where.empty() ? "/" : where; }

[[noreturn]] void malformed(const std::string& where, const std::string& what) {
  throw MalformedInput(at(where) + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) malformed(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) malformed(where, std::string("missing field \"") + key + "\"");
  return *it;
}

Rational component(const Json& j, const std::string& where) {
  if (!j.is_string()) {
    throw MalformedScalar(at(where) +
                          ": components must be decimal strings such as \"0.7\"");
  }
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const MalformedScalar& e) {
    throw MalformedScalar(at(where) + ": " + e.what());
  }
}

Eigen::Index dimension(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 1)
    malformed(where, "expected a positive integer");
  return static_cast<Eigen::Index>(j.get<long long>());
}

}  // namespace

Json parse_document(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedInput(source + ": JSON syntax error at byte " +
                         std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), path);
}

IfScalar scalar_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (!j.is_array() || j.size() != 2)
      throw MalformedScalar("expected [\"mu\",\"nu\"]");
    return IfScalar(component(j[0], where + "/0"), component(j[1], where + "/1"));
  } catch (const MalformedScalar& e) {
    const std::string msg = e.what();
    if (msg.rfind(at(where), 0) == 0) throw;
    throw MalformedScalar(at(where) + ": " + msg);
  } catch (const ConstraintViolation& e) {
    throw ConstraintViolation(at(where) + ": " + e.what());
  }
}

IfMatrix matrix_from_json(const Json& j, const std::string& where) {
  const Eigen::Index rows = dimension(field(j, "rows", where), where + "/rows");
  const Eigen::Index cols = dimension(field(j, "cols", where), where + "/cols");
  const Json& data = field(j, "data", where);
  if (!data.is_array() || static_cast<Eigen::Index>(data.size()) != rows)
    malformed(where + "/data", "expected " + std::to_string(rows) + " rows");
  IfMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const std::string rw = where + "/data/" + std::to_string(r);
    const Json& row = data[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      malformed(rw, "expected " + std::to_string(cols) + " entries");
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = scalar_from_json(row[static_cast<std::size_t>(c)],
                                 rw + "/" + std::to_string(c));
  }
  return m;
}

IfVector vector_from_json(const Json& j, const std::string& where) {
  if (j.is_array()) {
    if (j.empty()) malformed(where, "vector is empty");
    IfVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
      v(static_cast<Eigen::Index>(i)) = scalar_from_json(j[i], where + "/" + std::to_string(i));
    return v;
  }
  const IfMatrix m = matrix_from_json(j, where);
  if (m.rows() != 1) malformed(where, "a vector must be a single-row matrix");
  return m.row(0).transpose();
}

std::vector<IfVector> vectors_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) malformed(where, "expected an array of vectors");
  std::vector<IfVector> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(vector_from_json(j[i], where + "/" + std::to_string(i)));
  return out;
}

VectorSet vector_set_from_json(const Json& j, const std::string& where) {
  const Json& arr = j.is_array() ? j : field(j, "vectors", where);
  const std::string w = j.is_array() ? where : where + "/vectors";
  try {
    return VectorSet(vectors_from_json(arr, w));
  } catch (const ShapeError& e) {
    malformed(w, e.what());
  } catch (const DimensionMismatch& e) {
    malformed(w, e.what());
  }
}

LinearMap map_from_json(const Json& j, const std::string& where) {
  const VectorSet basis = vector_set_from_json(field(j, "basis", where), where + "/basis");
  std::string kind = "explicit";
  if (j.contains("kind")) {
    if (!j["kind"].is_string()) malformed(where + "/kind", "expected a string");
    kind = j["kind"].get<std::string>();
  }
  try {
    if (kind == "explicit") {
      return make_map<Rational>(
          ExplicitKind<Rational>{vectors_from_json(field(j, "images", where), where + "/images")},
          basis);
    }
    if (kind == "identity") return make_map<Rational>(IdentityKind{}, basis);
    if (kind == "zero") return make_map<Rational>(ZeroKind{}, basis);
    if (kind == "scalar") {
      return make_map<Rational>(
          ScalarKind<Rational>{scalar_from_json(field(j, "alpha", where), where + "/alpha")},
          basis);
    }
    if (kind == "projection") {
      const Json& idx = field(j, "indices", where);
      if (!idx.is_array()) malformed(where + "/indices", "expected an array");
      ProjectionKind p;
      for (const auto& i : idx) {
        if (!i.is_number_integer()) malformed(where + "/indices", "expected integers");
        p.indices.push_back(static_cast<Eigen::Index>(i.get<long long>()));
      }
      return make_map<Rational>(p, basis);
    }
  } catch (const ShapeError& e) {
    malformed(where, e.what());
  }
  malformed(where + "/kind", "unknown map kind \"" + kind + "\"");
}

Json scalar_to_json(const IfScalar& s) {
  return Json::array({s.mu().to_string(), s.nu().to_string()});
}

Json matrix_to_json(const IfMatrix& m) {
  Json data = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    data.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Json vector_to_json(const IfVector& v) { return matrix_to_json(v.transpose()); }

Json vectors_to_json(const std::vector<IfVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(vector_to_json(v));
  return out;
}

Json vector_set_to_json(const VectorSet& s) {
  return Json{{"vectors", vectors_to_json(s.vectors())}};
}

Json map_to_json(const LinearMap& t) {
  return Json{{"basis", vectors_to_json(t.basis().vectors())},
              {"images", vectors_to_json(t.images())}};
}

}  // namespace iflin::io
