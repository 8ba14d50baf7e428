#include "braidrep/io.hpp"

#include "braidrep/errors.hpp"

#include <cstdint>
#include <fstream>

namespace braidrep {

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j.front().is_array()) throw ParseError("matrix rows must be arrays");
  const std::size_t cols = j.front().size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.size() != cols) throw ParseError("inconsistent matrix row lengths");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!row[c].is_string()) throw ParseError("matrix entries must be \"p/q\" strings");
      m(i, c) = parse_rational(row[c].get<std::string>());
    }
  }
  return m;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json subspace_to_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& v : s.vectors()) basis.push_back(vector_to_json(v));
  Json out;
  out["dim"] = s.dim();
  out["basis"] = std::move(basis);
  return out;
}

Json representation_to_json(const Representation& rep) {
  Json gens = Json::array();
  for (const auto& g : rep.generators()) gens.push_back(matrix_to_json(g));
  Json out;
  out["n"] = rep.strands();
  out["r"] = rep.dim();
  out["generators"] = std::move(gens);
  out["label"] = rep.label();
  return out;
}

Representation representation_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("representation document must be a JSON object");
  for (const char* key : {"n", "r", "generators"})
    if (!j.contains(key)) throw ParseError(std::string("representation document lacks \"") + key + "\"");
  auto natural = [](const Json& v) { return v.is_number_integer() && v.get<std::int64_t>() >= 0; };
  if (!natural(j["n"]) || !natural(j["r"]))
    throw ParseError("\"n\" and \"r\" must be non-negative integers");
  const auto n = j["n"].get<std::size_t>();
  const auto r = j["r"].get<std::size_t>();
  if (!j["generators"].is_array()) throw ParseError("\"generators\" must be an array");

  std::vector<Matrix> gens;
  for (const auto& g : j["generators"]) {
    Matrix m = matrix_from_json(g);
    if (m.rows() != r || m.cols() != r) throw InputError("generator shape disagrees with \"r\"");
    gens.push_back(std::move(m));
  }
  std::string label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : std::string{};
  return Representation(n, std::move(gens), std::move(label));
}

Representation load_representation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return representation_from_json(j);
}

void save_representation(const Representation& rep, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << representation_to_json(rep).dump(2) << '\n';
}

}  // namespace braidrep
