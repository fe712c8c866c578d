#include "dissension/state_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dissension/errors.hpp"

namespace dissension {

ComplexMatrix parse_state_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw NotAState(std::string("malformed state file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("matrix")) {
    throw NotAState("state file needs fields 'n' and 'matrix'");
  }
  if (!doc["n"].is_number_integer()) throw NotAState("field 'n' must be an integer");
  const int n = doc["n"].get<int>();
  if (n < 1 || n > 3) throw NotAState("field 'n' must be 1, 2 or 3, got " + std::to_string(n));
  const std::size_t dim = std::size_t{1} << n;

  const auto& rows = doc["matrix"];
  if (!rows.is_array() || rows.size() != dim) {
    throw NotAState("'matrix' must have " + std::to_string(dim) + " rows for n=" + std::to_string(n));
  }
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != dim) {
      throw NotAState("row " + std::to_string(i) + " must have " + std::to_string(dim) + " entries");
    }
    for (std::size_t j = 0; j < dim; ++j) {
      const auto& entry = row[j];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
        throw NotAState("entry (" + std::to_string(i) + "," + std::to_string(j) + ") must be [re, im]");
      }
      m(i, j) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return m;
}

ComplexMatrix read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read state file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_json(buf.str());
}

std::string state_to_json(const ComplexMatrix& m) {
  int n = 0;
  while ((std::size_t{1} << n) < m.dim()) ++n;
  nlohmann::ordered_json doc;
  doc["n"] = n;
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  doc["matrix"] = std::move(rows);
  return doc.dump() + "\n";
}

}  // namespace dissension
