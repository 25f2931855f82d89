#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "cli.hpp"
#include "spinsurg/errors.hpp"

namespace spinsurg::cli {

namespace {

using nlohmann::ordered_json;

mpz_class entry_to_mpz(const ordered_json& v) {
  // LP64: long holds the full 64-bit json integer range.
  if (v.is_number_unsigned())
    return mpz_class(static_cast<unsigned long>(v.get<std::uint64_t>()));
  if (v.is_number_integer())
    return mpz_class(static_cast<long>(v.get<std::int64_t>()));
  throw parse_error("matrix entries must be integers");
}

IntMatrix matrix_from_json(const ordered_json& rows) {
  if (!rows.is_array()) throw parse_error("\"matrix\" must be an array of rows");
  std::size_t n = rows.size();
  std::size_t cols = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array()) throw parse_error("matrix rows must be arrays");
    if (i == 0)
      cols = rows[i].size();
    else if (rows[i].size() != cols)
      throw parse_error("matrix rows have unequal lengths");
  }
  IntMatrix m(n, n == 0 ? 0 : cols);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entry_to_mpz(rows[i][j]);
  return m;
}

GF2Vector spin_from_json(const ordered_json& bits) {
  if (!bits.is_array()) throw parse_error("\"spin\" must be an array of 0/1");
  GF2Vector s;
  s.reserve(bits.size());
  for (const auto& v : bits) {
    if (!v.is_number_integer()) throw parse_error("spin entries must be integers");
    auto x = v.get<std::int64_t>();
    if (x != 0 && x != 1) throw parse_error("spin entries must be 0 or 1");
    s.push_back(static_cast<std::uint8_t>(x));
  }
  return s;
}

}  // namespace

SpinPresentation PresentationFile::presentation() const {
  if (!spin)
    throw precondition_error("presentation file has no spin field");
  return SpinPresentation(matrix, *spin);
}

PresentationFile parse_presentation_text(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw parse_error("top level must be an object");
  for (const auto& item : j.items()) {
    const std::string& k = item.key();
    if (k != "name" && k != "matrix" && k != "spin")
      throw parse_error("unknown key \"" + k + "\"");
  }
  if (!j.contains("matrix")) throw parse_error("missing key \"matrix\"");

  PresentationFile f;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw parse_error("\"name\" must be a string");
    f.name = j["name"].get<std::string>();
  }
  f.matrix = SymIntMatrix(matrix_from_json(j["matrix"]));
  if (j.contains("spin")) {
    f.spin = spin_from_json(j["spin"]);
    f.presentation();  // validate length and the characteristic condition
  }
  return f;
}

PresentationFile load_presentation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot read file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation_text(buf.str());
}

std::string presentation_to_json(const PresentationFile& f) {
  ordered_json j;
  if (f.name) j["name"] = *f.name;
  auto rows = ordered_json::array();
  std::size_t n = f.matrix.dim();
  for (std::size_t i = 0; i < n; ++i) {
    auto row = ordered_json::array();
    for (std::size_t k = 0; k < n; ++k) {
      const mpz_class& v = f.matrix.at(i, k);
      if (!v.fits_slong_p())
        throw size_cap_error("matrix entry exceeds the file format range");
      row.push_back(v.get_si());
    }
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  if (f.spin) {
    auto bits = ordered_json::array();
    for (auto b : *f.spin) bits.push_back(static_cast<int>(b));
    j["spin"] = std::move(bits);
  }
  return j.dump(2) + "\n";
}

}  // namespace spinsurg::cli
