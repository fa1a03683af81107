#include "torelli/knot_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "torelli/parse.hpp"

namespace torelli {
namespace {

using nlohmann::json;

LaurentPoly read_poly(const json& doc, const char* field) {
  if (!doc.contains(field)) throw KnotDocumentError(std::string("missing field '") + field + "'");
  const json& terms = doc.at(field);
  if (!terms.is_array()) throw KnotDocumentError(std::string("'") + field + "' must be a list");
  LaurentPoly p;
  for (const json& t : terms) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_number_integer())
      throw KnotDocumentError(std::string("'") + field + "' entries must be [exponent, coefficient]");
    p.add_term(t[0].get<int>(), Integer(t[1].get<long>()));
  }
  return p;
}

json write_poly(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({e, c.get_si()});
  return out;
}

}  // namespace

KnotRecord parse_knot_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw KnotDocumentError(std::string("knot document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw KnotDocumentError("knot document must be an object");
  KnotRecord k;
  if (!doc.contains("name") || !doc["name"].is_string()) throw KnotDocumentError("missing string field 'name'");
  k.name = doc["name"].get<std::string>();
  k.conway = read_poly(doc, "conway");
  k.jones = read_poly(doc, "jones");
  if (doc.contains("bscc_basis")) {
    const json& basis = doc["bscc_basis"];
    if (!basis.is_array() || basis.size() != 2 || !basis[0].is_string() || !basis[1].is_string())
      throw KnotDocumentError("'bscc_basis' must be two HVec strings");
    try {
      k.bscc_basis = std::pair{parse_hvec(basis[0].get<std::string>()), parse_hvec(basis[1].get<std::string>())};
    } catch (const ParseError& e) {
      throw KnotDocumentError(std::string("bad bscc_basis: ") + e.what());
    }
  }
  if (k.jones.evaluate_at_one() != 1)
    throw KnotDocumentError("jones polynomial of a knot must satisfy V(1) = 1");
  return k;
}

KnotRecord load_knot_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw KnotDocumentError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_knot_document(buf.str());
}

std::string knot_document(const KnotRecord& k) {
  json doc{{"name", k.name}, {"conway", write_poly(k.conway)}, {"jones", write_poly(k.jones)}};
  if (k.bscc_basis) doc["bscc_basis"] = {to_string(k.bscc_basis->first), to_string(k.bscc_basis->second)};
  return doc.dump(2);
}

}  // namespace torelli
