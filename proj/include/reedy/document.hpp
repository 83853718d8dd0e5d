#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "reedy/reedy.hpp"

namespace reedy {

/// Kinds in the order of Document::Value's alternatives.
enum class Kind {
  pointed_set,
  pointed_map,
  sset,
  sset_map,
  spectrum,
  spectrum_map,
  simplicial_spectrum,
  simplicial_spectrum_map
};

const char* to_string(Kind k);
bool parse_kind(const std::string& s, Kind& out);

/// A named value of one of the document kinds.
///
/// Format: a JSON object with "kind", "name", "trunc" ({} for pointed kinds,
/// {"D"}, {"N","D"} or {"K","N","D"}) and the payload fields of the kind:
///   pointed-set       size, labels
///   pointed-map       dom, cod, table
///   sset              levels (sizes), faces[k][i], degens[k][i] (tables)
///   sset-map          dom, cod, components[dim]
///   spectrum          levels (sset payloads), actions[n][i][dim], sigma[n][dim]
///   spectrum-map      dom, cod, components[level][dim]
///   simplicial-spectrum      degrees (spectrum payloads), faces[k][i][level][dim], degens
///   simplicial-spectrum-map  dom, cod, components[degree][level][dim]
/// dom and cod are payloads or strings naming an entry of the top-level
/// "defs" object (whose entries are documents). Serialization inlines every
/// reference, sorts keys and drops "defs".
struct Document {
  using Value = std::variant<PointedSet, PointedMap, SimplicialSet, SimplicialMap, SymSpectrum, SpectrumMap,
                             SimplicialSpectrum, SimplicialSpectrumMap>;
  std::string name;
  Value value;

  Kind kind() const { return static_cast<Kind>(value.index()); }
};

/// Malformed input. `where` is "line L, column C" for syntax errors and a
/// JSON pointer for schema errors.
struct DocumentError : std::runtime_error {
  DocumentError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where(where) {}
  std::string where;
};

nlohmann::json to_json(const Document& d);
/// The "trunc" record of a document.
nlohmann::json truncation(const Document& d);
Document from_json(const nlohmann::json& j);
Document parse_document(const std::string& text);
Document load_document(const std::string& path);
/// Canonical bytes: sorted keys, no insignificant whitespace, trailing newline.
std::string serialize(const Document& d);
void save_document(const Document& d, const std::string& path);

/// Structural validation of whatever the document holds.
CheckReport validate(const Document& d);

}  // namespace reedy
