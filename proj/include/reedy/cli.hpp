#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "reedy/document.hpp"

namespace reedy::cli {

enum Exit : int { pass = 0, property_failure = 1, input_error = 2, starvation = 3 };

/// bar-s, sphere, constant-sphere, good-demo, thm14-demo, bar-s-inclusion.
std::vector<std::string> builtin_names();
std::optional<Document> builtin(const std::string& name);

/// Properties accepted by `check`.
std::vector<std::string> property_names();

/// Evaluates a property on a document. Throws DocumentError when the kind
/// does not fit the property.
CheckReport check_property(const Document& d, const std::string& property);

/// Re-evaluates the map a witness of check_property(d, property) names and
/// confirms the cited elements; `why` explains a negative answer.
bool replay(const Document& d, const std::string& property, const Witness& w, std::string& why);

nlohmann::json witness_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);

/// Runs the command line; `color` enables ANSI colors in text reports.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color = false);

}  // namespace reedy::cli
