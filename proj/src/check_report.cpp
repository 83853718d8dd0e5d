#include "reedy/check_report.hpp"

#include <sstream>

namespace reedy {

int Witness::coordinate(const std::string& name) const {
  for (const auto& [k, v] : location)
    if (k == name) return v;
  return -1;
}

std::string Witness::describe() const {
  std::ostringstream os;
  if (!clause.empty()) os << clause << ": ";
  switch (kind) {
    case Kind::collision:
      os << "elements " << first << " and " << second << " both map to " << image;
      break;
    case Kind::missed:
      os << "element " << image << " is not in the image";
      break;
    case Kind::identity:
      os << "identity fails on element " << first << " (" << second << " vs " << image << ")";
      break;
  }
  if (!location.empty()) {
    os << " at";
    for (const auto& [k, v] : location) os << ' ' << k << '=' << v;
  }
  if (!path.empty()) os << " [" << path << ']';
  return os.str();
}

CheckReport& CheckReport::at(const std::string& name, int value) {
  if (witness) witness->location.insert(witness->location.begin(), {name, value});
  return *this;
}

CheckReport& CheckReport::clause(const std::string& c) {
  if (witness) witness->clause = witness->clause.empty() ? c : c + ": " + witness->clause;
  return *this;
}

const char* to_string(Witness::Kind k) {
  switch (k) {
    case Witness::Kind::collision: return "collision";
    case Witness::Kind::missed: return "missed";
    case Witness::Kind::identity: return "identity";
  }
  return "?";
}

}  // namespace reedy
