#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace reedy {

using Index = std::uint32_t;

/// Where a failing check found its evidence.
///
/// `location` lists coordinates from the outermost construction inwards, e.g.
/// {("degree", 2), ("level", 1), ("dim", 3)} for a Reedy check on a simplicial
/// spectrum. A collision witness names two distinct elements with equal image;
/// a missed witness names a codomain element outside the image; an identity
/// witness names an element on which a required equation fails.
struct Witness {
  enum class Kind { collision, missed, identity };

  Kind kind = Kind::collision;
  std::vector<std::pair<std::string, int>> location;
  Index first = 0;
  Index second = 0;
  Index image = 0;
  std::string clause;
  std::string path;

  int coordinate(const std::string& name) const;  // -1 if absent
  std::string describe() const;
};

struct CheckReport {
  bool pass = true;
  std::optional<Witness> witness;
  std::string detail;

  static CheckReport ok() { return {}; }
  static CheckReport fail(Witness w, std::string detail = {}) {
    return {false, std::move(w), std::move(detail)};
  }

  explicit operator bool() const { return pass; }

  // Prepends a coordinate to the witness location (no-op on pass).
  CheckReport& at(const std::string& name, int value);
  // Prepends an outer clause name ("outer: inner").
  CheckReport& clause(const std::string& c);
};

const char* to_string(Witness::Kind k);

}  // namespace reedy
