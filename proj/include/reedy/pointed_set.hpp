#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "reedy/ambient.hpp"
#include "reedy/check_report.hpp"
#include "reedy/kernels.hpp"

namespace reedy {

/// A finite pointed set {0, ..., size-1} with basepoint 0.
class PointedSet {
 public:
  PointedSet() = default;
  explicit PointedSet(Index size);
  PointedSet(Index size, std::vector<std::string> labels);

  Index size() const { return size_; }
  bool is_zero() const { return size_ == 1; }

  bool has_labels() const { return labels_ != nullptr; }
  const std::vector<std::string>* labels() const { return labels_.get(); }
  std::string name_of(Index i) const;

  // Labels are presentation only.
  friend bool operator==(const PointedSet& a, const PointedSet& b) { return a.size_ == b.size_; }

 private:
  Index size_ = 1;
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// A basepoint-preserving function, stored as its table.
class PointedMap {
 public:
  PointedMap() = default;
  PointedMap(PointedSet dom, PointedSet cod, std::vector<Index> table);

  static PointedMap identity(const PointedSet& a);
  static PointedMap zero(const PointedSet& dom, const PointedSet& cod);

  // Builds the table from f(i) for i >= 1; f must return values < cod.size().
  template <class F>
  static PointedMap tabulate(const PointedSet& dom, const PointedSet& cod, F&& f) {
    std::vector<Index> t(dom.size());
    for (Index i = 1; i < dom.size(); ++i) t[i] = f(i);
    return PointedMap(dom, cod, std::move(t));
  }

  const PointedSet& dom() const { return dom_; }
  const PointedSet& cod() const { return cod_; }
  Index operator()(Index i) const { return table_[i]; }
  std::span<const Index> table() const { return table_; }

  friend bool operator==(const PointedMap& a, const PointedMap& b);

 private:
  PointedSet dom_;
  PointedSet cod_;
  std::vector<Index> table_{0};
};

/// g after f. Throws std::invalid_argument when f.cod() != g.dom().
PointedMap compose(const PointedMap& f, const PointedMap& g);

/// Lexicographically least pair (i, j), i < j, with f(i) == f(j).
std::optional<std::pair<Index, Index>> find_collision(const PointedMap& f);
/// Least codomain element outside the image.
std::optional<Index> find_missed(const PointedMap& f);

bool is_mono(const PointedMap& f);
bool is_epi(const PointedMap& f);
bool is_iso(const PointedMap& f);

CheckReport check_mono(const PointedMap& f);
CheckReport check_epi(const PointedMap& f);
CheckReport check_iso(const PointedMap& f);

/// Smash product: the non-basepoint pair (a, b) sits at
/// 1 + (a-1)*(B.size()-1) + (b-1); pairs touching a basepoint go to 0.
PointedSet smash(const PointedSet& a, const PointedSet& b);
Index smash_index(const PointedSet& a, const PointedSet& b, Index x, Index y);
std::pair<Index, Index> smash_unpair(const PointedSet& a, const PointedSet& b, Index z);
PointedMap smash(const PointedMap& f, const PointedMap& g);

/// The category of finite pointed sets.
struct PointedSets {
  using Object = PointedSet;
  using Map = PointedMap;
  static constexpr const char* coordinate = "element";

  static Object zero_like(const Object&) { return PointedSet(1); }
  static Map identity(const Object& a) { return PointedMap::identity(a); }
  static Map zero_map(const Object& a, const Object& b) { return PointedMap::zero(a, b); }
  static Map compose(const Map& f, const Map& g) { return reedy::compose(f, g); }
  static bool equal(const Map& f, const Map& g) { return f == g; }
  static bool same(const Object& a, const Object& b) { return a == b; }
  static const Object& dom(const Map& f) { return f.dom(); }
  static const Object& cod(const Map& f) { return f.cod(); }

  /// Coproduct; summand k's non-basepoint elements follow those of summand k-1.
  static Cocone<PointedSets> wedge(const std::vector<Object>& summands);
  /// Union-find quotient of cod by f(x) ~ g(x); classes numbered by least member.
  static Cocone<PointedSets> coequalizer(const Map& f, const Map& g);
  /// The map q with compose(epi, q) == h. Throws if epi is not surjective or
  /// h is not constant on the fibres of epi.
  static Map descend(const Map& epi, const Map& h);

  static CheckReport is_mono(const Map& f) { return check_mono(f); }
  static CheckReport is_epi(const Map& f) { return check_epi(f); }
  /// Identity witness at the least element where f and g disagree.
  static CheckReport compare(const Map& f, const Map& g);
  static CheckReport validate(const Object&) { return CheckReport::ok(); }
  static CheckReport validate_map(const Map&) { return CheckReport::ok(); }
};

struct Pullback {
  PointedSet object;
  PointedMap to_first;   // PB -> B
  PointedMap to_second;  // PB -> C
};

/// Pullback of f: B -> D and g: C -> D; pairs (b, c) with f(b) == g(c) in
/// lexicographic order, (0, 0) first.
Pullback pullback(const PointedMap& f, const PointedMap& g);

}  // namespace reedy
