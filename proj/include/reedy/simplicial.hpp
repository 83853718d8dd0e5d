#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "reedy/ambient.hpp"
#include "reedy/check_report.hpp"
#include "reedy/pointed_set.hpp"

namespace reedy {

/// A truncated simplicial object X_0, ..., X_K in an ambient category A.
///
/// face(k, i): X_k -> X_{k-1} for 0 <= i <= k, 1 <= k <= K;
/// degen(k, i): X_k -> X_{k+1} for 0 <= i <= k, 0 <= k < K.
/// Construction checks shapes (counts, domains, codomains); the simplicial
/// identities are checked by validate(). Values are immutable and share
/// their storage on copy.
template <class A>
class SimplicialObject {
 public:
  using Object = typename A::Object;
  using Map = typename A::Map;

  SimplicialObject() : d_(std::make_shared<const Data>(Data{{Object{}}, {{}}, {}})) {}

  SimplicialObject(std::vector<Object> objects, std::vector<std::vector<Map>> faces,
                   std::vector<std::vector<Map>> degens) {
    const std::size_t n = objects.size();
    if (n == 0) throw std::invalid_argument("simplicial object needs degree 0");
    if (faces.size() != n || !faces[0].empty())
      throw std::invalid_argument("face table must have one (possibly empty) row per degree");
    if (degens.size() != n - 1) throw std::invalid_argument("degeneracy table must have K rows");
    for (std::size_t k = 1; k < n; ++k) {
      if (faces[k].size() != k + 1) throw std::invalid_argument("degree " + std::to_string(k) + " needs k+1 faces");
      for (const auto& f : faces[k])
        if (!A::same(A::dom(f), objects[k]) || !A::same(A::cod(f), objects[k - 1]))
          throw std::invalid_argument("face map at degree " + std::to_string(k) + " has wrong endpoints");
    }
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (degens[k].size() != k + 1)
        throw std::invalid_argument("degree " + std::to_string(k) + " needs k+1 degeneracies");
      for (const auto& s : degens[k])
        if (!A::same(A::dom(s), objects[k]) || !A::same(A::cod(s), objects[k + 1]))
          throw std::invalid_argument("degeneracy at degree " + std::to_string(k) + " has wrong endpoints");
    }
    d_ = std::make_shared<const Data>(Data{std::move(objects), std::move(faces), std::move(degens)});
  }

  int trunc() const { return static_cast<int>(d_->objects.size()) - 1; }
  const Object& at(int k) const { return d_->objects.at(static_cast<std::size_t>(k)); }
  const std::vector<Object>& objects() const { return d_->objects; }
  const Map& face(int k, int i) const { return d_->faces.at(k).at(i); }
  const Map& degen(int k, int i) const { return d_->degens.at(k).at(i); }
  const std::vector<std::vector<Map>>& faces() const { return d_->faces; }
  const std::vector<std::vector<Map>>& degens() const { return d_->degens; }

  bool shares_storage_with(const SimplicialObject& o) const { return d_ == o.d_; }

 private:
  struct Data {
    std::vector<Object> objects;
    std::vector<std::vector<Map>> faces;
    std::vector<std::vector<Map>> degens;
  };
  std::shared_ptr<const Data> d_;
};

/// A degreewise map of simplicial objects; naturality is checked by validate_map().
template <class A>
class SimplicialMapOf {
 public:
  using Map = typename A::Map;

  SimplicialMapOf() = default;
  SimplicialMapOf(SimplicialObject<A> dom, SimplicialObject<A> cod, std::vector<Map> components) {
    if (dom.trunc() != cod.trunc()) throw std::invalid_argument("simplicial map between different truncations");
    if (components.size() != static_cast<std::size_t>(dom.trunc() + 1))
      throw std::invalid_argument("simplicial map needs one component per degree");
    for (int k = 0; k <= dom.trunc(); ++k)
      if (!A::same(A::dom(components[k]), dom.at(k)) || !A::same(A::cod(components[k]), cod.at(k)))
        throw std::invalid_argument("component " + std::to_string(k) + " has wrong endpoints");
    d_ = std::make_shared<const Data>(Data{std::move(dom), std::move(cod), std::move(components)});
  }

  const SimplicialObject<A>& dom() const { return d_->dom; }
  const SimplicialObject<A>& cod() const { return d_->cod; }
  const Map& component(int k) const { return d_->components.at(static_cast<std::size_t>(k)); }
  const std::vector<Map>& components() const { return d_->components; }
  int trunc() const { return d_->dom.trunc(); }

 private:
  struct Data {
    SimplicialObject<A> dom;
    SimplicialObject<A> cod;
    std::vector<Map> components;
  };
  std::shared_ptr<const Data> d_ = std::make_shared<const Data>();
};

/// Simplicial objects in A, with limits and colimits computed degreewise.
template <class A>
struct SimplicialAmbient {
  using Object = SimplicialObject<A>;
  using Map = SimplicialMapOf<A>;
  static constexpr const char* coordinate = std::is_same_v<A, PointedSets> ? "dim" : "degree";

  static const Object& dom(const Map& f) { return f.dom(); }
  static const Object& cod(const Map& f) { return f.cod(); }

  static Object zero_like(const Object& x) {
    std::vector<typename A::Object> objs;
    for (int k = 0; k <= x.trunc(); ++k) objs.push_back(A::zero_like(x.at(k)));
    return from_objects(objs, [&](int k, int, bool face) {
      return face ? A::zero_map(objs[k], objs[k - 1]) : A::zero_map(objs[k], objs[k + 1]);
    });
  }

  static Map identity(const Object& x) {
    std::vector<typename A::Map> c;
    for (int k = 0; k <= x.trunc(); ++k) c.push_back(A::identity(x.at(k)));
    return Map(x, x, std::move(c));
  }

  static Map zero_map(const Object& x, const Object& y) {
    std::vector<typename A::Map> c;
    for (int k = 0; k <= x.trunc(); ++k) c.push_back(A::zero_map(x.at(k), y.at(k)));
    return Map(x, y, std::move(c));
  }

  static Map compose(const Map& f, const Map& g) {
    if (!same(f.cod(), g.dom())) throw std::invalid_argument("compose: simplicial maps not composable");
    std::vector<typename A::Map> c;
    for (int k = 0; k <= f.trunc(); ++k) c.push_back(A::compose(f.component(k), g.component(k)));
    return Map(f.dom(), g.cod(), std::move(c));
  }

  static bool equal(const Map& f, const Map& g) {
    if (f.trunc() != g.trunc()) return false;
    for (int k = 0; k <= f.trunc(); ++k)
      if (!A::equal(f.component(k), g.component(k))) return false;
    return true;
  }

  static bool same(const Object& x, const Object& y) {
    if (x.shares_storage_with(y)) return true;
    if (x.trunc() != y.trunc()) return false;
    for (int k = 0; k <= x.trunc(); ++k)
      if (!A::same(x.at(k), y.at(k))) return false;
    for (int k = 1; k <= x.trunc(); ++k)
      for (int i = 0; i <= k; ++i)
        if (!A::equal(x.face(k, i), y.face(k, i))) return false;
    for (int k = 0; k < x.trunc(); ++k)
      for (int i = 0; i <= k; ++i)
        if (!A::equal(x.degen(k, i), y.degen(k, i))) return false;
    return true;
  }

  static Cocone<SimplicialAmbient> wedge(const std::vector<Object>& summands) {
    if (summands.empty()) throw std::invalid_argument("wedge of no simplicial objects");
    const int K = summands[0].trunc();
    std::vector<Cocone<A>> w;
    std::vector<typename A::Object> objs;
    for (int k = 0; k <= K; ++k) {
      std::vector<typename A::Object> parts;
      for (const auto& s : summands) {
        if (s.trunc() != K) throw std::invalid_argument("wedge: truncations differ");
        parts.push_back(s.at(k));
      }
      w.push_back(A::wedge(parts));
      objs.push_back(w.back().object);
    }
    Object obj = from_objects(objs, [&](int k, int i, bool face) {
      std::vector<typename A::Map> maps;
      for (std::size_t j = 0; j < summands.size(); ++j) {
        if (face) maps.push_back(A::compose(summands[j].face(k, i), w[k - 1].legs[j]));
        else maps.push_back(A::compose(summands[j].degen(k, i), w[k + 1].legs[j]));
      }
      return w[k].factor(maps);
    });
    Cocone<SimplicialAmbient> out;
    out.object = obj;
    for (std::size_t j = 0; j < summands.size(); ++j) {
      std::vector<typename A::Map> c;
      for (int k = 0; k <= K; ++k) c.push_back(w[k].legs[j]);
      out.legs.push_back(Map(summands[j], obj, std::move(c)));
    }
    out.factor = [w, obj](std::span<const Map> maps) {
      if (maps.empty()) throw std::invalid_argument("copair of no maps");
      std::vector<typename A::Map> c;
      for (int k = 0; k <= obj.trunc(); ++k) {
        std::vector<typename A::Map> at_k;
        for (const auto& m : maps) at_k.push_back(m.component(k));
        c.push_back(w[k].factor(at_k));
      }
      return Map(obj, maps[0].cod(), std::move(c));
    };
    return out;
  }

  static Cocone<SimplicialAmbient> coequalizer(const Map& f, const Map& g) {
    const Object& y = f.cod();
    std::vector<Cocone<A>> q;
    std::vector<typename A::Object> objs;
    for (int k = 0; k <= y.trunc(); ++k) {
      q.push_back(A::coequalizer(f.component(k), g.component(k)));
      objs.push_back(q.back().object);
    }
    Object obj = from_objects(objs, [&](int k, int i, bool face) {
      if (face) return A::descend(q[k].legs[0], A::compose(y.face(k, i), q[k - 1].legs[0]));
      return A::descend(q[k].legs[0], A::compose(y.degen(k, i), q[k + 1].legs[0]));
    });
    std::vector<typename A::Map> leg;
    for (int k = 0; k <= y.trunc(); ++k) leg.push_back(q[k].legs[0]);
    Cocone<SimplicialAmbient> out;
    out.object = obj;
    out.legs.push_back(Map(y, obj, std::move(leg)));
    Map l = out.legs[0];
    out.factor = [l](std::span<const Map> maps) {
      if (maps.size() != 1) throw std::invalid_argument("coequalizer factor takes one map");
      return descend(l, maps[0]);
    };
    return out;
  }

  static Map descend(const Map& epi, const Map& h) {
    std::vector<typename A::Map> c;
    for (int k = 0; k <= epi.trunc(); ++k) c.push_back(A::descend(epi.component(k), h.component(k)));
    return Map(epi.cod(), h.cod(), std::move(c));
  }

  static CheckReport is_mono(const Map& f) {
    for (int k = 0; k <= f.trunc(); ++k) {
      auto r = A::is_mono(f.component(k));
      if (!r) return r.at(coordinate, k);
    }
    return CheckReport::ok();
  }

  static CheckReport is_epi(const Map& f) {
    for (int k = 0; k <= f.trunc(); ++k) {
      auto r = A::is_epi(f.component(k));
      if (!r) return r.at(coordinate, k);
    }
    return CheckReport::ok();
  }

  static CheckReport compare(const Map& f, const Map& g) {
    for (int k = 0; k <= f.trunc(); ++k) {
      auto r = A::compare(f.component(k), g.component(k));
      if (!r) return r.at(coordinate, k);
    }
    return CheckReport::ok();
  }

  static CheckReport validate(const Object& x);
  static CheckReport validate_map(const Map& f);

  // Builds an object from per-degree objects and a generator for operators.
  template <class Gen>
  static Object from_objects(const std::vector<typename A::Object>& objs, Gen&& gen) {
    const int K = static_cast<int>(objs.size()) - 1;
    std::vector<std::vector<typename A::Map>> faces(objs.size()), degens(objs.size() - 1);
    for (int k = 1; k <= K; ++k)
      for (int i = 0; i <= k; ++i) faces[k].push_back(gen(k, i, true));
    for (int k = 0; k < K; ++k)
      for (int i = 0; i <= k; ++i) degens[k].push_back(gen(k, i, false));
    return Object(objs, std::move(faces), std::move(degens));
  }
};

namespace detail {

inline std::string identity_name(const char* form, int k, int i, int j) {
  return std::string(form) + " at (k,i,j)=(" + std::to_string(k) + "," + std::to_string(i) + "," +
         std::to_string(j) + ")";
}

}  // namespace detail

/// Checks every simplicial identity that is defined within the truncation:
///   d_i d_j = d_{j-1} d_i (i < j),  s_i s_j = s_{j+1} s_i (i <= j),
///   d_i s_j = s_{j-1} d_i (i < j), = id (i = j, j+1), = s_j d_{i-1} (i > j+1).
/// The failing identity is named with k = degree of the source object.
template <class A>
CheckReport SimplicialAmbient<A>::validate(const Object& x) {
  const int K = x.trunc();
  for (int k = 0; k <= K; ++k) {
    auto r = A::validate(x.at(k));
    if (!r) return r.at("degree", k);
  }
  auto fail = [](CheckReport r, const char* form, int k, int i, int j) {
    r.clause(detail::identity_name(form, k, i, j));
    return r;
  };
  for (int k = 2; k <= K; ++k)
    for (int j = 1; j <= k; ++j)
      for (int i = 0; i < j; ++i) {
        auto r = A::compare(A::compose(x.face(k, j), x.face(k - 1, i)),
                            A::compose(x.face(k, i), x.face(k - 1, j - 1)));
        if (!r) return fail(r, "d_i d_j = d_{j-1} d_i", k, i, j);
      }
  for (int k = 0; k + 2 <= K; ++k)
    for (int j = 0; j <= k; ++j)
      for (int i = 0; i <= j; ++i) {
        auto r = A::compare(A::compose(x.degen(k, j), x.degen(k + 1, i)),
                            A::compose(x.degen(k, i), x.degen(k + 1, j + 1)));
        if (!r) return fail(r, "s_i s_j = s_{j+1} s_i", k, i, j);
      }
  for (int k = 0; k < K; ++k)
    for (int j = 0; j <= k; ++j)
      for (int i = 0; i <= k + 1; ++i) {
        auto lhs = A::compose(x.degen(k, j), x.face(k + 1, i));
        CheckReport r;
        const char* form = nullptr;
        if (i == j || i == j + 1) {
          r = A::compare(lhs, A::identity(x.at(k)));
          form = "d_i s_j = id";
        } else if (k == 0) {
          continue;
        } else if (i < j) {
          r = A::compare(lhs, A::compose(x.face(k, i), x.degen(k - 1, j - 1)));
          form = "d_i s_j = s_{j-1} d_i";
        } else {
          r = A::compare(lhs, A::compose(x.face(k, i - 1), x.degen(k - 1, j)));
          form = "d_i s_j = s_j d_{i-1}";
        }
        if (!r) return fail(r, form, k, i, j);
      }
  return CheckReport::ok();
}

template <class A>
CheckReport SimplicialAmbient<A>::validate_map(const Map& f) {
  const auto& x = f.dom();
  const auto& y = f.cod();
  for (int k = 0; k <= x.trunc(); ++k) {
    auto r = A::validate_map(f.component(k));
    if (!r) return r.at("degree", k);
  }
  for (int k = 1; k <= x.trunc(); ++k)
    for (int i = 0; i <= k; ++i) {
      auto r = A::compare(A::compose(x.face(k, i), f.component(k - 1)),
                          A::compose(f.component(k), y.face(k, i)));
      if (!r) return r.clause("f commutes with d_" + std::to_string(i)).at("degree", k);
    }
  for (int k = 0; k < x.trunc(); ++k)
    for (int i = 0; i <= k; ++i) {
      auto r = A::compare(A::compose(x.degen(k, i), f.component(k + 1)),
                          A::compose(f.component(k), y.degen(k, i)));
      if (!r) return r.clause("f commutes with s_" + std::to_string(i)).at("degree", k);
    }
  return CheckReport::ok();
}

/// The structure map alpha^*: X_b -> X_a of a monotone alpha: [a] -> [b],
/// written as a non-decreasing sequence of length a+1 with values in [0, b].
/// Computed as faces for the values alpha misses (descending) followed by
/// degeneracies at the repeats (ascending).
template <class A>
typename A::Map operator_map(const SimplicialObject<A>& x, const std::vector<int>& alpha, int b) {
  std::vector<int> image;
  for (int v : alpha) {
    if (v < 0 || v > b) throw std::out_of_range("operator value out of range");
    if (image.empty() || image.back() != v) {
      if (!image.empty() && v < image.back()) throw std::invalid_argument("operator is not monotone");
      image.push_back(v);
    }
  }
  typename A::Map m = A::identity(x.at(b));
  int deg = b;
  for (int v = b; v >= 0; --v) {
    bool hit = false;
    for (int u : image) hit = hit || (u == v);
    if (!hit) {
      m = A::compose(m, x.face(deg, v));
      --deg;
    }
  }
  for (std::size_t i = 0; i + 1 < alpha.size(); ++i)
    if (alpha[i] == alpha[i + 1]) {
      m = A::compose(m, x.degen(deg, static_cast<int>(i)));
      ++deg;
    }
  return m;
}

}  // namespace reedy
