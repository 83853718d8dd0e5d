#pragma once

#include <functional>
#include <span>
#include <vector>

namespace reedy {

/// A colimit cocone: the apex, its legs, and the universal property.
///
/// `factor` takes one map per leg (a competing cocone) and returns the unique
/// mediating map out of `object`. It throws std::invalid_argument when the
/// supplied maps do not form a cocone over the defining diagram.
template <class A>
struct Cocone {
  typename A::Object object;
  std::vector<typename A::Map> legs;
  std::function<typename A::Map(std::span<const typename A::Map>)> factor;

  typename A::Map factor1(const typename A::Map& h) const { return factor(std::span(&h, 1)); }
};

// An ambient category A supplies, as static members:
//   Object, Map
//   zero_like(Object) / identity(Object) / zero_map(Object, Object)
//   compose(f, g)          -- g after f
//   equal(Map, Map) / same(Object, Object) / dom(Map) / cod(Map)
//   wedge(vector<Object>) -> Cocone<A> with factor = copairing
//   coequalizer(f, g)      -> Cocone<A> with one leg
//   descend(epi, h)        -- the map q with q . epi = h
//   is_mono(Map) / is_epi(Map) -> CheckReport
//   coordinate             -- name of the index this ambient adds to witnesses

template <class A>
Cocone<A> pushout(const typename A::Map& f, const typename A::Map& g) {
  auto w = A::wedge({A::cod(f), A::cod(g)});
  auto q = A::coequalizer(A::compose(f, w.legs[0]), A::compose(g, w.legs[1]));
  Cocone<A> out;
  out.object = q.object;
  out.legs = {A::compose(w.legs[0], q.legs[0]), A::compose(w.legs[1], q.legs[0])};
  out.factor = [w, q](std::span<const typename A::Map> maps) {
    return q.factor1(w.factor(maps));
  };
  return out;
}

}  // namespace reedy
