#include "reedy/simplicial_set.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace reedy {

namespace {

void check_trunc(int D) {
  if (D < 0) throw std::invalid_argument("truncation must be nonnegative");
}

template <class Key>
class Cache {
 public:
  template <class Make>
  SimplicialSet get(const Key& key, Make&& make) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    SimplicialSet built = make();
    std::lock_guard<std::mutex> lock(mu_);
    return map_.emplace(key, std::move(built)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<Key, SimplicialSet> map_;
};

}  // namespace

SimplicialSet constant_sset(const PointedSet& p, int D) {
  check_trunc(D);
  std::vector<PointedSet> objs(static_cast<std::size_t>(D + 1), p);
  PointedMap id = PointedMap::identity(p);
  return SSets::from_objects(objs, [&](int, int, bool) { return id; });
}

SimplicialMap constant_map(const PointedMap& f, int D) {
  return SimplicialMap(constant_sset(f.dom(), D), constant_sset(f.cod(), D),
                       std::vector<PointedMap>(static_cast<std::size_t>(D + 1), f));
}

SimplicialSet point_sset(int D) {
  static Cache<int> cache;
  return cache.get(D, [D] { return constant_sset(PointedSet(1), D); });
}

SimplicialSet circle(int D) {
  check_trunc(D);
  static Cache<int> cache;
  return cache.get(D, [D] {
    std::vector<PointedSet> objs;
    for (int k = 0; k <= D; ++k) objs.emplace_back(static_cast<Index>(k + 1));
    return SSets::from_objects(objs, [&](int k, int i, bool face) {
      if (face) {
        // j zeros followed by k+1-j ones; deleting position i.
        return PointedMap::tabulate(objs[k], objs[k - 1], [&](Index j) -> Index {
          Index zeros = static_cast<Index>(i) < j ? j - 1 : j;
          return (zeros == 0 || zeros == static_cast<Index>(k)) ? 0 : zeros;
        });
      }
      return PointedMap::tabulate(objs[k], objs[k + 1], [&](Index j) -> Index {
        return static_cast<Index>(i) < j ? j + 1 : j;
      });
    });
  });
}

SimplicialSet sphere(int n, int D) {
  check_trunc(D);
  if (n < 0 || n > D) throw std::invalid_argument("sphere dimension must lie in 0..D");
  static Cache<std::pair<int, int>> cache;
  return cache.get({n, D}, [n, D] {
    if (n == 0) return constant_sset(PointedSet(2), D);
    return smash(circle(D), sphere(n - 1, D));
  });
}

namespace {

std::vector<std::vector<int>> monotone_sequences(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(m + 1), 0);
  while (true) {
    out.push_back(cur);
    int pos = m;
    while (pos >= 0 && cur[pos] == n) --pos;
    if (pos < 0) break;
    int v = cur[pos] + 1;
    for (int t = pos; t <= m; ++t) cur[t] = v;
  }
  return out;
}

}  // namespace

std::vector<int> simplex_element(int n, int m, Index e) {
  if (e == 0) throw std::invalid_argument("basepoint has no sequence");
  auto all = monotone_sequences(m, n);
  if (e > all.size()) throw std::out_of_range("element outside standard simplex level");
  return all[e - 1];
}

Index simplex_index(int n, const std::vector<int>& alpha) {
  auto all = monotone_sequences(static_cast<int>(alpha.size()) - 1, n);
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] == alpha) return static_cast<Index>(i + 1);
  throw std::invalid_argument("sequence is not a monotone map into [n]");
}

SimplicialSet standard_simplex(int n, int D) {
  check_trunc(D);
  if (n < 0) throw std::invalid_argument("simplex dimension must be nonnegative");
  static Cache<std::pair<int, int>> cache;
  return cache.get({n, D}, [n, D] {
    std::vector<std::vector<std::vector<int>>> seqs;
    std::vector<std::map<std::vector<int>, Index>> index;
    std::vector<PointedSet> objs;
    for (int m = 0; m <= D; ++m) {
      seqs.push_back(monotone_sequences(m, n));
      index.emplace_back();
      for (std::size_t i = 0; i < seqs.back().size(); ++i) index.back()[seqs.back()[i]] = static_cast<Index>(i + 1);
      objs.emplace_back(static_cast<Index>(seqs.back().size() + 1));
    }
    return SSets::from_objects(objs, [&](int k, int i, bool face) {
      int target = face ? k - 1 : k + 1;
      return PointedMap::tabulate(objs[k], objs[target], [&](Index e) {
        std::vector<int> a = seqs[k][e - 1];
        if (face) a.erase(a.begin() + i);
        else a.insert(a.begin() + i, a[i]);
        return index[target].at(a);
      });
    });
  });
}

SimplicialMap yoneda_map(const SimplicialSet& x, int k, Index element) {
  const int D = x.trunc();
  if (k < 0 || k > D) throw std::out_of_range("yoneda_map: degree out of range");
  if (element >= x.at(k).size()) throw std::out_of_range("yoneda_map: element out of range");
  SimplicialSet delta = standard_simplex(k, D);
  std::vector<PointedMap> comps;
  for (int m = 0; m <= D; ++m) {
    auto seqs = monotone_sequences(m, k);
    comps.push_back(PointedMap::tabulate(delta.at(m), x.at(m), [&](Index e) {
      return operator_map<PointedSets>(x, seqs[e - 1], k)(element);
    }));
  }
  return SimplicialMap(delta, x, std::move(comps));
}

SimplicialSet smash(const SimplicialSet& a, const SimplicialSet& b) {
  if (a.trunc() != b.trunc()) throw std::invalid_argument("smash: truncations differ");
  std::vector<PointedSet> objs;
  for (int k = 0; k <= a.trunc(); ++k) objs.push_back(smash(a.at(k), b.at(k)));
  return SSets::from_objects(objs, [&](int k, int i, bool face) {
    return face ? smash(a.face(k, i), b.face(k, i)) : smash(a.degen(k, i), b.degen(k, i));
  });
}

SimplicialMap smash(const SimplicialMap& f, const SimplicialMap& g) {
  std::vector<PointedMap> comps;
  for (int k = 0; k <= f.trunc(); ++k) comps.push_back(smash(f.component(k), g.component(k)));
  return SimplicialMap(smash(f.dom(), g.dom()), smash(f.cod(), g.cod()), std::move(comps));
}

SimplicialMap generated_subobject(const SimplicialSet& x, const std::vector<std::pair<int, Index>>& generators) {
  const int D = x.trunc();
  std::vector<std::vector<char>> in(static_cast<std::size_t>(D + 1));
  for (int k = 0; k <= D; ++k) {
    in[k].assign(x.at(k).size(), 0);
    in[k][0] = 1;
  }
  for (auto [k, e] : generators) {
    if (k < 0 || k > D || e >= x.at(k).size()) throw std::out_of_range("generator out of range");
    in[k][e] = 1;
  }
  for (int k = D; k >= 1; --k)
    for (Index e = 0; e < x.at(k).size(); ++e)
      if (in[k][e])
        for (int i = 0; i <= k; ++i) in[k - 1][x.face(k, i)(e)] = 1;
  for (int k = 0; k < D; ++k)
    for (Index e = 0; e < x.at(k).size(); ++e)
      if (in[k][e])
        for (int i = 0; i <= k; ++i) in[k + 1][x.degen(k, i)(e)] = 1;
  std::vector<std::vector<Index>> members(static_cast<std::size_t>(D + 1));
  std::vector<std::vector<Index>> rank(static_cast<std::size_t>(D + 1));
  std::vector<PointedSet> objs;
  for (int k = 0; k <= D; ++k) {
    rank[k].assign(x.at(k).size(), 0);
    for (Index e = 0; e < x.at(k).size(); ++e)
      if (in[k][e]) {
        rank[k][e] = static_cast<Index>(members[k].size());
        members[k].push_back(e);
      }
    objs.emplace_back(static_cast<Index>(members[k].size()));
  }
  SimplicialSet sub = SSets::from_objects(objs, [&](int k, int i, bool face) {
    const PointedMap& op = face ? x.face(k, i) : x.degen(k, i);
    int target = face ? k - 1 : k + 1;
    return PointedMap::tabulate(objs[k], objs[target], [&](Index e) { return rank[target][op(members[k][e])]; });
  });
  std::vector<PointedMap> comps;
  for (int k = 0; k <= D; ++k) comps.emplace_back(objs[k], x.at(k), members[k]);
  return SimplicialMap(sub, x, std::move(comps));
}

Cocone<SSets> collapse(const SimplicialMap& inclusion) {
  SimplicialSet pt = point_sset(inclusion.trunc());
  return pushout<SSets>(inclusion, SSets::zero_map(inclusion.dom(), pt));
}

SimplicialSet diagonal(const BisimplicialSet& b) {
  const int K = b.trunc();
  if (b.at(0).trunc() != K) throw std::invalid_argument("diagonal needs equal outer and inner truncation");
  std::vector<PointedSet> objs;
  for (int k = 0; k <= K; ++k) objs.push_back(b.at(k).at(k));
  return SSets::from_objects(objs, [&](int k, int i, bool face) {
    if (face) return compose(b.face(k, i).component(k), b.at(k - 1).face(k, i));
    return compose(b.degen(k, i).component(k), b.at(k + 1).degen(k, i));
  });
}

SimplicialMap diagonal(const BisimplicialMap& f) {
  std::vector<PointedMap> comps;
  for (int k = 0; k <= f.trunc(); ++k) comps.push_back(f.component(k).component(k));
  return SimplicialMap(diagonal(f.dom()), diagonal(f.cod()), std::move(comps));
}

BisimplicialSet constant_bisimplicial(const SimplicialSet& x, int K) {
  std::vector<SimplicialSet> objs(static_cast<std::size_t>(K + 1), x);
  SimplicialMap id = SSets::identity(x);
  return BisimplicialSets::from_objects(objs, [&](int, int, bool) { return id; });
}

CheckReport check_face_sections(const SimplicialSet& x) {
  for (int k = 0; k < x.trunc(); ++k)
    for (Index e = 1; e < x.at(k).size(); ++e) {
      bool found = false;
      for (int j = 0; j <= k && !found; ++j) found = x.face(k + 1, j)(x.degen(k, j)(e)) == e;
      if (!found) {
        Witness w;
        w.kind = Witness::Kind::identity;
        w.first = e;
        w.location = {{"dim", k}};
        return CheckReport::fail(std::move(w), "element is not a face of any degree-(k+1) element");
      }
    }
  return CheckReport::ok();
}

}  // namespace reedy
