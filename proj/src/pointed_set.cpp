#include "reedy/pointed_set.hpp"

#include <numeric>
#include <stdexcept>

namespace reedy {

PointedSet::PointedSet(Index size) : size_(size) {
  if (size == 0) throw std::invalid_argument("pointed set must contain its basepoint");
}

PointedSet::PointedSet(Index size, std::vector<std::string> labels) : PointedSet(size) {
  if (labels.empty()) return;
  if (labels.size() != size) throw std::invalid_argument("label table size differs from set size");
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

std::string PointedSet::name_of(Index i) const {
  if (labels_ && i < labels_->size()) return (*labels_)[i];
  return i == 0 ? std::string("*") : std::to_string(i);
}

PointedMap::PointedMap(PointedSet dom, PointedSet cod, std::vector<Index> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (table_.size() != dom_.size())
    throw std::invalid_argument("map table length " + std::to_string(table_.size()) +
                                " differs from domain size " + std::to_string(dom_.size()));
  if (table_[0] != 0) throw std::invalid_argument("map does not preserve the basepoint");
  if (kernels::max(table_) >= cod_.size())
    throw std::invalid_argument("map table entry out of codomain range");
}

PointedMap PointedMap::identity(const PointedSet& a) {
  std::vector<Index> t(a.size());
  std::iota(t.begin(), t.end(), Index{0});
  return PointedMap(a, a, std::move(t));
}

PointedMap PointedMap::zero(const PointedSet& dom, const PointedSet& cod) {
  return PointedMap(dom, cod, std::vector<Index>(dom.size(), 0));
}

bool operator==(const PointedMap& a, const PointedMap& b) {
  return a.dom_ == b.dom_ && a.cod_ == b.cod_ && kernels::equal(a.table_, b.table_);
}

PointedMap compose(const PointedMap& f, const PointedMap& g) {
  if (!(f.cod() == g.dom()))
    throw std::invalid_argument("compose: codomain size " + std::to_string(f.cod().size()) +
                                " does not match domain size " + std::to_string(g.dom().size()));
  std::vector<Index> t(f.dom().size());
  kernels::gather(f.table(), g.table(), t);
  return PointedMap(f.dom(), g.cod(), std::move(t));
}

std::optional<std::pair<Index, Index>> find_collision(const PointedMap& f) {
  // first[v] = least preimage of v seen so far; the least colliding pair is
  // found by scanning j upward and pairing with the least earlier preimage.
  constexpr Index none = ~Index{0};
  std::vector<Index> first(f.cod().size(), none);
  std::optional<std::pair<Index, Index>> best;
  for (Index j = 0; j < f.dom().size(); ++j) {
    Index v = f(j);
    if (first[v] == none) {
      first[v] = j;
    } else {
      std::pair<Index, Index> cand{first[v], j};
      if (!best || cand < *best) best = cand;
    }
  }
  return best;
}

std::optional<Index> find_missed(const PointedMap& f) {
  std::vector<char> hit(f.cod().size(), 0);
  for (Index v : f.table()) hit[v] = 1;
  for (Index i = 0; i < hit.size(); ++i)
    if (!hit[i]) return i;
  return std::nullopt;
}

bool is_mono(const PointedMap& f) {
  if (f.dom().size() > f.cod().size()) return false;
  std::vector<char> hit(f.cod().size(), 0);
  for (Index v : f.table()) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

bool is_epi(const PointedMap& f) { return !find_missed(f).has_value(); }
bool is_iso(const PointedMap& f) { return f.dom().size() == f.cod().size() && is_mono(f); }

CheckReport check_mono(const PointedMap& f) {
  if (auto c = find_collision(f)) {
    Witness w;
    w.kind = Witness::Kind::collision;
    w.first = c->first;
    w.second = c->second;
    w.image = f(c->first);
    return CheckReport::fail(std::move(w));
  }
  return CheckReport::ok();
}

CheckReport check_epi(const PointedMap& f) {
  if (auto m = find_missed(f)) {
    Witness w;
    w.kind = Witness::Kind::missed;
    w.image = *m;
    return CheckReport::fail(std::move(w));
  }
  return CheckReport::ok();
}

CheckReport check_iso(const PointedMap& f) {
  auto r = check_mono(f);
  if (!r) return r;
  return check_epi(f);
}

PointedSet smash(const PointedSet& a, const PointedSet& b) {
  return PointedSet((a.size() - 1) * (b.size() - 1) + 1);
}

Index smash_index(const PointedSet& a, const PointedSet& b, Index x, Index y) {
  (void)a;
  if (x == 0 || y == 0) return 0;
  return 1 + (x - 1) * (b.size() - 1) + (y - 1);
}

std::pair<Index, Index> smash_unpair(const PointedSet& a, const PointedSet& b, Index z) {
  (void)a;
  if (z == 0) return {0, 0};
  Index w = b.size() - 1;
  return {1 + (z - 1) / w, 1 + (z - 1) % w};
}

PointedMap smash(const PointedMap& f, const PointedMap& g) {
  PointedSet dom = smash(f.dom(), g.dom());
  PointedSet cod = smash(f.cod(), g.cod());
  std::vector<Index> t(dom.size(), 0);
  Index wb = g.dom().size() - 1;
  for (Index x = 1; x < f.dom().size(); ++x)
    for (Index y = 1; y < g.dom().size(); ++y)
      t[1 + (x - 1) * wb + (y - 1)] = smash_index(f.cod(), g.cod(), f(x), g(y));
  return PointedMap(dom, cod, std::move(t));
}

Cocone<PointedSets> PointedSets::wedge(const std::vector<Object>& summands) {
  Index total = 1;
  std::vector<Index> offset;
  offset.reserve(summands.size());
  for (const auto& s : summands) {
    offset.push_back(total - 1);
    total += s.size() - 1;
  }
  Cocone<PointedSets> out;
  out.object = PointedSet(total);
  for (std::size_t k = 0; k < summands.size(); ++k) {
    Index off = offset[k];
    out.legs.push_back(PointedMap::tabulate(summands[k], out.object, [off](Index i) { return off + i; }));
  }
  PointedSet obj = out.object;
  out.factor = [summands, offset, obj](std::span<const Map> maps) {
    if (maps.size() != summands.size()) throw std::invalid_argument("copair: wrong number of maps");
    if (maps.empty()) return PointedMap::zero(obj, PointedSet(1));
    const PointedSet& target = maps[0].cod();
    std::vector<Index> t(obj.size(), 0);
    for (std::size_t k = 0; k < maps.size(); ++k) {
      if (!(maps[k].dom() == summands[k]) || !(maps[k].cod() == target))
        throw std::invalid_argument("copair: map does not match summand or common target");
      for (Index i = 1; i < summands[k].size(); ++i) t[offset[k] + i] = maps[k](i);
    }
    return PointedMap(obj, target, std::move(t));
  };
  return out;
}

namespace {

Index find_root(std::vector<Index>& parent, Index x) {
  Index r = x;
  while (parent[r] != r) r = parent[r];
  while (parent[x] != r) {
    Index next = parent[x];
    parent[x] = r;
    x = next;
  }
  return r;
}

}  // namespace

Cocone<PointedSets> PointedSets::coequalizer(const Map& f, const Map& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
    throw std::invalid_argument("coequalizer: maps are not parallel");
  const Index n = f.cod().size();
  std::vector<Index> parent(n);
  std::iota(parent.begin(), parent.end(), Index{0});
  for (Index x = 1; x < f.dom().size(); ++x) {
    Index a = find_root(parent, f(x)), b = find_root(parent, g(x));
    if (a < b) parent[b] = a;
    else if (b < a) parent[a] = b;
  }
  std::vector<Index> label(n);
  Index classes = 0;
  for (Index i = 0; i < n; ++i) {
    Index r = find_root(parent, i);
    label[i] = (r == i) ? classes++ : label[r];
  }
  Cocone<PointedSets> out;
  out.object = PointedSet(classes);
  out.legs.push_back(PointedMap(f.cod(), out.object, std::move(label)));
  PointedMap leg = out.legs[0];
  out.factor = [leg, f, g](std::span<const Map> maps) {
    if (maps.size() != 1) throw std::invalid_argument("coequalizer factor takes one map");
    return PointedSets::descend(leg, maps[0]);
  };
  return out;
}

PointedMap PointedSets::descend(const Map& epi, const Map& h) {
  if (!(epi.dom() == h.dom())) throw std::invalid_argument("descend: maps have different domains");
  constexpr Index none = ~Index{0};
  std::vector<Index> t(epi.cod().size(), none);
  for (Index x = 0; x < epi.dom().size(); ++x) {
    Index q = epi(x);
    if (t[q] == none) t[q] = h(x);
    else if (t[q] != h(x))
      throw std::invalid_argument("descend: map is not constant on fibre of element " + std::to_string(q));
  }
  for (Index v : t)
    if (v == none) throw std::invalid_argument("descend: map to factor through is not surjective");
  return PointedMap(epi.cod(), h.cod(), std::move(t));
}

CheckReport PointedSets::compare(const Map& f, const Map& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) {
    Witness w;
    w.kind = Witness::Kind::identity;
    return CheckReport::fail(std::move(w), "maps have different endpoints");
  }
  std::size_t i = kernels::mismatch(f.table(), g.table());
  if (i == f.table().size()) return CheckReport::ok();
  Witness w;
  w.kind = Witness::Kind::identity;
  w.first = static_cast<Index>(i);
  w.second = f(w.first);
  w.image = g(w.first);
  return CheckReport::fail(std::move(w));
}

Pullback pullback(const PointedMap& f, const PointedMap& g) {
  if (!(f.cod() == g.cod())) throw std::invalid_argument("pullback: maps have different codomains");
  std::vector<Index> pb, pc;
  for (Index b = 0; b < f.dom().size(); ++b)
    for (Index c = 0; c < g.dom().size(); ++c)
      if (f(b) == g(c)) {
        pb.push_back(b);
        pc.push_back(c);
      }
  PointedSet obj(static_cast<Index>(pb.size()));
  return {obj, PointedMap(obj, f.dom(), std::move(pb)), PointedMap(obj, g.dom(), std::move(pc))};
}

}  // namespace reedy
