#include "reedy/cofibration.hpp"

#include <sstream>

namespace reedy {

const char* to_string(Model m) {
  switch (m) {
    case Model::levelwise: return "levelwise";
    case Model::positive_levelwise: return "positive-levelwise";
    case Model::flat: return "flat";
    case Model::positive_flat: return "positive-flat";
  }
  return "?";
}

bool parse_model(const std::string& s, Model& out) {
  for (Model m : {Model::levelwise, Model::positive_levelwise, Model::flat, Model::positive_flat})
    if (s == to_string(m)) {
      out = m;
      return true;
    }
  return false;
}

LatchingCorner latching_corner_at(const SpectralLatching& lx, const SpectralLatching& ly, const SpectrumMap& f,
                                  int dim) {
  const int n = lx.n();
  auto po = pushout<PointedSets>(lx.nu(dim), latching_map_at(lx, ly, f, dim));
  PointedMap fn = f.component(n).component(dim);
  PointedMap maps[2] = {fn, ly.nu(dim)};
  PointedMap corner = po.factor(maps);
  return {std::move(po), std::move(corner)};
}

SimplicialMap latching_corner_map(const SpectrumMap& f, int n) {
  SpectralLatching lx(f.dom(), n), ly(f.cod(), n);
  auto po = pushout<SSets>(lx.nu_map(), latching_map(lx, ly, f));
  SimplicialMap maps[2] = {f.component(n), ly.nu_map()};
  return po.factor(maps);
}

namespace {

// Describes where a pushout element comes from: X(n) or L_n Y, and for the
// latter a representative [gamma; t, y] in (S-bar (x) Y)(n).
std::string provenance(const LatchingCorner& c, const SpectralLatching& ly, int dim, Index e) {
  std::ostringstream os;
  os << "pushout element " << e;
  const PointedMap& from_x = c.pushout.legs[0];
  const PointedMap& from_l = c.pushout.legs[1];
  for (Index a = 1; a < from_x.dom().size(); ++a)
    if (from_x(a) == e) {
      os << " <- X(" << ly.n() << ") element " << a;
      return os.str();
    }
  for (Index l = 1; l < from_l.dom().size(); ++l)
    if (from_l(l) == e) {
      os << " <- L_" << ly.n() << "Y element " << l;
      const PointedMap& leg = ly.smash().leg(dim);
      const DayLevel& day = ly.smash().pair();
      for (Index z = 1; z < leg.dom().size(); ++z)
        if (leg(z) == l) {
          std::vector<Index> parts;
          const auto& s = day.summands()[day.decode(dim, z, parts)];
          os << " <- [gamma=(";
          for (std::size_t i = 0; i < s.gamma.size(); ++i) os << (i ? " " : "") << s.gamma[i];
          os << "); t=" << parts[0] << " in S^" << s.blocks[0] << ", y=" << parts[1] << " in Y(" << s.blocks[1]
             << ")]";
          break;
        }
      return os.str();
    }
  return os.str();
}

CheckReport iso_at_zero(const SpectrumMap& f) {
  const SimplicialMap& f0 = f.component(0);
  for (int dim = 0; dim <= f0.trunc(); ++dim) {
    auto r = check_iso(f0.component(dim));
    if (!r) return r.clause("f(0) is an isomorphism").at("dim", dim).at("level", 0);
  }
  return CheckReport::ok();
}

}  // namespace

CheckReport is_levelwise_cofibration(const SpectrumMap& f) {
  for (int n = 0; n <= f.dom().strunc(); ++n)
    for (int dim = 0; dim <= f.dom().dtrunc(); ++dim) {
      auto r = check_mono(f.component(n).component(dim));
      if (!r) return r.clause("f(n) is a monomorphism").at("dim", dim).at("level", n);
    }
  return CheckReport::ok();
}

CheckReport is_positive_levelwise_cofibration(const SpectrumMap& f) {
  if (auto r = iso_at_zero(f); !r) return r;
  return is_levelwise_cofibration(f);
}

CheckReport is_flat_cofibration(const SpectrumMap& f) {
  for (int n = 0; n <= f.dom().strunc(); ++n) {
    SpectralLatching lx(f.dom(), n), ly(f.cod(), n);
    for (int dim = 0; dim <= f.dom().dtrunc(); ++dim) {
      LatchingCorner c = latching_corner_at(lx, ly, f, dim);
      auto r = check_mono(c.map);
      if (!r) {
        r.witness->path = provenance(c, ly, dim, r.witness->first) + "; " + provenance(c, ly, dim, r.witness->second);
        return r.clause("latching map is a monomorphism").at("dim", dim).at("level", n);
      }
    }
  }
  return CheckReport::ok();
}

CheckReport is_positive_flat_cofibration(const SpectrumMap& f) {
  if (auto r = iso_at_zero(f); !r) return r;
  return is_flat_cofibration(f);
}

CheckReport check_cofibration(const SpectrumMap& f, Model m) {
  switch (m) {
    case Model::levelwise: return is_levelwise_cofibration(f);
    case Model::positive_levelwise: return is_positive_levelwise_cofibration(f);
    case Model::flat: return is_flat_cofibration(f);
    case Model::positive_flat: return is_positive_flat_cofibration(f);
  }
  return CheckReport::ok();
}

CheckReport is_cofibrant(const SymSpectrum& x, Model m) {
  return check_cofibration(Spectra::zero_map(Spectra::zero_like(x), x), m);
}

bool replay_flat_witness(const SpectrumMap& f, const Witness& w) {
  int n = w.coordinate("level"), dim = w.coordinate("dim");
  if (n < 0 || dim < 0 || n > f.dom().strunc() || dim > f.dom().dtrunc()) return false;
  SpectralLatching lx(f.dom(), n), ly(f.cod(), n);
  LatchingCorner c = latching_corner_at(lx, ly, f, dim);
  const Index size = c.map.dom().size();
  if (w.first == w.second || w.first >= size || w.second >= size) return false;
  return c.map(w.first) == c.map(w.second) && c.map(w.first) == w.image;
}

}  // namespace reedy
