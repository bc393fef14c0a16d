#pragma once

#include <vector>

#include "cyclo/triangulation.hpp"

namespace cyclo {

/// Element of the dihedral group of the polygon: x -> shift + x, or
/// x -> shift - x when `reflect` is set (labels taken mod n).
struct DihedralElement {
  int shift = 0;
  bool reflect = false;

  Vertex apply(Vertex x, PolygonDim dim) const noexcept {
    return dim.normalize(reflect ? shift - x : shift + x);
  }

  std::vector<Vertex> map(PolygonDim dim) const {
    std::vector<Vertex> m(static_cast<std::size_t>(dim.n()));
    for (int x = 0; x < dim.n(); ++x) m[static_cast<std::size_t>(x)] = apply(x, dim);
    return m;
  }

  DihedralElement inverse(PolygonDim dim) const noexcept {
    if (reflect) return *this;
    return {dim.normalize(-shift), false};
  }

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
};

/// All 2n relabelings, rotations first.
inline std::vector<DihedralElement> dihedral_group(PolygonDim dim) {
  std::vector<DihedralElement> g;
  g.reserve(static_cast<std::size_t>(2 * dim.n()));
  for (int s = 0; s < dim.n(); ++s) g.push_back({s, false});
  for (int s = 0; s < dim.n(); ++s) g.push_back({s, true});
  return g;
}

inline EdgeMask apply(const DihedralElement& g, const EdgeMask& mask, PolygonDim dim) {
  EdgeMask out{};
  mask.for_each([&](const Edge& e) { out.set(Edge(g.apply(e.u, dim), g.apply(e.v, dim))); });
  return out;
}

inline CsTriangulation apply(const DihedralElement& g, const CsTriangulation& t) {
  return CsTriangulation::from_mask(t.dim(), apply(g, t.mask(), t.dim()));
}

inline CsTriangulation rotate(const CsTriangulation& t, int k) {
  return apply(DihedralElement{k, false}, t);
}

inline CsTriangulation reflect(const CsTriangulation& t) {
  return apply(DihedralElement{0, true}, t);
}

/// Least relabeling (by EdgeMask order) over the dihedral group, with the
/// first group element that reaches it.
struct CanonicalKey {
  EdgeMask key;
  DihedralElement symmetry;

  friend bool operator==(const CanonicalKey& a, const CanonicalKey& b) { return a.key == b.key; }
};

inline CanonicalKey canonical_key(const EdgeMask& mask, PolygonDim dim) {
  CanonicalKey best{mask, {0, false}};
  for (int s = 0; s < dim.n(); ++s) {
    for (bool r : {false, true}) {
      const DihedralElement g{s, r};
      const EdgeMask image = apply(g, mask, dim);
      if (image < best.key) best = {image, g};
    }
  }
  return best;
}

inline CanonicalKey canonical_key(const CsTriangulation& t) { return canonical_key(t.mask(), t.dim()); }

inline bool is_orbit_representative(const EdgeMask& mask, PolygonDim dim) {
  for (int s = 0; s < dim.n(); ++s) {
    for (bool r : {false, true}) {
      if (apply(DihedralElement{s, r}, mask, dim) < mask) return false;
    }
  }
  return true;
}

}  // namespace cyclo
