// Dual (normal) fans, recorded combinatorially.
//
// The cone of a face is stored as the set of facets containing it; the
// rays of the fan are exactly the facet normals.
#pragma once

#include "polyalg/vectors.hpp"

namespace polyalg {

struct NormalFan {
  struct Cone {
    int face;                // index into the lattice
    int cone_dim;            // d - rank(face)
    std::vector<int> rays;   // facet indices spanning the cone
  };
  int dim = 0;
  std::vector<Cone> cones;   // one per nonempty face
  bool simplicial = false;
};

inline NormalFan dual_fan(const Polytope& p, const FaceLattice& L) {
  NormalFan fan;
  fan.dim = p.dim;
  fan.simplicial = true;
  std::vector<std::vector<int>> lattice_coatom(p.n_facets());
  const auto& coatoms = L.of_rank(p.dim - 1);
  for (int i = 0; i < L.size(); ++i) {
    const Face& f = L.faces[i];
    if (f.rank < 0) continue;
    NormalFan::Cone cone;
    cone.face = i;
    cone.cone_dim = p.dim - f.rank;
    for (int c : coatoms)
      if (L.leq(i, c)) {
        // Map the lattice coatom back to the polytope facet index.
        for (int g = 0; g < p.n_facets(); ++g)
          if (p.facets[g].vertices == L.faces[c].verts) {
            cone.rays.push_back(g);
            break;
          }
      }
    std::sort(cone.rays.begin(), cone.rays.end());
    if (static_cast<int>(cone.rays.size()) != cone.cone_dim) fan.simplicial = false;
    fan.cones.push_back(std::move(cone));
  }
  return fan;
}

inline NormalFan dual_fan(const Polytope& p) { return dual_fan(p, face_lattice(p)); }

}  // namespace polyalg
