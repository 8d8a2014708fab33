// f-vectors, h-vectors and the simplicity classification.
#pragma once

#include "polyalg/lattice.hpp"

namespace polyalg {

struct FVector {
  std::vector<long long> e;  // f_0 .. f_d, with f_d = 1
  int d() const { return static_cast<int>(e.size()) - 1; }
  bool operator==(const FVector& o) const { return e == o.e; }
};

struct HVector {
  std::vector<long long> e;  // h_0 .. h_d
  int d() const { return static_cast<int>(e.size()) - 1; }
  bool operator==(const HVector& o) const { return e == o.e; }
};

inline FVector f_vector(const FaceLattice& L) {
  FVector f;
  f.e.resize(L.dim + 1);
  for (int r = 0; r <= L.dim; ++r) f.e[r] = L.count_of_rank(r);
  return f;
}

// h_k = sum_{i >= k} f_i (-1)^{i-k} C(i, k)
inline HVector h_from_f(const FVector& f) {
  if (f.e.empty()) throw LengthMismatch("h_from_f: empty f-vector");
  const int d = f.d();
  HVector h;
  h.e.assign(d + 1, 0);
  for (int k = 0; k <= d; ++k)
    for (int i = k; i <= d; ++i) {
      long long t = f.e[i] * binomial(i, k);
      h.e[k] += ((i - k) % 2 == 0) ? t : -t;
    }
  return h;
}

// f_k = sum_{i >= k} h_i C(i, k)
inline FVector f_from_h(const HVector& h) {
  if (h.e.empty()) throw LengthMismatch("f_from_h: empty h-vector");
  const int d = h.d();
  FVector f;
  f.e.assign(d + 1, 0);
  for (int k = 0; k <= d; ++k)
    for (int i = k; i <= d; ++i) f.e[k] += h.e[i] * binomial(i, k);
  return f;
}

enum class SimplicityKind { Simple, SimpleInEdges, General };

struct Simplicity {
  SimplicityKind kind;
  std::vector<int> nonsimple_vertices;  // empty for Simple
};

// Simple: every vertex in exactly d facets. SimpleInEdges: every edge in
// exactly d-1 facets, but some vertex in more than d.
inline Simplicity simplicity_class(const FaceLattice& L, int d) {
  const auto& coatoms = L.of_rank(d - 1);
  std::vector<int> facet_count(L.n_verts, 0);
  for (int c : coatoms)
    for (int v : L.faces[c].verts) ++facet_count[v];

  std::vector<int> nonsimple;
  for (int v = 0; v < L.n_verts; ++v)
    if (facet_count[v] != d) nonsimple.push_back(v);
  if (nonsimple.empty()) return {SimplicityKind::Simple, {}};
  for (int v : nonsimple)
    if (facet_count[v] < d) return {SimplicityKind::General, nonsimple};

  for (int e : L.of_rank(1)) {
    int cnt = 0;
    for (int c : coatoms)
      if (L.leq(e, c)) ++cnt;
    if (cnt != d - 1) return {SimplicityKind::General, nonsimple};
  }
  return {SimplicityKind::SimpleInEdges, nonsimple};
}

}  // namespace polyalg
