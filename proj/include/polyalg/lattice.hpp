// Face lattices as graded Eulerian posets.
//
// Faces are the closed sets of the vertex-facet incidence Galois
// connection: every intersection of facet vertex-sets, plus the whole
// vertex set (top) and the empty face (bottom, rank -1). Construction
// verifies gradedness and the Eulerian interval condition, so invalid
// combinatorial input is rejected up front.
#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "polyalg/polytope.hpp"

namespace polyalg {

namespace detail {

// Fixed-width bitmask over an index universe.
struct BitVec {
  std::vector<std::uint64_t> w;
  explicit BitVec(int n = 0) : w((n + 63) / 64, 0) {}
  void set(int i) { w[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  bool get(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  bool subset_of(const BitVec& o) const {
    for (std::size_t k = 0; k < w.size(); ++k)
      if (w[k] & ~o.w[k]) return false;
    return true;
  }
  int and_popcount(const BitVec& o) const {
    int c = 0;
    for (std::size_t k = 0; k < w.size(); ++k) c += __builtin_popcountll(w[k] & o.w[k]);
    return c;
  }
};

}  // namespace detail

struct Face {
  std::vector<int> verts;  // sorted
  int rank = 0;            // -1 for the bottom, dim for the top
};

class FaceLattice {
 public:
  int dim = 0;
  int n_verts = 0;
  std::vector<Face> faces;  // sorted by (rank, verts); bottom first, top last
  int bottom = 0, top = 0;

  bool leq(int i, int j) const { return vmask_[i].subset_of(vmask_[j]); }

  const std::vector<int>& of_rank(int r) const { return by_rank_.at(r + 1); }
  long long count_of_rank(int r) const {
    if (r < -1 || r > dim) return 0;
    return static_cast<long long>(by_rank_[r + 1].size());
  }

  const std::vector<int>& children(int i) const { return children_[i]; }  // covered by i
  const std::vector<int>& parents(int i) const { return parents_[i]; }    // covering i

  // Faces above i, as indices (excluding i itself).
  std::vector<int> strictly_above(int i) const {
    std::vector<int> out;
    for (int j = 0; j < size(); ++j)
      if (j != i && leq(i, j)) out.push_back(j);
    return out;
  }

  int size() const { return static_cast<int>(faces.size()); }

  // Index of the face with exactly this (sorted) vertex set, or -1.
  int face_index(const std::vector<int>& verts) const {
    auto it = index_.find(verts);
    return it == index_.end() ? -1 : it->second;
  }

  // Smallest face containing the given vertex set.
  int closure(const std::vector<int>& subset) const {
    std::vector<int> acc;
    bool first = true;
    for (int c : of_rank(dim - 1)) {
      const auto& fv = faces[c].verts;
      if (!std::includes(fv.begin(), fv.end(), subset.begin(), subset.end())) continue;
      if (first) {
        acc = fv;
        first = false;
      } else {
        std::vector<int> tmp;
        std::set_intersection(acc.begin(), acc.end(), fv.begin(), fv.end(), std::back_inserter(tmp));
        acc.swap(tmp);
      }
    }
    if (first) return top;
    int idx = face_index(acc);
    if (idx < 0) throw Error("closure: not a closed set");
    return idx;
  }

  // Edges as vertex-index pairs; requires atoms to be singletons.
  std::vector<std::array<int, 2>> vertex_edges() const {
    std::vector<std::array<int, 2>> out;
    for (int e : of_rank(1)) {
      std::vector<int> ends;
      for (int c : children_[e]) {
        if (faces[c].verts.size() != 1) throw Error("vertex_edges: atoms are not singletons");
        ends.push_back(faces[c].verts[0]);
      }
      if (ends.size() != 2) throw Error("vertex_edges: edge without two endpoints");
      std::sort(ends.begin(), ends.end());
      out.push_back({ends[0], ends[1]});
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // f-vector of the lower interval [bottom, F], indexed by rank 0..rank(F).
  std::vector<long long> lower_f_vector(int face) const {
    std::vector<long long> f(faces[face].rank + 1, 0);
    for (int j = 0; j < size(); ++j)
      if (faces[j].rank >= 0 && leq(j, face)) ++f[faces[j].rank];
    return f;
  }

  friend FaceLattice face_lattice_from_sets(int dim, int n_verts,
                                            const std::vector<std::vector<int>>& facet_sets,
                                            const Polytope* geometry);

 private:
  std::vector<detail::BitVec> vmask_;            // vertex membership masks
  std::vector<std::vector<int>> by_rank_;        // rank+1 -> face indices
  std::vector<std::vector<int>> children_, parents_;
  std::map<std::vector<int>, int> index_;

  void finalize();
  void verify_graded_and_eulerian() const;
};

inline void FaceLattice::finalize() {
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.verts < b.verts;
  });
  bottom = 0;
  top = size() - 1;
  vmask_.assign(size(), detail::BitVec(n_verts));
  by_rank_.assign(dim + 2, {});
  index_.clear();
  for (int i = 0; i < size(); ++i) {
    for (int v : faces[i].verts) vmask_[i].set(v);
    by_rank_[faces[i].rank + 1].push_back(i);
    index_[faces[i].verts] = i;
  }
  children_.assign(size(), {});
  parents_.assign(size(), {});
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (faces[j].rank == faces[i].rank - 1 && leq(j, i)) {
        children_[i].push_back(j);
        parents_[j].push_back(i);
      }
}

inline void FaceLattice::verify_graded_and_eulerian() const {
  const int n = size();
  if (faces[top].rank != dim) throw NotEulerian("top face rank does not match the dimension");
  // Masks of faces above / below each face, split by rank parity.
  std::vector<detail::BitVec> up(n, detail::BitVec(n)), down(n, detail::BitVec(n));
  std::vector<detail::BitVec> up_even(n, detail::BitVec(n)), up_odd(n, detail::BitVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq(i, j)) {
        up[i].set(j);
        down[j].set(i);
        if (((faces[j].rank + 2) & 1) == 0)
          up_even[i].set(j);
        else
          up_odd[i].set(j);
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !leq(i, j)) continue;
      int diff = faces[j].rank - faces[i].rank;
      if (diff <= 0) throw NotEulerian("order incompatible with rank");
      if (diff >= 2 && up[i].and_popcount(down[j]) == 2)
        throw NotEulerian("lattice is not graded");
      if (diff >= 1) {
        int even = up_even[i].and_popcount(down[j]);
        int odd = up_odd[i].and_popcount(down[j]);
        if (even != odd) throw NotEulerian("interval fails the Eulerian condition");
      }
    }
}

inline FaceLattice face_lattice_from_sets(int dim, int n_verts,
                                          const std::vector<std::vector<int>>& facet_sets,
                                          const Polytope* geometry = nullptr) {
  for (const auto& fs : facet_sets)
    for (int v : fs)
      if (v < 0 || v >= n_verts) throw Error("facet set references unknown vertex");

  std::vector<int> full(n_verts);
  for (int i = 0; i < n_verts; ++i) full[i] = i;

  std::set<std::vector<int>> closed;
  closed.insert(full);
  std::vector<std::vector<int>> queue{full};
  std::vector<std::vector<int>> sorted_facets;
  for (auto fs : facet_sets) {
    std::sort(fs.begin(), fs.end());
    sorted_facets.push_back(std::move(fs));
  }
  while (!queue.empty()) {
    std::vector<int> cur = std::move(queue.back());
    queue.pop_back();
    for (const auto& fs : sorted_facets) {
      std::vector<int> inter;
      std::set_intersection(cur.begin(), cur.end(), fs.begin(), fs.end(), std::back_inserter(inter));
      if (closed.insert(inter).second) queue.push_back(inter);
    }
  }
  closed.insert({});

  FaceLattice L;
  L.dim = dim;
  L.n_verts = n_verts;
  for (const auto& vs : closed) L.faces.push_back(Face{vs, 0});

  // Longest-chain rank, processing faces by increasing vertex-set size.
  std::sort(L.faces.begin(), L.faces.end(), [](const Face& a, const Face& b) {
    if (a.verts.size() != b.verts.size()) return a.verts.size() < b.verts.size();
    return a.verts < b.verts;
  });
  for (std::size_t i = 0; i < L.faces.size(); ++i) {
    if (L.faces[i].verts.empty()) {
      L.faces[i].rank = -1;
      continue;
    }
    int r = -1;
    for (std::size_t j = 0; j < i; ++j) {
      if (L.faces[j].verts.size() >= L.faces[i].verts.size()) continue;
      if (std::includes(L.faces[i].verts.begin(), L.faces[i].verts.end(), L.faces[j].verts.begin(),
                        L.faces[j].verts.end()))
        r = std::max(r, L.faces[j].rank);
    }
    L.faces[i].rank = r + 1;
  }

  L.finalize();
  L.verify_graded_and_eulerian();

  if (geometry) {
    for (const auto& f : L.faces) {
      if (f.rank < 0) continue;
      std::vector<Vec> pts;
      for (int v : f.verts) pts.push_back(geometry->vertices[v]);
      if (detail::affine_rank(pts) != f.rank)
        throw Error("face rank disagrees with affine dimension");
    }
  }
  return L;
}

inline FaceLattice face_lattice(const Polytope& p) {
  std::vector<std::vector<int>> sets;
  for (const auto& f : p.facets) sets.push_back(f.vertices);
  return face_lattice_from_sets(p.dim, p.n_vertices(), sets, &p);
}

inline FaceLattice face_lattice(const CombPolytope& p) {
  for (const auto& a : p.facets)
    for (const auto& b : p.facets)
      if (&a != &b && std::includes(a.begin(), a.end(), b.begin(), b.end()))
        throw Error("facet set contains another");
  std::vector<int> cover(p.n_vertices, 0);
  for (const auto& fs : p.facets)
    for (int v : fs) ++cover[v];
  for (int v = 0; v < p.n_vertices; ++v)
    if (cover[v] < p.dim) throw Error("vertex " + std::to_string(v) + " lies in fewer than dim facets");
  return face_lattice_from_sets(p.dim, p.n_vertices, p.facets, nullptr);
}

// The interval [F, top] reindexed as the face lattice of a polytope of
// dimension d - dim F - 1. Verification is re-run on the result.
inline FaceLattice link_lattice(const FaceLattice& L, int face) {
  if (face < 0 || face >= L.size() || face == L.top || L.faces[face].rank < 0)
    throw InvalidFace("link requires a nonempty proper face");
  std::vector<int> atoms;  // covers of `face`
  for (int p : L.parents(face)) atoms.push_back(p);
  std::sort(atoms.begin(), atoms.end());
  auto atom_pos = [&](int idx) {
    return static_cast<int>(std::lower_bound(atoms.begin(), atoms.end(), idx) - atoms.begin());
  };
  // Coatom sets of the interval, expressed in atom indices.
  std::vector<std::vector<int>> coatom_sets;
  for (int c : L.children(L.top)) {
    if (!(L.leq(face, c)) || c == face) continue;
    std::vector<int> s;
    for (int a : atoms)
      if (L.leq(a, c)) s.push_back(atom_pos(a));
    coatom_sets.push_back(std::move(s));
  }
  int link_dim = L.dim - L.faces[face].rank - 1;
  FaceLattice out = face_lattice_from_sets(link_dim, static_cast<int>(atoms.size()), coatom_sets);
  // The closure of the coatom sets must reproduce the interval exactly.
  int interval_size = 0;
  for (int j = 0; j < L.size(); ++j)
    if (L.leq(face, j)) ++interval_size;
  if (out.size() != interval_size)
    throw Error("link closure does not match the lattice interval");
  return out;
}

}  // namespace polyalg
