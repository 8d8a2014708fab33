// Exact V-representation polytopes with derived facet data.
//
// Facet normals are kept in canonical scale: primitive integer entries,
// oriented outward (so <normal, v> <= support holds on the polytope with
// equality exactly on the facet). Facets are sorted by (normal, support),
// which makes every derived quantity reproducible across runs.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "polyalg/linalg.hpp"

namespace polyalg {

struct FacetData {
  Vec normal;                 // primitive integer entries
  Rat support;                // H = max of <normal, .> over the polytope
  std::vector<int> vertices;  // sorted incidence set
};

struct Polytope {
  int dim = 0;
  std::string label;
  std::vector<Vec> vertices;
  std::vector<FacetData> facets;

  int n_vertices() const { return static_cast<int>(vertices.size()); }
  int n_facets() const { return static_cast<int>(facets.size()); }

  // Facets through a given vertex.
  std::vector<int> facets_at(int v) const {
    std::vector<int> out;
    for (int f = 0; f < n_facets(); ++f)
      if (std::binary_search(facets[f].vertices.begin(), facets[f].vertices.end(), v))
        out.push_back(f);
    return out;
  }

  Rat support_of(const Vec& functional) const {
    Rat best = dot(functional, vertices.at(0));
    for (int i = 1; i < n_vertices(); ++i) best = std::max(best, dot(functional, vertices[i]));
    return best;
  }
};

struct CombPolytope {
  int dim = 0;
  int n_vertices = 0;
  std::vector<std::vector<int>> facets;  // sorted vertex-index sets
  std::string label;
};

namespace detail {

inline int affine_rank(const std::vector<Vec>& pts) {
  if (pts.size() <= 1) return 0;
  RatMatrix m(static_cast<int>(pts.size()) - 1, static_cast<int>(pts[0].size()));
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts[0].size(); ++j) m.at(static_cast<int>(i) - 1, static_cast<int>(j)) = pts[i][j] - pts[0][j];
  return rank(m);
}

// Normal of the hyperplane through d affinely independent points, or
// nullopt if the points are affinely dependent.
inline std::optional<Vec> hyperplane_normal(const std::vector<Vec>& pts, int d) {
  RatMatrix m(d - 1, d);
  for (int i = 1; i < d; ++i)
    for (int j = 0; j < d; ++j) m.at(i - 1, j) = pts[i][j] - pts[0][j];
  auto ker = kernel_basis(m);
  if (ker.size() != 1) return std::nullopt;
  return primitive(ker[0]);
}

}  // namespace detail

// Full validation of the Polytope invariants; used by every constructor
// path (hull search and direct assembly alike).
inline void validate_polytope(const Polytope& p) {
  const int d = p.dim;
  if (d < 1) throw UnsupportedDim("dimension must be >= 1");
  for (const auto& v : p.vertices)
    if (static_cast<int>(v.size()) != d) throw LengthMismatch("vertex dimension mismatch");
  for (int i = 0; i < p.n_vertices(); ++i)
    for (int j = i + 1; j < p.n_vertices(); ++j)
      if (p.vertices[i] == p.vertices[j]) throw NonExtremePoint(j);
  if (detail::affine_rank(p.vertices) != d) throw NotFullDimensional();
  for (const auto& f : p.facets) {
    std::set<int> inc(f.vertices.begin(), f.vertices.end());
    std::vector<Vec> on;
    for (int i = 0; i < p.n_vertices(); ++i) {
      Rat val = dot(f.normal, p.vertices[i]);
      if (val > f.support) throw Error("facet inequality violated");
      if ((val == f.support) != (inc.count(i) > 0)) throw Error("facet incidence inexact");
      if (val == f.support) on.push_back(p.vertices[i]);
    }
    if (detail::affine_rank(on) != d - 1) throw Error("facet does not span a hyperplane");
  }
  // Extremeness: the facets through each vertex must span the ambient space.
  for (int i = 0; i < p.n_vertices(); ++i) {
    auto fs = p.facets_at(i);
    RatMatrix m(static_cast<int>(fs.size()), d);
    for (std::size_t r = 0; r < fs.size(); ++r)
      for (int j = 0; j < d; ++j) m.at(static_cast<int>(r), j) = p.facets[fs[r]].normal[j];
    if (rank(m) != d) throw NonExtremePoint(i);
  }
}

inline void sort_facets(Polytope& p) {
  std::sort(p.facets.begin(), p.facets.end(), [](const FacetData& a, const FacetData& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.support < b.support;
  });
}

// Facet enumeration by exhaustive d-subset hyperplane search with exact
// sidedness tests. Intended scale: dim <= 6, at most a few dozen points.
inline Polytope facets_from_vertices(std::vector<Vec> pts, int d, std::string label = "") {
  if (d < 1 || d > 6) throw UnsupportedDim("dimension must be between 1 and 6");
  if (static_cast<int>(pts.size()) < d + 1) throw NotFullDimensional("need at least d+1 points");
  for (const auto& v : pts)
    if (static_cast<int>(v.size()) != d) throw LengthMismatch("point dimension mismatch");
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j]) throw NonExtremePoint(static_cast<int>(j));
  if (detail::affine_rank(pts) != d) throw NotFullDimensional();

  const int n = static_cast<int>(pts.size());
  std::set<std::pair<Vec, Rat>> seen;
  Polytope p;
  p.dim = d;
  p.label = std::move(label);
  p.vertices = pts;

  std::vector<int> idx(d);
  auto consider = [&](const std::vector<int>& subset) {
    std::vector<Vec> sel;
    sel.reserve(d);
    for (int i : subset) sel.push_back(pts[i]);
    auto nrm = detail::hyperplane_normal(sel, d);
    if (!nrm) return;
    Vec normal = *nrm;
    Rat level = dot(normal, sel[0]);
    bool above = false, below = false;
    std::vector<int> incidence;
    for (int i = 0; i < n; ++i) {
      Rat v = dot(normal, pts[i]);
      if (v > level)
        above = true;
      else if (v < level)
        below = true;
      else
        incidence.push_back(i);
      if (above && below) return;
    }
    if (above) {  // orient outward
      for (auto& x : normal) x = -x;
      level = -level;
    }
    if (!seen.insert({normal, level}).second) return;
    p.facets.push_back(FacetData{std::move(normal), level, std::move(incidence)});
  };

  // Enumerate d-subsets in lexicographic order.
  std::vector<int> subset(d);
  auto rec = [&](auto&& self, int pos, int start) -> void {
    if (pos == d) {
      consider(subset);
      return;
    }
    for (int i = start; i <= n - (d - pos); ++i) {
      subset[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);

  sort_facets(p);
  validate_polytope(p);  // throws NonExtremePoint for non-vertex input points
  return p;
}

// Assembles a polytope from known supporting hyperplanes (normal, level).
// Incidence is derived; all invariants are re-validated.
inline Polytope polytope_from_hyperplanes(std::vector<Vec> pts, int d,
                                          const std::vector<std::pair<Vec, Rat>>& planes,
                                          std::string label = "") {
  Polytope p;
  p.dim = d;
  p.label = std::move(label);
  p.vertices = std::move(pts);
  for (const auto& [nrm, level] : planes) {
    Vec normal = primitive(nrm);
    Rat scale = 0;
    for (std::size_t i = 0; i < nrm.size(); ++i)
      if (nrm[i] != 0) {
        scale = nrm[i] / normal[i];
        break;
      }
    FacetData f;
    f.normal = normal;
    f.support = level / scale;
    for (int i = 0; i < p.n_vertices(); ++i)
      if (dot(f.normal, p.vertices[i]) == f.support) f.vertices.push_back(i);
    p.facets.push_back(std::move(f));
  }
  sort_facets(p);
  validate_polytope(p);
  return p;
}

}  // namespace polyalg
