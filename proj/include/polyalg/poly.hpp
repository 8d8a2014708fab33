// Sparse homogeneous polynomials.
//
// The same representation carries volume polynomials in the support
// numbers H_G (MultiPoly) and constant-coefficient differential operators
// in the generators dH_G (DiffPoly). Exponent vectors are compared with
// std::vector's lexicographic order; within one degree this is the
// monomial order used everywhere (degrees never mix inside one Poly).
#pragma once

#include <map>
#include <vector>

#include "polyalg/rational.hpp"

namespace polyalg {

using Exp = std::vector<int>;

inline int exp_degree(const Exp& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

struct Poly {
  int nvars = 0;
  int degree = 0;                 // declared homogeneous degree
  std::map<Exp, Rat> terms;       // nonzero coefficients only

  Poly() = default;
  Poly(int n, int deg) : nvars(n), degree(deg) {}

  static Poly zero(int n, int deg) { return Poly(n, deg); }

  static Poly monomial(int n, const Exp& e, const Rat& c = Rat(1)) {
    Poly p(n, exp_degree(e));
    if (c != 0) p.terms[e] = c;
    return p;
  }

  static Poly variable(int n, int i) {
    Exp e(n, 0);
    e[i] = 1;
    return monomial(n, e);
  }

  static Poly constant(int n, const Rat& c) {
    Poly p(n, 0);
    if (c != 0) p.terms[Exp(n, 0)] = c;
    return p;
  }

  bool is_zero() const { return terms.empty(); }

  void add_term(const Exp& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
      terms.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    if (o.nvars != nvars || (!o.is_zero() && !is_zero() && o.degree != degree))
      throw DegreeMismatch("poly add: incompatible");
    if (is_zero()) degree = o.degree;
    for (const auto& [e, c] : o.terms) add_term(e, c);
    return *this;
  }

  Poly operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms) c = -c;
    return r;
  }

  Poly operator-(const Poly& o) const { return *this + (-o); }

  Poly scaled(const Rat& c) const {
    Poly r(nvars, degree);
    if (c == 0) return r;
    for (const auto& [e, coef] : terms) r.terms[e] = coef * c;
    return r;
  }

  Poly operator*(const Poly& o) const {
    if (o.nvars != nvars) throw DegreeMismatch("poly mul: variable mismatch");
    Poly r(nvars, degree + o.degree);
    for (const auto& [e1, c1] : terms)
      for (const auto& [e2, c2] : o.terms) {
        Exp e(nvars);
        for (int i = 0; i < nvars; ++i) e[i] = e1[i] + e2[i];
        r.add_term(e, c1 * c2);
      }
    return r;
  }

  bool operator==(const Poly& o) const {
    return nvars == o.nvars && terms == o.terms && (is_zero() || degree == o.degree);
  }
};

using MultiPoly = Poly;
using DiffPoly = Poly;

// Applies a constant-coefficient operator to a polynomial in H variables.
inline MultiPoly apply(const DiffPoly& op, const MultiPoly& p) {
  if (op.nvars != p.nvars) throw DegreeMismatch("apply: variable mismatch");
  MultiPoly r(p.nvars, p.degree - op.degree);
  for (const auto& [eo, co] : op.terms) {
    for (const auto& [ep, cp] : p.terms) {
      Rat c = co * cp;
      Exp e(p.nvars);
      bool ok = true;
      for (int i = 0; i < p.nvars && ok; ++i) {
        if (ep[i] < eo[i]) {
          ok = false;
          break;
        }
        e[i] = ep[i] - eo[i];
        for (int t = 0; t < eo[i]; ++t) c *= (ep[i] - t);
      }
      if (ok) r.add_term(e, c);
    }
  }
  return r;
}

inline Rat evaluate(const MultiPoly& p, const Vec& point) {
  if (static_cast<int>(point.size()) != p.nvars) throw LengthMismatch("evaluate");
  Rat s = 0;
  for (const auto& [e, c] : p.terms) {
    Rat t = c;
    for (int i = 0; i < p.nvars; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    s += t;
  }
  return s;
}

// All exponent vectors of total degree k, in the library's monomial order.
inline std::vector<Exp> monomials_of_degree(int nvars, int k) {
  std::vector<Exp> out;
  Exp cur(nvars, 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == nvars - 1) {
      cur[pos] = remaining;
      out.push_back(cur);
      cur[pos] = 0;
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      cur[pos] = e;
      self(self, pos + 1, remaining - e);
    }
    cur[pos] = 0;
  };
  if (nvars == 0) {
    if (k == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, k);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace polyalg
