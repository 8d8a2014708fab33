// Exact arithmetic carrier and small vector helpers.
//
// All coordinates, supports and coefficients in the library are
// boost::multiprecision rationals, kept in canonical form (reduced,
// positive denominator) by the backend.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "polyalg/errors.hpp"

namespace polyalg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Vec = std::vector<Rat>;

inline int sign(const Rat& x) { return x.sign(); }

// Accepts "p" or "p/q" with optional leading '-'.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      if (!is_int(s)) throw ParseError("bad rational literal: " + s);
      return Rat(Int(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw ParseError("bad rational literal: " + s);
    Int q(den);
    if (q == 0) throw ParseError("zero denominator: " + s);
    return Rat(Int(num), q);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad rational literal: " + s);
  }
}

inline std::string rat_to_string(const Rat& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

inline Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw LengthMismatch("dot: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec vsub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw LengthMismatch("vsub: dimension mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec vadd(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw LengthMismatch("vadd: dimension mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec vscale(const Rat& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline bool is_zero(const Vec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

// Scales a nonzero rational vector to integer entries with content 1.
// The sign is preserved (first nonzero entry keeps its sign).
inline Vec primitive(const Vec& a) {
  Int lcm_den = 1;
  for (const auto& x : a) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
  Int g = 0;
  std::vector<Int> scaled(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    scaled[i] = numerator(a[i]) * (lcm_den / denominator(a[i]));
    g = boost::multiprecision::gcd(g, scaled[i]);
  }
  if (g == 0) throw Error("primitive: zero vector");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rat(scaled[i] / g);
  return r;
}

inline long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace polyalg
