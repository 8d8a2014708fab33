// Typed error hierarchy shared by all polyalg components.
#pragma once

#include <stdexcept>
#include <string>

namespace polyalg {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotFullDimensional : Error {
  explicit NotFullDimensional(const std::string& w = "point set does not affinely span the ambient space")
      : Error(w) {}
};

struct NonExtremePoint : Error {
  int index;
  explicit NonExtremePoint(int i)
      : Error("input point " + std::to_string(i) + " is not extreme"), index(i) {}
};

struct NotEulerian : Error {
  explicit NotEulerian(const std::string& w) : Error(w) {}
};

struct LengthMismatch : Error {
  explicit LengthMismatch(const std::string& w = "vector length mismatch") : Error(w) {}
};

struct InvalidFace : Error {
  explicit InvalidFace(const std::string& w = "invalid face") : Error(w) {}
};

struct UnsupportedDim : Error {
  explicit UnsupportedDim(const std::string& w = "unsupported dimension") : Error(w) {}
};

struct NotAVertex : Error {
  explicit NotAVertex(int i) : Error("index " + std::to_string(i) + " is not a vertex") {}
};

struct NotSimple : Error {
  explicit NotSimple(const std::string& w = "polytope is not simple") : Error(w) {}
};

struct NotSimpleInEdges : Error {
  explicit NotSimpleInEdges(const std::string& w = "polytope is not simple in edges") : Error(w) {}
};

struct NotInfrequent : Error {
  explicit NotInfrequent(const std::string& w = "polytope does not have infrequent singularities")
      : Error(w) {}
};

struct NotGeneral : Error {
  explicit NotGeneral(const std::string& w = "linear function is constant on an edge") : Error(w) {}
};

struct DegreeOutOfRange : Error {
  explicit DegreeOutOfRange(const std::string& w = "degree out of range") : Error(w) {}
};

struct DegreeMismatch : Error {
  explicit DegreeMismatch(const std::string& w = "degree mismatch") : Error(w) {}
};

struct DegreeExceeds : Error {
  explicit DegreeExceeds(const std::string& w = "deg P exceeds deg Q") : Error(w) {}
};

struct BadRange : Error {
  explicit BadRange(const std::string& w = "arguments out of range") : Error(w) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(w) {}
};

struct IOFailure : Error {
  explicit IOFailure(const std::string& w) : Error(w) {}
};

}  // namespace polyalg
