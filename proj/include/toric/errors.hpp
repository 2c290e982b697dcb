#pragma once

#include <stdexcept>
#include <string>

namespace toric {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// lattice
struct NotSublattice : Error {
  explicit NotSublattice(const std::string& w = "lattice is not contained in the overlattice") : Error(w) {}
};
struct ZeroVector : Error {
  explicit ZeroVector(const std::string& w = "zero vector has no ray") : Error(w) {}
};
struct NotInLattice : Error {
  explicit NotInLattice(const std::string& w = "vector does not lie in the lattice") : Error(w) {}
};
struct SingularMatrix : Error {
  explicit SingularMatrix(const std::string& w = "matrix is singular") : Error(w) {}
};

// cones
struct DegenerateCone : Error {
  explicit DegenerateCone(const std::string& w = "cone is not pointed and full-dimensional") : Error(w) {}
};
struct UnboundedSlice : Error {
  explicit UnboundedSlice(const std::string& w = "functional is not strictly positive on the cone") : Error(w) {}
};
struct NotInterior : Error {
  explicit NotInterior(const std::string& w = "point is not in the relative interior") : Error(w) {}
};
struct NotPrimitive : Error {
  explicit NotPrimitive(const std::string& w = "point is not primitive in the lattice") : Error(w) {}
};
struct CapExceeded : Error {
  long cap;
  explicit CapExceeded(long cap_, const std::string& what_prefix = "enumeration cap exceeded")
      : Error(what_prefix + " (cap = " + std::to_string(cap_) + ")"), cap(cap_) {}
};

// toric pairs
struct NotQGorenstein : Error {
  explicit NotQGorenstein(const std::string& w = "no log-discrepancy functional exists") : Error(w) {}
};
struct NotInCone : Error {
  explicit NotInCone(const std::string& w = "point is not in the cone") : Error(w) {}
};
struct NotKlt : Error {
  explicit NotKlt(const std::string& w = "pair is not Kawamata log terminal") : Error(w) {}
};
struct InvalidBoundary : Error {
  explicit InvalidBoundary(const std::string& w = "boundary coefficients are invalid") : Error(w) {}
};

// quotients
struct LatticeMismatch : Error {
  explicit LatticeMismatch(const std::string& w = "pair and subgroup base lattices differ") : Error(w) {}
};
struct NotInUpstairsLattice : Error {
  explicit NotInUpstairsLattice(const std::string& w = "valuation vector is not primitive in the upstairs lattice")
      : Error(w) {}
};

// automorphisms
struct OrderCapExceeded : Error {
  explicit OrderCapExceeded(const std::string& w = "element order exceeds the finite-order bound") : Error(w) {}
};
struct OutOfRange : Error {
  explicit OutOfRange(const std::string& w = "argument out of supported range") : Error(w) {}
};

// explorer / io
struct IoError : Error {
  explicit IoError(const std::string& w = "i/o failure") : Error(w) {}
};
struct VerificationFailure : Error {
  explicit VerificationFailure(const std::string& w = "internal cross-check failed") : Error(w) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& w = "malformed input") : Error(w) {}
};

}  // namespace toric
