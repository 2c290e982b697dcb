#pragma once

#include <string>
#include <vector>

#include "toric/matrix.hpp"

namespace toric {

/// Finite abelian group as a divisibility chain d1 | d2 | ... of factors > 1.
struct FiniteAbelianGroup {
  ZVec invariant_factors;

  Int order() const {
    Int o = 1;
    for (const auto& d : invariant_factors) o *= d;
    return o;
  }
  int rank() const { return static_cast<int>(invariant_factors.size()); }
  bool trivial() const { return invariant_factors.empty(); }

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;
};

/// Full-rank lattice in rational n-space. Generators are the rows of an
/// invertible rational matrix, canonicalized via the Hermite form of the
/// denominator-cleared integer matrix, so equality is representation
/// independent. Immutable after construction.
class Lattice {
 public:
  static Lattice standard(int n);
  /// Accepts any spanning set of generator rows (k >= n of rank n).
  static Lattice from_generators(const std::vector<QVec>& generators);

  int dim() const { return n_; }
  const RatMatrix& generator_matrix() const { return gens_; }
  const RatMatrix& inverse_generator_matrix() const { return inv_; }
  QVec basis_row(int i) const { return gens_.row(i); }

  /// Coordinates of an ambient vector in this basis (always defined).
  QVec coordinates_of(const QVec& v) const { return mul_row(v, inv_); }
  QVec from_coordinates(const QVec& coords) const { return mul_row(coords, gens_); }
  bool contains(const QVec& v) const;
  bool is_sublattice_of(const Lattice& other) const;

  Lattice dual() const;

  /// Covolume |det(generator matrix)| > 0.
  Rat covolume() const;

  /// Canonical printable form, usable as a dictionary key.
  std::string key() const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.gens_ == b.gens_; }

 private:
  Lattice(int n, RatMatrix gens, RatMatrix inv) : n_(n), gens_(std::move(gens)), inv_(std::move(inv)) {}
  int n_ = 0;
  RatMatrix gens_;
  RatMatrix inv_;
};

/// Invariant factors of N'/N. Throws NotSublattice unless N is contained in Nprime.
FiniteAbelianGroup overlattice_quotient(const Lattice& n, const Lattice& nprime);

struct RayPrimitive {
  QVec generator;  // primitive generator of (Q>=0 * v) ∩ N
  Int index;       // v = index * generator; meaningful when in_lattice
  bool in_lattice; // whether v itself lies in N
};

/// Primitive point of N on the ray through v, plus the multiplicity of v over
/// it. Throws ZeroVector on v = 0; reports v ∉ N through in_lattice.
RayPrimitive primitive_on_ray(const QVec& v, const Lattice& n);

/// Primitive generator of the ray of v in N (total for v != 0).
QVec ray_primitive(const QVec& v, const Lattice& n);

}  // namespace toric
