#pragma once

#include <optional>

#include "toric/cones.hpp"

namespace toric {

/// Cox presentation of the divisor class group: one variable per ray, graded
/// by Z^free_rank plus the torsion factors.
struct ClassGroupPresentation {
  long variables = 0;
  long free_rank = 0;
  ZVec torsion;  // invariant factors > 1, divisibility chain
  struct Grading {
    ZVec free;     // free components
    ZVec torsion;  // component i reduced mod torsion[i]
    friend bool operator==(const Grading&, const Grading&) = default;
  };
  std::vector<Grading> gradings;  // one per variable, in ray order

  friend bool operator==(const ClassGroupPresentation&, const ClassGroupPresentation&) = default;
};

/// Solves <m, ray_i> = 1 - coefficients[i] over the rays of the cone.
/// Coefficients are unrestricted rationals here; returns nullopt when the
/// system is inconsistent (possible only for non-simplicial cones).
std::optional<QVec> functional_for(const Cone& cone, const QVec& coefficients);

/// Toric pair: cone with one boundary coefficient in [0,1) per ray, plus the
/// lazily cached log-discrepancy functional m with <m, v_i> = 1 - b_i.
/// Immutable apart from the single-assignment cache; share across threads
/// only after the functional has been computed once.
class ToricPair {
 public:
  ToricPair(Cone cone, QVec boundary);  // InvalidBoundary unless 0 <= b_i < 1
  explicit ToricPair(Cone cone);        // boundary zero

  const Cone& cone() const { return cone_; }
  const QVec& boundary() const { return boundary_; }
  const Lattice& lattice() const { return cone_.lattice(); }

  const QVec& logdisc_functional() const;  // NotQGorenstein
  bool is_klt() const;

  /// <m, v> for v in cone ∩ N, v != 0. For primitive v this is the log
  /// discrepancy of the toric valuation at v; it scales linearly in v.
  Rat log_discrepancy(const QVec& v) const;  // NotInCone, NotQGorenstein

  struct Mld {
    Rat value;
    QVec witness;  // primitive, first in slice order among minimizers
  };
  Mld mld() const;  // NotKlt

  /// Least l >= 1 with l*m integral on the whole lattice.
  Int cartier_index() const;  // NotQGorenstein

  friend bool operator==(const ToricPair& a, const ToricPair& b) {
    return a.cone_ == b.cone_ && a.boundary_ == b.boundary_;
  }

 private:
  Cone cone_;
  QVec boundary_;
  mutable std::optional<QVec> functional_;
};

/// Cokernel presentation of M -> Z^rays, m -> (<m, v_i>), via Smith form.
ClassGroupPresentation class_group(const Cone& cone);

}  // namespace toric
