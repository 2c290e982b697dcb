#pragma once

#include <functional>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

/// Pointed full-dimensional rational polyhedral cone. Rays are primitive in
/// the ambient lattice and lexicographically sorted; facet normals are
/// primitive in the dual lattice. Immutable after construction.
class Cone {
 public:
  /// Builds from any generating set: reduces to extreme rays, computes facet
  /// normals (simplicial cones directly, others by double description).
  /// Throws DegenerateCone when not pointed or not full-dimensional.
  static Cone from_rays(const Lattice& lattice, const std::vector<QVec>& generators);

  const Lattice& lattice() const { return lattice_; }
  const Lattice& dual_lattice() const { return dual_; }
  const std::vector<QVec>& rays() const { return rays_; }
  const std::vector<QVec>& facet_normals() const { return normals_; }
  int dim() const { return lattice_.dim(); }

  bool contains(const QVec& v) const;
  bool relint_contains(const QVec& v) const;
  bool is_simplicial() const { return rays_.size() == static_cast<size_t>(dim()); }

  /// Ray indices on the facet cut out by facet normal k.
  std::vector<int> facet(int k) const;

  QVec ray_sum() const;  // sum of primitive ray generators, an interior point

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.lattice_ == b.lattice_ && a.rays_ == b.rays_;
  }

  friend Cone dual_cone(const Cone& c);

 private:
  Cone(Lattice lattice, Lattice dual, std::vector<QVec> rays, std::vector<QVec> normals)
      : lattice_(std::move(lattice)), dual_(std::move(dual)), rays_(std::move(rays)), normals_(std::move(normals)) {}
  Lattice lattice_;
  Lattice dual_;
  std::vector<QVec> rays_;
  std::vector<QVec> normals_;
};

/// The dual cone in the dual lattice; generators are the facet normals.
Cone dual_cone(const Cone& c);

/// All v in (cone ∩ N) with 0 < <m, v> <= c, ordered by <m, v> then
/// lexicographically. Requires m strictly positive on every ray
/// (UnboundedSlice otherwise). With interior_only, keeps relint points.
std::vector<QVec> slice_lattice_points(const Cone& cone, const QVec& m, const Rat& c, bool interior_only = false);

/// Streaming form: sink receives lattice-basis coordinates of each slice
/// point together with <m, v> * scale, where scale is the returned positive
/// integer. Enumeration order is not sorted.
Int slice_scan(const Cone& cone, const QVec& m, const Rat& c, bool interior_only,
               const std::function<void(const ZVec& coords, const Int& scaled_value)>& sink);

inline constexpr long kDefaultHilbertCap = 200000;

/// Minimal generating set of the monoid cone ∩ N, ordered by degree then
/// lexicographically. Throws CapExceeded when the candidate slice exceeds cap.
std::vector<QVec> hilbert_basis(const Cone& cone, long cap = kDefaultHilbertCap);

/// Finite collection of maximal cones with pairwise face-compatible
/// intersections, all full-dimensional in the shared lattice.
struct Fan {
  Lattice lattice;
  std::vector<Cone> maximal_cones;

  bool is_valid() const;  // pairwise intersections are faces of both sides
};

/// Fan whose maximal cones are spanned by the facets of `cone` together with
/// v. Throws NotInterior / NotPrimitive.
Fan star_subdivision(const Cone& cone, const QVec& v);

/// Extreme rays of {x : a.x >= 0 for every row a}, primitive integer
/// directions, assuming the rows span (the cone is then pointed).
std::vector<QVec> dd_extreme_rays(const std::vector<QVec>& inequalities, int n);

}  // namespace toric
