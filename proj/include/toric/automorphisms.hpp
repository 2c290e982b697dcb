#pragma once

#include <memory>
#include <utility>

#include "toric/cones.hpp"

namespace toric {

/// Lattice automorphism whose transpose permutes the cones of a fan. Row
/// convention: an ambient vector v maps to v * ambient_matrix, basis
/// coordinates map to coords * basis_matrix.
struct FanAutomorphism {
  Lattice lattice;
  IntMatrix basis_matrix;
  RatMatrix ambient_matrix;

  bool is_identity() const { return basis_matrix.is_identity(); }
  QVec apply(const QVec& v) const { return mul_row(v, ambient_matrix); }

  static FanAutomorphism identity(const Lattice& lattice);

  friend bool operator==(const FanAutomorphism& a, const FanAutomorphism& b) {
    return a.lattice == b.lattice && a.basis_matrix == b.basis_matrix;
  }
};

/// The full group Aut_Sigma(M) of ray permutations realized by lattice
/// automorphisms preserving the cone (or every maximal cone of the fan).
/// Deterministic order. Throws DegenerateCone when rays do not span.
std::vector<FanAutomorphism> fan_automorphisms(const Cone& cone);
std::vector<FanAutomorphism> fan_automorphisms(const Fan& fan);

/// Least k >= 1 with g^k = id; checked against the dimension bound when the
/// dimension is covered by max_order_table.
long element_order(const FanAutomorphism& g);  // OrderCapExceeded on overflow

/// Maximal order of a finite-order unimodular integer n x n matrix, n <= 6.
long max_order_table(int n);  // OutOfRange

/// Fan automorphism together with a torsion point of the torus, stored as
/// coordinates in the lattice basis with canonical representatives in [0,1).
struct OuterToricElement {
  FanAutomorphism g;
  QVec torsion;  // basis coordinates, entries in [0,1)
};

/// (g1,t1) * (g2,t2) = (g1 g2, t1 + g1 t2).
OuterToricElement compose(const OuterToricElement& a, const OuterToricElement& b);
OuterToricElement identity_element(const Lattice& lattice);
bool is_identity(const OuterToricElement& e);
bool equal(const OuterToricElement& a, const OuterToricElement& b);

/// Shared fan-part data for outer toric groups over one cone: the list of fan
/// automorphisms closed under composition, with its multiplication table.
struct OuterToricContext {
  Lattice lattice;
  std::vector<FanAutomorphism> autos;  // autos[0] is the identity
  std::vector<std::vector<int>> mul_table;  // [i][j] = fan part of (g_i, .) * (g_j, .)

  static OuterToricContext closure_of(const Lattice& lattice, const std::vector<IntMatrix>& basis_matrices);
  static OuterToricContext full(const Cone& cone);  // all of Aut_Sigma(M)
  int index_of(const IntMatrix& basis_matrix) const;
};

inline constexpr long kDefaultClosureCap = 100000;

/// Finite group of outer toric elements, closed under the semidirect
/// composition, elements in deterministic order.
class OuterToricGroup {
 public:
  std::shared_ptr<const OuterToricContext> context;
  std::vector<std::pair<int, QVec>> elements;    // (fan index, torsion coords)
  std::vector<std::pair<int, QVec>> generators;

  long size() const { return static_cast<long>(elements.size()); }
  OuterToricElement element(size_t i) const;
  long fan_image_size() const;              // order of the image in Aut_Sigma(M)
  std::vector<QVec> torus_kernel() const;   // torsion coords of kernel elements
};

namespace detail {
// test hook: route group_closure through the generic rational path instead of
// the packed integer fast path
extern bool force_general_closure;
}

OuterToricGroup group_closure(const Lattice& lattice, const std::vector<OuterToricElement>& generators,
                              long cap = kDefaultClosureCap);
/// Same, with the fan context precomputed (generators as (fan index, torsion)).
OuterToricGroup group_closure(std::shared_ptr<const OuterToricContext> context,
                              const std::vector<std::pair<int, QVec>>& generators, long cap = kDefaultClosureCap);

struct JordanReport {
  Int a_order;              // order of A = G ∩ torus
  ZVec a_invariant_factors;
  Int index;                // |G| / |A| = order of the image in Aut_Sigma(M)
  int rank;                 // number of invariant factors, at most dim
};

/// A is the kernel of the projection to the fan part: normal, abelian, and
/// inside the torus by construction.
JordanReport jordan_report(const OuterToricGroup& g);

/// Primitive generator of the one-parameter subgroup fixing the divisor
/// extracted by the star subdivision at v (v itself). Validates the
/// subdivision preconditions.
QVec fixing_subtorus(const Cone& cone, const QVec& v);

/// Whether the torsion point t (ambient coordinates) acts trivially on the
/// torus of that divisor, i.e. t lies in (Q v + N)/N.
bool torsion_fixes_exceptional(const QVec& t, const QVec& v, const Lattice& n);

}  // namespace toric
