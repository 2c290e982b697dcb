// Finite abelian torus subgroups and their log quotients. Nonabelian group
// actions are out of scope: factorization results enter only through their
// abelian shadow, the quotient towers below.
#pragma once

#include "toric/toric_pair.hpp"

namespace toric {

/// Finite subgroup of the torus of N, represented as an overlattice N' of N.
struct TorusSubgroup {
  Lattice base;
  Lattice overlattice;
  FiniteAbelianGroup group;  // N'/N

  static TorusSubgroup from_lattices(const Lattice& base, const Lattice& overlattice);
  /// Cyclic subgroup generated by (a_1/r, ..., a_n/r) in the torus of `base`
  /// (torsion point written in the basis of `base`).
  static TorusSubgroup cyclic(const Lattice& base, long r, const std::vector<long>& weights);
};

/// The cyclic quotient singularity 1/r(a_1, ..., a_n) as a boundaryless pair:
/// positive orthant over Z^n + Z*(a_1/r, ..., a_n/r).
ToricPair cyclic_quotient(long r, const std::vector<long>& weights);

/// Quotient of the pair by the finite torus subgroup: same cone over the
/// overlattice, boundary d_i = 1 - (1 - b_i)/r_i with r_i the ramification
/// index of the i-th ray. The log-discrepancy functional is preserved.
ToricPair log_quotient(const ToricPair& pair, const TorusSubgroup& f);  // LatticeMismatch

struct QuotientLdCheck {
  Rat upstairs;
  Rat downstairs;
  Int ramification;
};

/// Log discrepancy of the invariant valuation v computed upstairs and
/// downstairs; checks the exact quotient law downstairs = upstairs / r.
QuotientLdCheck quotient_ld_check(const ToricPair& pair, const TorusSubgroup& f, const QVec& v);

struct QuotientTower {
  struct Stage {
    Lattice lattice;
    ToricPair pair;
    ToricPair::Mld mld;
    Int cartier_index;
  };
  std::vector<Stage> stages;       // stage 0 is the base pair
  bool composite_consistent = false;  // stagewise composition equals the one-step quotient
};

/// Successive log quotients along the chain of lattices; the chain must start
/// at the base pair's lattice and each step must contain the previous one.
QuotientTower quotient_tower(const std::vector<Lattice>& chain, const ToricPair& base);

/// Hilbert basis of the dual cone inside the dual of the overlattice: the
/// weight monoid of the invariant subring.
std::vector<QVec> invariant_monoid(const ToricPair& pair, const TorusSubgroup& f, long cap = kDefaultHilbertCap);

}  // namespace toric
