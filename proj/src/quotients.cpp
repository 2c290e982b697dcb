#include "toric/quotients.hpp"

#include <map>

namespace toric {

namespace {

// primitive integer direction used to match rays across lattices
ZVec direction_key(const QVec& v) {
  Int d = common_denominator(v);
  ZVec w(v.size());
  Int g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    Rat x = v[i] * Rat(d);
    w[i] = x.get_num();
    Int a = w[i] < 0 ? Int(-w[i]) : w[i];
    g = gcd(g, a);
  }
  if (g > 1)
    for (auto& x : w) x /= g;
  return w;
}

}  // namespace

TorusSubgroup TorusSubgroup::from_lattices(const Lattice& base, const Lattice& overlattice) {
  FiniteAbelianGroup g = overlattice_quotient(base, overlattice);  // checks containment
  return TorusSubgroup{base, overlattice, std::move(g)};
}

TorusSubgroup TorusSubgroup::cyclic(const Lattice& base, long r, const std::vector<long>& weights) {
  if (r < 1) throw OutOfRange("cyclic order must be positive");
  if (static_cast<int>(weights.size()) != base.dim()) throw LatticeMismatch("weight count must match the rank");
  std::vector<QVec> gens = base.generator_matrix().row_list();
  QVec coords(weights.size());
  for (size_t i = 0; i < weights.size(); ++i) {
    coords[i] = Rat(weights[i], r);
    coords[i].canonicalize();
  }
  gens.push_back(base.from_coordinates(coords));
  return from_lattices(base, Lattice::from_generators(gens));
}

ToricPair cyclic_quotient(long r, const std::vector<long>& weights) {
  const int n = static_cast<int>(weights.size());
  Lattice zn = Lattice::standard(n);
  TorusSubgroup f = TorusSubgroup::cyclic(zn, r, weights);
  std::vector<QVec> orthant;
  for (int i = 0; i < n; ++i) {
    QVec e(static_cast<size_t>(n), Rat(0));
    e[static_cast<size_t>(i)] = 1;
    orthant.push_back(std::move(e));
  }
  return ToricPair(Cone::from_rays(f.overlattice, orthant));
}

ToricPair log_quotient(const ToricPair& pair, const TorusSubgroup& f) {
  if (!(pair.lattice() == f.base)) throw LatticeMismatch();
  Cone down = Cone::from_rays(f.overlattice, pair.cone().rays());

  std::map<ZVec, Rat> upstairs_coeff;
  for (size_t i = 0; i < pair.cone().rays().size(); ++i)
    upstairs_coeff[direction_key(pair.cone().rays()[i])] = pair.boundary()[i];

  QVec boundary;
  boundary.reserve(down.rays().size());
  for (const auto& ray : down.rays()) {
    auto it = upstairs_coeff.find(direction_key(ray));
    if (it == upstairs_coeff.end()) throw Error("ray mismatch across the quotient");
    // upstairs primitive = r * downstairs primitive
    QVec up_ray = ray_primitive(ray, f.base);
    RayPrimitive p = primitive_on_ray(up_ray, f.overlattice);
    boundary.push_back(1 - (1 - it->second) / Rat(p.index));
  }
  return ToricPair(std::move(down), std::move(boundary));
}

QuotientLdCheck quotient_ld_check(const ToricPair& pair, const TorusSubgroup& f, const QVec& v) {
  if (!(pair.lattice() == f.base)) throw LatticeMismatch();
  if (!pair.cone().relint_contains(v)) throw NotInterior();
  RayPrimitive up = primitive_on_ray(v, f.base);
  if (!up.in_lattice || up.index != 1) throw NotInUpstairsLattice();

  QuotientLdCheck out;
  out.upstairs = pair.log_discrepancy(v);
  RayPrimitive down = primitive_on_ray(v, f.overlattice);
  out.ramification = down.index;
  ToricPair downstairs = log_quotient(pair, f);
  out.downstairs = downstairs.log_discrepancy(down.generator);
  if (out.downstairs * Rat(out.ramification) != out.upstairs)
    throw VerificationFailure("quotient log-discrepancy law failed");
  return out;
}

QuotientTower quotient_tower(const std::vector<Lattice>& chain, const ToricPair& base) {
  if (chain.empty() || !(chain.front() == base.lattice()))
    throw LatticeMismatch("tower chain must start at the base lattice");
  if (!base.is_klt()) throw NotKlt();

  QuotientTower tower;
  ToricPair current = base;
  tower.stages.push_back({chain.front(), current, current.mld(), current.cartier_index()});
  for (size_t i = 1; i < chain.size(); ++i) {
    TorusSubgroup step = TorusSubgroup::from_lattices(chain[i - 1], chain[i]);
    current = log_quotient(current, step);
    tower.stages.push_back({chain[i], current, current.mld(), current.cartier_index()});
  }
  TorusSubgroup whole = TorusSubgroup::from_lattices(chain.front(), chain.back());
  tower.composite_consistent = (log_quotient(base, whole) == current);
  return tower;
}

std::vector<QVec> invariant_monoid(const ToricPair& pair, const TorusSubgroup& f, long cap) {
  if (!(pair.lattice() == f.base)) throw LatticeMismatch();
  Cone dual = dual_cone(pair.cone());
  Cone dual_over_sub = Cone::from_rays(f.overlattice.dual(), dual.rays());
  return hilbert_basis(dual_over_sub, cap);
}

}  // namespace toric
