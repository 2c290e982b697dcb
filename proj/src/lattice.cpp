#include "toric/lattice.hpp"

#include <sstream>

namespace toric {

Lattice Lattice::standard(int n) {
  return Lattice(n, RatMatrix::identity(n), RatMatrix::identity(n));
}

Lattice Lattice::from_generators(const std::vector<QVec>& generators) {
  if (generators.empty()) throw Error("lattice needs at least one generator");
  const int n = static_cast<int>(generators[0].size());
  for (const auto& g : generators)
    if (static_cast<int>(g.size()) != n) throw Error("ragged generator list");

  // clear denominators globally, then canonicalize the integer row span
  Int d = 1;
  for (const auto& g : generators) d = lcm(d, common_denominator(g));
  IntMatrix m(static_cast<long>(generators.size()), n);
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < n; ++j) {
      Rat x = generators[static_cast<size_t>(i)][static_cast<size_t>(j)] * Rat(d);
      m.at(i, j) = x.get_num();
    }
  HermiteResult h = hermite_normal_form(m);
  if (h.rank != n) throw SingularMatrix("lattice generators do not span");

  RatMatrix gens(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      gens.at(i, j) = Rat(h.h.at(i, j), d);
      gens.at(i, j).canonicalize();
    }
  RatMatrix inv = inverse(gens);
  return Lattice(n, std::move(gens), std::move(inv));
}

bool Lattice::contains(const QVec& v) const {
  QVec c = coordinates_of(v);
  for (const auto& x : c)
    if (!is_integer(x)) return false;
  return true;
}

bool Lattice::is_sublattice_of(const Lattice& other) const {
  for (int i = 0; i < n_; ++i)
    if (!other.contains(basis_row(i))) return false;
  return true;
}

Lattice Lattice::dual() const {
  // rows of the inverse-transpose generate { m : <m, v> ∈ Z for all v ∈ N }
  RatMatrix dual_gens = inv_.transpose();
  return from_generators(dual_gens.row_list());
}

Rat Lattice::covolume() const {
  Rat d = determinant(gens_);
  return d < 0 ? Rat(-d) : d;
}

std::string Lattice::key() const {
  std::ostringstream os;
  for (long i = 0; i < gens_.rows; ++i) {
    if (i) os << ";";
    for (long j = 0; j < gens_.cols; ++j) {
      if (j) os << ",";
      os << to_string(gens_.at(i, j));
    }
  }
  return os.str();
}

FiniteAbelianGroup overlattice_quotient(const Lattice& n, const Lattice& nprime) {
  if (n.dim() != nprime.dim()) throw LatticeMismatch("overlattice of different rank");
  // coordinate matrix of N's generators in N''s basis; integral iff N ⊆ N'
  const int dim = n.dim();
  IntMatrix c(dim, dim);
  for (int i = 0; i < dim; ++i) {
    QVec coords = nprime.coordinates_of(n.basis_row(i));
    for (int j = 0; j < dim; ++j) {
      if (!is_integer(coords[static_cast<size_t>(j)])) throw NotSublattice();
      c.at(i, j) = coords[static_cast<size_t>(j)].get_num();
    }
  }
  SmithResult snf = smith_normal_form(c);
  FiniteAbelianGroup g;
  for (int i = 0; i < dim; ++i)
    if (snf.s.at(i, i) > 1) g.invariant_factors.push_back(snf.s.at(i, i));
  return g;
}

RayPrimitive primitive_on_ray(const QVec& v, const Lattice& n) {
  if (is_zero(v)) throw ZeroVector();
  QVec c = n.coordinates_of(v);
  // {t > 0 : t*c integral} = s * Z>0 with s = lcm(dens) / gcd(nums)
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& x : c) {
    if (x == 0) continue;
    Int nn = x.get_num();
    num_gcd = gcd(num_gcd, nn < 0 ? Int(-nn) : nn);
    den_lcm = lcm(den_lcm, x.get_den());
  }
  Rat s(den_lcm, num_gcd);
  s.canonicalize();
  RayPrimitive out;
  out.generator = scale(s, v);
  Rat ratio = 1 / s;  // v = ratio * generator
  out.in_lattice = is_integer(ratio);
  out.index = out.in_lattice ? ratio.get_num() : Int(0);
  return out;
}

QVec ray_primitive(const QVec& v, const Lattice& n) { return primitive_on_ray(v, n).generator; }

}  // namespace toric
