#include "toric/toric_pair.hpp"

#include <algorithm>

namespace toric {

std::optional<QVec> functional_for(const Cone& cone, const QVec& coefficients) {
  const int n = cone.dim();
  const auto& rays = cone.rays();
  if (coefficients.size() != rays.size()) throw InvalidBoundary("one coefficient per ray required");

  // gaussian elimination on the k x (n+1) system rays * m^T = 1 - b
  long k = static_cast<long>(rays.size());
  RatMatrix a(k, n + 1);
  for (long i = 0; i < k; ++i) {
    for (int j = 0; j < n; ++j) a.at(i, j) = rays[static_cast<size_t>(i)][static_cast<size_t>(j)];
    a.at(i, n) = 1 - coefficients[static_cast<size_t>(i)];
  }
  long r = 0;
  std::vector<long> pivot_col;
  for (long c = 0; c < n && r < k; ++c) {
    long p = -1;
    for (long i = r; i < k; ++i)
      if (a.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (long j = 0; j <= n; ++j) std::swap(a.at(r, j), a.at(p, j));
    Rat inv = 1 / a.at(r, c);
    for (long j = 0; j <= n; ++j) a.at(r, j) *= inv;
    for (long i = 0; i < k; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Rat f = a.at(i, c);
      for (long j = 0; j <= n; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (long i = r; i < k; ++i)
    if (a.at(i, n) != 0) return std::nullopt;  // inconsistent
  if (r < n) return std::nullopt;              // cannot happen for full-dimensional cones

  QVec m(static_cast<size_t>(n), Rat(0));
  for (long i = 0; i < r; ++i) m[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] = a.at(i, n);
  return m;
}

ToricPair::ToricPair(Cone cone, QVec boundary) : cone_(std::move(cone)), boundary_(std::move(boundary)) {
  if (boundary_.size() != cone_.rays().size()) throw InvalidBoundary("one coefficient per ray required");
  for (const auto& b : boundary_)
    if (b < 0 || b >= 1) throw InvalidBoundary("coefficients must lie in [0, 1)");
}

ToricPair::ToricPair(Cone cone) : cone_(std::move(cone)), boundary_(cone_.rays().size(), Rat(0)) {}

const QVec& ToricPair::logdisc_functional() const {
  if (!functional_) {
    auto m = functional_for(cone_, boundary_);
    if (!m) throw NotQGorenstein();
    functional_ = std::move(*m);
  }
  return *functional_;
}

bool ToricPair::is_klt() const {
  // boundary coefficients are below one by construction, so klt reduces to
  // the existence of the functional
  try {
    logdisc_functional();
    return true;
  } catch (const NotQGorenstein&) {
    return false;
  }
}

Rat ToricPair::log_discrepancy(const QVec& v) const {
  if (is_zero(v) || !cone_.contains(v) || !lattice().contains(v)) throw NotInCone();
  return dot(logdisc_functional(), v);
}

ToricPair::Mld ToricPair::mld() const {
  if (!is_klt()) throw NotKlt();
  const QVec& m = logdisc_functional();
  // the sum of the primitive ray generators is interior, so the slice below
  // its value contains a minimizer and is finite
  Rat c0 = dot(m, cone_.ray_sum());
  bool found = false;
  Int best_value;
  QVec best_point;
  const Lattice& lat = lattice();
  Int scale = slice_scan(cone_, m, c0, /*interior_only=*/true, [&](const ZVec& coords, const Int& scaled) {
    if (found && scaled > best_value) return;
    QVec q(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) q[i] = Rat(coords[i]);
    QVec v = lat.from_coordinates(q);
    if (!found || scaled < best_value || lex_compare(v, best_point) < 0) {
      found = true;
      best_value = scaled;
      best_point = std::move(v);
    }
  });
  if (!found) throw Error("empty mld slice");  // cannot happen
  Rat value(best_value, scale);
  value.canonicalize();
  return Mld{value, best_point};
}

Int ToricPair::cartier_index() const {
  const QVec& m = logdisc_functional();
  Int l = 1;
  for (int i = 0; i < lattice().dim(); ++i) l = lcm(l, dot(m, lattice().basis_row(i)).get_den());
  return l;
}

ClassGroupPresentation class_group(const Cone& cone) {
  const int n = cone.dim();
  const long k = static_cast<long>(cone.rays().size());
  const Lattice m_lattice = cone.lattice().dual();

  IntMatrix a(k, n);
  for (long i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) {
      Rat p = dot(m_lattice.basis_row(j), cone.rays()[static_cast<size_t>(i)]);
      a.at(i, j) = p.get_num();  // integral: rays lie in N, rows in its dual
    }
  SmithResult snf = smith_normal_form(a);

  ClassGroupPresentation out;
  out.variables = k;
  out.free_rank = k - n;
  std::vector<long> torsion_rows;
  for (int i = 0; i < n; ++i)
    if (snf.s.at(i, i) > 1) {
      out.torsion.push_back(snf.s.at(i, i));
      torsion_rows.push_back(i);
    }
  for (long var = 0; var < k; ++var) {
    ClassGroupPresentation::Grading g;
    for (long i = n; i < k; ++i) g.free.push_back(snf.u.at(i, var));
    for (size_t t = 0; t < torsion_rows.size(); ++t) {
      Int d = out.torsion[t];
      Int x = snf.u.at(torsion_rows[t], var) % d;
      if (x < 0) x += d;
      g.torsion.push_back(x);
    }
    out.gradings.push_back(std::move(g));
  }
  return out;
}

}  // namespace toric
