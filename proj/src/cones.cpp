#include "toric/cones.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>

namespace toric {

namespace {

// Primitive integer vector in the direction of v (sign preserved).
ZVec integer_direction(const QVec& v) {
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

QVec to_qvec(const ZVec& v) {
  QVec q(v.size());
  for (size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
  return q;
}

Int zdot(const ZVec& a, const ZVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

std::vector<QVec> dd_extreme_rays(const std::vector<QVec>& inequalities, int n) {
  // normalize and dedupe the inequality rows
  std::vector<ZVec> ineq;
  {
    std::set<ZVec> seen;
    for (const auto& a : inequalities) {
      if (is_zero(a)) continue;
      ZVec z = integer_direction(a);
      if (seen.insert(z).second) ineq.push_back(z);
    }
  }
  const size_t m = ineq.size();
  if (m > 64) throw Error("too many inequalities for this desk-scale build");

  // greedy choice of n independent rows for the simplicial seed
  std::vector<size_t> seed;
  {
    std::vector<QVec> rows;
    for (size_t i = 0; i < m && seed.size() < static_cast<size_t>(n); ++i) {
      rows.push_back(to_qvec(ineq[i]));
      if (rank(RatMatrix::from_rows(rows)) == static_cast<long>(rows.size()))
        seed.push_back(i);
      else
        rows.pop_back();
    }
    if (seed.size() != static_cast<size_t>(n)) throw DegenerateCone("inequality rows do not span");
  }

  // seed rays: columns of the inverse of the seed row matrix
  std::vector<ZVec> rays;
  {
    RatMatrix s(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s.at(i, j) = Rat(ineq[seed[static_cast<size_t>(i)]][static_cast<size_t>(j)]);
    RatMatrix inv = inverse(s);
    for (int j = 0; j < n; ++j) {
      QVec col(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) col[static_cast<size_t>(i)] = inv.at(i, j);
      rays.push_back(integer_direction(col));
    }
  }

  std::vector<char> processed(m, 0);
  for (size_t i : seed) processed[i] = 1;

  auto zero_mask = [&](const ZVec& r) {
    uint64_t z = 0;
    for (size_t i = 0; i < m; ++i)
      if (processed[i] && zdot(ineq[i], r) == 0) z |= (uint64_t{1} << i);
    return z;
  };

  for (size_t q = 0; q < m; ++q) {
    if (processed[q]) continue;
    std::vector<Int> val(rays.size());
    for (size_t i = 0; i < rays.size(); ++i) val[i] = zdot(ineq[q], rays[i]);
    bool any_neg = false;
    for (const auto& v : val)
      if (v < 0) any_neg = true;
    processed[q] = 1;
    if (!any_neg) continue;

    std::vector<uint64_t> masks(rays.size());
    for (size_t i = 0; i < rays.size(); ++i) masks[i] = zero_mask(rays[i]);

    std::vector<ZVec> next;
    for (size_t i = 0; i < rays.size(); ++i)
      if (val[i] >= 0) next.push_back(rays[i]);

    for (size_t p = 0; p < rays.size(); ++p) {
      if (val[p] <= 0) continue;
      for (size_t g = 0; g < rays.size(); ++g) {
        if (val[g] >= 0) continue;
        // combinatorial adjacency: no third ray's zero set contains the common one
        uint64_t common = masks[p] & masks[g];
        bool adjacent = true;
        for (size_t w = 0; w < rays.size(); ++w) {
          if (w == p || w == g) continue;
          if ((common & ~masks[w]) == 0) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        ZVec fresh(rays[p].size());
        for (size_t k = 0; k < fresh.size(); ++k) fresh[k] = val[p] * rays[g][k] - val[g] * rays[p][k];
        next.push_back(integer_direction(to_qvec(fresh)));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    rays = std::move(next);
  }

  std::vector<QVec> out;
  out.reserve(rays.size());
  std::sort(rays.begin(), rays.end());
  for (const auto& r : rays) out.push_back(to_qvec(r));
  return out;
}

Cone Cone::from_rays(const Lattice& lattice, const std::vector<QVec>& generators) {
  const int n = lattice.dim();
  std::vector<QVec> dirs;
  {
    std::set<ZVec> seen;
    for (const auto& g : generators) {
      if (static_cast<int>(g.size()) != n) throw Error("generator dimension mismatch");
      if (is_zero(g)) continue;
      ZVec z = integer_direction(g);
      if (seen.insert(z).second) dirs.push_back(to_qvec(z));
    }
  }
  if (dirs.empty() || rank(RatMatrix::from_rows(dirs)) < n) throw DegenerateCone("cone is not full-dimensional");

  std::vector<QVec> normal_dirs, ray_dirs;
  if (dirs.size() == static_cast<size_t>(n)) {
    // simplicial: normals are the columns of the inverse ray matrix
    RatMatrix inv = inverse(RatMatrix::from_rows(dirs));
    for (int j = 0; j < n; ++j) {
      QVec col(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) col[static_cast<size_t>(i)] = inv.at(i, j);
      normal_dirs.push_back(col);
    }
    ray_dirs = dirs;
  } else {
    normal_dirs = dd_extreme_rays(dirs, n);
    if (normal_dirs.empty() || rank(RatMatrix::from_rows(normal_dirs)) < n)
      throw DegenerateCone("cone is not pointed");
    ray_dirs = dd_extreme_rays(normal_dirs, n);
  }

  Lattice dual = lattice.dual();
  std::vector<QVec> rays, normals;
  rays.reserve(ray_dirs.size());
  normals.reserve(normal_dirs.size());
  for (const auto& r : ray_dirs) rays.push_back(ray_primitive(r, lattice));
  for (const auto& u : normal_dirs) normals.push_back(ray_primitive(u, dual));
  auto lex = [](const QVec& a, const QVec& b) { return lex_compare(a, b) < 0; };
  std::sort(rays.begin(), rays.end(), lex);
  std::sort(normals.begin(), normals.end(), lex);
  return Cone(lattice, std::move(dual), std::move(rays), std::move(normals));
}

bool Cone::contains(const QVec& v) const {
  for (const auto& u : normals_)
    if (dot(u, v) < 0) return false;
  return true;
}

bool Cone::relint_contains(const QVec& v) const {
  for (const auto& u : normals_)
    if (dot(u, v) <= 0) return false;
  return true;
}

std::vector<int> Cone::facet(int k) const {
  std::vector<int> idx;
  for (size_t i = 0; i < rays_.size(); ++i)
    if (dot(normals_[static_cast<size_t>(k)], rays_[i]) == 0) idx.push_back(static_cast<int>(i));
  return idx;
}

QVec Cone::ray_sum() const {
  QVec s(static_cast<size_t>(dim()), Rat(0));
  for (const auto& r : rays_) s = add(s, r);
  return s;
}

Cone dual_cone(const Cone& c) {
  // generators of the dual are the facet normals; facet normals of the dual
  // are the rays, both already primitive in the right lattices
  return Cone(c.dual_, c.lattice_, c.normals_, c.rays_);
}

namespace {

// integer inequality row over basis coordinates: coeff . x + constant >= 0
struct IntIneq {
  ZVec coeff;
  Int constant;
};

IntIneq normalize_ineq(const IntIneq& q) {
  Int g = q.constant < 0 ? Int(-q.constant) : q.constant;
  for (const auto& x : q.coeff) g = gcd(g, x < 0 ? Int(-x) : x);
  if (g <= 1) return q;
  IntIneq out = q;
  for (auto& x : out.coeff) x /= g;
  out.constant /= g;
  return out;
}

bool ineq_less(const IntIneq& a, const IntIneq& b) {
  if (a.coeff != b.coeff) return a.coeff < b.coeff;
  return a.constant < b.constant;
}

// Fourier-Motzkin elimination of variable `var`, exact over Z.
std::vector<IntIneq> fm_eliminate(const std::vector<IntIneq>& sys, size_t var) {
  std::vector<IntIneq> out;
  std::set<std::pair<ZVec, Int>> seen;
  auto push = [&](IntIneq q) {
    bool zero = q.constant >= 0;
    for (const auto& x : q.coeff)
      if (x != 0) zero = false;
    if (zero) return;  // trivially true
    IntIneq norm = normalize_ineq(q);
    if (seen.emplace(norm.coeff, norm.constant).second) out.push_back(std::move(norm));
  };
  std::vector<const IntIneq*> pos, neg;
  for (const auto& q : sys) {
    if (q.coeff[var] > 0)
      pos.push_back(&q);
    else if (q.coeff[var] < 0)
      neg.push_back(&q);
    else
      push(q);
  }
  for (const auto* p : pos)
    for (const auto* g : neg) {
      const Int& a = p->coeff[var];
      Int b = -g->coeff[var];
      IntIneq q;
      q.coeff.resize(p->coeff.size());
      for (size_t i = 0; i < q.coeff.size(); ++i) q.coeff[i] = a * g->coeff[i] + b * p->coeff[i];
      q.constant = a * g->constant + b * p->constant;
      push(std::move(q));
    }
  std::sort(out.begin(), out.end(), ineq_less);
  return out;
}

}  // namespace

Int slice_scan(const Cone& cone, const QVec& m, const Rat& c, bool interior_only,
               const std::function<void(const ZVec& coords, const Int& scaled_value)>& sink) {
  const int n = cone.dim();
  for (const auto& r : cone.rays())
    if (dot(m, r) <= 0) throw UnboundedSlice();

  const Lattice& lat = cone.lattice();
  // the value functional in basis coordinates: <m, v> = (w . x) / scale
  QVec w(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) w[static_cast<size_t>(j)] = dot(lat.basis_row(j), m);
  Int scale = common_denominator(w);
  ZVec value_row(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    Rat scaled = w[static_cast<size_t>(j)] * Rat(scale);
    value_row[static_cast<size_t>(j)] = scaled.get_num();
  }
  if (c <= 0) return scale;

  // integer inequality system over x (v = x * G): facets and the value cap
  std::vector<IntIneq> full;
  std::vector<size_t> facet_rows;
  for (const auto& u : cone.facet_normals()) {
    QVec row(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) row[static_cast<size_t>(j)] = dot(lat.basis_row(j), u);
    IntIneq q{integer_direction(row), Int(0)};
    facet_rows.push_back(full.size());
    full.push_back(std::move(q));
  }
  {
    IntIneq q;  // (w . x) / scale <= c
    Rat cap = c * Rat(scale);
    Int cden = cap.get_den();
    q.coeff.resize(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) q.coeff[static_cast<size_t>(j)] = -value_row[static_cast<size_t>(j)] * cden;
    q.constant = cap.get_num();
    full.push_back(normalize_ineq(q));
  }

  // project away x_n, ..., x_2: levels[j] constrains x_0..x_j
  std::vector<std::vector<IntIneq>> levels(static_cast<size_t>(n));
  levels[static_cast<size_t>(n - 1)] = full;
  for (int j = n - 1; j > 0; --j)
    levels[static_cast<size_t>(j - 1)] = fm_eliminate(levels[static_cast<size_t>(j)], static_cast<size_t>(j));

  ZVec x(static_cast<size_t>(n), Int(0));
  Int rest, lo, hi, bound;
  std::function<void(int)> descend = [&](int level) {
    bool has_lo = false, has_hi = false;
    for (const auto& q : levels[static_cast<size_t>(level)]) {
      const Int& a = q.coeff[static_cast<size_t>(level)];
      if (a == 0) continue;
      rest = q.constant;
      for (int i = 0; i < level; ++i) rest += q.coeff[static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
      if (a > 0) {
        // x_level >= ceil(-rest / a)
        mpz_cdiv_q(bound.get_mpz_t(), Int(-rest).get_mpz_t(), a.get_mpz_t());
        if (!has_lo || bound > lo) lo = bound;
        has_lo = true;
      } else {
        // x_level <= floor(rest / -a)
        mpz_fdiv_q(bound.get_mpz_t(), rest.get_mpz_t(), Int(-a).get_mpz_t());
        if (!has_hi || bound < hi) hi = bound;
        has_hi = true;
      }
    }
    if (!has_lo || !has_hi) throw UnboundedSlice("interval unbounded during slice enumeration");
    for (Int k = lo, top = hi; k <= top; ++k) {
      x[static_cast<size_t>(level)] = k;
      if (level + 1 < n) {
        descend(level + 1);
      } else {
        bool zero = true;
        for (const auto& xi : x)
          if (xi != 0) zero = false;
        if (zero) continue;
        if (interior_only) {
          bool inside = true;
          for (size_t fr : facet_rows) {
            Int pairing = 0;
            for (int i = 0; i < n; ++i) pairing += levels[static_cast<size_t>(n - 1)][fr].coeff[static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
            if (pairing <= 0) {
              inside = false;
              break;
            }
          }
          if (!inside) continue;
        }
        Int value = 0;
        for (int i = 0; i < n; ++i) value += value_row[static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
        if (value == 0) continue;  // lies on the boundary of the pointed cone only at 0
        sink(x, value);
      }
    }
  };
  descend(0);
  return scale;
}

std::vector<QVec> slice_lattice_points(const Cone& cone, const QVec& m, const Rat& c, bool interior_only) {
  const Lattice& lat = cone.lattice();
  std::vector<std::pair<Int, QVec>> found;
  slice_scan(cone, m, c, interior_only, [&](const ZVec& coords, const Int& scaled) {
    QVec q(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) q[i] = Rat(coords[i]);
    found.emplace_back(scaled, lat.from_coordinates(q));
  });
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return lex_compare(a.second, b.second) < 0;
  });
  std::vector<QVec> points;
  points.reserve(found.size());
  for (auto& [val, v] : found) points.push_back(std::move(v));
  return points;
}

std::vector<QVec> hilbert_basis(const Cone& cone, long cap) {
  QVec grading(static_cast<size_t>(cone.dim()), Rat(0));
  for (const auto& u : cone.facet_normals()) grading = add(grading, u);
  Rat bound = dot(grading, cone.ray_sum());

  std::vector<QVec> cand = slice_lattice_points(cone, grading, bound);
  if (static_cast<long>(cand.size()) > cap) throw CapExceeded(cap, "hilbert basis candidate slice too large");

  std::vector<Rat> deg(cand.size());
  for (size_t i = 0; i < cand.size(); ++i) deg[i] = dot(grading, cand[i]);

  std::vector<QVec> basis;
  for (size_t i = 0; i < cand.size(); ++i) {
    bool reducible = false;
    for (size_t j = 0; j < i && deg[j] < deg[i]; ++j) {
      if (cone.contains(sub(cand[i], cand[j]))) {  // difference is in N automatically
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(cand[i]);
  }
  return basis;
}

bool Fan::is_valid() const {
  const int n = lattice.dim();
  for (size_t a = 0; a < maximal_cones.size(); ++a)
    for (size_t b = a + 1; b < maximal_cones.size(); ++b) {
      const Cone& ca = maximal_cones[a];
      const Cone& cb = maximal_cones[b];
      std::vector<QVec> ineqs = ca.facet_normals();
      for (const auto& u : cb.facet_normals()) ineqs.push_back(u);
      std::vector<QVec> inter = dd_extreme_rays(ineqs, n);
      for (const Cone* side : {&ca, &cb}) {
        // smallest face of `side` containing the intersection
        std::vector<int> tight;
        for (size_t k = 0; k < side->facet_normals().size(); ++k) {
          bool vanishes = true;
          for (const auto& r : inter)
            if (dot(side->facet_normals()[k], r) != 0) {
              vanishes = false;
              break;
            }
          if (vanishes) tight.push_back(static_cast<int>(k));
        }
        for (const auto& ray : side->rays()) {
          bool in_face = true;
          for (int k : tight)
            if (dot(side->facet_normals()[static_cast<size_t>(k)], ray) != 0) {
              in_face = false;
              break;
            }
          if (in_face && !(ca.contains(ray) && cb.contains(ray))) return false;
        }
      }
    }
  return true;
}

Fan star_subdivision(const Cone& cone, const QVec& v) {
  if (!cone.relint_contains(v)) throw NotInterior();
  RayPrimitive p = primitive_on_ray(v, cone.lattice());
  if (!p.in_lattice || p.index != 1) throw NotPrimitive();

  Fan fan{cone.lattice(), {}};
  for (size_t k = 0; k < cone.facet_normals().size(); ++k) {
    std::vector<QVec> gens;
    for (int i : cone.facet(static_cast<int>(k))) gens.push_back(cone.rays()[static_cast<size_t>(i)]);
    gens.push_back(v);
    fan.maximal_cones.push_back(Cone::from_rays(cone.lattice(), gens));
  }
  return fan;
}

}  // namespace toric
