#include "toric/automorphisms.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace toric {

namespace {

QVec frac_vec(const QVec& v) {
  QVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = frac(v[i]);
  return r;
}

IntMatrix to_basis_matrix(const Lattice& lat, const RatMatrix& ambient) {
  RatMatrix b = mul(mul(lat.generator_matrix(), ambient), lat.inverse_generator_matrix());
  IntMatrix out(b.rows, b.cols);
  for (long i = 0; i < b.rows; ++i)
    for (long j = 0; j < b.cols; ++j) {
      if (!is_integer(b.at(i, j))) throw Error("automorphism is not integral on the lattice");
      out.at(i, j) = b.at(i, j).get_num();
    }
  return out;
}

bool matrix_lex_less(const IntMatrix& a, const IntMatrix& b) { return a.e < b.e; }

std::vector<FanAutomorphism> ray_permutation_group(const Lattice& lat, const std::vector<QVec>& rays,
                                                   const std::vector<std::vector<QVec>>& cone_ray_sets) {
  const int n = lat.dim();
  const size_t k = rays.size();
  if (k > 10) throw Error("too many rays for permutation enumeration");

  // n independent rays determine a candidate automorphism
  std::vector<size_t> pivot;
  {
    std::vector<QVec> rows;
    for (size_t i = 0; i < k && pivot.size() < static_cast<size_t>(n); ++i) {
      rows.push_back(rays[i]);
      if (rank(RatMatrix::from_rows(rows)) == static_cast<long>(rows.size()))
        pivot.push_back(i);
      else
        rows.pop_back();
    }
    if (pivot.size() != static_cast<size_t>(n)) throw DegenerateCone("rays do not span");
  }
  RatMatrix pivot_rows(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) pivot_rows.at(i, j) = rays[pivot[static_cast<size_t>(i)]][static_cast<size_t>(j)];
  RatMatrix pivot_inv = inverse(pivot_rows);

  std::set<ZVec> cone_keys;  // sorted ray index lists are not stable under g; use sorted coordinate keys
  auto ray_set_key = [&](std::vector<QVec> rs) {
    std::sort(rs.begin(), rs.end(), [](const QVec& a, const QVec& b) { return lex_compare(a, b) < 0; });
    ZVec key;
    for (const auto& r : rs) {
      Int d = common_denominator(r);
      key.push_back(d);
      for (const auto& x : r) {
        Rat scaled = x * Rat(d);
        key.push_back(scaled.get_num());
      }
    }
    return key;
  };
  for (const auto& rs : cone_ray_sets) cone_keys.insert(ray_set_key(rs));

  std::vector<FanAutomorphism> group;
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    RatMatrix image(n, n);
    for (int i = 0; i < n; ++i) {
      const QVec& target = rays[static_cast<size_t>(perm[pivot[static_cast<size_t>(i)]])];
      for (int j = 0; j < n; ++j) image.at(i, j) = target[static_cast<size_t>(j)];
    }
    RatMatrix a = mul(pivot_inv, image);
    bool ok = true;
    for (size_t i = 0; i < k && ok; ++i)
      if (mul_row(rays[i], a) != rays[static_cast<size_t>(perm[i])]) ok = false;
    if (!ok) continue;
    IntMatrix b;
    try {
      b = to_basis_matrix(lat, a);
    } catch (const Error&) {
      continue;
    }
    Int det = determinant(b);
    if (det != 1 && det != -1) continue;
    for (const auto& rs : cone_ray_sets) {
      std::vector<QVec> mapped;
      mapped.reserve(rs.size());
      for (const auto& r : rs) mapped.push_back(mul_row(r, a));
      if (!cone_keys.count(ray_set_key(std::move(mapped)))) {
        ok = false;
        break;
      }
    }
    if (ok) group.push_back(FanAutomorphism{lat, std::move(b), std::move(a)});
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::sort(group.begin(), group.end(),
            [](const FanAutomorphism& x, const FanAutomorphism& y) { return matrix_lex_less(x.basis_matrix, y.basis_matrix); });
  return group;
}

}  // namespace

FanAutomorphism FanAutomorphism::identity(const Lattice& lattice) {
  int n = lattice.dim();
  return FanAutomorphism{lattice, IntMatrix::identity(n), RatMatrix::identity(n)};
}

std::vector<FanAutomorphism> fan_automorphisms(const Cone& cone) {
  return ray_permutation_group(cone.lattice(), cone.rays(), {cone.rays()});
}

std::vector<FanAutomorphism> fan_automorphisms(const Fan& fan) {
  std::set<ZVec> seen;
  std::vector<QVec> rays;
  std::vector<std::vector<QVec>> cone_ray_sets;
  for (const auto& c : fan.maximal_cones) {
    cone_ray_sets.push_back(c.rays());
    for (const auto& r : c.rays()) {
      Int d = common_denominator(r);
      ZVec key{d};
      for (const auto& x : r) {
        Rat scaled = x * Rat(d);
        key.push_back(scaled.get_num());
      }
      if (seen.insert(key).second) rays.push_back(r);
    }
  }
  std::sort(rays.begin(), rays.end(), [](const QVec& a, const QVec& b) { return lex_compare(a, b) < 0; });
  return ray_permutation_group(fan.lattice, rays, cone_ray_sets);
}

long element_order(const FanAutomorphism& g) {
  const int n = g.lattice.dim();
  long guard = n <= 6 ? max_order_table(n) : 10000;
  IntMatrix p = g.basis_matrix;
  for (long k = 1; k <= guard; ++k) {
    if (p.is_identity()) return k;
    p = mul(p, g.basis_matrix);
  }
  throw OrderCapExceeded();
}

long max_order_table(int n) {
  // largest m whose cyclotomic degree sum fits in n; frozen desk-scale table
  static constexpr long table[] = {2, 6, 6, 12, 12, 30};
  if (n < 1 || n > 6) throw OutOfRange("order table covers dimensions 1..6");
  return table[n - 1];
}

OuterToricElement compose(const OuterToricElement& a, const OuterToricElement& b) {
  // matrix of the composition "b first, then a" in row convention
  RatMatrix ambient = mul(b.g.ambient_matrix, a.g.ambient_matrix);
  IntMatrix basis = mul(b.g.basis_matrix, a.g.basis_matrix);
  QVec torsion = frac_vec(add(a.torsion, mul_row(b.torsion, RatMatrix(a.g.basis_matrix))));
  return OuterToricElement{FanAutomorphism{a.g.lattice, std::move(basis), std::move(ambient)}, std::move(torsion)};
}

OuterToricElement identity_element(const Lattice& lattice) {
  return OuterToricElement{FanAutomorphism::identity(lattice), QVec(static_cast<size_t>(lattice.dim()), Rat(0))};
}

bool is_identity(const OuterToricElement& e) { return e.g.is_identity() && is_zero(e.torsion); }

bool equal(const OuterToricElement& a, const OuterToricElement& b) {
  return a.g == b.g && a.torsion == b.torsion;
}

OuterToricContext OuterToricContext::closure_of(const Lattice& lattice, const std::vector<IntMatrix>& basis_matrices) {
  const int n = lattice.dim();
  std::vector<IntMatrix> autos{IntMatrix::identity(n)};
  std::map<std::vector<Int>, int> index{{autos[0].e, 0}};
  std::deque<int> queue{0};
  std::vector<IntMatrix> gens = basis_matrices;
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      IntMatrix p = mul(g, autos[static_cast<size_t>(i)]);  // (a_i, .) * (g, .) has fan part g then a_i
      auto [it, fresh] = index.try_emplace(p.e, static_cast<int>(autos.size()));
      if (fresh) {
        autos.push_back(p);
        queue.push_back(static_cast<int>(autos.size()) - 1);
        if (autos.size() > 100000) throw CapExceeded(100000, "fan part closure");
      }
      (void)it;
    }
  }
  std::sort(autos.begin(), autos.end(), matrix_lex_less);
  // identity first for readability of indices
  for (size_t i = 0; i < autos.size(); ++i)
    if (autos[i].is_identity()) {
      std::rotate(autos.begin(), autos.begin() + static_cast<long>(i), autos.begin() + static_cast<long>(i) + 1);
      break;
    }

  OuterToricContext ctx{lattice, {}, {}};
  RatMatrix g_inv = lattice.inverse_generator_matrix();
  for (auto& b : autos) {
    RatMatrix ambient = mul(mul(g_inv, RatMatrix(b)), lattice.generator_matrix());
    ctx.autos.push_back(FanAutomorphism{lattice, std::move(b), std::move(ambient)});
  }
  std::map<std::vector<Int>, int> pos;
  for (size_t i = 0; i < ctx.autos.size(); ++i) pos[ctx.autos[i].basis_matrix.e] = static_cast<int>(i);
  ctx.mul_table.assign(ctx.autos.size(), std::vector<int>(ctx.autos.size(), -1));
  for (size_t i = 0; i < ctx.autos.size(); ++i)
    for (size_t j = 0; j < ctx.autos.size(); ++j) {
      IntMatrix p = mul(ctx.autos[j].basis_matrix, ctx.autos[i].basis_matrix);
      auto it = pos.find(p.e);
      if (it == pos.end()) throw Error("fan part closure is not closed");
      ctx.mul_table[i][j] = it->second;
    }
  return ctx;
}

OuterToricContext OuterToricContext::full(const Cone& cone) {
  std::vector<IntMatrix> mats;
  for (const auto& g : fan_automorphisms(cone)) mats.push_back(g.basis_matrix);
  return closure_of(cone.lattice(), mats);
}

int OuterToricContext::index_of(const IntMatrix& basis_matrix) const {
  for (size_t i = 0; i < autos.size(); ++i)
    if (autos[i].basis_matrix == basis_matrix) return static_cast<int>(i);
  return -1;
}

OuterToricElement OuterToricGroup::element(size_t i) const {
  const auto& [fi, torsion] = elements[i];
  return OuterToricElement{context->autos[static_cast<size_t>(fi)], torsion};
}

long OuterToricGroup::fan_image_size() const {
  std::set<int> im;
  for (const auto& [fi, t] : elements) im.insert(fi);
  return static_cast<long>(im.size());
}

std::vector<QVec> OuterToricGroup::torus_kernel() const {
  std::vector<QVec> out;
  for (const auto& [fi, t] : elements)
    if (fi == 0) out.push_back(t);
  return out;
}

namespace {

// x -> x * B mod d over long coordinates (torsion scaled by d)
void apply_basis_mod(const std::vector<std::vector<long>>& b, const std::vector<long>& x, long d,
                     std::vector<long>& out) {
  const size_t n = x.size();
  for (size_t j = 0; j < n; ++j) {
    long acc = 0;
    for (size_t k = 0; k < n; ++k) acc += (x[k] * (b[k][j] % d)) % d;
    acc %= d;
    if (acc < 0) acc += d;
    out[j] = acc;
  }
}

OuterToricGroup closure_packed(std::shared_ptr<const OuterToricContext> ctx,
                               const std::vector<std::pair<int, QVec>>& gens, long cap, long d) {
  const size_t n = static_cast<size_t>(ctx->lattice.dim());
  const size_t num_autos = ctx->autos.size();
  std::vector<std::vector<std::vector<long>>> basis_long(num_autos);
  for (size_t a = 0; a < num_autos; ++a) {
    basis_long[a].assign(n, std::vector<long>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        basis_long[a][i][j] = static_cast<long>(ctx->autos[a].basis_matrix.at(static_cast<long>(i), static_cast<long>(j)).get_si());
  }
  struct PackedGen {
    int fan;
    std::vector<long> coords;
  };
  std::vector<PackedGen> pgens;
  for (const auto& [fi, t] : gens) {
    PackedGen pg{fi, std::vector<long>(n)};
    for (size_t i = 0; i < n; ++i) {
      Rat scaled = t[i] * Rat(d);
      pg.coords[i] = static_cast<long>(scaled.get_num().get_si()) % d;
      if (pg.coords[i] < 0) pg.coords[i] += d;
    }
    pgens.push_back(std::move(pg));
  }

  auto pack = [&](int fan, const std::vector<long>& c) {
    uint64_t key = static_cast<uint64_t>(fan);
    for (size_t i = 0; i < n; ++i) key = key * static_cast<uint64_t>(d) + static_cast<uint64_t>(c[i]);
    return key;
  };

  std::unordered_set<uint64_t> seen;
  std::vector<std::pair<int, std::vector<long>>> elems;
  std::deque<size_t> queue;
  elems.emplace_back(0, std::vector<long>(n, 0));
  seen.insert(pack(0, elems[0].second));
  queue.push_back(0);
  std::vector<long> tmp(n), composed(n);
  while (!queue.empty()) {
    size_t i = queue.front();
    queue.pop_front();
    const int fan_s = elems[i].first;
    const std::vector<long> coords_s = elems[i].second;  // copy: elems may reallocate
    for (const auto& pg : pgens) {
      // (g_s, t_s) * (g_p, t_p) = (g_s g_p, t_s + g_s t_p)
      apply_basis_mod(basis_long[static_cast<size_t>(fan_s)], pg.coords, d, tmp);
      for (size_t k = 0; k < n; ++k) {
        composed[k] = coords_s[k] + tmp[k];
        if (composed[k] >= d) composed[k] -= d;
      }
      int fan_new = ctx->mul_table[static_cast<size_t>(fan_s)][static_cast<size_t>(pg.fan)];
      uint64_t key = pack(fan_new, composed);
      if (seen.insert(key).second) {
        elems.emplace_back(fan_new, composed);
        if (static_cast<long>(elems.size()) > cap) throw CapExceeded(cap, "group closure");
        queue.push_back(elems.size() - 1);
      }
    }
  }

  // sort on integer keys first: fan parts by matrix order, coordinates as
  // numerators over the common denominator (lexicographic order agrees)
  std::vector<int> fan_rank(num_autos);
  {
    std::vector<int> order(num_autos);
    for (size_t a = 0; a < num_autos; ++a) order[a] = static_cast<int>(a);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      return matrix_lex_less(ctx->autos[static_cast<size_t>(x)].basis_matrix,
                             ctx->autos[static_cast<size_t>(y)].basis_matrix);
    });
    for (size_t a = 0; a < num_autos; ++a) fan_rank[static_cast<size_t>(order[a])] = static_cast<int>(a);
  }
  std::sort(elems.begin(), elems.end(), [&](const auto& x, const auto& y) {
    if (x.first != y.first) return fan_rank[static_cast<size_t>(x.first)] < fan_rank[static_cast<size_t>(y.first)];
    return x.second < y.second;
  });

  OuterToricGroup g;
  g.context = std::move(ctx);
  g.generators = gens;
  g.elements.reserve(elems.size());
  for (const auto& [fi, c] : elems) {
    QVec t(n);
    for (size_t i = 0; i < n; ++i) {
      t[i] = Rat(c[i], d);
      t[i].canonicalize();
    }
    g.elements.emplace_back(fi, std::move(t));
  }
  return g;
}

OuterToricGroup closure_general(std::shared_ptr<const OuterToricContext> ctx,
                                const std::vector<std::pair<int, QVec>>& gens, long cap) {
  std::map<std::pair<int, QVec>, size_t> seen;
  std::vector<std::pair<int, QVec>> elems;
  std::deque<size_t> queue;
  const size_t n = static_cast<size_t>(ctx->lattice.dim());
  elems.emplace_back(0, QVec(n, Rat(0)));
  seen[elems[0]] = 0;
  queue.push_back(0);
  while (!queue.empty()) {
    size_t i = queue.front();
    queue.pop_front();
    const auto [fan_s, coords_s] = elems[i];
    for (const auto& [fan_p, coords_p] : gens) {
      QVec t = frac_vec(add(coords_s, mul_row(coords_p, RatMatrix(ctx->autos[static_cast<size_t>(fan_s)].basis_matrix))));
      std::pair<int, QVec> cand{ctx->mul_table[static_cast<size_t>(fan_s)][static_cast<size_t>(fan_p)], std::move(t)};
      if (seen.try_emplace(cand, elems.size()).second) {
        elems.push_back(cand);
        if (static_cast<long>(elems.size()) > cap) throw CapExceeded(cap, "group closure");
        queue.push_back(elems.size() - 1);
      }
    }
  }
  OuterToricGroup g;
  g.context = std::move(ctx);
  g.generators = gens;
  g.elements = std::move(elems);
  std::sort(g.elements.begin(), g.elements.end(), [&](const auto& x, const auto& y) {
    if (x.first != y.first)
      return matrix_lex_less(g.context->autos[static_cast<size_t>(x.first)].basis_matrix,
                             g.context->autos[static_cast<size_t>(y.first)].basis_matrix);
    return lex_compare(x.second, y.second) < 0;
  });
  return g;
}

}  // namespace

namespace detail {
bool force_general_closure = false;
}

OuterToricGroup group_closure(std::shared_ptr<const OuterToricContext> context,
                              const std::vector<std::pair<int, QVec>>& generators, long cap) {
  Int denom = 1;
  bool small = !detail::force_general_closure;
  for (const auto& [fi, t] : generators) {
    if (fi < 0 || fi >= static_cast<int>(context->autos.size())) throw OutOfRange("fan index outside context");
    denom = lcm(denom, common_denominator(t));
  }
  if (!denom.fits_slong_p() || denom.get_si() > 1000000) small = false;
  for (const auto& a : context->autos)
    for (const auto& x : a.basis_matrix.e)
      if (!x.fits_slong_p() || x > 1000 || x < -1000) small = false;
  if (small) {
    long d = denom.get_si();
    double states = static_cast<double>(context->autos.size());
    for (int i = 0; i < context->lattice.dim(); ++i) states *= static_cast<double>(d);
    if (states < 9e15)  // packed keys stay within uint64
      return closure_packed(context, generators, cap, d);
  }
  return closure_general(context, generators, cap);
}

OuterToricGroup group_closure(const Lattice& lat, const std::vector<OuterToricElement>& generators, long cap) {
  std::vector<IntMatrix> mats;
  for (const auto& e : generators) {
    if (!(e.g.lattice == lat)) throw LatticeMismatch("generators live over different lattices");
    mats.push_back(e.g.basis_matrix);
  }
  auto ctx = std::make_shared<OuterToricContext>(OuterToricContext::closure_of(lat, mats));
  std::vector<std::pair<int, QVec>> gens;
  for (const auto& e : generators) {
    int fi = ctx->index_of(e.g.basis_matrix);
    if (fi < 0) throw Error("generator fan part missing from its own closure");
    gens.emplace_back(fi, frac_vec(e.torsion));
  }
  return group_closure(std::move(ctx), gens, cap);
}

JordanReport jordan_report(const OuterToricGroup& g) {
  const Lattice& lat = g.context->lattice;
  const int n = lat.dim();
  std::vector<QVec> kernel = g.torus_kernel();

  // grow the overlattice only on kernel points not already inside it; the
  // index multiplies with every insertion, so insertions are logarithmic
  Lattice enlarged = lat;
  for (const auto& t : kernel) {
    if (is_zero(t)) continue;
    QVec ambient = lat.from_coordinates(t);
    if (enlarged.contains(ambient)) continue;
    std::vector<QVec> gens = enlarged.generator_matrix().row_list();
    gens.push_back(std::move(ambient));
    enlarged = Lattice::from_generators(gens);
  }
  FiniteAbelianGroup fab = overlattice_quotient(lat, enlarged);

  JordanReport rep;
  rep.a_order = fab.order();
  rep.a_invariant_factors = fab.invariant_factors;
  rep.rank = fab.rank();
  if (rep.a_order != static_cast<long>(kernel.size()))
    throw VerificationFailure("torus kernel does not match its overlattice");
  if (g.size() % kernel.size() != 0) throw VerificationFailure("kernel order does not divide the group order");
  rep.index = Int(g.size()) / Int(static_cast<long>(kernel.size()));
  if (rep.rank > n) throw VerificationFailure("kernel rank exceeds the dimension");
  if (rep.index > static_cast<long>(g.context->autos.size()))
    throw VerificationFailure("fan image larger than the fan automorphism group");
  return rep;
}

QVec fixing_subtorus(const Cone& cone, const QVec& v) {
  if (!cone.relint_contains(v)) throw NotInterior();
  RayPrimitive p = primitive_on_ray(v, cone.lattice());
  if (!p.in_lattice || p.index != 1) throw NotPrimitive();
  return v;
}

bool torsion_fixes_exceptional(const QVec& t, const QVec& v, const Lattice& n) {
  QVec coords = n.coordinates_of(t);
  Int s = common_denominator(coords);  // order of t modulo N
  for (Int j = 0; j < s; ++j) {
    Rat lambda(j, s);
    lambda.canonicalize();
    if (n.contains(sub(t, scale(lambda, v)))) return true;
  }
  return false;
}

}  // namespace toric
