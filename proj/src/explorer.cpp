#include "toric/explorer.hpp"

#include <algorithm>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace toric {

Window Window::parse(const std::string& s) {
  if (s.empty()) throw ParseError("empty window");
  Window w;
  std::string body = s;
  if (body.front() == '[' || body.front() == '(') {
    w.lo_closed = body.front() == '[';
    body.erase(body.begin());
  }
  if (!body.empty() && (body.back() == ']' || body.back() == ')')) {
    w.hi_closed = body.back() == ']';
    body.pop_back();
  }
  auto colon = body.find(':');
  if (colon == std::string::npos) throw ParseError("window needs 'lo:hi'");
  std::string lo = body.substr(0, colon), hi = body.substr(colon + 1);
  w.lo = lo.empty() ? Rat(0) : parse_rational(lo);
  if (!hi.empty() && hi != "inf") w.hi = parse_rational(hi);
  if (w.hi && (*w.hi < w.lo || (*w.hi == w.lo && !(w.lo_closed && w.hi_closed))))
    throw ParseError("empty window '" + s + "'");
  return w;
}

std::string Window::str() const {
  std::string s;
  s += lo_closed ? '[' : '(';
  s += to_string(lo);
  s += ':';
  s += hi ? to_string(*hi) : std::string("inf");
  s += hi_closed ? ']' : ')';
  return s;
}

namespace {

long gcd_long(long a, long b) {
  while (b) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

// reduced p/q serialization matching to_string(Rat)
void append_fraction(std::string& s, long p, long q) {
  long g = gcd_long(p, q);
  if (g > 1) {
    p /= g;
    q /= g;
  }
  s += std::to_string(p);
  if (q != 1 && p != 0) {
    s += '/';
    s += std::to_string(q);
  }
}

}  // namespace

// Row Hermite form of [r*I; weights] over int64 (entries stay below r^2),
// serialized as the canonical generator matrix divided by r.
std::string overlattice_key(long r, const std::vector<long>& weights) {
  const int n = static_cast<int>(weights.size());
  std::vector<std::vector<long>> rows(static_cast<size_t>(n + 1), std::vector<long>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) rows[static_cast<size_t>(i)][static_cast<size_t>(i)] = r;
  for (int j = 0; j < n; ++j) {
    long w = weights[static_cast<size_t>(j)] % r;
    if (w < 0) w += r;
    rows[static_cast<size_t>(n)][static_cast<size_t>(j)] = w;
  }
  int top = 0;
  for (int c = 0; c < n && top <= n; ++c) {
    for (;;) {
      int p = -1;
      long best = 0;
      for (int i = top; i <= n; ++i) {
        long v = rows[static_cast<size_t>(i)][static_cast<size_t>(c)];
        if (v < 0) v = -v;
        if (v != 0 && (p < 0 || v < best)) {
          best = v;
          p = i;
        }
      }
      if (p < 0) break;
      std::swap(rows[static_cast<size_t>(top)], rows[static_cast<size_t>(p)]);
      bool clear = true;
      for (int i = top + 1; i <= n; ++i) {
        long v = rows[static_cast<size_t>(i)][static_cast<size_t>(c)];
        if (v == 0) continue;
        long q = v / rows[static_cast<size_t>(top)][static_cast<size_t>(c)];
        if (v % rows[static_cast<size_t>(top)][static_cast<size_t>(c)] < 0) --q;  // floor
        for (int j = 0; j < n; ++j)
          rows[static_cast<size_t>(i)][static_cast<size_t>(j)] -= q * rows[static_cast<size_t>(top)][static_cast<size_t>(j)];
        if (rows[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) clear = false;
      }
      if (clear) break;
    }
    if (rows[static_cast<size_t>(top)][static_cast<size_t>(c)] == 0) continue;
    if (rows[static_cast<size_t>(top)][static_cast<size_t>(c)] < 0)
      for (int j = 0; j < n; ++j) rows[static_cast<size_t>(top)][static_cast<size_t>(j)] = -rows[static_cast<size_t>(top)][static_cast<size_t>(j)];
    for (int i = 0; i < top; ++i) {
      long v = rows[static_cast<size_t>(i)][static_cast<size_t>(c)];
      long piv = rows[static_cast<size_t>(top)][static_cast<size_t>(c)];
      long q = v / piv;
      if (v % piv < 0) --q;
      if (q != 0)
        for (int j = 0; j < n; ++j)
          rows[static_cast<size_t>(i)][static_cast<size_t>(j)] -= q * rows[static_cast<size_t>(top)][static_cast<size_t>(j)];
    }
    ++top;
  }

  std::string key;
  key.reserve(24);
  for (int i = 0; i < n; ++i) {
    if (i) key += ';';
    for (int j = 0; j < n; ++j) {
      if (j) key += ',';
      append_fraction(key, rows[static_cast<size_t>(i)][static_cast<size_t>(j)], r);
    }
  }
  return key;
}

namespace {

struct Candidate {
  long r;
  std::vector<long> weights;
  std::string key;
};

// lexicographic odometer over [0, r)^n
bool next_tuple(std::vector<long>& w, long r) {
  for (size_t i = w.size(); i-- > 0;) {
    if (++w[i] < r) return true;
    w[i] = 0;
  }
  return false;
}

std::vector<Candidate> candidates_for_r(int dim, long r, bool dedupe) {
  std::vector<Candidate> out;
  std::set<std::string> local;
  std::vector<long> w(static_cast<size_t>(dim), 0);
  do {
    std::string key = overlattice_key(r, w);
    if (dedupe && !local.insert(key).second) continue;
    out.push_back(Candidate{r, w, std::move(key)});
  } while (next_tuple(w, r));
  return out;
}

std::optional<MldRecord> build_record(const Candidate& cand, int dim, const Window& window, bool verify) {
  Lattice zn = Lattice::standard(dim);
  TorusSubgroup f = TorusSubgroup::cyclic(zn, cand.r, cand.weights);

  std::vector<QVec> orthant;
  for (int i = 0; i < dim; ++i) {
    QVec e(static_cast<size_t>(dim), Rat(0));
    e[static_cast<size_t>(i)] = 1;
    orthant.push_back(std::move(e));
  }
  ToricPair smooth(Cone::from_rays(zn, orthant));
  ToricPair pair = log_quotient(smooth, f);

  ToricPair::Mld mld = pair.mld();
  if (!window.contains(mld.value)) return std::nullopt;

  MldRecord rec;
  rec.spec = CyclicSpec{cand.r, cand.weights};
  rec.dim = dim;
  rec.mld = mld.value;
  rec.witness = mld.witness;
  rec.cartier_index = pair.cartier_index();
  rec.boundary = pair.boundary();
  rec.quasi_reflection = false;
  for (const auto& b : rec.boundary)
    if (b > 0) rec.quasi_reflection = true;
  rec.lattice_key = cand.key;

  if (verify) {
    if (pair.log_discrepancy(rec.witness) != rec.mld)
      throw VerificationFailure("witness does not reproduce the mld");
    QVec upstairs = ray_primitive(rec.witness, zn);
    QuotientLdCheck chk = quotient_ld_check(smooth, f, upstairs);
    if (chk.downstairs != rec.mld)
      throw VerificationFailure("quotient law disagrees with the recorded mld");
  }
  return rec;
}

void check_sweep_params(const SweepParams& p) {
  if (p.dim != 2 && p.dim != 3) throw OutOfRange("sweeps cover dimensions 2 and 3");
  if (p.rmax < 1) throw OutOfRange("rmax must be positive");
  if (p.rmax > p.rmax_cap) throw CapExceeded(p.rmax_cap, "sweep bound");
}

std::vector<MldRecord> assemble(const SweepParams& params, std::vector<std::vector<Candidate>>& per_r) {
  // global first-occurrence dedupe in (r, weights) order
  std::vector<Candidate> survivors;
  std::set<std::string> seen;
  for (auto& batch : per_r)
    for (auto& cand : batch) {
      if (params.dedupe && !seen.insert(cand.key).second) continue;
      survivors.push_back(std::move(cand));
    }

  std::vector<std::optional<MldRecord>> slots(survivors.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (long i = 0; i < static_cast<long>(survivors.size()); ++i)
    slots[static_cast<size_t>(i)] =
        build_record(survivors[static_cast<size_t>(i)], params.dim, params.window, params.verify);

  std::vector<MldRecord> records;
  for (auto& s : slots)
    if (s) records.push_back(std::move(*s));
  return records;
}

}  // namespace

std::vector<MldRecord> enumerate_cyclic(const SweepParams& params) {
  check_sweep_params(params);
  std::vector<std::vector<Candidate>> per_r(static_cast<size_t>(params.rmax));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long r = 1; r <= params.rmax; ++r)
    per_r[static_cast<size_t>(r - 1)] = candidates_for_r(params.dim, r, params.dedupe);
  return assemble(params, per_r);
}

std::vector<MldRecord> enumerate_cyclic_serial(const SweepParams& params) {
  check_sweep_params(params);
  std::vector<MldRecord> records;
  std::set<std::string> seen;
  for (long r = 1; r <= params.rmax; ++r)
    for (auto& cand : candidates_for_r(params.dim, r, params.dedupe)) {
      if (params.dedupe && !seen.insert(cand.key).second) continue;
      if (auto rec = build_record(cand, params.dim, params.window, params.verify)) records.push_back(std::move(*rec));
    }
  return records;
}

ToricPair record_pair(const MldRecord& rec) {
  Lattice zn = Lattice::standard(rec.dim);
  TorusSubgroup f = TorusSubgroup::cyclic(zn, rec.spec.r, rec.spec.weights);
  std::vector<QVec> orthant;
  for (int i = 0; i < rec.dim; ++i) {
    QVec e(static_cast<size_t>(rec.dim), Rat(0));
    e[static_cast<size_t>(i)] = 1;
    orthant.push_back(std::move(e));
  }
  ToricPair smooth(Cone::from_rays(zn, orthant));
  return log_quotient(smooth, f);
}

SpectrumReport spectrum(const std::vector<MldRecord>& records, const Window& window, long r1, long r2) {
  if (r1 >= r2) throw OutOfRange("spectrum needs r1 < r2");
  SpectrumReport rep;
  rep.window = window;
  rep.r1 = r1;
  rep.r2 = r2;

  std::set<Rat> set1;
  std::map<Rat, SpectrumEntry> set2;
  std::vector<Rat> discovery;
  for (const auto& rec : records) {
    if (rec.spec.r > r2 || !window.contains(rec.mld)) continue;
    discovery.push_back(rec.mld);
    if (rec.spec.r <= r1) set1.insert(rec.mld);
    auto it = set2.find(rec.mld);
    if (it == set2.end())
      set2.emplace(rec.mld, SpectrumEntry{rec.mld, 1, rec.spec, rec.witness});
    else
      ++it->second.multiplicity;
  }
  for (const auto& [v, e] : set2) rep.values.push_back(e);
  rep.values_r1.assign(set1.begin(), set1.end());

  rep.stabilized = set1.size() == set2.size();

  long run = discovery.empty() ? 0 : 1, best = run;
  for (size_t i = 1; i < discovery.size(); ++i) {
    run = discovery[i] > discovery[i - 1] ? run + 1 : 1;
    best = std::max(best, run);
  }
  rep.longest_increasing_run = best;
  return rep;
}

std::vector<IndexTableRow> index_table(const std::vector<MldRecord>& records, const std::vector<Window>& windows,
                                       long r1, long r2) {
  std::vector<IndexTableRow> rows;
  for (const auto& w : windows) {
    std::set<Int> at_r1, at_r2;
    for (const auto& rec : records) {
      if (rec.spec.r > r2 || !w.contains(rec.mld)) continue;
      at_r2.insert(rec.cartier_index);
      if (rec.spec.r <= r1) at_r1.insert(rec.cartier_index);
    }
    IndexTableRow row;
    row.window = w;
    row.indices.assign(at_r2.begin(), at_r2.end());
    row.max_index = row.indices.empty() ? Int(0) : row.indices.back();
    row.grew = at_r1 != at_r2;
    rows.push_back(std::move(row));
  }
  return rows;
}

AccumulationReport accumulation_scan(const std::vector<MldRecord>& records, int n, const Rat& resolution,
                                     long match_rmax, long match_coeff_cap) {
  if (n != 3) throw OutOfRange("accumulation scan matches dimension 3 against dimension 2");
  if (resolution <= 0) throw OutOfRange("resolution must be positive");

  // distinct values with the smallest r attaining each
  std::map<Rat, long> first_r;
  for (const auto& rec : records) {
    auto it = first_r.find(rec.mld);
    if (it == first_r.end())
      first_r[rec.mld] = rec.spec.r;
    else
      it->second = std::min(it->second, rec.spec.r);
  }
  std::vector<std::pair<Rat, long>> vals(first_r.begin(), first_r.end());

  // 2-dimensional models with standard coefficients, mld -> description
  std::map<Rat, std::string> models;
  {
    std::set<std::string> seen;
    for (long r = 1; r <= match_rmax; ++r)
      for (long a = 0; a < r; ++a)
        for (long b = 0; b < r; ++b) {
          std::vector<long> w{a, b};
          if (!seen.insert(overlattice_key(r, w)).second) continue;
          TorusSubgroup f = TorusSubgroup::cyclic(Lattice::standard(2), r, w);
          Cone orthant = Cone::from_rays(f.overlattice, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
          for (long m1 = 1; m1 <= match_coeff_cap; ++m1)
            for (long m2 = 1; m2 <= match_coeff_cap; ++m2) {
              QVec bd{Rat(m1 - 1, m1), Rat(m2 - 1, m2)};
              bd[0].canonicalize();
              bd[1].canonicalize();
              ToricPair p(orthant, bd);
              Rat v = p.mld().value;
              if (!models.count(v))
                models[v] = "1/" + std::to_string(r) + "(" + std::to_string(a) + "," + std::to_string(b) +
                            "), b=(" + to_string(bd[0]) + "," + to_string(bd[1]) + ")";
            }
        }
  }

  AccumulationReport rep;
  rep.resolution = resolution;
  size_t i = 0;
  while (i < vals.size()) {
    size_t j = i;
    while (j + 1 < vals.size() && vals[j + 1].first - vals[j].first < resolution) ++j;
    if (j - i + 1 >= 3) {
      AccumulationCandidate cand;
      for (size_t k = i; k <= j; ++k) cand.cluster.push_back(vals[k].first);
      // exact fit v = a + c/r through the three values nearest the bottom
      const auto& [v0, r0] = vals[i];
      const auto& [v1, r1] = vals[i + 1];
      const auto& [v2, r2] = vals[i + 2];
      cand.limit = v0;
      if (r0 != r1 && r0 > 0 && r1 > 0 && r2 > 0) {
        Rat inv0(1, r0), inv1(1, r1), inv2(1, r2);
        inv0.canonicalize();
        inv1.canonicalize();
        inv2.canonicalize();
        if (inv0 != inv1) {
          Rat c = (v0 - v1) / (inv0 - inv1);
          Rat a = v0 - c * inv0;
          if (v2 == a + c * inv2 && a >= 0) {
            cand.limit = a;
            cand.extrapolated = true;
          }
        }
      }
      auto hit = models.find(cand.limit);
      if (hit != models.end()) {
        cand.matched = true;
        cand.match_description = hit->second;
      }
      rep.candidates.push_back(std::move(cand));
    }
    i = j + 1;
  }
  return rep;
}

}  // namespace toric
