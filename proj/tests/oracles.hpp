// Independent brute-force oracles used to pin expected values. These stay off
// the implementation paths they check: plain scans and small integer
// arithmetic only.
#pragma once

#include <numeric>
#include <vector>

#include "toric/rational.hpp"

namespace oracle {

using toric::Int;
using toric::QVec;
using toric::Rat;

/// Dense-grid mld of the boundaryless cyclic quotient 1/r(a1, a2): scans the
/// (1/r)-grid box of side 2 with pure integer arithmetic.
/// Membership of (i/r, j/r) in Z^2 + Z(a1/r, a2/r) is tested by direct search
/// over the r multiples of the torsion point.
struct CyclicMld {
  Rat value;
  QVec witness;
};

inline CyclicMld cyclic_mld_dense(long r, long a1, long a2) {
  a1 %= r;
  a2 %= r;
  if (a1 < 0) a1 += r;
  if (a2 < 0) a2 += r;

  // member(i, j) <=> exists t with (i, j) == t*(a1, a2) mod r
  std::vector<char> member(static_cast<size_t>(r * r), 0);
  for (long t = 0; t < r; ++t) member[static_cast<size_t>(((t * a1) % r) * r + (t * a2) % r)] = 1;
  auto in_lattice = [&](long i, long j) { return member[static_cast<size_t>((i % r) * r + (j % r))] != 0; };

  // m_k = largest d with e_k/d in the lattice; the functional is (m_1, m_2)
  auto axis_multiplier = [&](bool first) {
    for (long d = r; d >= 2; --d) {
      if (r % d != 0) continue;
      long step = r / d;  // e/d = (step units of 1/r)
      if (first ? in_lattice(step, 0) : in_lattice(0, step)) return d;
    }
    return 1L;
  };
  long m1 = axis_multiplier(true);
  long m2 = axis_multiplier(false);

  // minimize (m1*i + m2*j)/r over interior grid points of the box (0, 2]^2
  long best_num = -1, bi = 0, bj = 0;
  for (long i = 1; i <= 2 * r; ++i)
    for (long j = 1; j <= 2 * r; ++j) {
      if (!in_lattice(i, j)) continue;
      long num = m1 * i + m2 * j;
      if (best_num < 0 || num < best_num || (num == best_num && (i < bi || (i == bi && j < bj)))) {
        best_num = num;
        bi = i;
        bj = j;
      }
    }
  CyclicMld out;
  out.value = Rat(best_num, r);
  out.value.canonicalize();
  Rat x(bi, r), y(bj, r);
  x.canonicalize();
  y.canonicalize();
  out.witness = QVec{x, y};
  return out;
}

/// Largest order of a finite-order unimodular integer n x n matrix: maximize
/// m subject to the cyclotomic degree sum fitting in n. The factor 2 of
/// m = 2 mod 4 is free (negation pairs with the odd part).
inline long max_finite_order(int n) {
  long best = 1;
  for (long m = 1; m <= 1000; ++m) {
    long deg = 0;
    long rest = m;
    for (long p = 2; p * p <= rest; ++p) {
      if (rest % p != 0) continue;
      long pk = 1;
      while (rest % p == 0) {
        rest /= p;
        pk *= p;
      }
      long phi = pk / p * (p - 1);
      if (p == 2 && pk == 2) phi = 0;  // -1 costs nothing
      deg += phi;
    }
    if (rest > 1) deg += rest - 1;  // leftover prime
    if (deg <= n && m > best) best = m;
  }
  return best;
}

}  // namespace oracle
