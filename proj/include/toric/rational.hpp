#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

using Int = mpz_class;
using Rat = mpq_class;
using ZVec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// Floor of a/b for integers, b != 0.
inline Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor(const Rat& x) { return fdiv(x.get_num(), x.get_den()); }

inline Int ceil(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

/// x reduced into [0, 1): x - floor(x).
inline Rat frac(const Rat& x) { return x - Rat(floor(x)); }

Rat parse_rational(const std::string& s);  // "3", "-2/3", "0.25"
std::string to_string(const Rat& x);       // "p/q", or "p" when integral
std::string to_string(const QVec& v);      // "(a, b, ...)"

// componentwise vector helpers; sizes must agree
Rat dot(const QVec& a, const QVec& b);
QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec scale(const Rat& c, const QVec& v);
bool is_zero(const QVec& v);
int lex_compare(const QVec& a, const QVec& b);  // -1, 0, +1

/// Common denominator of all entries (1 for the empty vector).
Int common_denominator(const QVec& v);

}  // namespace toric
