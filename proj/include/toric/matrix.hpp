#pragma once

#include <initializer_list>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

/// Dense matrix of arbitrary-precision integers, row major.
struct IntMatrix {
  long rows = 0;
  long cols = 0;
  std::vector<Int> e;

  IntMatrix() = default;
  IntMatrix(long r, long c) : rows(r), cols(c), e(static_cast<size_t>(r * c), Int(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows_);

  Int& at(long i, long j) { return e[static_cast<size_t>(i * cols + j)]; }
  const Int& at(long i, long j) const { return e[static_cast<size_t>(i * cols + j)]; }

  static IntMatrix identity(long n);
  IntMatrix transpose() const;
  bool is_identity() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
Int determinant(const IntMatrix& a);  // Bareiss, square only

/// Dense matrix of rationals, row major.
struct RatMatrix {
  long rows = 0;
  long cols = 0;
  std::vector<Rat> e;

  RatMatrix() = default;
  RatMatrix(long r, long c) : rows(r), cols(c), e(static_cast<size_t>(r * c), Rat(0)) {}
  explicit RatMatrix(const IntMatrix& m);
  RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows_);

  Rat& at(long i, long j) { return e[static_cast<size_t>(i * cols + j)]; }
  const Rat& at(long i, long j) const { return e[static_cast<size_t>(i * cols + j)]; }

  static RatMatrix identity(long n);
  static RatMatrix from_rows(const std::vector<QVec>& rows);
  RatMatrix transpose() const;
  QVec row(long i) const;
  std::vector<QVec> row_list() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;
};

RatMatrix mul(const RatMatrix& a, const RatMatrix& b);
QVec mul_row(const QVec& v, const RatMatrix& a);  // v * a
Rat determinant(const RatMatrix& a);
RatMatrix inverse(const RatMatrix& a);  // throws SingularMatrix
long rank(const RatMatrix& a);

struct SmithResult {
  IntMatrix s;  // diagonal, divisibility chain, nonnegative
  IntMatrix u;  // unimodular, u * a * v == s
  IntMatrix v;
};

/// Smith normal form. Pivot rule: smallest nonzero absolute value,
/// ties broken by lowest row then column index.
SmithResult smith_normal_form(const IntMatrix& a);

struct HermiteResult {
  IntMatrix h;  // row Hermite form: h == u * a
  IntMatrix u;  // unimodular
  long rank = 0;
};

/// Row-style Hermite normal form: pivots positive, zeros below each pivot,
/// entries above a pivot reduced into [0, pivot). Zero rows sink to the bottom.
HermiteResult hermite_normal_form(const IntMatrix& a);

}  // namespace toric
