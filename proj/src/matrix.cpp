#include "toric/matrix.hpp"

#include <cstdlib>
#include <utility>

namespace toric {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows_) {
  rows = static_cast<long>(rows_.size());
  cols = rows ? static_cast<long>(rows_.begin()->size()) : 0;
  e.reserve(static_cast<size_t>(rows * cols));
  for (const auto& r : rows_)
    for (long x : r) e.emplace_back(x);
}

IntMatrix IntMatrix::identity(long n) {
  IntMatrix m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols, rows);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool IntMatrix::is_identity() const {
  if (rows != cols) return false;
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows, b.cols);
  for (long i = 0; i < a.rows; ++i)
    for (long k = 0; k < a.cols; ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (long j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

// Bareiss fraction-free elimination.
Int determinant(const IntMatrix& a) {
  if (a.rows != a.cols) throw Error("determinant of a non-square matrix");
  long n = a.rows;
  if (n == 0) return 1;
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (long k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      long p = -1;
      for (long i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (long j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i)
      for (long j = k + 1; j < n; ++j) {
        Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = t / prev;  // exact by Bareiss
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

RatMatrix::RatMatrix(const IntMatrix& m) : rows(m.rows), cols(m.cols) {
  e.reserve(m.e.size());
  for (const auto& x : m.e) e.emplace_back(x);
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows_) {
  rows = static_cast<long>(rows_.size());
  cols = rows ? static_cast<long>(rows_.begin()->size()) : 0;
  e.reserve(static_cast<size_t>(rows * cols));
  for (const auto& r : rows_)
    for (const auto& x : r) e.push_back(x);
}

RatMatrix RatMatrix::identity(long n) {
  RatMatrix m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<QVec>& rs) {
  RatMatrix m(static_cast<long>(rs.size()), rs.empty() ? 0 : static_cast<long>(rs[0].size()));
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j) m.at(i, j) = rs[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols, rows);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

QVec RatMatrix::row(long i) const {
  return QVec(e.begin() + i * cols, e.begin() + (i + 1) * cols);
}

std::vector<QVec> RatMatrix::row_list() const {
  std::vector<QVec> out;
  out.reserve(static_cast<size_t>(rows));
  for (long i = 0; i < rows; ++i) out.push_back(row(i));
  return out;
}

RatMatrix mul(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix c(a.rows, b.cols);
  for (long i = 0; i < a.rows; ++i)
    for (long k = 0; k < a.cols; ++k) {
      const Rat& aik = a.at(i, k);
      if (aik == 0) continue;
      for (long j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

QVec mul_row(const QVec& v, const RatMatrix& a) {
  QVec r(static_cast<size_t>(a.cols), Rat(0));
  for (long k = 0; k < a.rows; ++k) {
    if (v[static_cast<size_t>(k)] == 0) continue;
    for (long j = 0; j < a.cols; ++j) r[static_cast<size_t>(j)] += v[static_cast<size_t>(k)] * a.at(k, j);
  }
  return r;
}

Rat determinant(const RatMatrix& a) {
  if (a.rows != a.cols) throw Error("determinant of a non-square matrix");
  RatMatrix m = a;
  long n = a.rows;
  Rat det = 1;
  for (long k = 0; k < n; ++k) {
    long p = -1;
    for (long i = k; i < n; ++i)
      if (m.at(i, k) != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != k) {
      for (long j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      det = -det;
    }
    det *= m.at(k, k);
    Rat inv = 1 / m.at(k, k);
    for (long i = k + 1; i < n; ++i) {
      if (m.at(i, k) == 0) continue;
      Rat f = m.at(i, k) * inv;
      for (long j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
    }
  }
  return det;
}

RatMatrix inverse(const RatMatrix& a) {
  if (a.rows != a.cols) throw SingularMatrix("inverse of a non-square matrix");
  long n = a.rows;
  RatMatrix m = a;
  RatMatrix inv = RatMatrix::identity(n);
  for (long k = 0; k < n; ++k) {
    long p = -1;
    for (long i = k; i < n; ++i)
      if (m.at(i, k) != 0) {
        p = i;
        break;
      }
    if (p < 0) throw SingularMatrix();
    if (p != k)
      for (long j = 0; j < n; ++j) {
        std::swap(m.at(k, j), m.at(p, j));
        std::swap(inv.at(k, j), inv.at(p, j));
      }
    Rat piv = 1 / m.at(k, k);
    for (long j = 0; j < n; ++j) {
      m.at(k, j) *= piv;
      inv.at(k, j) *= piv;
    }
    for (long i = 0; i < n; ++i) {
      if (i == k || m.at(i, k) == 0) continue;
      Rat f = m.at(i, k);
      for (long j = 0; j < n; ++j) {
        m.at(i, j) -= f * m.at(k, j);
        inv.at(i, j) -= f * inv.at(k, j);
      }
    }
  }
  return inv;
}

long rank(const RatMatrix& a) {
  RatMatrix m = a;
  long r = 0;
  for (long c = 0; c < m.cols && r < m.rows; ++c) {
    long p = -1;
    for (long i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (long j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(p, j));
    Rat inv = 1 / m.at(r, c);
    for (long i = r + 1; i < m.rows; ++i) {
      if (m.at(i, c) == 0) continue;
      Rat f = m.at(i, c) * inv;
      for (long j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

namespace {

void swap_rows(IntMatrix& m, long a, long b) {
  for (long j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, long a, long b) {
  for (long i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[a] += c * row[b]
void add_row(IntMatrix& m, long a, long b, const Int& c) {
  for (long j = 0; j < m.cols; ++j) m.at(a, j) += c * m.at(b, j);
}

void add_col(IntMatrix& m, long a, long b, const Int& c) {
  for (long i = 0; i < m.rows; ++i) m.at(i, a) += c * m.at(i, b);
}

void negate_row(IntMatrix& m, long a) {
  for (long j = 0; j < m.cols; ++j) m.at(a, j) = -m.at(a, j);
}

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

SmithResult smith_normal_form(const IntMatrix& a) {
  SmithResult res{a, IntMatrix::identity(a.rows), IntMatrix::identity(a.cols)};
  IntMatrix& s = res.s;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;
  long lim = std::min(a.rows, a.cols);

  for (long t = 0; t < lim; ++t) {
    for (;;) {
      // pivot: smallest |entry| != 0 in the trailing block, lowest row then column
      long pi = -1, pj = -1;
      Int best;
      for (long i = t; i < s.rows; ++i)
        for (long j = t; j < s.cols; ++j) {
          if (s.at(i, j) == 0) continue;
          Int mag = abs_int(s.at(i, j));
          if (pi < 0 || mag < best) {
            best = mag;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) return res;  // trailing block zero: done
      if (pi != t) {
        swap_rows(s, t, pi);
        swap_rows(u, t, pi);
      }
      if (pj != t) {
        swap_cols(s, t, pj);
        swap_cols(v, t, pj);
      }

      bool reduced = true;
      for (long i = t + 1; i < s.rows; ++i) {
        if (s.at(i, t) == 0) continue;
        Int q = fdiv(s.at(i, t), s.at(t, t));
        add_row(s, i, t, -q);
        add_row(u, i, t, -q);
        if (s.at(i, t) != 0) reduced = false;  // remainder smaller than pivot
      }
      for (long j = t + 1; j < s.cols; ++j) {
        if (s.at(t, j) == 0) continue;
        Int q = fdiv(s.at(t, j), s.at(t, t));
        add_col(s, j, t, -q);
        add_col(v, j, t, -q);
        if (s.at(t, j) != 0) reduced = false;
      }
      if (!reduced) continue;

      // divisibility: pivot must divide the whole trailing block
      long oi = -1, oj = -1;
      for (long i = t + 1; i < s.rows && oi < 0; ++i)
        for (long j = t + 1; j < s.cols; ++j)
          if (s.at(i, j) % s.at(t, t) != 0) {
            oi = i;
            oj = j;
            break;
          }
      if (oi >= 0) {
        (void)oj;
        add_row(s, t, oi, 1);
        add_row(u, t, oi, 1);
        continue;
      }

      if (s.at(t, t) < 0) {
        negate_row(s, t);
        negate_row(u, t);
      }
      break;
    }
  }
  return res;
}

HermiteResult hermite_normal_form(const IntMatrix& a) {
  HermiteResult res{a, IntMatrix::identity(a.rows), 0};
  IntMatrix& h = res.h;
  IntMatrix& u = res.u;
  long r = 0;
  for (long c = 0; c < h.cols && r < h.rows; ++c) {
    // euclidean elimination within column c, rows >= r
    for (;;) {
      long p = -1;
      Int best;
      for (long i = r; i < h.rows; ++i) {
        if (h.at(i, c) == 0) continue;
        Int mag = abs_int(h.at(i, c));
        if (p < 0 || mag < best) {
          best = mag;
          p = i;
        }
      }
      if (p < 0) break;  // column clear below; no pivot here
      if (p != r) {
        swap_rows(h, r, p);
        swap_rows(u, r, p);
      }
      bool clear = true;
      for (long i = r + 1; i < h.rows; ++i) {
        if (h.at(i, c) == 0) continue;
        Int q = fdiv(h.at(i, c), h.at(r, c));
        add_row(h, i, r, -q);
        add_row(u, i, r, -q);
        if (h.at(i, c) != 0) clear = false;
      }
      if (clear) break;
    }
    if (h.at(r, c) == 0) continue;
    if (h.at(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    // reduce entries above the pivot into [0, pivot)
    for (long i = 0; i < r; ++i) {
      Int q = fdiv(h.at(i, c), h.at(r, c));
      if (q != 0) {
        add_row(h, i, r, -q);
        add_row(u, i, r, -q);
      }
    }
    ++r;
  }
  res.rank = r;
  return res;
}

}  // namespace toric
