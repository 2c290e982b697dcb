#include "toric/rational.hpp"

#include <cctype>
#include <sstream>

namespace toric {

namespace {

// base 10 always; the default mpz string constructor would read 0-prefixed
// digits as octal
Int parse_integer(const std::string& s) { return Int(s, 10); }

}  // namespace

Rat parse_rational(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  const auto bad = [&] { throw ParseError("malformed rational literal '" + s + "'"); };
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-' && c != '+' && c != '/' && c != '.') bad();

  auto slash = s.find('/');
  auto point = s.find('.');
  if (slash != std::string::npos && point != std::string::npos) bad();
  try {
    if (slash != std::string::npos) {
      Int num = parse_integer(s.substr(0, slash));
      Int den = parse_integer(s.substr(slash + 1));
      if (den == 0) bad();
      Rat r(num, den);
      r.canonicalize();
      return r;
    }
    if (point != std::string::npos) {
      std::string digits = s.substr(0, point) + s.substr(point + 1);
      size_t places = s.size() - point - 1;
      if (digits.empty() || digits == "-" || digits == "+") bad();
      Int num = parse_integer(digits);
      Int den = 1;
      for (size_t i = 0; i < places; ++i) den *= 10;
      Rat r(num, den);
      r.canonicalize();
      return r;
    }
    return Rat(parse_integer(s));
  } catch (const std::invalid_argument&) {
    bad();
  }
  return Rat(0);  // unreachable
}

std::string to_string(const Rat& x) {
  if (is_integer(x)) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const QVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << to_string(v[i]);
  }
  os << ")";
  return os.str();
}

Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVec add(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec sub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec scale(const Rat& c, const QVec& v) {
  QVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

int lex_compare(const QVec& a, const QVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  if (a.size() < b.size()) return -1;
  if (a.size() > b.size()) return 1;
  return 0;
}

Int common_denominator(const QVec& v) {
  Int d = 1;
  for (const auto& x : v) d = lcm(d, x.get_den());
  return d;
}

}  // namespace toric
