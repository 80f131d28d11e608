// Exact arithmetic used everywhere in the core: arbitrary-precision integers
// and rationals. Floating point appears only in report formatting.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nmult {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using ZVec = std::vector<Int>;
using QVec = std::vector<Rat>;

// Error taxonomy mirrored by the CLI exit codes.
struct value_error : std::runtime_error {
  explicit value_error(const std::string& m) : std::runtime_error(m) {}
};
// Internal consistency violations: a kernel bug, never a user error.
struct kernel_error : std::logic_error {
  explicit kernel_error(const std::string& m) : std::logic_error(m) {}
};
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& m) : std::runtime_error(m) {}
};
struct inconclusive_error : std::runtime_error {
  explicit inconclusive_error(const std::string& m) : std::runtime_error(m) {}
};

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Int floor_rat(const Rat& q) {
  Int n = rat_num(q), d = rat_den(q);  // d > 0 by cpp_rational invariant
  Int t = n / d;
  if (n < 0 && t * d != n) --t;
  return t;
}

inline Int ceil_rat(const Rat& q) {
  Int n = rat_num(q), d = rat_den(q);
  Int t = n / d;
  if (n > 0 && t * d != n) ++t;
  return t;
}

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

// Smallest integer strictly greater than q.
inline Int strict_above(const Rat& q) {
  return is_integer(q) ? rat_num(q) + 1 : ceil_rat(q);
}

// Number of integers j with 0 <= j < q.
inline Int count_below(const Rat& q) {
  if (q <= 0) return 0;
  return ceil_rat(q);
}

inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int n(s.substr(0, slash)), d(s.substr(slash + 1));
    if (d == 0) throw parse_error("zero denominator in rational: " + s);
    return Rat(n, d);
  } catch (const std::runtime_error&) {
    throw parse_error("malformed rational: " + s);
  }
}

inline std::string to_string(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

inline std::string to_string(const Int& n) {
  std::ostringstream os;
  os << n;
  return os.str();
}

// Decimal rendering for display fields, 12 significant digits.
inline std::string decimal_string(const Rat& q, int digits = 12) {
  if (q == 0) return "0";
  Int n = rat_num(q), d = rat_den(q);
  bool neg = n < 0;
  if (neg) n = -n;
  // Find the exponent so that n/d = m * 10^e with 1 <= m < 10.
  int e = 0;
  Int lo = n, hi = d;
  while (lo >= 10 * hi) { hi *= 10; ++e; }
  while (lo < hi) { lo *= 10; --e; }
  std::string digs;
  {
    Int num = n, den = d;
    // Normalize to [1,10) by the exponent found above.
    if (e > 0) den *= boost::multiprecision::pow(Int(10), e);
    if (e < 0) num *= boost::multiprecision::pow(Int(10), -e);
    Int m = (num * boost::multiprecision::pow(Int(10), digits - 1) + den / 2) / den;
    digs = to_string(m);
    if ((int)digs.size() > digits) {  // rounding carried into an extra digit
      digs = digs.substr(0, digits);
      ++e;
    }
  }
  while (digs.size() > 1 && digs.back() == '0') digs.pop_back();
  std::string out;
  if (e > 15 || e < -9) {
    out = digs.substr(0, 1);
    if (digs.size() > 1) out += "." + digs.substr(1);
    out += "e" + std::to_string(e);
  } else if (e < 0) {
    out = "0." + std::string(-e - 1, '0') + digs;
  } else if (e >= (int)digs.size() - 1) {
    out = digs + std::string(e - (int)digs.size() + 1, '0');
  } else {
    out = digs.substr(0, e + 1) + "." + digs.substr(e + 1);
  }
  return neg ? "-" + out : out;
}

inline Int gcd_int(Int a, Int b) {
  return boost::multiprecision::gcd(a, b);
}

// Divide out the content so that the vector is primitive; an all-zero vector
// stays zero. `orient` flips signs so the first nonzero entry is positive.
inline void make_primitive(ZVec& v, bool orient = false) {
  Int g = 0;
  for (const Int& x : v) g = gcd_int(g, x);
  if (g == 0) return;
  for (Int& x : v) x /= g;
  if (orient) {
    for (const Int& x : v) {
      if (x != 0) {
        if (x < 0)
          for (Int& y : v) y = -y;
        break;
      }
    }
  }
}

inline bool lex_less(const ZVec& a, const ZVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}
inline bool lex_less(const QVec& a, const QVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
inline Int dot(const ZVec& a, const ZVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
inline Rat dot(const ZVec& a, const QVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

inline QVec to_qvec(const ZVec& v) {
  QVec q(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
  return q;
}

// Componentwise a >= b.
inline bool dominates(const ZVec& a, const ZVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}
inline bool dominates(const QVec& a, const QVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

inline Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Floor of the n-th root of a nonnegative integer, by Newton iteration.
inline Int nth_root_floor(const Int& a, int n) {
  if (a < 0) throw value_error("nth_root_floor: negative radicand");
  if (a == 0 || n == 1) return a;
  Int x = Int(1) << static_cast<unsigned>((boost::multiprecision::msb(a) / n) + 1);
  while (true) {
    Int xn = boost::multiprecision::pow(x, n - 1);
    Int next = ((n - 1) * x + a / xn) / n;
    if (next >= x) break;
    x = next;
  }
  while (boost::multiprecision::pow(x, n) > a) --x;
  return x;
}

}  // namespace nmult
