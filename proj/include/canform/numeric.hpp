#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace canform {

// Arbitrary-precision integers and rationals. mpq_class keeps values in
// lowest terms with positive denominator as long as every value entering
// arithmetic is canonical; make_rat() is the one place raw num/den pairs
// are admitted.
using Int = mpz_class;
using Rat = mpq_class;

using IVec = std::vector<Int>;
using RVec = std::vector<Rat>;

struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : std::runtime_error {
  std::string raw;
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                           std::to_string(col_) + ")"),
        raw(msg),
        line(line_),
        col(col_) {}
};

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

// floor(a/b), exact, b != 0
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int rat_floor(const Rat& x) { return floor_div(x.get_num(), x.get_den()); }

inline Int rat_ceil(const Rat& x) { return ceil_div(x.get_num(), x.get_den()); }

// nearest integer, ties round up
inline Int rat_round(const Rat& x) {
  Rat y = x + Rat(1, 2);
  return rat_floor(y);
}

// floor(sqrt(a)) for a >= 0
inline Int isqrt_floor(const Int& a) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

// largest t >= 0 with t^2 <= x, for x >= 0
inline Int sqrt_floor_rat(const Rat& x) {
  Int t = isqrt_floor(rat_floor(x));
  while ((t + 1) * (t + 1) <= x) ++t;
  while (t > 0 && t * t > x) --t;
  return t;
}

struct XgcdResult {
  Int g;  // gcd >= 0 (g = 0 only when a = b = 0)
  Int x;
  Int y;  // g == a*x + b*y
};

// Deterministic extended Euclid: xgcd(a, 0) = (|a|, sgn a, 0), then the
// classical recursion on (b, a mod b) with floor division.
inline XgcdResult xgcd(const Int& a, const Int& b) {
  if (b == 0) {
    if (a == 0) return {Int(0), Int(0), Int(0)};
    return a > 0 ? XgcdResult{a, Int(1), Int(0)} : XgcdResult{-a, Int(-1), Int(0)};
  }
  Int q = floor_div(a, b);
  XgcdResult r = xgcd(b, a - q * b);
  return {r.g, r.y, r.x - q * r.y};
}

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

// gcd of the entries, >= 0
inline Int content(const IVec& v) {
  Int g = 0;
  for (const Int& e : v) g = gcd(g, e);
  return g;
}

inline bool lex_less(const IVec& a, const IVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

}  // namespace canform
