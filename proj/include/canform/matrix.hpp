#pragma once

#include <initializer_list>
#include <utility>

#include "canform/numeric.hpp"

namespace canform {

template <typename T>
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<T> a;  // row-major

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  Mat(int r, int c, std::initializer_list<T> init) : rows(r), cols(c), a(init) {
    if (static_cast<int>(a.size()) != r * c)
      throw ValidationError("matrix initializer size mismatch");
  }

  T& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const T& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  bool operator==(const Mat&) const = default;

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

template <typename T>
Mat<T> transpose(const Mat<T>& m) {
  Mat<T> t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
  return t;
}

template <typename T>
Mat<T> mat_mul(const Mat<T>& x, const Mat<T>& y) {
  if (x.cols != y.rows) throw ValidationError("matrix product shape mismatch");
  Mat<T> z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const T& f = x(i, k);
      if (f == 0) continue;
      for (int j = 0; j < y.cols; ++j) z(i, j) += f * y(k, j);
    }
  return z;
}

template <typename T>
std::vector<T> mat_vec(const Mat<T>& m, const std::vector<T>& v) {
  if (m.cols != static_cast<int>(v.size())) throw ValidationError("matrix-vector shape mismatch");
  std::vector<T> r(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r[i] += m(i, j) * v[j];
  return r;
}

RatMat to_rat(const IntMat& m);
// requires every entry to be integral
IntMat to_int(const RatMat& m);

Int det(const IntMat& m);
Rat det(const RatMat& m);

// throws ValidationError on singular input
RatMat inverse(const RatMat& m);
RVec solve_linear(const RatMat& m, const RVec& b);

bool is_symmetric(const RatMat& m);

// Exact Sylvester test via fraction-free (Bareiss) symmetric elimination on
// the denominator-cleared matrix; no pivoting, a zero or negative pivot
// means some leading principal minor is <= 0.
bool is_positive_definite(const RatMat& m);

struct Form {
  int n = 0;
  RatMat gram;

  Form() = default;
  explicit Form(RatMat g);
};

struct Unimodular {
  int n = 0;
  IntMat mat;

  Unimodular() = default;
  explicit Unimodular(IntMat m);
};

Rat evaluate(const Form& a, const IVec& x);
Rat evaluate(const Form& a, const RVec& x);

// U^T A U for integer U (the GL_n action)
Form conjugate(const Form& a, const IntMat& u);

IntMat int_inverse_unimodular(const IntMat& u);

// least common multiple of the entry denominators, > 0
Int denominator_lcm(const RatMat& m);

}  // namespace canform
