#include "canform/matrix.hpp"

namespace canform {

RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rat(m.a[i]);
  return r;
}

IntMat to_int(const RatMat& m) {
  IntMat r(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) {
    if (m.a[i].get_den() != 1) throw ValidationError("matrix entry is not an integer");
    r.a[i] = m.a[i].get_num();
  }
  return r;
}

// Bareiss fraction-free elimination; exact, division-free result.
Int det(const IntMat& m) {
  if (m.rows != m.cols) throw ValidationError("det: matrix not square");
  int n = m.rows;
  if (n == 0) return 1;
  IntMat w = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (w(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w(k, j), w(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
      }
      w(i, k) = 0;
    }
    prev = w(k, k);
  }
  return sign > 0 ? w(n - 1, n - 1) : Int(-w(n - 1, n - 1));
}

Rat det(const RatMat& m) {
  if (m.rows != m.cols) throw ValidationError("det: matrix not square");
  int n = m.rows;
  RatMat w = m;
  Rat d(1);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (w(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != k) {
      for (int j = k; j < n; ++j) std::swap(w(k, j), w(piv, j));
      d = -d;
    }
    d *= w(k, k);
    Rat inv_p = Rat(1) / w(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (w(i, k) == 0) continue;
      Rat f = w(i, k) * inv_p;
      for (int j = k; j < n; ++j) w(i, j) -= f * w(k, j);
    }
  }
  return d;
}

RatMat inverse(const RatMat& m) {
  if (m.rows != m.cols) throw ValidationError("inverse: matrix not square");
  int n = m.rows;
  RatMat w = m;
  RatMat inv = RatMat::identity(n);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (w(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw ValidationError("inverse: singular matrix");
    if (piv != k) {
      for (int j = 0; j < n; ++j) {
        std::swap(w(k, j), w(piv, j));
        std::swap(inv(k, j), inv(piv, j));
      }
    }
    Rat inv_p = Rat(1) / w(k, k);
    for (int j = 0; j < n; ++j) {
      w(k, j) *= inv_p;
      inv(k, j) *= inv_p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || w(i, k) == 0) continue;
      Rat f = w(i, k);
      for (int j = 0; j < n; ++j) {
        w(i, j) -= f * w(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

RVec solve_linear(const RatMat& m, const RVec& b) {
  if (m.rows != static_cast<int>(b.size())) throw ValidationError("solve: shape mismatch");
  // Gauss elimination on the augmented matrix; detects inconsistent and
  // underdetermined systems.
  int rows = m.rows, cols = m.cols;
  RatMat w(rows, cols + 1);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) w(i, j) = m(i, j);
    w(i, cols) = b[i];
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (w(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = c; j <= cols; ++j) std::swap(w(r, j), w(piv, j));
    Rat inv_p = Rat(1) / w(r, c);
    for (int j = c; j <= cols; ++j) w(r, j) *= inv_p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || w(i, c) == 0) continue;
      Rat f = w(i, c);
      for (int j = c; j <= cols; ++j) w(i, j) -= f * w(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (w(i, cols) != 0) throw ValidationError("solve: inconsistent system");
  if (r < cols) throw ValidationError("solve: underdetermined system");
  RVec x(cols);
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = w(i, cols);
  return x;
}

bool is_symmetric(const RatMat& m) {
  if (m.rows != m.cols) return false;
  for (int i = 0; i < m.rows; ++i)
    for (int j = i + 1; j < m.cols; ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

bool is_positive_definite(const RatMat& m) {
  if (m.rows != m.cols) throw ValidationError("is_positive_definite: matrix not square");
  if (!is_symmetric(m)) throw ValidationError("is_positive_definite: matrix not symmetric");
  int n = m.rows;
  // Scale by the positive common denominator; definiteness is unchanged.
  Int d = denominator_lcm(m);
  IntMat w(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat e = m(i, j) * d;
      w(i, j) = e.get_num();
    }
  // After step k, w(k,k) equals the (k+1)-st leading principal minor of the
  // scaled matrix, so all pivots positive <=> positive definite.
  Int prev = 1;
  for (int k = 0; k < n; ++k) {
    if (w(k, k) <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
      }
      w(i, k) = 0;
    }
    prev = w(k, k);
  }
  return true;
}

Form::Form(RatMat g) : n(g.rows), gram(std::move(g)) {
  if (gram.rows != gram.cols || gram.rows == 0)
    throw ValidationError("form: gram matrix must be square and nonempty");
  if (!is_symmetric(gram)) throw ValidationError("form: gram matrix not symmetric");
  if (!is_positive_definite(gram)) throw ValidationError("form: gram matrix not positive definite");
}

Unimodular::Unimodular(IntMat m) : n(m.rows), mat(std::move(m)) {
  if (mat.rows != mat.cols || mat.rows == 0)
    throw ValidationError("unimodular: matrix must be square and nonempty");
  Int d = det(mat);
  if (d != 1 && d != -1) throw ValidationError("unimodular: determinant is not +-1");
}

Rat evaluate(const Form& a, const IVec& x) {
  if (static_cast<int>(x.size()) != a.n) throw ValidationError("evaluate: dimension mismatch");
  Rat s;
  for (int i = 0; i < a.n; ++i) {
    if (x[i] == 0) continue;
    Rat row;
    for (int j = 0; j < a.n; ++j) {
      if (x[j] == 0) continue;
      row += a.gram(i, j) * x[j];
    }
    s += row * x[i];
  }
  return s;
}

Rat evaluate(const Form& a, const RVec& x) {
  if (static_cast<int>(x.size()) != a.n) throw ValidationError("evaluate: dimension mismatch");
  Rat s;
  for (int i = 0; i < a.n; ++i) {
    if (x[i] == 0) continue;
    Rat row;
    for (int j = 0; j < a.n; ++j) {
      if (x[j] == 0) continue;
      row += a.gram(i, j) * x[j];
    }
    s += row * x[i];
  }
  return s;
}

Form conjugate(const Form& a, const IntMat& u) {
  RatMat ur = to_rat(u);
  return Form(mat_mul(mat_mul(transpose(ur), a.gram), ur));
}

IntMat int_inverse_unimodular(const IntMat& u) {
  RatMat inv = inverse(to_rat(u));
  return to_int(inv);
}

Int denominator_lcm(const RatMat& m) {
  Int d = 1;
  for (const Rat& e : m.a) d = lcm(d, e.get_den());
  return d;
}

}  // namespace canform
