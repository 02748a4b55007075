#include "canform/random.hpp"

#include "canform/lattice.hpp"
#include "canform/symplectic.hpp"

namespace canform {

Form random_form(int n, Rng& rng) {
  while (true) {
    IntMat b(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b(i, j) = static_cast<long>(rng.uniform(-n, n));
    if (det(b) == 0) continue;
    RatMat g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Int s = 0;
        for (int k = 0; k < n; ++k) s += b(k, i) * b(k, j);
        g(i, j) = Rat(s);
      }
    return Form(std::move(g));
  }
}

Unimodular random_unimodular(int n, Rng& rng, int words) {
  IntMat u = IntMat::identity(n);
  if (n == 1) {
    if (rng.coin()) u(0, 0) = -1;
    return Unimodular(std::move(u));
  }
  for (int w = 0; w < words; ++w) {
    if (rng.uniform(0, 3) == 0) {
      // signed permutation: random transposition and a sign flip
      int i = static_cast<int>(rng.uniform(0, n - 1));
      int j = static_cast<int>(rng.uniform(0, n - 1));
      if (i != j)
        for (int r = 0; r < n; ++r) std::swap(u(r, i), u(r, j));
      int k = static_cast<int>(rng.uniform(0, n - 1));
      for (int r = 0; r < n; ++r) u(r, k) = -u(r, k);
    } else {
      int i = static_cast<int>(rng.uniform(0, n - 1));
      int j = static_cast<int>(rng.uniform(0, n - 1));
      if (i == j) continue;
      long q = static_cast<long>(rng.uniform(1, 3)) * (rng.coin() ? 1 : -1);
      // column op: col_j += q * col_i
      for (int r = 0; r < n; ++r) u(r, j) += q * u(r, i);
    }
  }
  return Unimodular(std::move(u));
}

IntMat random_symplectic(int half, Rng& rng, int words) {
  int dim = 2 * half;
  IntMat p = IntMat::identity(dim);
  for (int w = 0; w < words; ++w) {
    IntMat f = IntMat::identity(dim);
    switch (rng.uniform(0, 3)) {
      case 0: {  // [[I, S], [0, I]] with S symmetric
        for (int i = 0; i < half; ++i)
          for (int j = i; j < half; ++j) {
            long v = static_cast<long>(rng.uniform(-2, 2));
            f(i, half + j) = v;
            f(j, half + i) = v;
          }
        break;
      }
      case 1: {  // [[I, 0], [S, I]]
        for (int i = 0; i < half; ++i)
          for (int j = i; j < half; ++j) {
            long v = static_cast<long>(rng.uniform(-2, 2));
            f(half + i, j) = v;
            f(half + j, i) = v;
          }
        break;
      }
      case 2: {  // [[U, 0], [0, U^-T]]
        Unimodular u = random_unimodular(half, rng, 4);
        IntMat uinv_t = transpose(int_inverse_unimodular(u.mat));
        for (int i = 0; i < half; ++i)
          for (int j = 0; j < half; ++j) {
            f(i, j) = u.mat(i, j);
            f(half + i, half + j) = uinv_t(i, j);
          }
        break;
      }
      default: {  // J
        f = symplectic_j(half);
        break;
      }
    }
    p = mat_mul(p, f);
  }
  IntMat j = symplectic_j(half);
  IntMat check = mat_mul(mat_mul(transpose(p), j), p);
  if (check != j) throw ValidationError("random_symplectic: generator product not symplectic");
  return p;
}

std::vector<IVec> random_spanning_family(int dim, int count, Rng& rng) {
  if (count < dim) throw ValidationError("random_spanning_family: count < dim");
  while (true) {
    std::vector<IVec> family(count, IVec(dim, Int(0)));
    for (int i = 0; i < count; ++i)
      for (int k = 0; k < dim; ++k) family[i][k] = static_cast<long>(rng.uniform(-3, 3));
    Sublattice sp = span_basis(columns_matrix(dim, family));
    if (sp.rank != dim) continue;
    Int d = det(sp.basis);
    if (d == 1 || d == -1) return family;
  }
}

}  // namespace canform
