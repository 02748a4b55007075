#include "doctest.h"
#include "canform/lattice.hpp"
#include "canform/random.hpp"
#include "helpers.hpp"

using namespace canform;
using namespace canform::test;

namespace {

bool hnf_conditions_hold(const IntMat& h, int rank) {
  int last_pivot = -1;
  for (int i = 0; i < h.rows; ++i) {
    int pivot = -1;
    for (int j = 0; j < h.cols; ++j)
      if (h(i, j) != 0) {
        pivot = j;
        break;
      }
    if (i < rank) {
      if (pivot < 0) return false;            // (i) nonzero
      if (pivot <= last_pivot) return false;  // (ii) strictly increasing
      if (h(i, pivot) <= 0) return false;     // (iii) positive pivot
      for (int k = 0; k < i; ++k)             // (iv) reduced above
        if (h(k, pivot) < 0 || h(k, pivot) >= h(i, pivot)) return false;
      last_pivot = pivot;
    } else {
      if (pivot >= 0) return false;  // (i) zero tail
    }
  }
  return true;
}

// Independent slow oracle: row reduction with repeated subtraction only.
IntMat naive_hnf(IntMat w) {
  int m = w.rows, n = w.cols;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    while (true) {
      int piv = -1;
      Int best;
      for (int i = row; i < m; ++i) {
        if (w(i, col) == 0) continue;
        Int a = abs(w(i, col));
        if (piv < 0 || a < best) {
          piv = i;
          best = a;
        }
      }
      if (piv < 0) break;
      if (piv != row)
        for (int j = 0; j < n; ++j) std::swap(w(row, j), w(piv, j));
      bool done = true;
      for (int i = row + 1; i < m; ++i) {
        if (w(i, col) == 0) continue;
        Int q = w(i, col) / w(row, col);
        for (int j = 0; j < n; ++j) w(i, j) -= q * w(row, j);
        if (w(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (w(row, col) == 0) continue;
    if (w(row, col) < 0)
      for (int j = 0; j < n; ++j) w(row, j) = -w(row, j);
    for (int k = 0; k < row; ++k) {
      Int q = floor_div(w(k, col), w(row, col));
      for (int j = 0; j < n; ++j) w(k, j) -= q * w(row, j);
    }
    ++row;
  }
  return w;
}

IntMat random_int_matrix(int rows, int cols, Rng& rng, long bound) {
  IntMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = static_cast<long>(rng.uniform(-bound, bound));
  return m;
}

}  // namespace

TEST_CASE("hnf identity") {
  HnfResult r = hnf(IntMat::identity(3));
  CHECK(r.h == IntMat::identity(3));
  CHECK(r.u == IntMat::identity(3));
  CHECK(r.rank == 3);
}

TEST_CASE("hnf of signed standard columns") {
  // columns e1, -e1, e2, -e2
  IntMat q = int_mat(2, 4, {1, -1, 0, 0, 0, 0, 1, -1});
  HnfResult r = hnf(q);
  CHECK(r.rank == 2);
  CHECK(q == mat_mul(r.u, r.h));
  CHECK(hnf_conditions_hold(r.h, r.rank));
  CHECK(r.h == int_mat(2, 4, {1, -1, 0, 0, 0, 0, 1, -1}));
  Int d = det(r.u);
  CHECK((d == 1 || d == -1));
}

TEST_CASE("hnf matches naive oracle and is unique") {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int m = 2 + static_cast<int>(rng.uniform(0, 2));
    int n = 2 + static_cast<int>(rng.uniform(0, 2));
    IntMat q = random_int_matrix(m, n, rng, 9);
    HnfResult r = hnf(q);
    CHECK(q == mat_mul(r.u, r.h));
    CHECK(hnf_conditions_hold(r.h, r.rank));
    CHECK(r.h == naive_hnf(q));
    CHECK(mat_mul(r.u_inv, q) == r.h);
    // uniqueness under unimodular left multiplication
    Unimodular w = random_unimodular(m, rng, 8);
    CHECK(hnf(mat_mul(w.mat, q)).h == r.h);
  }
}

TEST_CASE("hnf idempotence") {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    IntMat q = random_int_matrix(3, 4, rng, 6);
    HnfResult r = hnf(q);
    CHECK(hnf(r.h).h == r.h);
  }
}

TEST_CASE("span_basis examples") {
  Sublattice l = span_basis(vset(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
  CHECK(l.rank == 2);
  CHECK(l.basis == IntMat::identity(2));

  Sublattice l2 = span_basis(vset(2, {{2, 0}}));
  CHECK(l2.rank == 1);
  CHECK(l2.basis == int_mat(2, 1, {2, 0}));

  Sublattice l3 = span_basis(vset(2, {{1, 1}, {1, -1}}));
  CHECK(l3.rank == 2);
  Int d = det(l3.basis);
  CHECK((d == 2 || d == -2));
}

TEST_CASE("saturate examples") {
  CHECK(saturate(vset(2, {{2, 0}})).basis == int_mat(2, 1, {1, 0}));
  CHECK(saturate(vset(2, {{1, 1}, {1, -1}})).basis == IntMat::identity(2));
  CHECK(saturate(vset(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).basis == IntMat::identity(3));
  // saturation is idempotent
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    IntMat cols = random_int_matrix(3, 2, rng, 5);
    Sublattice s = saturate(cols);
    if (s.rank == 0) continue;
    Sublattice s2 = saturate(s.basis);
    CHECK(s2.basis == s.basis);
  }
}

TEST_CASE("coset representatives") {
  Sublattice zn{2, IntMat::identity(2), 2};
  auto reps = coset_reps(zn);
  REQUIRE(reps.size() == 1);
  CHECK(reps[0] == ivec({0, 0}));

  Sublattice two{2, int_mat(2, 2, {2, 0, 0, 1}), 2};
  auto reps2 = coset_reps(two);
  REQUIRE(reps2.size() == 2);
  CHECK(reps2[0] == ivec({0, 0}));
  CHECK(reps2[1] == ivec({1, 0}));

  Sublattice diag{2, int_mat(2, 2, {1, 1, 1, -1}), 2};
  auto reps3 = coset_reps(diag);
  REQUIRE(reps3.size() == 2);
  CHECK(reps3[0] == ivec({0, 0}));
  CHECK(reps3[1] == ivec({0, 1}));

  // count always matches |det|
  Rng rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    IntMat b = random_int_matrix(2, 2, rng, 4);
    Int d = det(b);
    if (d == 0) continue;
    Sublattice l{2, b, 2};
    CHECK(Int(static_cast<long>(coset_reps(l).size())) == abs(d));
  }
}

TEST_CASE("project_orthogonal examples") {
  Form i2 = form_of(2, {1, 0, 0, 1});
  Sublattice e1{2, int_mat(2, 1, {1, 0}), 1};
  Projection p = project_orthogonal(i2, e1);
  CHECK(p.a2.gram == rat_mat(1, 1, {1}));
  CHECK(abs(p.basis_l2(1, 0)) == 1);
  CHECK(p.basis_l2(0, 0) == 0);

  Form hex = form_of(2, {2, 1, 1, 2});
  Projection p2 = project_orthogonal(hex, e1);
  CHECK(p2.a2.gram(0, 0) == make_rat(3, 2));
  // the basis vector is +-(e2 - e1/2)
  CHECK(abs(p2.basis_l2(0, 0)) == make_rat(1, 2));
  CHECK(abs(p2.basis_l2(1, 0)) == 1);

  Form i3 = form_of(3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
  Sublattice e12{3, int_mat(3, 2, {1, 0, 0, 1, 0, 0}), 2};
  CHECK(project_orthogonal(i3, e12).a2.gram == rat_mat(1, 1, {1}));

  CHECK_THROWS_AS(project_orthogonal(i2, Sublattice{2, IntMat::identity(2), 2}), ValidationError);
}

TEST_CASE("projection is A-orthogonal to the sublattice") {
  Rng rng(29);
  for (int trial = 0; trial < 15; ++trial) {
    Form a = random_form(3, rng);
    IntMat cols = random_int_matrix(3, 1, rng, 3);
    bool zero = true;
    for (const Int& e : cols.a)
      if (e != 0) zero = false;
    if (zero) continue;
    Sublattice l1 = saturate(cols);
    if (l1.rank != 1) continue;
    Projection p = project_orthogonal(a, l1);
    RatMat check = mat_mul(mat_mul(transpose(to_rat(l1.basis)), a.gram), p.basis_l2);
    for (const Rat& e : check.a) CHECK(e == 0);
  }
}
