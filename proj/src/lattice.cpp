#include "canform/lattice.hpp"

namespace canform {

namespace {

// 2x2 unimodular row block [[p, q], [u, v]] applied to rows (i, j) of w,
// with the matching updates keeping q = u_acc * w and uinv_acc = u_acc^{-1}.
// The transforms are optional: span computations over large vector sets
// only need H, and an m x m transform would dwarf the input there.
struct HnfState {
  IntMat w;
  IntMat u;     // empty when transforms are not tracked
  IntMat uinv;  // ditto
};

void row_combine(HnfState& s, int i, int j, const Int& p, const Int& q, const Int& u,
                 const Int& v) {
  int cols = s.w.cols;
  for (int c = 0; c < cols; ++c) {
    Int wi = p * s.w(i, c) + q * s.w(j, c);
    Int wj = u * s.w(i, c) + v * s.w(j, c);
    s.w(i, c) = wi;
    s.w(j, c) = wj;
  }
  int m = s.u.rows;
  // block determinant is 1, so the inverse block is [[v, -q], [-u, p]]
  for (int r = 0; r < m; ++r) {
    Int ui = v * s.u(r, i) - u * s.u(r, j);
    Int uj = -q * s.u(r, i) + p * s.u(r, j);
    s.u(r, i) = ui;
    s.u(r, j) = uj;
  }
  for (int c = 0; c < m; ++c) {
    Int vi = p * s.uinv(i, c) + q * s.uinv(j, c);
    Int vj = u * s.uinv(i, c) + v * s.uinv(j, c);
    s.uinv(i, c) = vi;
    s.uinv(j, c) = vj;
  }
}

// w_i -= f * w_j
void row_subtract(HnfState& s, int i, int j, const Int& f) {
  if (f == 0) return;
  for (int c = 0; c < s.w.cols; ++c) s.w(i, c) -= f * s.w(j, c);
  for (int r = 0; r < s.u.rows; ++r) s.u(r, j) += f * s.u(r, i);
  for (int c = 0; c < s.u.rows; ++c) s.uinv(i, c) -= f * s.uinv(j, c);
}

void row_negate(HnfState& s, int i) {
  for (int c = 0; c < s.w.cols; ++c) s.w(i, c) = -s.w(i, c);
  for (int r = 0; r < s.u.rows; ++r) s.u(r, i) = -s.u(r, i);
  for (int c = 0; c < s.u.rows; ++c) s.uinv(i, c) = -s.uinv(i, c);
}

int hnf_eliminate(HnfState& s) {
  int m = s.w.rows, n = s.w.cols;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    // fold everything below `row` into position (row, col) via gcd steps
    for (int i = row + 1; i < m; ++i) {
      if (s.w(i, col) == 0) continue;
      XgcdResult e = xgcd(s.w(row, col), s.w(i, col));
      Int a_g = s.w(row, col) / e.g;
      Int b_g = s.w(i, col) / e.g;
      row_combine(s, row, i, e.x, e.y, -b_g, a_g);
    }
    if (s.w(row, col) == 0) continue;
    if (s.w(row, col) < 0) row_negate(s, row);
    const Int& pivot = s.w(row, col);
    for (int k = 0; k < row; ++k) {
      Int f = floor_div(s.w(k, col), pivot);
      row_subtract(s, k, row, f);
    }
    ++row;
  }
  return row;
}

}  // namespace

HnfResult hnf(const IntMat& q) {
  HnfState s{q, IntMat::identity(q.rows), IntMat::identity(q.rows)};
  int rank = hnf_eliminate(s);
  return {std::move(s.w), std::move(s.u), std::move(s.uinv), rank};
}

HnfNoTransform hnf_matrix(const IntMat& q) {
  HnfState s{q, IntMat(0, 0), IntMat(0, 0)};
  int rank = hnf_eliminate(s);
  return {std::move(s.w), rank};
}

IntMat right_kernel(const IntMat& m) {
  int n = m.cols;
  HnfResult r = hnf(transpose(m));
  int d = n - r.rank;
  IntMat k(n, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < n; ++i) k(i, j) = r.u_inv(r.rank + j, i);
  return k;
}

Sublattice span_basis(const IntMat& columns) {
  int n = columns.rows;
  HnfNoTransform r = hnf_matrix(transpose(columns));
  Sublattice l;
  l.ambient = n;
  l.rank = r.rank;
  l.basis = IntMat(n, r.rank);
  for (int j = 0; j < r.rank; ++j)
    for (int i = 0; i < n; ++i) l.basis(i, j) = r.h(j, i);
  return l;
}

Sublattice span_basis(const VectorSet& v) {
  if (v.size() == 0) throw ValidationError("span_basis: empty vector set");
  return span_basis(columns_matrix(v));
}

Sublattice saturate(const IntMat& columns) {
  Sublattice sp = span_basis(columns);
  IntMat complement = right_kernel(transpose(sp.basis));
  IntMat sat = right_kernel(transpose(complement));
  return span_basis(sat);
}

Sublattice saturate(const VectorSet& v) {
  if (v.size() == 0) throw ValidationError("saturate: empty vector set");
  return saturate(columns_matrix(v));
}

std::vector<IVec> coset_reps(const Sublattice& l) {
  if (l.rank != l.ambient) throw ValidationError("coset_reps: sublattice not full rank");
  int n = l.ambient;
  HnfResult r = hnf(transpose(l.basis));
  if (r.rank != n) throw ValidationError("coset_reps: basis columns not independent");
  // full rank square HNF is upper triangular with positive diagonal
  std::vector<Int> box(n);
  Int count = 1;
  for (int i = 0; i < n; ++i) {
    box[i] = r.h(i, i);
    count *= box[i];
  }
  if (!count.fits_slong_p() || count.get_si() > 50'000'000)
    throw ValidationError("coset_reps: index too large to enumerate");
  std::vector<IVec> reps;
  reps.reserve(count.get_ui());
  IVec cur(n, Int(0));
  while (true) {
    reps.push_back(cur);
    int i = n - 1;
    while (i >= 0) {
      cur[i] += 1;
      if (cur[i] < box[i]) break;
      cur[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return reps;
}

Projection project_orthogonal(const Form& a, const Sublattice& l1) {
  int n = a.n, r = l1.rank;
  if (r >= n) throw ValidationError("project_orthogonal: sublattice has full rank");
  if (l1.ambient != n) throw ValidationError("project_orthogonal: ambient dimension mismatch");
  RatMat b1 = to_rat(l1.basis);
  RatMat b1t_a = mat_mul(transpose(b1), a.gram);
  RatMat g1 = mat_mul(b1t_a, b1);
  // proj(x) = x - B1 (B1^T A B1)^{-1} B1^T A x, applied to the standard basis
  RatMat p = mat_mul(b1, mat_mul(inverse(g1), b1t_a));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p(i, j) = (i == j ? Rat(1) : Rat(0)) - p(i, j);
  Int d = denominator_lcm(p);
  IntMat scaled(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scaled(i, j) = Rat(p(i, j) * d).get_num();
  Sublattice l2 = span_basis(scaled);
  if (l2.rank != n - r) throw ValidationError("project_orthogonal: unexpected projected rank");
  RatMat b2(n, n - r);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n - r; ++j) b2(i, j) = make_rat(l2.basis(i, j), d);
  Form a2(mat_mul(mat_mul(transpose(b2), a.gram), b2));
  return {std::move(b2), std::move(a2)};
}

}  // namespace canform
