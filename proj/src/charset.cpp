#include "canform/charset.hpp"

namespace canform {

const char* charset_name(CharsetKind k) {
  switch (k) {
    case CharsetKind::PS: return "ps";
    case CharsetKind::MS: return "ms";
    case CharsetKind::CV: return "cv";
    case CharsetKind::VOR: return "vor";
  }
  return "?";
}

CharsetKind charset_from_name(const std::string& name) {
  if (name == "ps") return CharsetKind::PS;
  if (name == "ms") return CharsetKind::MS;
  if (name == "cv") return CharsetKind::CV;
  if (name == "vor") return CharsetKind::VOR;
  throw ValidationError("unknown charset kind: " + name);
}

namespace {

Rat maxdiag(const Form& a) {
  Rat m = a.gram(0, 0);
  for (int i = 1; i < a.n; ++i)
    if (a.gram(i, i) > m) m = a.gram(i, i);
  return m;
}

bool spans_zn(int n, const std::vector<IVec>& vecs) {
  if (vecs.empty()) return false;
  Sublattice l = span_basis(columns_matrix(n, vecs));
  if (l.rank != n) return false;
  Int d = det(l.basis);
  return d == 1 || d == -1;
}

IVec mat_vec_int(const IntMat& m, const IVec& v) {
  IVec r(m.rows, Int(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (v[j] != 0) r[i] += m(i, j) * v[j];
  return r;
}

}  // namespace

VectorSet charset_ps(const Form& a) { return vectors_up_to(a, maxdiag(a)); }

VectorSet charset_ms(const Form& a) {
  int n = a.n;
  LllResult red = lll_reduce(a);
  // Grow the bound geometrically until the vectors span, then binary-search
  // down over the attained values. Min_A'(maxdiag(A')) contains the reduced
  // standard basis, so maxdiag is a guaranteed (if sometimes very large)
  // cap; the growth phase keeps the enumeration near lambda_min instead.
  Rat cap = maxdiag(red.reduced);
  Rat bound = red.reduced.gram(0, 0);
  for (int i = 1; i < n; ++i) bound = std::min(bound, red.reduced.gram(i, i));
  std::vector<std::pair<IVec, Rat>> valued;
  while (true) {
    valued = vectors_up_to_valued(red.reduced, bound);
    std::vector<IVec> all;
    all.reserve(valued.size());
    for (auto& [v, val] : valued) all.push_back(v);
    if (spans_zn(n, all)) break;
    if (bound >= cap) throw ValidationError("charset_ms: cap bound does not span (internal)");
    bound = std::min(Rat(bound * 2), cap);
  }

  std::vector<Rat> values;
  values.reserve(valued.size());
  for (auto& [v, val] : valued) values.push_back(val);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  auto spans_below = [&](const Rat& lambda) {
    std::vector<IVec> sub;
    for (auto& [v, val] : valued)
      if (val <= lambda) sub.push_back(v);
    return spans_zn(n, sub);
  };

  size_t lo = 0, hi = values.size() - 1;
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    if (spans_below(values[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  const Rat& lambda_min = values[lo];

  std::vector<IVec> out;
  for (auto& [v, val] : valued)
    if (val <= lambda_min) out.push_back(mat_vec_int(red.u.mat, v));
  return VectorSet::from_unsorted(n, std::move(out));
}

namespace {

VectorSet wrcv_impl(const Form& a, const VectorSet& min_vecs, const IntMat& basis) {
  int n = a.n;
  std::vector<IVec> out = min_vecs.vecs;
  Sublattice l{n, basis, n};
  std::vector<IVec> reps = coset_reps(l);
  if (reps.size() > 1) {
    RatMat b = to_rat(basis);
    Form ab(mat_mul(mat_mul(transpose(b), a.gram), b));
    RatMat b_inv = inverse(b);
    CvpSolver solver(ab);
    for (const IVec& c : reps) {
      bool zero = true;
      for (const Int& e : c)
        if (e != 0) {
          zero = false;
          break;
        }
      if (zero) continue;
      RVec cr(n);
      for (int i = 0; i < n; ++i) cr[i] = Rat(c[i]);
      CvpResult cv = solver.closest(mat_vec(b_inv, cr));
      for (const IVec& s : cv.closest) {
        IVec x = mat_vec_int(basis, s);
        for (int i = 0; i < n; ++i) x[i] = c[i] - x[i];
        out.push_back(std::move(x));
      }
    }
  }
  // drop 0 if a coset minimizer produced it (it cannot, but keep the set clean)
  std::erase_if(out, [](const IVec& v) {
    for (const Int& e : v)
      if (e != 0) return false;
    return true;
  });
  return VectorSet::from_unsorted(n, std::move(out));
}

}  // namespace

VectorSet charset_wrcv(const Form& a) {
  SvpResult sv = shortest_vectors(a);
  Sublattice l = span_basis(columns_matrix(sv.vectors));
  if (l.rank != a.n) throw ValidationError("charset_wrcv: form is not well-rounded");
  return wrcv_impl(a, sv.vectors, l.basis);
}

VectorSet charset_wrcv_with_basis(const Form& a, const IntMat& basis) {
  SvpResult sv = shortest_vectors(a);
  if (basis.rows != a.n || basis.cols != a.n)
    throw ValidationError("charset_wrcv_with_basis: basis must be n x n");
  return wrcv_impl(a, sv.vectors, basis);
}

VectorSet charset_cv(const Form& a) {
  int n = a.n;
  SvpResult sv = shortest_vectors(a);
  Sublattice sp = span_basis(columns_matrix(sv.vectors));
  int r = sp.rank;

  std::vector<IVec> out;
  if (r == n) {
    // saturation of a full-rank sublattice is Z^n itself
    VectorSet w = wrcv_impl(a, sv.vectors, sp.basis);
    out = std::move(w.vecs);
  } else {
    Sublattice l1 = saturate(columns_matrix(sv.vectors));
    RatMat b1 = to_rat(l1.basis);
    Form a1(mat_mul(mat_mul(transpose(b1), a.gram), b1));
    VectorSet w1 = charset_wrcv(a1);
    for (const IVec& w : w1.vecs) out.push_back(mat_vec_int(l1.basis, w));

    Projection proj = project_orthogonal(a, l1);
    VectorSet v2 = charset_cv(proj.a2);
    CvpSolver solver(a);
    for (const IVec& u : v2.vecs) {
      RVec target(n, Rat(0));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n - r; ++j)
          if (u[j] != 0) target[i] += proj.basis_l2(i, j) * u[j];
      CvpResult cv = solver.closest(target);
      for (const IVec& x : cv.closest) out.push_back(x);
    }
  }
  std::erase_if(out, [](const IVec& v) {
    for (const Int& e : v)
      if (e != 0) return false;
    return true;
  });
  return VectorSet::from_unsorted(n, std::move(out));
}

VectorSet charset_vor(const Form& a) {
  int n = a.n;
  if (n > 24) throw ValidationError("charset_vor: dimension too large for 2^n coset sweep");
  CvpSolver solver(a);
  std::vector<IVec> out;
  std::vector<int> c(n, 0);
  // all nonzero classes of Z^n / 2Z^n, lexicographic
  while (true) {
    int i = n - 1;
    while (i >= 0 && c[i] == 1) c[i--] = 0;
    if (i < 0) break;
    c[i] = 1;
    RVec target(n);
    for (int j = 0; j < n; ++j) target[j] = Rat(-c[j], 2);
    CvpResult cv = solver.closest(target);
    if (cv.closest.size() != 2) continue;
    IVec x0(n), x1(n);
    for (int j = 0; j < n; ++j) {
      x0[j] = c[j] + 2 * cv.closest[0][j];
      x1[j] = c[j] + 2 * cv.closest[1][j];
    }
    bool antipodal = true;
    for (int j = 0; j < n; ++j)
      if (x0[j] != -x1[j]) {
        antipodal = false;
        break;
      }
    if (!antipodal) continue;
    out.push_back(std::move(x0));
    out.push_back(std::move(x1));
  }
  return VectorSet::from_unsorted(n, std::move(out));
}

VectorSet charset(const Form& a, CharsetKind kind) {
  switch (kind) {
    case CharsetKind::PS: return charset_ps(a);
    case CharsetKind::MS: return charset_ms(a);
    case CharsetKind::CV: return charset_cv(a);
    case CharsetKind::VOR: return charset_vor(a);
  }
  throw ValidationError("charset: unknown kind");
}

}  // namespace canform
