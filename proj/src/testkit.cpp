#include "canform/testkit.hpp"

namespace canform::testkit {

VectorSet brute_short_vectors(const Form& a, const Rat& lambda) {
  int n = a.n;
  if (lambda <= 0) return VectorSet(n);
  RatMat ainv = inverse(a.gram);
  std::vector<Int> bound(n);
  Int box_size = 1;
  for (int i = 0; i < n; ++i) {
    Rat r = lambda * ainv(i, i);
    bound[i] = sqrt_floor_rat(r);
    box_size *= 2 * bound[i] + 1;
    if (box_size > 20'000'000) throw ValidationError("brute_short_vectors: box too large");
  }
  std::vector<IVec> out;
  IVec x(n);
  for (int i = 0; i < n; ++i) x[i] = -bound[i];
  while (true) {
    bool zero = true;
    for (const Int& e : x)
      if (e != 0) {
        zero = false;
        break;
      }
    if (!zero && evaluate(a, x) <= lambda) out.push_back(x);
    int i = n - 1;
    while (i >= 0) {
      x[i] += 1;
      if (x[i] <= bound[i]) break;
      x[i] = -bound[i];
      --i;
    }
    if (i < 0) break;
  }
  return VectorSet::from_unsorted(n, std::move(out));
}

namespace {

void isometry_backtrack(const Form& a, const Form& b, const std::vector<IVec>& candidates,
                        std::vector<IVec>& cols, std::vector<Unimodular>& out) {
  int n = a.n;
  int k = static_cast<int>(cols.size());
  if (k == n) {
    IntMat u(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) u(i, j) = cols[j][i];
    Int d = det(u);
    if (d == 1 || d == -1) out.emplace_back(std::move(u));
    return;
  }
  for (const IVec& v : candidates) {
    if (evaluate(a, v) != b.gram(k, k)) continue;
    bool ok = true;
    for (int j = 0; j < k && ok; ++j) {
      Rat ip;
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          if (cols[j][r] != 0 && v[c] != 0) ip += a.gram(r, c) * cols[j][r] * v[c];
      if (ip != b.gram(j, k)) ok = false;
    }
    if (!ok) continue;
    cols.push_back(v);
    isometry_backtrack(a, b, candidates, cols, out);
    cols.pop_back();
  }
}

}  // namespace

std::vector<Unimodular> brute_isometries(const Form& a, const Form& b) {
  if (a.n != b.n) return {};
  Rat maxd = b.gram(0, 0);
  for (int i = 1; i < b.n; ++i)
    if (b.gram(i, i) > maxd) maxd = b.gram(i, i);
  VectorSet candidates = brute_short_vectors(a, maxd);
  std::vector<Unimodular> out;
  std::vector<IVec> cols;
  isometry_backtrack(a, b, candidates.vecs, cols, out);
  return out;
}

VectorSet brute_voronoi_relevant(const Form& a) {
  int n = a.n;
  // any relevant v is minimal in its class mod 2, so A[v] is at most the
  // largest value over the 0/1 representatives; the same bound suffices for
  // the competing half-spaces (triangle inequality in the A-norm)
  Rat box_bound;
  IVec c(n, Int(0));
  while (true) {
    Rat val = evaluate(a, c);
    if (val > box_bound) box_bound = val;
    int i = n - 1;
    while (i >= 0) {
      c[i] += 1;
      if (c[i] <= 1) break;
      c[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  VectorSet cand = brute_short_vectors(a, box_bound);
  std::vector<IVec> out;
  for (const IVec& v : cand.vecs) {
    RVec half(n);
    for (int i = 0; i < n; ++i) half[i] = Rat(v[i]) / 2;
    Rat dv = evaluate(a, half);
    bool relevant = true;
    for (const IVec& x : cand.vecs) {
      if (x == v) continue;
      RVec diff(n);
      for (int i = 0; i < n; ++i) diff[i] = half[i] - Rat(x[i]);
      if (evaluate(a, diff) <= dv) {
        relevant = false;
        break;
      }
    }
    if (relevant) out.push_back(v);
  }
  return VectorSet::from_unsorted(n, std::move(out));
}

}  // namespace canform::testkit
