#include "canform/enumerate.hpp"

#include <memory>

namespace canform {

namespace {

// Exact Gram-Schmidt data of a positive definite Gram matrix:
// b_i = b*_i + sum_{j<i} mu[i][j] b*_j,  b[i] = |b*_i|^2 > 0.
struct Gso {
  int n = 0;
  std::vector<RVec> mu;  // lower triangular, mu[i][j] for j < i
  RVec b;
};

Gso compute_gso(const RatMat& g) {
  int n = g.rows;
  Gso s;
  s.n = n;
  s.mu.assign(n, RVec(n));
  s.b.assign(n, Rat());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      Rat m = g(i, j);
      for (int k = 0; k < j; ++k) m -= s.mu[j][k] * s.mu[i][k] * s.b[k];
      s.mu[i][j] = m / s.b[j];
    }
    Rat bi = g(i, i);
    for (int k = 0; k < i; ++k) bi -= s.mu[i][k] * s.mu[i][k] * s.b[k];
    s.b[i] = bi;
  }
  return s;
}

// column op b_k += c * b_j on the Gram matrix (C = I + c E_{jk}, G <- C^T G C)
void gram_translate(RatMat& g, int k, int j, const Int& c) {
  int n = g.rows;
  Rat cr(c);
  Rat gkk = g(k, k) + 2 * cr * g(k, j) + cr * cr * g(j, j);
  for (int y = 0; y < n; ++y) {
    if (y == k) continue;
    g(k, y) += cr * g(j, y);
    g(y, k) = g(k, y);
  }
  g(k, k) = gkk;
}

void gram_swap(RatMat& g, int i, int j) {
  int n = g.rows;
  for (int y = 0; y < n; ++y) std::swap(g(i, y), g(j, y));
  for (int y = 0; y < n; ++y) std::swap(g(y, i), g(y, j));
}

// Fincke-Pohst over the GSO coordinates, exact; candidate values per level
// explored nearest-to-center first (ties toward the larger value), so the
// admissible interval is scanned without any square roots.
struct Enumerator {
  const Gso& gso;
  RVec center;       // target in lattice coordinates
  bool shrink;       // keep only minimizers, tightening the bound
  bool exclude_zero; // ignore x = 0 (SVP)
  Rat bound;         // current bound (inclusive)
  std::vector<std::pair<IVec, Rat>> out;

  IVec x;
  RVec y;  // x_i - center_i for the levels already set

  Enumerator(const Gso& s, RVec c, const Rat& b, bool shr, bool ex0)
      : gso(s), center(std::move(c)), shrink(shr), exclude_zero(ex0), bound(b) {
    x.assign(gso.n, Int(0));
    y.assign(gso.n, Rat(0));
  }

  void run() { descend(gso.n - 1, Rat(0)); }

  // partial = sum over levels > i of b_t z_t^2
  void descend(int i, const Rat& partial) {
    if (i < 0) {
      emit(partial);
      return;
    }
    // t_i = sum_{j>i} mu[j][i] * y_j
    Rat t;
    for (int j = i + 1; j < gso.n; ++j) {
      if (y[j] != 0) t += gso.mu[j][i] * y[j];
    }
    Rat c = center[i] - t;  // admissible x_i cluster around c
    Int first = rat_round(c);
    // nearest candidate, then zig-zag outward
    Int up = first + 1, down = first - 1;
    if (!try_level(i, first, c, partial)) {
      // even the nearest integer violates the bound at this level
      return;
    }
    bool up_open = true, down_open = true;
    while (up_open || down_open) {
      bool take_up;
      if (up_open && down_open) {
        Rat du = Rat(up) - c;
        Rat dd = c - Rat(down);
        take_up = du <= dd;  // tie: the larger value first
      } else {
        take_up = up_open;
      }
      if (take_up) {
        if (try_level(i, up, c, partial))
          ++up;
        else
          up_open = false;
      } else {
        if (try_level(i, down, c, partial))
          --down;
        else
          down_open = false;
      }
    }
  }

  // returns false once v falls outside the admissible interval at level i
  bool try_level(int i, const Int& v, const Rat& c, const Rat& partial) {
    Rat z = Rat(v) - c;
    Rat contrib = gso.b[i] * z * z;
    Rat total = partial + contrib;
    if (total > bound) return false;
    x[i] = v;
    y[i] = Rat(v) - center[i];
    descend(i - 1, total);
    return true;
  }

  void emit(const Rat& value) {
    if (exclude_zero) {
      bool zero = true;
      for (const Int& e : x)
        if (e != 0) {
          zero = false;
          break;
        }
      if (zero) return;
    }
    if (shrink) {
      if (value < bound) {
        bound = value;
        out.clear();
      } else if (value > bound) {
        return;
      }
    }
    out.emplace_back(x, value);
  }
};

struct Reduced {
  Form form;       // U^T A U
  IntMat u;        // original = U * reduced coords
  RatMat u_inv_r;  // rational inverse of u
  Gso gso;
};

Reduced reduce_for_enum(const Form& a) {
  LllResult r = lll_reduce(a);
  Reduced red{r.reduced, r.u.mat, inverse(to_rat(r.u.mat)), compute_gso(r.reduced.gram)};
  return red;
}

IVec map_back(const IntMat& u, const IVec& x) {
  int n = u.rows;
  IVec v(n, Int(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (x[j] != 0) v[i] += u(i, j) * x[j];
  return v;
}

}  // namespace

LllResult lll_reduce(const Form& a) {
  int n = a.n;
  RatMat g = a.gram;
  IntMat u = IntMat::identity(n);
  Gso s = compute_gso(g);
  const Rat delta(3, 4);

  auto translate = [&](int k, int j, const Int& c) {
    if (c == 0) return;
    gram_translate(g, k, j, c);
    for (int r = 0; r < n; ++r) u(r, k) += c * u(r, j);
    // b_k <- b_k + c b_j changes only row k of mu
    for (int t = 0; t < j; ++t) s.mu[k][t] += Rat(c) * s.mu[j][t];
    s.mu[k][j] += Rat(c);
  };

  int k = 1;
  while (k < n) {
    translate(k, k - 1, -rat_round(s.mu[k][k - 1]));
    if (s.b[k] >= (delta - s.mu[k][k - 1] * s.mu[k][k - 1]) * s.b[k - 1]) {
      for (int j = k - 2; j >= 0; --j) translate(k, j, -rat_round(s.mu[k][j]));
      ++k;
    } else {
      gram_swap(g, k - 1, k);
      for (int r = 0; r < n; ++r) std::swap(u(r, k - 1), u(r, k));
      s = compute_gso(g);
      k = std::max(k - 1, 1);
    }
  }
  return {Form(g), Unimodular(u)};
}

SvpResult shortest_vectors(const Form& a) {
  Reduced red = reduce_for_enum(a);
  int n = a.n;
  Rat bound = red.form.gram(0, 0);
  for (int i = 1; i < n; ++i) bound = std::min(bound, red.form.gram(i, i));
  Enumerator e(red.gso, RVec(n, Rat(0)), bound, /*shrink=*/true, /*exclude_zero=*/true);
  e.run();
  std::vector<IVec> vecs;
  vecs.reserve(e.out.size());
  for (auto& [x, val] : e.out) vecs.push_back(map_back(red.u, x));
  return {e.bound, VectorSet::from_unsorted(n, std::move(vecs))};
}

std::vector<std::pair<IVec, Rat>> vectors_up_to_valued(const Form& a, const Rat& lambda) {
  if (lambda <= 0) return {};
  Reduced red = reduce_for_enum(a);
  int n = a.n;
  Enumerator e(red.gso, RVec(n, Rat(0)), lambda, /*shrink=*/false, /*exclude_zero=*/true);
  e.run();
  std::vector<std::pair<IVec, Rat>> res;
  res.reserve(e.out.size());
  for (auto& [x, val] : e.out) res.emplace_back(map_back(red.u, x), val);
  std::sort(res.begin(), res.end(),
            [](const auto& p, const auto& q) { return lex_less(p.first, q.first); });
  return res;
}

VectorSet vectors_up_to(const Form& a, const Rat& lambda) {
  auto valued = vectors_up_to_valued(a, lambda);
  std::vector<IVec> vecs;
  vecs.reserve(valued.size());
  for (auto& [x, val] : valued) vecs.push_back(std::move(x));
  return VectorSet::from_unsorted(a.n, std::move(vecs));
}

struct CvpSolver::Impl {
  int n;
  Reduced red;
};

CvpSolver::CvpSolver(const Form& a) : impl_(std::make_shared<Impl>(Impl{a.n, reduce_for_enum(a)})) {}

CvpResult CvpSolver::closest(const RVec& target) const {
  const Impl& im = *impl_;
  if (static_cast<int>(target.size()) != im.n)
    throw ValidationError("closest_vectors: dimension mismatch");
  RVec c = mat_vec(im.red.u_inv_r, target);
  int n = im.n;
  // rounding the target gives a valid (usually decent) initial radius
  IVec x0(n);
  RVec d0(n);
  for (int i = 0; i < n; ++i) {
    x0[i] = rat_round(c[i]);
    d0[i] = Rat(x0[i]) - c[i];
  }
  Rat bound;
  for (int i = 0; i < n; ++i) {
    if (d0[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (d0[j] == 0) continue;
      bound += im.red.form.gram(i, j) * d0[i] * d0[j];
    }
  }
  Enumerator e(im.red.gso, c, bound, /*shrink=*/true, /*exclude_zero=*/false);
  e.run();
  std::vector<IVec> closest;
  closest.reserve(e.out.size());
  for (auto& [x, val] : e.out) closest.push_back(map_back(im.red.u, x));
  std::sort(closest.begin(), closest.end(), lex_less);
  if (closest.empty()) throw ValidationError("closest_vectors: internal enumeration failure");
  return {e.bound, std::move(closest)};
}

CvpResult closest_vectors(const Form& a, const RVec& target) {
  return CvpSolver(a).closest(target);
}

}  // namespace canform
