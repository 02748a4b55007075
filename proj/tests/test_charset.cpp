#include "doctest.h"
#include "canform/charset.hpp"
#include "canform/random.hpp"
#include "canform/testkit.hpp"
#include "helpers.hpp"

using namespace canform;
using namespace canform::test;

namespace {

Form diag2(long a, long b) { return form_of(2, {a, 0, 0, b}); }

VectorSet map_set(const IntMat& u, const VectorSet& s) {
  std::vector<IVec> out;
  out.reserve(s.vecs.size());
  for (const IVec& v : s.vecs) out.push_back(mat_vec(u, v));
  return VectorSet::from_unsorted(s.n, std::move(out));
}

}  // namespace

TEST_CASE("charset_ps examples") {
  CHECK(charset_ps(form_of(2, {1, 0, 0, 1})) == vset(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
  CHECK(charset_ps(diag2(1, 5)).size() == 6);
  CHECK(charset_ps(form_of(2, {2, 1, 1, 2})).size() == 6);
}

TEST_CASE("charset_ms examples") {
  VectorSet ms9 = charset_ms(diag2(1, 9));
  CHECK(ms9 == vset(2, {{0, 1}, {0, -1}, {1, 0}, {-1, 0}, {2, 0}, {-2, 0}, {3, 0}, {-3, 0}}));

  CHECK(charset_ms(form_of(3, {1, 0, 0, 0, 1, 0, 0, 0, 1})).size() == 6);
  VectorSet hex = charset_ms(form_of(2, {2, 1, 1, 2}));
  CHECK(hex.size() == 6);
  // minimal vectors already span Z^2
  Sublattice l = span_basis(hex);
  CHECK(l.rank == 2);
  Int d = det(l.basis);
  CHECK((d == 1 || d == -1));
}

TEST_CASE("charset_ms size formula on diag(1, lambda)") {
  for (long lambda = 1; lambda <= 25; ++lambda) {
    long isq = static_cast<long>(sqrt_floor_rat(Rat(lambda)).get_si());
    CHECK(charset_ms(diag2(1, lambda)).size() == 2 + 2 * isq);
  }
}

TEST_CASE("charset_wrcv examples") {
  CHECK(charset_wrcv(form_of(2, {1, 0, 0, 1})) == vset(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
  CHECK_THROWS_AS(charset_wrcv(diag2(1, 5)), ValidationError);
}

TEST_CASE("charset_wrcv, index one: reduces to the minimal vectors") {
  Form a = form_of(2, {4, 2, 2, 2});  // Min = {+-(0,1), +-(1,-1)}, spans Z^2
  SvpResult sv = shortest_vectors(a);
  Sublattice l = span_basis(sv.vectors);
  REQUIRE(l.rank == 2);
  Int d = det(l.basis);
  REQUIRE((d == 1 || d == -1));
  CHECK(charset_wrcv(a) == sv.vectors);
}

TEST_CASE("charset_wrcv with an index-2 minimal lattice") {
  // A1^5 glued by the all-ones half vector (scaled by 2): minimum 4 with 10
  // minimal vectors spanning the index-2 sublattice {x : x5 even}; the odd
  // coset has 32 shortest vectors of length 5.
  Form a = form_of(5, {4, 0, 0, 0, 2,
                       0, 4, 0, 0, 2,
                       0, 0, 4, 0, 2,
                       0, 0, 0, 4, 2,
                       2, 2, 2, 2, 5});
  SvpResult sv = shortest_vectors(a);
  CHECK(sv.min == 4);
  REQUIRE(sv.vectors.size() == 10);
  Sublattice l = span_basis(sv.vectors);
  REQUIRE(l.rank == 5);
  CHECK(abs(det(l.basis)) == 2);

  VectorSet fast = charset_wrcv(a);
  CHECK(fast.size() == 42);
  // every vector of value <= 5 belongs to the set here, so the box oracle
  // reproduces it exactly
  CHECK(fast == testkit::brute_short_vectors(a, Rat(5)));
  Sublattice full = span_basis(fast);
  REQUIRE(full.rank == 5);
  Int df = det(full.basis);
  CHECK((df == 1 || df == -1));

  // basis independence (the defining set does not depend on the basis)
  IntMat alt = l.basis;
  for (int r = 0; r < 5; ++r) std::swap(alt(r, 0), alt(r, 1));
  for (int r = 0; r < 5; ++r) alt(r, 1) += alt(r, 0);
  CHECK(charset_wrcv_with_basis(a, alt) == fast);
}

TEST_CASE("charset_cv paper example") {
  for (long lambda : {1L, 2L, 5L, 9L, 100L}) {
    CHECK(charset_cv(diag2(1, lambda)) == vset(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
  }
  CHECK(charset_cv(form_of(3, {1, 0, 0, 0, 1, 0, 0, 0, 1})).size() == 6);
  // well-rounded: cv equals wr-cv
  Form hex = form_of(2, {2, 1, 1, 2});
  CHECK(charset_cv(hex) == charset_wrcv(hex));
}

TEST_CASE("charset_vor examples") {
  CHECK(charset_vor(form_of(2, {1, 0, 0, 1})) == vset(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
  CHECK(charset_vor(form_of(2, {2, 1, 1, 2})).size() == 6);
  CHECK(charset_vor(form_of(3, {1, 0, 0, 0, 1, 0, 0, 0, 1})).size() == 6);
}

TEST_CASE("charset_vor equals the facet oracle and respects the bound") {
  Rng rng(404);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 2 + trial % 2;
    Form a = random_form(n, rng);
    VectorSet fast = charset_vor(a);
    CHECK(fast.size() <= 2 * ((1 << n) - 1));
    CHECK(fast == testkit::brute_voronoi_relevant(a));
  }
}

TEST_CASE("voronoi sum property") {
  // every nonzero x in a small box decomposes greedily into relevant vectors
  Form a = form_of(2, {2, 1, 1, 3});
  VectorSet rel = charset_vor(a);
  for (long x0 = -2; x0 <= 2; ++x0)
    for (long x1 = -2; x1 <= 2; ++x1) {
      if (x0 == 0 && x1 == 0) continue;
      IVec x = ivec({x0, x1});
      int guard = 0;
      while (!(x[0] == 0 && x[1] == 0) && guard < 100) {
        bool moved = false;
        for (const IVec& v : rel.vecs) {
          IVec y = {x[0] - v[0], x[1] - v[1]};
          if (evaluate(a, y) < evaluate(a, x)) {
            x = y;
            moved = true;
            break;
          }
        }
        if (!moved) break;
        ++guard;
      }
      CHECK((x[0] == 0 && x[1] == 0));
    }
}

TEST_CASE("characteristic transformation property and spanning") {
  Rng rng(505);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + trial % 4;  // dims 2..5
    Form a = random_form(n, rng);
    Unimodular u = random_unimodular(n, rng);
    Form b = conjugate(a, u.mat);
    IntMat uinv = int_inverse_unimodular(u.mat);
    for (CharsetKind k : {CharsetKind::MS, CharsetKind::CV, CharsetKind::VOR}) {
      VectorSet va = charset(a, k);
      VectorSet vb = charset(b, k);
      CHECK(map_set(uinv, va) == vb);
      Sublattice l = span_basis(va);
      REQUIRE(l.rank == n);
      Int d = det(l.basis);
      CHECK((d == 1 || d == -1));
      CHECK(closed_under_negation(va));
    }
  }
}

TEST_CASE("ps flag") {
  CHECK_FALSE(canonicalization_safe(CharsetKind::PS));
  CHECK(canonicalization_safe(CharsetKind::MS));
  CHECK(charset_from_name("vor") == CharsetKind::VOR);
  CHECK_THROWS_AS(charset_from_name("bogus"), ValidationError);
}
