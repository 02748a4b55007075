#include "doctest.h"
#include "canform/enumerate.hpp"
#include "canform/random.hpp"
#include "canform/testkit.hpp"
#include "helpers.hpp"

using namespace canform;
using namespace canform::test;

TEST_CASE("lll leaves reduced forms alone") {
  Form i3 = form_of(3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
  LllResult r = lll_reduce(i3);
  CHECK(r.reduced.gram == i3.gram);
  CHECK(r.u.mat == IntMat::identity(3));

  Form a5 = form_of(2, {1, 0, 0, 5});
  CHECK(lll_reduce(a5).reduced.gram == a5.gram);
}

TEST_CASE("lll reduces and keeps the conjugation relation") {
  // successive minima of this lattice are 2 and 5, so the best any reduced
  // basis can do is diagonal (2, 5)
  Form a = form_of(2, {5, 4, 4, 5});
  LllResult r = lll_reduce(a);
  CHECK(r.reduced.gram(0, 0) == 2);
  Rat maxdiag = std::max(r.reduced.gram(0, 0), r.reduced.gram(1, 1));
  CHECK(maxdiag <= 5);
  CHECK(conjugate(a, r.u.mat).gram == r.reduced.gram);

  Rng rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + trial % 5;
    Form f = random_form(n, rng);
    Form big = conjugate(f, random_unimodular(n, rng).mat);
    LllResult red = lll_reduce(big);
    CHECK(conjugate(big, red.u.mat).gram == red.reduced.gram);
  }
}

TEST_CASE("shortest vectors") {
  SvpResult r = shortest_vectors(form_of(2, {1, 0, 0, 1}));
  CHECK(r.min == 1);
  CHECK(r.vectors == vset(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));

  SvpResult hex = shortest_vectors(form_of(2, {2, 1, 1, 2}));
  CHECK(hex.min == 2);
  CHECK(hex.vectors == vset(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}}));

  SvpResult a5 = shortest_vectors(form_of(2, {1, 0, 0, 5}));
  CHECK(a5.min == 1);
  CHECK(a5.vectors == vset(2, {{1, 0}, {-1, 0}}));
}

TEST_CASE("vectors_up_to") {
  CHECK(vectors_up_to(form_of(2, {1, 0, 0, 1}), Rat(1)) ==
        vset(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
  CHECK(vectors_up_to(form_of(2, {1, 0, 0, 5}), Rat(5)) ==
        vset(2, {{0, 1}, {0, -1}, {1, 0}, {-1, 0}, {2, 0}, {-2, 0}}));
  CHECK(vectors_up_to(form_of(2, {1, 0, 0, 1}), Rat(2)).size() == 8);
  CHECK(vectors_up_to(form_of(2, {1, 0, 0, 1}), make_rat(1, 2)).size() == 0);
}

TEST_CASE("closest vectors") {
  CvpResult r = closest_vectors(form_of(2, {1, 0, 0, 1}), rvec({{1, 2}, {1, 2}}));
  CHECK(r.distance == make_rat(1, 2));
  REQUIRE(r.closest.size() == 4);
  CHECK(r.closest[0] == ivec({0, 0}));
  CHECK(r.closest[3] == ivec({1, 1}));

  CvpResult origin = closest_vectors(form_of(2, {1, 0, 0, 1}), rvec({{0, 1}, {0, 1}}));
  CHECK(origin.distance == 0);
  REQUIRE(origin.closest.size() == 1);
  CHECK(origin.closest[0] == ivec({0, 0}));
}

TEST_CASE("closest vectors against a brute force box") {
  Form hex = form_of(2, {2, 1, 1, 2});
  RVec target = rvec({{1, 3}, {1, 3}});
  CvpResult r = closest_vectors(hex, target);
  // exhaustive check over offsets in {-2..2}^2
  Rat best;
  bool first = true;
  std::vector<IVec> argmin;
  for (long x = -2; x <= 2; ++x)
    for (long y = -2; y <= 2; ++y) {
      RVec d = {Rat(x) - target[0], Rat(y) - target[1]};
      Rat v = evaluate(hex, d);
      if (first || v < best) {
        best = v;
        argmin.clear();
        first = false;
      }
      if (v == best) argmin.push_back(ivec({x, y}));
    }
  CHECK(r.distance == best);
  CHECK(r.closest == argmin);
}

TEST_CASE("min transformation property") {
  Rng rng(202);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + trial % 5;  // dims 2..6
    Form a = random_form(n, rng);
    Unimodular u = random_unimodular(n, rng);
    SvpResult sa = shortest_vectors(a);
    SvpResult sb = shortest_vectors(conjugate(a, u.mat));
    CHECK(sa.min == sb.min);
    IntMat uinv = int_inverse_unimodular(u.mat);
    std::vector<IVec> mapped;
    for (const IVec& v : sa.vectors.vecs) mapped.push_back(mat_vec(uinv, v));
    CHECK(VectorSet::from_unsorted(n, std::move(mapped)) == sb.vectors);
  }
}

TEST_CASE("testkit oracle examples") {
  CHECK(testkit::brute_short_vectors(form_of(2, {1, 0, 0, 1}), Rat(2)).size() == 8);
  CHECK(testkit::brute_short_vectors(form_of(2, {1, 0, 0, 5}), Rat(5)).size() == 6);
  CHECK(testkit::brute_short_vectors(form_of(2, {2, 1, 1, 2}), Rat(1)).size() == 0);

  Form i2 = form_of(2, {1, 0, 0, 1});
  CHECK(testkit::brute_isometries(i2, i2).size() == 8);
  CHECK(testkit::brute_isometries(i2, form_of(2, {2, 0, 0, 2})).empty());

  CHECK(testkit::brute_voronoi_relevant(i2).size() == 4);
  CHECK(testkit::brute_voronoi_relevant(form_of(2, {2, 1, 1, 2})).size() == 6);
  CHECK(testkit::brute_voronoi_relevant(form_of(3, {1, 0, 0, 0, 1, 0, 0, 0, 1})).size() == 6);
}

TEST_CASE("enumeration equals brute force on small instances") {
  Rng rng(303);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + trial % 3;
    Form a = random_form(n, rng);
    Rat bound = a.gram(0, 0);
    for (int i = 1; i < n; ++i) bound = std::max(bound, a.gram(i, i));
    VectorSet fast = vectors_up_to(a, bound);
    VectorSet slow = testkit::brute_short_vectors(a, bound);
    CHECK(fast == slow);
    CHECK(closed_under_negation(fast));
    // svp/cvp consistency: Min_A(min) = Min
    SvpResult sv = shortest_vectors(a);
    CHECK(vectors_up_to(a, sv.min) == sv.vectors);
  }
}
