#pragma once

#include "canform/vectorset.hpp"

namespace canform {

// Row-style Hermite normal form Q = U * H:
//   (i)  the first `rank` rows of H are nonzero, the rest are zero;
//   (ii) pivot columns are strictly increasing;
//   (iii) pivots are positive;
//   (iv) entries above a pivot lie in [0, pivot).
// U is unimodular with Q = U*H exactly; u_inv = U^{-1} is the accumulated
// row transform (u_inv * Q = H).
struct HnfResult {
  IntMat h;
  IntMat u;
  IntMat u_inv;
  int rank = 0;
};

HnfResult hnf(const IntMat& q);

// H and rank only; use for span computations over large vector sets, where
// the m x m transform would dwarf the input
struct HnfNoTransform {
  IntMat h;
  int rank = 0;
};
HnfNoTransform hnf_matrix(const IntMat& q);

// Sublattice of Z^ambient given by a column basis (columns independent).
struct Sublattice {
  int ambient = 0;
  IntMat basis;  // ambient x rank
  int rank = 0;
};

// Saturated Z-basis of {x in Z^n : m*x = 0}, returned as columns (n x d).
IntMat right_kernel(const IntMat& m);

// Canonical (HNF-row) basis of the Z-span of the given vectors.
Sublattice span_basis(const VectorSet& v);
Sublattice span_basis(const IntMat& columns);

// Basis of QQ*V intersect Z^n.
Sublattice saturate(const VectorSet& v);
Sublattice saturate(const IntMat& columns);

// One representative per coset of a full-rank sublattice, lexicographic
// order over the HNF pivot box; count = |det basis|.
std::vector<IVec> coset_reps(const Sublattice& l);

struct Projection {
  RatMat basis_l2;  // n x (n-r), columns form a Z-basis of proj(Z^n)
  Form a2;          // the projected (n-r)-dimensional form
};

// A-orthogonal projection away from a saturated sublattice of rank r < n.
Projection project_orthogonal(const Form& a, const Sublattice& l1);

}  // namespace canform
