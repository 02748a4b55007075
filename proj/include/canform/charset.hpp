#pragma once

#include "canform/enumerate.hpp"
#include "canform/lattice.hpp"

namespace canform {

// Characteristic vector set functions. PS is exposed for stabilizer work
// only: its bound maxdiag(A) is not a GL_n(Z)-invariant, so the canonical
// form pipeline rejects it.
enum class CharsetKind { PS, MS, CV, VOR };

constexpr bool canonicalization_safe(CharsetKind k) { return k != CharsetKind::PS; }

const char* charset_name(CharsetKind k);
// accepts "ps", "ms", "cv", "vor"
CharsetKind charset_from_name(const std::string& name);

// Min_A(maxdiag(A)); contains +-e_i for all i.
VectorSet charset_ps(const Form& a);

// Min_A(lambda_min) with lambda_min the least bound whose vectors span Z^n.
VectorSet charset_ms(const Form& a);

// Min(A) plus, for each nonzero coset of Z^n / Span(Min(A)), the shortest
// vectors of the coset. Requires Span(Min(A)) of rank n.
VectorSet charset_wrcv(const Form& a);
// test hook: same set computed against a caller-chosen basis of Span(Min(A))
VectorSet charset_wrcv_with_basis(const Form& a, const IntMat& basis);

// the recursive closest-vector characteristic set
VectorSet charset_cv(const Form& a);

// Voronoi-relevant vectors via the 2Z^n-coset criterion: a nonzero class
// contributes +-v exactly when its minimizers are a single antipodal pair.
VectorSet charset_vor(const Form& a);

VectorSet charset(const Form& a, CharsetKind kind);

}  // namespace canform
