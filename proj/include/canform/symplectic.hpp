#pragma once

#include "canform/canonical.hpp"

namespace canform {

// J_n = [[0, I], [-I, 0]] of size 2*half
IntMat symplectic_j(int half);

// v^T J w; throws on odd dimension
Int symplectic_product(const IVec& v, const IVec& w);

struct SymplecticBasis {
  int half = 0;
  IntMat basis;  // 2n x 2n, basis^T J basis = J
};

// Deterministic symplectic basis extraction from an ordered spanning
// family: the first nonzero vector divided by its content starts each
// hyperbolic pair, its partner comes from a left-to-right extended-gcd
// accumulation of the symplectic products, and the family is reduced into
// the complement before recursing. Equivariant: feeding {P^T v_i} for
// symplectic P yields P^T times the result.
SymplecticBasis symp_basis(const std::vector<IVec>& family);

struct SpCanonicalResult {
  Form canonical;
  Unimodular transform;  // symplectic; transform^T A transform = canonical
  CharsetKind kind = CharsetKind::MS;
  int charset_size = 0;
  std::string hash;
};

// Canonical form under Sp_2n(Z): charset, graph with paired (A, J) weights,
// canonical ordering, then symp_basis as the reducing matrix.
SpCanonicalResult canonical_form_sp(const Form& a, CharsetKind kind = CharsetKind::MS);

}  // namespace canform
