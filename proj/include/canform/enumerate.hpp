#pragma once

#include <memory>

#include "canform/vectorset.hpp"

namespace canform {

struct LllResult {
  Form reduced;  // U^T A U
  Unimodular u;
};

// Gram-only LLL with delta = 3/4, exact rational Gram-Schmidt. Operates on
// the Gram matrix with integral column transforms; never touches basis
// vectors.
LllResult lll_reduce(const Form& a);

struct SvpResult {
  Rat min;
  VectorSet vectors;  // all x with A[x] = min, both signs
};

SvpResult shortest_vectors(const Form& a);

// all nonzero x with A[x] <= lambda
VectorSet vectors_up_to(const Form& a, const Rat& lambda);

// same, with the attained values (sorted by vector, canonical order)
std::vector<std::pair<IVec, Rat>> vectors_up_to_valued(const Form& a, const Rat& lambda);

struct CvpResult {
  Rat distance;               // cvd(A, v)
  std::vector<IVec> closest;  // CV(A, v), canonical lex order, nonempty
};

CvpResult closest_vectors(const Form& a, const RVec& target);

// Reusable CVP solver; LLL-reduces once and answers many targets. Used by
// the coset loops in the charset module.
class CvpSolver {
 public:
  explicit CvpSolver(const Form& a);
  CvpResult closest(const RVec& target) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

}  // namespace canform
