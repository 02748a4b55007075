#pragma once

#include "canform/vectorset.hpp"

// Slow, structurally independent reference implementations. They share no
// enumeration code with the fast paths and exist so that every expected
// value in the test suite can be recomputed from first principles.
namespace canform::testkit {

// exhaustive box search: all nonzero x with A[x] <= lambda, where the box
// bound per coordinate is the exact rational lambda * (A^{-1})_{ii}
VectorSet brute_short_vectors(const Form& a, const Rat& lambda);

// all U with U^T A U = B, by backtracking over candidate basis images
std::vector<Unimodular> brute_isometries(const Form& a, const Form& b);

// Voronoi-relevant vectors by the facet criterion: v is relevant iff v/2
// lies strictly inside every other half-space H_{A,x}
VectorSet brute_voronoi_relevant(const Form& a);

}  // namespace canform::testkit
