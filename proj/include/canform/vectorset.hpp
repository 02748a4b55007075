#pragma once

#include <algorithm>

#include "canform/matrix.hpp"

namespace canform {

// Finite set of integer column vectors with a canonical internal order
// (lexicographic by entries). Callers that need an external order carry a
// plain std::vector<IVec> instead.
struct VectorSet {
  int n = 0;
  std::vector<IVec> vecs;

  VectorSet() = default;
  explicit VectorSet(int dim) : n(dim) {}

  static VectorSet from_unsorted(int dim, std::vector<IVec> v) {
    VectorSet s(dim);
    std::sort(v.begin(), v.end(), lex_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
    s.vecs = std::move(v);
    return s;
  }

  int size() const { return static_cast<int>(vecs.size()); }
  bool contains(const IVec& v) const {
    return std::binary_search(vecs.begin(), vecs.end(), v, lex_less);
  }
  bool operator==(const VectorSet&) const = default;
};

inline IntMat columns_matrix(int n, const std::vector<IVec>& vecs) {
  IntMat m(n, static_cast<int>(vecs.size()));
  for (int j = 0; j < static_cast<int>(vecs.size()); ++j)
    for (int i = 0; i < n; ++i) m(i, j) = vecs[j][i];
  return m;
}

inline IntMat columns_matrix(const VectorSet& s) { return columns_matrix(s.n, s.vecs); }

inline IVec negate(const IVec& v) {
  IVec w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = -v[i];
  return w;
}

inline bool closed_under_negation(const VectorSet& s) {
  for (const IVec& v : s.vecs)
    if (!s.contains(negate(v))) return false;
  return true;
}

}  // namespace canform
