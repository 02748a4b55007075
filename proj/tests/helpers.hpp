#pragma once

#include <vector>

#include "canform/matrix.hpp"
#include "canform/vectorset.hpp"

namespace canform::test {

inline RatMat rat_mat(int rows, int cols, const std::vector<long>& entries) {
  RatMat m(rows, cols);
  for (int i = 0; i < rows * cols; ++i) m.a[i] = Rat(entries[i]);
  return m;
}

inline IntMat int_mat(int rows, int cols, const std::vector<long>& entries) {
  IntMat m(rows, cols);
  for (int i = 0; i < rows * cols; ++i) m.a[i] = Int(entries[i]);
  return m;
}

inline Form form_of(int n, const std::vector<long>& entries) { return Form(rat_mat(n, n, entries)); }

inline IVec ivec(const std::vector<long>& entries) {
  IVec v(entries.size());
  for (size_t i = 0; i < entries.size(); ++i) v[i] = Int(entries[i]);
  return v;
}

inline RVec rvec(const std::vector<std::pair<long, long>>& entries) {
  RVec v(entries.size());
  for (size_t i = 0; i < entries.size(); ++i) v[i] = make_rat(entries[i].first, entries[i].second);
  return v;
}

inline VectorSet vset(int n, const std::vector<std::vector<long>>& vs) {
  std::vector<IVec> vecs;
  vecs.reserve(vs.size());
  for (const auto& v : vs) vecs.push_back(ivec(v));
  return VectorSet::from_unsorted(n, std::move(vecs));
}

}  // namespace canform::test
