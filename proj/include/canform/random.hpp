#pragma once

#include <random>

#include "canform/matrix.hpp"

namespace canform {

// Deterministic across platforms: raw mt19937_64 draws with rejection
// sampling (std::uniform_int_distribution is not portable).
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(uint64_t seed) : gen(seed) {}

  uint64_t next() { return gen(); }

  int64_t uniform(int64_t lo, int64_t hi) {  // inclusive
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    uint64_t x;
    do {
      x = gen();
    } while (x >= limit);
    return lo + static_cast<int64_t>(x % span);
  }

  bool coin() { return (gen() & 1) != 0; }
};

// basis B with entries uniform in {-n..n}, rejected until full rank; A = B^T B
Form random_form(int n, Rng& rng);

// word of random elementary shears (bounded entries) and signed permutations
Unimodular random_unimodular(int n, Rng& rng, int words = 20);

// word of random symplectic generators: [[I,S],[0,I]], [[I,0],[S,I]] with S
// symmetric small, [[U,0],[0,U^-T]], and J itself
IntMat random_symplectic(int half, Rng& rng, int words = 10);

// random integer family of `count` vectors spanning Z^dim (for symp tests)
std::vector<IVec> random_spanning_family(int dim, int count, Rng& rng);

}  // namespace canform
