#pragma once

#include <map>

#include "canform/numeric.hpp"

namespace canform {

using Perm = std::vector<int>;

inline bool perm_is_identity(const Perm& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

inline Perm perm_compose(const Perm& a, const Perm& b) {  // (a*b)(x) = a[b[x]]
  Perm c(b.size());
  for (size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

inline Perm perm_inverse(const Perm& a) {
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
  return c;
}

// Deterministic Schreier-Sims stabilizer chain; exact group order. A base
// can be prescribed up front, which makes the chain levels line up with a
// search path: level i then generates the pointwise stabilizer of
// base[0..i).
class PermGroup {
 public:
  explicit PermGroup(int degree) : degree_(degree) {}
  PermGroup(int degree, const std::vector<int>& base);

  void add_generator(const Perm& g);
  Int order() const;
  bool contains(const Perm& g) const;

  // generators of the pointwise stabilizer of base[0..level)
  const std::vector<Perm>& level_gens(int level) const;

  // true iff some group element maps targets[i] to base[i] for all i
  bool transporter_from_base(const std::vector<int>& targets) const;

 private:
  struct Level {
    int base_point = 0;
    std::vector<Perm> gens;          // generators fixing all earlier base points
    std::map<int, Perm> transversal; // point -> rep mapping base_point to point
  };

  void rebuild_orbit(size_t level);
  void schreier_sims(size_t level);
  // sift g through levels >= from; returns first level where it escapes
  std::pair<Perm, size_t> strip(Perm g, size_t from) const;

  int degree_;
  std::vector<Level> levels_;
};

}  // namespace canform
