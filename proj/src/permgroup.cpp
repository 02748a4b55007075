#include "canform/permgroup.hpp"

namespace canform {

PermGroup::PermGroup(int degree, const std::vector<int>& base) : degree_(degree) {
  Perm id(degree_);
  for (int i = 0; i < degree_; ++i) id[i] = i;
  for (int b : base) {
    Level l;
    l.base_point = b;
    l.transversal[b] = id;
    levels_.push_back(std::move(l));
  }
}

const std::vector<Perm>& PermGroup::level_gens(int level) const {
  static const std::vector<Perm> empty;
  if (level < 0 || level >= static_cast<int>(levels_.size())) return empty;
  return levels_[level].gens;
}

bool PermGroup::transporter_from_base(const std::vector<int>& targets) const {
  if (targets.size() > levels_.size()) return false;
  // looking for eps with eps(base[i]) = targets[i]; peel one transversal
  // element per level
  Perm acc_inv(degree_);
  for (int i = 0; i < degree_; ++i) acc_inv[i] = i;
  for (size_t i = 0; i < targets.size(); ++i) {
    int x = acc_inv[targets[i]];
    auto it = levels_[i].transversal.find(x);
    if (it == levels_[i].transversal.end()) return false;
    acc_inv = perm_compose(perm_inverse(it->second), acc_inv);
  }
  return true;
}

std::pair<Perm, size_t> PermGroup::strip(Perm g, size_t from) const {
  for (size_t i = from; i < levels_.size(); ++i) {
    int x = g[levels_[i].base_point];
    auto it = levels_[i].transversal.find(x);
    if (it == levels_[i].transversal.end()) return {std::move(g), i};
    g = perm_compose(perm_inverse(it->second), g);
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::rebuild_orbit(size_t level) {
  Level& l = levels_[level];
  l.transversal.clear();
  Perm id(degree_);
  for (int i = 0; i < degree_; ++i) id[i] = i;
  l.transversal[l.base_point] = id;
  std::vector<int> frontier{l.base_point};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int p : frontier) {
      const Perm& rep = l.transversal[p];
      for (const Perm& g : l.gens) {
        int q = g[p];
        if (!l.transversal.count(q)) {
          l.transversal[q] = perm_compose(g, rep);
          next.push_back(q);
        }
      }
    }
    frontier = std::move(next);
  }
}

void PermGroup::schreier_sims(size_t level) {
  rebuild_orbit(level);
  // Process Schreier generators; restart whenever the chain changes. All
  // accesses go through levels_[...] because recursion may reallocate it.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> points;
    points.reserve(levels_[level].transversal.size());
    for (const auto& [p, rep] : levels_[level].transversal) points.push_back(p);
    size_t ngens = levels_[level].gens.size();
    for (size_t pi = 0; pi < points.size() && !changed; ++pi) {
      for (size_t gi = 0; gi < ngens && !changed; ++gi) {
        int p = points[pi];
        Perm rep = levels_[level].transversal.at(p);
        Perm s = levels_[level].gens[gi];
        Perm schreier =
            perm_compose(perm_inverse(levels_[level].transversal.at(s[p])), perm_compose(s, rep));
        if (perm_is_identity(schreier)) continue;
        auto [residue, at] = strip(std::move(schreier), level + 1);
        if (perm_is_identity(residue)) continue;
        if (at == levels_.size()) {
          int moved = -1;
          for (int i = 0; i < degree_; ++i)
            if (residue[i] != i) {
              moved = i;
              break;
            }
          levels_.push_back(Level{moved, {}, {}});
        }
        levels_[at].gens.push_back(residue);
        schreier_sims(at);
        changed = true;
      }
    }
  }
}

void PermGroup::add_generator(const Perm& g) {
  if (static_cast<int>(g.size()) != degree_)
    throw ValidationError("perm group: generator degree mismatch");
  if (perm_is_identity(g)) return;
  auto [residue, at] = strip(g, 0);
  if (perm_is_identity(residue)) return;
  if (at == levels_.size()) {
    int moved = -1;
    for (int i = 0; i < degree_; ++i)
      if (residue[i] != i) {
        moved = i;
        break;
      }
    levels_.push_back(Level{moved, {}, {}});
  }
  // the new element lies in every stabilizer down to `at`
  for (size_t i = 0; i <= at && i < levels_.size(); ++i) levels_[i].gens.push_back(residue);
  for (size_t i = at + 1; i-- > 0;) schreier_sims(i);
}

Int PermGroup::order() const {
  Int n = 1;
  for (const Level& l : levels_) n *= static_cast<long>(l.transversal.size());
  return n;
}

bool PermGroup::contains(const Perm& g) const {
  auto [residue, at] = strip(g, 0);
  return perm_is_identity(residue);
}

}  // namespace canform
