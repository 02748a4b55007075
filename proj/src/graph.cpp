#include "canform/graph.hpp"

#include <bit>
#include <memory>
#include <deque>
#include <numeric>

namespace canform {

WeightedGraph build_graph(const Form& a, const std::vector<IVec>& vectors) {
  int p = static_cast<int>(vectors.size());
  if (p == 0) throw ValidationError("build_graph: empty vector set");
  int n = a.n;
  for (const IVec& v : vectors)
    if (static_cast<int>(v.size()) != n) throw ValidationError("build_graph: dimension mismatch");
  // scale to integers once; all pairwise products run over mpz
  Int d = denominator_lcm(a.gram);
  IntMat ai(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat e = a.gram(i, j) * d;
      ai(i, j) = e.get_num();
    }
  std::vector<IVec> av(p);
  for (int j = 0; j < p; ++j) av[j] = mat_vec(ai, vectors[j]);
  WeightedGraph g{p, RatMat(p, p)};
  for (int i = 0; i < p; ++i)
    for (int j = i; j < p; ++j) {
      Int s = 0;
      for (int k = 0; k < n; ++k)
        if (vectors[i][k] != 0) s += vectors[i][k] * av[j][k];
      Rat w = make_rat(s, d);
      g.w(i, j) = w;
      g.w(j, i) = w;
    }
  return g;
}

EdgeWeightedGraph t1(const WeightedGraph& g) {
  int p = g.p;
  Rat mx = g.w(0, 0);
  for (int i = 0; i < p; ++i)
    for (int j = i; j < p; ++j)
      if (g.w(i, j) > mx) mx = g.w(i, j);
  Rat a = mx + 1;
  Rat b = a + 1;
  EdgeWeightedGraph out{p + 2, RatMat(p + 2, p + 2)};
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      out.w(i, j) = g.w(i, j);
      out.w(j, i) = g.w(i, j);
    }
    out.w(i, p) = g.w(i, i);
    out.w(p, i) = g.w(i, i);
    out.w(i, p + 1) = a;
    out.w(p + 1, i) = a;
  }
  out.w(p, p + 1) = b;
  out.w(p + 1, p) = b;
  return out;
}

namespace {

std::vector<Rat> distinct_edge_weights(const EdgeWeightedGraph& g) {
  std::vector<Rat> s;
  s.reserve(static_cast<size_t>(g.p) * (g.p - 1) / 2);
  for (int i = 0; i < g.p; ++i)
    for (int j = i + 1; j < g.p; ++j) s.push_back(g.w(i, j));
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

int layers_for(size_t count) {
  int w = 1;
  while ((size_t(1) << w) < count) ++w;
  return w;
}

}  // namespace

int t2_layers(const EdgeWeightedGraph& g) { return layers_for(distinct_edge_weights(g).size()); }

ColoredGraph t2(const EdgeWeightedGraph& g) {
  std::vector<Rat> s = distinct_edge_weights(g);
  int w = layers_for(s.size());
  int p = g.p;
  ColoredGraph out(p * w, w);
  for (int i = 0; i < p; ++i)
    for (int k = 0; k < w; ++k) out.color[i * w + k] = k;
  for (int i = 0; i < p; ++i)
    for (int k = 0; k < w; ++k)
      for (int k2 = k + 1; k2 < w; ++k2) out.add_edge(i * w + k, i * w + k2);
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) {
      auto it = std::lower_bound(s.begin(), s.end(), g.w(i, j));
      size_t pos = static_cast<size_t>(it - s.begin());
      for (int k = 0; k < w; ++k)
        if ((pos >> k) & 1) out.add_edge(i * w + k, j * w + k);
    }
  return out;
}

std::vector<uint8_t> encode_colored_graph(const ColoredGraph& g, const std::vector<int>& labeling) {
  std::vector<uint8_t> out;
  size_t nbits = static_cast<size_t>(g.nv) * (g.nv - 1) / 2;
  out.reserve(13 + 2 * g.nv + nbits / 8 + 1);
  const char magic[5] = {'P', 'D', 'C', 'G', '1'};
  out.insert(out.end(), magic, magic + 5);
  auto push_u32 = [&](uint32_t x) {
    for (int b = 0; b < 4; ++b) out.push_back(static_cast<uint8_t>(x >> (8 * b)));
  };
  push_u32(static_cast<uint32_t>(g.nv));
  push_u32(static_cast<uint32_t>(g.num_colors));
  for (int pos = 0; pos < g.nv; ++pos) {
    int c = g.color[labeling[pos]];
    out.push_back(static_cast<uint8_t>(c & 0xff));
    out.push_back(static_cast<uint8_t>((c >> 8) & 0xff));
  }
  uint8_t acc = 0;
  int nb = 0;
  for (int i = 0; i < g.nv; ++i)
    for (int j = i + 1; j < g.nv; ++j) {
      acc = static_cast<uint8_t>((acc << 1) | (g.adjacent(labeling[i], labeling[j]) ? 1 : 0));
      if (++nb == 8) {
        out.push_back(acc);
        acc = 0;
        nb = 0;
      }
    }
  if (nb > 0) out.push_back(static_cast<uint8_t>(acc << (8 - nb)));
  return out;
}

namespace {

// Ordered partition into contiguous cells; cells are identified by their
// start position.
struct Partition {
  int nv = 0;
  int num_cells = 0;
  std::vector<int> elts;     // position -> vertex
  std::vector<int> pos;      // vertex -> position
  std::vector<int> cell_of;  // position -> start of its cell
  std::vector<int> len_at;   // valid at cell start positions

  void init_by_colors(const ColoredGraph& g) {
    nv = g.nv;
    elts.resize(nv);
    std::iota(elts.begin(), elts.end(), 0);
    std::stable_sort(elts.begin(), elts.end(),
                     [&](int u, int v) { return g.color[u] < g.color[v]; });
    pos.assign(nv, 0);
    cell_of.assign(nv, 0);
    len_at.assign(nv, 0);
    num_cells = 0;
    int start = 0;
    for (int t = 0; t < nv; ++t) {
      pos[elts[t]] = t;
      if (t + 1 == nv || g.color[elts[t + 1]] != g.color[elts[start]]) {
        len_at[start] = t + 1 - start;
        for (int u = start; u <= t; ++u) cell_of[u] = start;
        ++num_cells;
        start = t + 1;
      }
    }
  }

  bool discrete() const { return num_cells == nv; }

  std::vector<int> cell_sizes() const {
    std::vector<int> v;
    v.reserve(num_cells);
    for (int s = 0; s < nv; s += len_at[s]) v.push_back(len_at[s]);
    return v;
  }
};

using Splitters = std::deque<std::vector<int>>;

struct Refiner {
  const ColoredGraph& g;
  std::vector<uint64_t> mask;
  std::vector<int> deg;

  explicit Refiner(const ColoredGraph& graph)
      : g(graph), mask(graph.words, 0), deg(graph.nv, 0) {}

  int deg_into(int v) const {
    const uint64_t* r = g.row(v);
    int s = 0;
    for (int w = 0; w < g.words; ++w) s += std::popcount(r[w] & mask[w]);
    return s;
  }

  // Split cells by degree into each splitter set until stable. Newly
  // created subcells are queued (ordered by ascending degree), which keeps
  // the whole procedure equivariant under color-preserving isomorphism.
  void refine(Partition& p, Splitters& queue) {
    while (!queue.empty()) {
      if (p.discrete()) {
        queue.clear();
        break;
      }
      std::vector<int> w = std::move(queue.front());
      queue.pop_front();
      std::fill(mask.begin(), mask.end(), 0);
      for (int v : w) mask[v >> 6] |= uint64_t(1) << (v & 63);
      for (int start = 0; start < p.nv;) {
        int len = p.len_at[start];
        if (len > 1) {
          bool uniform = true;
          int d0 = deg_into(p.elts[start]);
          deg[p.elts[start]] = d0;
          for (int t = start + 1; t < start + len; ++t) {
            int dv = deg_into(p.elts[t]);
            deg[p.elts[t]] = dv;
            if (dv != d0) uniform = false;
          }
          if (!uniform) {
            std::stable_sort(p.elts.begin() + start, p.elts.begin() + start + len,
                             [&](int u, int v) { return deg[u] < deg[v]; });
            for (int t = start; t < start + len; ++t) p.pos[p.elts[t]] = t;
            int run = start;
            for (int t = start + 1; t <= start + len; ++t) {
              if (t == start + len || deg[p.elts[t]] != deg[p.elts[run]]) {
                p.len_at[run] = t - run;
                for (int u = run; u < t; ++u) p.cell_of[u] = run;
                queue.emplace_back(p.elts.begin() + run, p.elts.begin() + t);
                if (run != start) ++p.num_cells;
                run = t;
              }
            }
          }
        }
        start += len;
      }
    }
  }
};

void individualize(Partition& p, int v, Splitters& queue) {
  int pv = p.pos[v];
  int s = p.cell_of[pv];
  int len = p.len_at[s];
  int u = p.elts[s];
  p.elts[s] = v;
  p.elts[pv] = u;
  p.pos[v] = s;
  p.pos[u] = pv;
  p.len_at[s] = 1;
  p.len_at[s + 1] = len - 1;
  for (int t = s + 1; t < s + len; ++t) p.cell_of[t] = s + 1;
  ++p.num_cells;
  queue.push_back({v});
  queue.emplace_back(p.elts.begin() + s + 1, p.elts.begin() + s + len);
}

int target_cell(const Partition& p) {
  int best = -1, best_len = INT_MAX;
  for (int s = 0; s < p.nv; s += p.len_at[s])
    if (p.len_at[s] > 1 && p.len_at[s] < best_len) {
      best_len = p.len_at[s];
      best = s;
    }
  return best;
}

enum class Mode { Tied, Improving, WorseButFirst };

struct Searcher {
  const ColoredGraph& g;
  Refiner ref;

  std::vector<int> fixed_seq;

  bool have_first = false;
  std::vector<int> first_seq;
  std::vector<int> first_labeling;
  std::vector<uint8_t> first_bytes;
  std::vector<std::vector<int>> first_trace;

  std::vector<int> best_labeling;
  std::vector<uint8_t> best_bytes;
  std::vector<std::vector<int>> best_trace;

  std::vector<Perm> found_gens;
  std::unique_ptr<PermGroup> group;

  explicit Searcher(const ColoredGraph& graph) : g(graph), ref(graph) {}

  void run() {
    Partition p;
    p.init_by_colors(g);
    Splitters q;
    for (int s = 0; s < p.nv; s += p.len_at[s])
      q.emplace_back(p.elts.begin() + s, p.elts.begin() + s + p.len_at[s]);
    ref.refine(p, q);
    best_trace.push_back(p.cell_sizes());
    dfs(p, 0, Mode::Tied);
  }

  bool is_spine(int depth) const {
    if (!have_first || depth > static_cast<int>(first_seq.size())) return false;
    for (int i = 0; i < depth; ++i)
      if (fixed_seq[i] != first_seq[i]) return false;
    return true;
  }

  bool fixes_prefix(const Perm& p, int depth) const {
    for (int i = 0; i < depth; ++i)
      if (p[fixed_seq[i]] != fixed_seq[i]) return false;
    return true;
  }

  void dfs(Partition& p, int depth, Mode mode) {
    if (p.discrete()) {
      leaf(p, mode);
      return;
    }
    int tc = target_cell(p);
    std::vector<int> children(p.elts.begin() + tc, p.elts.begin() + tc + p.len_at[tc]);
    std::sort(children.begin(), children.end());

    bool spine = is_spine(depth);
    std::vector<int> uf;
    size_t orbit_version = SIZE_MAX;
    auto orbit_find = [&](int x) {
      while (uf[x] != x) x = uf[x] = uf[uf[x]];
      return x;
    };
    auto orbit_union = [&](int a, int b) {
      a = orbit_find(a);
      b = orbit_find(b);
      if (a != b) uf[b] = a;
    };
    auto ensure_orbits = [&]() {
      if (orbit_version == found_gens.size()) return;
      orbit_version = found_gens.size();
      uf.resize(g.nv);
      std::iota(uf.begin(), uf.end(), 0);
      if (spine && group) {
        // exact point stabilizer of the spine prefix from the chain
        for (const Perm& gp : group->level_gens(depth))
          for (int x = 0; x < g.nv; ++x) orbit_union(x, gp[x]);
      } else {
        for (const Perm& gp : found_gens) {
          if (!fixes_prefix(gp, depth)) continue;
          for (int x = 0; x < g.nv; ++x) orbit_union(x, gp[x]);
        }
      }
    };

    std::vector<int> explored;
    for (int v : children) {
      ensure_orbits();
      bool skip = false;
      for (int u : explored)
        if (orbit_find(u) == orbit_find(v)) {
          skip = true;
          break;
        }
      if (skip) continue;

      Partition pc = p;
      Splitters q;
      individualize(pc, v, q);
      ref.refine(pc, q);
      fixed_seq.push_back(v);

      bool explore = true;
      // A known automorphism mapping this prefix onto the first path means
      // the whole subtree is a copy of an already-handled spine subtree.
      if (have_first && !is_spine(depth + 1) &&
          static_cast<int>(fixed_seq.size()) <= static_cast<int>(first_seq.size()) && group &&
          group->transporter_from_base(fixed_seq)) {
        explore = false;
      }
      if (explore) {
        std::vector<int> inv = pc.cell_sizes();
        int d1 = depth + 1;
        bool eq_first =
            have_first && d1 < static_cast<int>(first_trace.size()) && inv == first_trace[d1];
        Mode child_mode = mode;
        if (mode == Mode::Tied) {
          if (static_cast<int>(best_trace.size()) <= d1) {
            best_trace.resize(d1 + 1);
            best_trace[d1] = std::move(inv);
            child_mode = Mode::Improving;
          } else if (inv < best_trace[d1]) {
            best_trace[d1] = std::move(inv);
            best_trace.resize(d1 + 1);
            child_mode = Mode::Improving;
          } else if (inv == best_trace[d1]) {
            child_mode = Mode::Tied;
          } else {
            child_mode = Mode::WorseButFirst;
            if (!eq_first) explore = false;
          }
        } else if (mode == Mode::Improving) {
          best_trace.resize(d1 + 1);
          best_trace[d1] = std::move(inv);
        } else {  // WorseButFirst: only chase automorphisms against zeta
          if (!eq_first) explore = false;
        }
        if (explore) dfs(pc, d1, child_mode);
      }
      fixed_seq.pop_back();
      explored.push_back(v);
    }
  }

  void add_automorphism(Perm gamma) {
    if (perm_is_identity(gamma)) return;
    found_gens.push_back(gamma);
    if (group) group->add_generator(found_gens.back());
  }

  void leaf(const Partition& p, Mode mode) {
    std::vector<uint8_t> bytes = encode_colored_graph(g, p.elts);
    if (!have_first) {
      have_first = true;
      first_seq = fixed_seq;
      first_labeling = p.elts;
      first_bytes = bytes;
      first_trace = best_trace;
      best_labeling = p.elts;
      best_bytes = std::move(bytes);
      group = std::make_unique<PermGroup>(g.nv, first_seq);
      return;
    }
    if (bytes == first_bytes) {
      Perm gamma(g.nv);
      for (int pos = 0; pos < g.nv; ++pos) gamma[first_labeling[pos]] = p.elts[pos];
      add_automorphism(std::move(gamma));
    }
    if (mode == Mode::Improving) {
      best_labeling = p.elts;
      best_bytes = std::move(bytes);
      return;
    }
    if (mode == Mode::WorseButFirst) return;
    if (bytes < best_bytes) {
      best_labeling = p.elts;
      best_bytes = std::move(bytes);
    } else if (bytes == best_bytes && bytes != first_bytes) {
      Perm gamma(g.nv);
      for (int pos = 0; pos < g.nv; ++pos) gamma[best_labeling[pos]] = p.elts[pos];
      add_automorphism(std::move(gamma));
    }
  }
};

}  // namespace

CanonLabeling canonical_labeling(const ColoredGraph& g) {
  if (g.nv <= 0) throw ValidationError("canonical_labeling: empty graph");
  Searcher s(g);
  s.run();
  CanonLabeling out;
  out.labeling = std::move(s.best_labeling);
  out.certificate = std::move(s.best_bytes);
  out.aut_generators = std::move(s.found_gens);
  out.aut_order = s.group ? s.group->order() : Int(1);
  return out;
}

std::vector<int> lift_ordering(const CanonLabeling& canon, int p_t1, int layers) {
  int nv = static_cast<int>(canon.labeling.size());
  if (nv != p_t1 * layers) throw ValidationError("lift_ordering: size mismatch");
  std::vector<int> position(nv);
  for (int pos = 0; pos < nv; ++pos) position[canon.labeling[pos]] = pos;
  int p = p_t1 - 2;
  std::vector<int> min_pos(p);
  for (int i = 0; i < p; ++i) {
    int m = position[i * layers];
    for (int k = 1; k < layers; ++k) m = std::min(m, position[i * layers + k]);
    min_pos[i] = m;
  }
  std::vector<int> order(p);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return min_pos[a] < min_pos[b]; });
  return order;
}

Perm lift_automorphism(const Perm& gamma, int p_t1, int layers) {
  if (static_cast<int>(gamma.size()) != p_t1 * layers)
    throw ValidationError("lift_automorphism: size mismatch");
  Perm sigma(p_t1);
  for (int i = 0; i < p_t1; ++i) {
    int img = gamma[i * layers];
    if (img % layers != 0)
      throw ValidationError("lift_automorphism: automorphism does not respect layers");
    sigma[i] = img / layers;
    for (int k = 1; k < layers; ++k)
      if (gamma[i * layers + k] != sigma[i] * layers + k)
        throw ValidationError("lift_automorphism: automorphism does not respect blocks");
  }
  if (sigma[p_t1 - 2] != p_t1 - 2 || sigma[p_t1 - 1] != p_t1 - 1)
    throw ValidationError("lift_automorphism: auxiliary vertices moved");
  return sigma;
}

}  // namespace canform
