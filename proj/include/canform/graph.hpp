#pragma once

#include <cstdint>

#include "canform/matrix.hpp"
#include "canform/permgroup.hpp"

namespace canform {

// Complete graph with rational vertex weights (diagonal) and edge weights
// (off-diagonal): the adjacency matrix B^T A B of a form over a vector set.
struct WeightedGraph {
  int p = 0;
  RatMat w;  // p x p symmetric
};

WeightedGraph build_graph(const Form& a, const std::vector<IVec>& vectors);

// Complete graph carrying edge weights only; the diagonal of w is unused.
struct EdgeWeightedGraph {
  int p = 0;
  RatMat w;
};

// Fold vertex weights into two extra vertices: edges (i, p) carry w_ii,
// edges (i, p+1) carry a = 1 + max w, edge (p, p+1) carries b = a + 1.
EdgeWeightedGraph t1(const WeightedGraph& g);

struct ColoredGraph {
  int nv = 0;
  int num_colors = 0;
  std::vector<int> color;
  int words = 0;  // words per adjacency row
  std::vector<uint64_t> adj;

  ColoredGraph() = default;
  ColoredGraph(int n, int ncolors)
      : nv(n), num_colors(ncolors), color(n, 0), words((n + 63) / 64),
        adj(static_cast<size_t>(n) * ((n + 63) / 64), 0) {}

  bool adjacent(int u, int v) const {
    return (adj[static_cast<size_t>(u) * words + (v >> 6)] >> (v & 63)) & 1u;
  }
  void add_edge(int u, int v) {
    adj[static_cast<size_t>(u) * words + (v >> 6)] |= uint64_t(1) << (v & 63);
    adj[static_cast<size_t>(v) * words + (u >> 6)] |= uint64_t(1) << (u & 63);
  }
  const uint64_t* row(int u) const { return adj.data() + static_cast<size_t>(u) * words; }
};

// Binary-digit expansion of edge-weight indices: w = max(1, ceil(log2 #S))
// layers of p vertices; vertex (i,k) = i*w + k has color k; (i,k)~(i,k')
// always, (i,k)~(i',k) iff digit k of the index of w_{i,i'} in the sorted
// distinct-weight list S is 1.
ColoredGraph t2(const EdgeWeightedGraph& g);
int t2_layers(const EdgeWeightedGraph& g);  // the w used by t2

struct CanonLabeling {
  std::vector<int> labeling;         // position -> vertex realizing the certificate
  std::vector<uint8_t> certificate;  // versioned encoding, see encode_colored_graph
  std::vector<Perm> aut_generators;  // generate the color-preserving automorphism group
  Int aut_order;
};

// Deterministic canonical labeling by equitable refinement plus
// individualization, with automorphism and invariant pruning. The
// certificate is a pure function of the colored-graph isomorphism class.
CanonLabeling canonical_labeling(const ColoredGraph& g);

// "PDCG1" magic, nv, #colors, canonical colors, then the upper-triangular
// adjacency bits of the relabeled graph packed MSB-first.
std::vector<uint8_t> encode_colored_graph(const ColoredGraph& g, const std::vector<int>& labeling);

// Order the p charset vertices of the T1 graph by the minimum canonical
// position of their layer blocks; the two auxiliary T1 vertices are skipped.
std::vector<int> lift_ordering(const CanonLabeling& canon, int p_t1, int layers);

// Restrict a colored-graph automorphism to the T1 vertices; throws if it
// does not respect layer blocks or moves the auxiliary vertices.
Perm lift_automorphism(const Perm& gamma, int p_t1, int layers);

}  // namespace canform
