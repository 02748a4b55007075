#include "canform/canonical.hpp"

#include <openssl/evp.h>

#include "canform/lattice.hpp"

namespace canform {

std::string sha256_hex(const std::vector<uint8_t>& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

std::vector<uint8_t> encode_gram(const RatMat& gram, const std::string& kind_tag) {
  std::string s = "PDCF1\nv";
  s += std::to_string(kCertificateVersion);
  s += '\n';
  s += kind_tag;
  s += '\n';
  s += std::to_string(gram.rows);
  s += '\n';
  for (int i = 0; i < gram.rows; ++i) {
    for (int j = 0; j < gram.cols; ++j) {
      if (j) s += ' ';
      s += gram(i, j).get_str();
    }
    s += '\n';
  }
  return std::vector<uint8_t>(s.begin(), s.end());
}

namespace {

// Colored graph for the symplectic pipeline. The symmetric part
// (v^T A v', |v^T J v'|) is indexed and run through T1/T2; the sign of the
// antisymmetric part is carried by two extra layers with an edge
// (i, w) ~ (j, w+1) exactly when v_i^T J v_j > 0. Color-preserving
// automorphisms then correspond to permutations preserving both A- and
// signed J-products.
struct SpColored {
  ColoredGraph graph;
  int p_t1 = 0;
  int layers = 0;
};

SpColored build_sp_colored(const Form& a, const IntMat& j, const std::vector<IVec>& vectors) {
  int p = static_cast<int>(vectors.size());
  WeightedGraph ga = build_graph(a, vectors);
  IntMat pj(p, p);
  for (int x = 0; x < p; ++x) {
    IVec jv = mat_vec(j, vectors[x]);
    for (int y = 0; y < p; ++y) {
      Int s = 0;
      for (int k = 0; k < a.n; ++k)
        if (vectors[y][k] != 0) s += vectors[y][k] * jv[k];
      pj(y, x) = s;  // v_y^T J v_x
    }
  }
  // symmetric alphabet: (A-product, |J-product|), lexicographically indexed
  std::vector<std::pair<Rat, Int>> pairs;
  pairs.reserve(static_cast<size_t>(p) * (p + 1) / 2);
  for (int x = 0; x < p; ++x)
    for (int y = x; y < p; ++y) pairs.emplace_back(ga.w(x, y), abs(pj(x, y)));
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  WeightedGraph sym{p, RatMat(p, p)};
  for (int x = 0; x < p; ++x)
    for (int y = x; y < p; ++y) {
      auto it = std::lower_bound(pairs.begin(), pairs.end(),
                                 std::make_pair(ga.w(x, y), Int(abs(pj(x, y)))));
      Rat idx(static_cast<long>(it - pairs.begin()));
      sym.w(x, y) = idx;
      sym.w(y, x) = idx;
    }

  EdgeWeightedGraph e = t1(sym);
  int w = t2_layers(e);
  int p1 = e.p;
  int layers = w + 2;
  ColoredGraph out(p1 * layers, layers);
  for (int i = 0; i < p1; ++i)
    for (int k = 0; k < layers; ++k) out.color[i * layers + k] = k;
  for (int i = 0; i < p1; ++i)
    for (int k = 0; k < layers; ++k)
      for (int k2 = k + 1; k2 < layers; ++k2) out.add_edge(i * layers + k, i * layers + k2);
  std::vector<Rat> s;
  s.reserve(static_cast<size_t>(p1) * (p1 - 1) / 2);
  for (int i = 0; i < p1; ++i)
    for (int jj = i + 1; jj < p1; ++jj) s.push_back(e.w(i, jj));
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int i = 0; i < p1; ++i)
    for (int jj = i + 1; jj < p1; ++jj) {
      size_t pos = static_cast<size_t>(
          std::lower_bound(s.begin(), s.end(), e.w(i, jj)) - s.begin());
      for (int k = 0; k < w; ++k)
        if ((pos >> k) & 1) out.add_edge(i * layers + k, jj * layers + k);
    }
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y) {
      if (x == y) continue;
      if (pj(x, y) > 0) out.add_edge(x * layers + w, y * layers + w + 1);
    }
  return {std::move(out), p1, layers};
}

}  // namespace

OrderedCharset canonical_vector_order(const Form& a, const VectorSet& v, const IntMat* pair_j) {
  CanonLabeling lab;
  int p1 = 0, layers = 0;
  if (pair_j == nullptr) {
    WeightedGraph wg = build_graph(a, v.vecs);
    EdgeWeightedGraph e = t1(wg);
    p1 = e.p;
    layers = t2_layers(e);
    ColoredGraph c = t2(e);
    lab = canonical_labeling(c);
  } else {
    SpColored sc = build_sp_colored(a, *pair_j, v.vecs);
    p1 = sc.p_t1;
    layers = sc.layers;
    lab = canonical_labeling(sc.graph);
  }
  std::vector<int> order = lift_ordering(lab, p1, layers);
  int p = v.size();
  std::vector<int> inv_order(p);
  for (int i = 0; i < p; ++i) inv_order[order[i]] = i;

  OrderedCharset oc;
  oc.ordered.reserve(p);
  for (int i = 0; i < p; ++i) oc.ordered.push_back(v.vecs[order[i]]);
  for (const Perm& gen : lab.aut_generators) {
    Perm sigma_t1 = lift_automorphism(gen, p1, layers);
    Perm sigma(p);
    for (int i = 0; i < p; ++i) sigma[i] = inv_order[sigma_t1[order[i]]];
    oc.vector_perms.push_back(std::move(sigma));
  }
  oc.aut_order = lab.aut_order;
  return oc;
}

IntMat lift_vector_permutation(const std::vector<IVec>& vectors, const Perm& sigma) {
  int p = static_cast<int>(vectors.size());
  int n = static_cast<int>(vectors[0].size());
  // pick the first n linearly independent vectors, by index
  std::vector<int> chosen;
  RatMat elim(n, n);
  int rank = 0;
  for (int idx = 0; idx < p && rank < n; ++idx) {
    RVec row(n);
    for (int k = 0; k < n; ++k) row[k] = Rat(vectors[idx][k]);
    for (int r = 0; r < rank; ++r) {
      int lead = -1;
      for (int k = 0; k < n; ++k)
        if (elim(r, k) != 0) {
          lead = k;
          break;
        }
      if (row[lead] != 0) {
        Rat f = row[lead] / elim(r, lead);
        for (int k = 0; k < n; ++k) row[k] -= f * elim(r, k);
      }
    }
    bool nonzero = false;
    for (int k = 0; k < n; ++k)
      if (row[k] != 0) {
        nonzero = true;
        break;
      }
    if (nonzero) {
      for (int k = 0; k < n; ++k) elim(rank, k) = row[k];
      chosen.push_back(idx);
      ++rank;
    }
  }
  if (rank < n) throw ValidationError("lift: vector set does not span");
  RatMat m(n, n), img(n, n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) {
      m(r, c) = Rat(vectors[chosen[c]][r]);
      img(r, c) = Rat(vectors[sigma[chosen[c]]][r]);
    }
  RatMat u = mat_mul(img, inverse(m));
  IntMat ui;
  try {
    ui = to_int(u);
  } catch (const ValidationError&) {
    throw ValidationError("lift: induced matrix is not integral (labeler inconsistency)");
  }
  for (int i = 0; i < p; ++i) {
    IVec im = mat_vec(ui, vectors[i]);
    if (im != vectors[sigma[i]])
      throw ValidationError("lift: permutation is not induced by a matrix (labeler inconsistency)");
  }
  return ui;
}

namespace {

std::string hash_of(const RatMat& gram, const std::string& tag) {
  return sha256_hex(encode_gram(gram, tag));
}

}  // namespace

CanonicalResult canonical_form(const Form& a, CharsetKind kind) {
  if (!canonicalization_safe(kind))
    throw ValidationError("canonical_form: charset kind ps is not canonicalization-safe");
  LllResult red = lll_reduce(a);
  VectorSet v = charset(red.reduced, kind);
  OrderedCharset oc = canonical_vector_order(red.reduced, v, nullptr);
  IntMat q = columns_matrix(a.n, oc.ordered);
  HnfResult h = hnf(q);
  if (h.rank != a.n)
    throw ValidationError("canonical_form: charset is rank deficient (internal)");
  Form canon = conjugate(red.reduced, h.u);
  IntMat total = mat_mul(red.u.mat, h.u);
  // requirement (i): the transform witnesses equivalence, checked exactly
  Form check = conjugate(a, total);
  if (check.gram != canon.gram)
    throw ValidationError("canonical_form: transform verification failed (internal)");
  CanonicalResult res{std::move(canon), Unimodular(std::move(total)), kind, v.size(), ""};
  res.hash = hash_of(res.canonical.gram, charset_name(kind));
  return res;
}

StabilizerResult stabilizer(const Form& a, CharsetKind kind) {
  LllResult red = lll_reduce(a);
  VectorSet v = charset(red.reduced, kind);
  OrderedCharset oc = canonical_vector_order(red.reduced, v, nullptr);
  IntMat u0 = red.u.mat;
  IntMat u0_inv = int_inverse_unimodular(u0);
  StabilizerResult res;
  res.order = oc.aut_order;
  for (const Perm& sigma : oc.vector_perms) {
    IntMat m = lift_vector_permutation(oc.ordered, sigma);
    IntMat g = mat_mul(mat_mul(u0, m), u0_inv);
    Form check = conjugate(a, g);
    if (check.gram != a.gram)
      throw ValidationError("stabilizer: generator does not stabilize (internal)");
    res.generators.emplace_back(std::move(g));
  }
  return res;
}

std::optional<Unimodular> is_equivalent(const Form& a, const Form& b, CharsetKind kind) {
  if (a.n != b.n) throw ValidationError("is_equivalent: dimension mismatch");
  CanonicalResult ca = canonical_form(a, kind);
  CanonicalResult cb = canonical_form(b, kind);
  if (ca.canonical.gram != cb.canonical.gram) return std::nullopt;
  IntMat w = mat_mul(ca.transform.mat, int_inverse_unimodular(cb.transform.mat));
  Form check = conjugate(a, w);
  if (check.gram != b.gram)
    throw ValidationError("is_equivalent: witness verification failed (internal)");
  return Unimodular(std::move(w));
}

std::string canonical_hash(const Form& a, CharsetKind kind) { return canonical_form(a, kind).hash; }

}  // namespace canform
