#include "canform/symplectic.hpp"

#include "canform/lattice.hpp"

namespace canform {

IntMat symplectic_j(int half) {
  IntMat j(2 * half, 2 * half);
  for (int i = 0; i < half; ++i) {
    j(i, half + i) = 1;
    j(half + i, i) = -1;
  }
  return j;
}

Int symplectic_product(const IVec& v, const IVec& w) {
  if (v.size() != w.size() || v.size() % 2 != 0)
    throw ValidationError("symplectic_product: vectors must have equal even dimension");
  int half = static_cast<int>(v.size()) / 2;
  Int s = 0;
  for (int i = 0; i < half; ++i) s += v[i] * w[half + i] - v[half + i] * w[i];
  return s;
}

SymplecticBasis symp_basis(const std::vector<IVec>& family) {
  if (family.empty()) throw ValidationError("symp_basis: empty family");
  int dim = static_cast<int>(family[0].size());
  if (dim % 2 != 0) throw ValidationError("symp_basis: odd dimension");
  int half = dim / 2;
  {
    Sublattice sp = span_basis(columns_matrix(dim, family));
    if (sp.rank != dim) throw ValidationError("symp_basis: family does not span Z^2n");
    Int d = det(sp.basis);
    if (d != 1 && d != -1) throw ValidationError("symp_basis: family does not span Z^2n");
  }

  std::vector<IVec> cur = family;
  std::vector<IVec> us, ws;
  for (int step = 0; step < half; ++step) {
    int fi = -1;
    for (size_t j = 0; j < cur.size(); ++j) {
      bool nonzero = false;
      for (const Int& e : cur[j])
        if (e != 0) {
          nonzero = true;
          break;
        }
      if (nonzero) {
        fi = static_cast<int>(j);
        break;
      }
    }
    if (fi < 0) throw ValidationError("symp_basis: family exhausted early (internal)");
    IVec w1 = cur[fi];
    Int c = content(w1);
    for (Int& e : w1) e /= c;

    // left-to-right extended gcd over the symplectic products
    Int g = 0;
    IVec partner(dim, Int(0));
    for (const IVec& v : cur) {
      Int t = symplectic_product(w1, v);
      if (t == 0) continue;
      XgcdResult e = xgcd(g, t);
      for (int k = 0; k < dim; ++k) partner[k] = e.x * partner[k] + e.y * v[k];
      g = e.g;
    }
    if (g != 1) throw ValidationError("symp_basis: gcd of symplectic products is not 1 (internal)");

    // reduce the family into the complement of the hyperbolic pair
    for (IVec& v : cur) {
      Int a = symplectic_product(v, partner);
      Int b = symplectic_product(v, w1);
      for (int k = 0; k < dim; ++k) v[k] = v[k] - a * w1[k] + b * partner[k];
    }
    us.push_back(std::move(w1));
    ws.push_back(std::move(partner));
  }

  SymplecticBasis out;
  out.half = half;
  out.basis = IntMat(dim, dim);
  for (int i = 0; i < half; ++i)
    for (int k = 0; k < dim; ++k) {
      out.basis(k, i) = us[i][k];
      out.basis(k, half + i) = ws[i][k];
    }
  IntMat j = symplectic_j(half);
  IntMat check = mat_mul(mat_mul(transpose(out.basis), j), out.basis);
  if (check != j) throw ValidationError("symp_basis: output is not symplectic (internal)");
  return out;
}

SpCanonicalResult canonical_form_sp(const Form& a, CharsetKind kind) {
  if (a.n % 2 != 0) throw ValidationError("canonical_form_sp: dimension must be even");
  if (kind != CharsetKind::MS && kind != CharsetKind::CV)
    throw ValidationError("canonical_form_sp: charset kind must be ms or cv");
  int half = a.n / 2;
  IntMat j = symplectic_j(half);
  // No LLL pre-reduction here: the outer transform must stay inside Sp.
  // The enumeration kernels reduce internally and map back, so the charset
  // itself is unaffected.
  VectorSet v = charset(a, kind);
  OrderedCharset oc = canonical_vector_order(a, v, &j);
  // every lifted stabilizer generator must preserve both pairings
  for (const Perm& sigma : oc.vector_perms) {
    IntMat g = lift_vector_permutation(oc.ordered, sigma);
    Form fchk = conjugate(a, g);
    if (fchk.gram != a.gram)
      throw ValidationError("canonical_form_sp: generator does not stabilize A (internal)");
    IntMat jchk = mat_mul(mat_mul(transpose(g), j), g);
    if (jchk != j)
      throw ValidationError("canonical_form_sp: generator is not symplectic (internal)");
  }
  SymplecticBasis sb = symp_basis(oc.ordered);
  Form canon = conjugate(a, sb.basis);
  SpCanonicalResult res{std::move(canon), Unimodular(sb.basis), kind, v.size(), ""};
  res.hash = sha256_hex(encode_gram(res.canonical.gram, std::string("sp-") + charset_name(kind)));
  return res;
}

}  // namespace canform
