#pragma once

#include <optional>

#include "canform/charset.hpp"
#include "canform/graph.hpp"

namespace canform {

// bumped whenever the certificate encoding or the labeler's tie-breaking
// rules change; equal hashes are only meaningful at equal versions
inline constexpr int kCertificateVersion = 1;

struct CanonicalResult {
  Form canonical;
  Unimodular transform;  // transform^T * A * transform == canonical
  CharsetKind kind = CharsetKind::MS;
  int charset_size = 0;
  std::string hash;  // sha256 hex of encode_gram(canonical, kind)
};

// Can_{GL_n(Z)}(A) for a canonicalization-safe charset kind.
CanonicalResult canonical_form(const Form& a, CharsetKind kind = CharsetKind::MS);

struct StabilizerResult {
  std::vector<Unimodular> generators;
  Int order;
};

// generators and exact order of {U : U^T A U = A}; all four kinds allowed
StabilizerResult stabilizer(const Form& a, CharsetKind kind = CharsetKind::MS);

// witness W with W^T A W = B, when equivalent
std::optional<Unimodular> is_equivalent(const Form& a, const Form& b,
                                        CharsetKind kind = CharsetKind::MS);

std::string canonical_hash(const Form& a, CharsetKind kind = CharsetKind::MS);

// versioned byte encoding of a canonical Gram matrix (see README)
std::vector<uint8_t> encode_gram(const RatMat& gram, const std::string& kind_tag);
std::string sha256_hex(const std::vector<uint8_t>& bytes);

// Shared graph step: order the charset canonically and lift the stabilizer
// generators to vector permutations. Used by both the GL and Sp pipelines;
// when pair_j is non-null the edge weights are the lexicographic index of
// the pair (v^T A v', v^T J v').
struct OrderedCharset {
  std::vector<IVec> ordered;       // charset vectors in canonical order
  std::vector<Perm> vector_perms;  // stabilizer generators acting on `ordered`
  Int aut_order;
};
OrderedCharset canonical_vector_order(const Form& a, const VectorSet& v, const IntMat* pair_j);

// lift a vector permutation to the unique matrix U with U v_i = v_{sigma(i)}
IntMat lift_vector_permutation(const std::vector<IVec>& vectors, const Perm& sigma);

}  // namespace canform
