#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "annular/int_matrix.hpp"
#include "annular/relations.hpp"
#include "annular/tangle.hpp"

namespace annular {

// Sign of the rotation matrix.  Both values satisfy every relation (the sign
// only ever enters squared); +1 is the one for which the rotation class is the
// identity on weight spaces and the Euler pairing agrees with Ext dimensions.
inline constexpr int kRotationSign = 1;

// Sparse vector over the tensor basis of V^{⊗k}.  Basis index bit (k-1-j)
// holds factor j, with 0 = v₊ and 1 = v₋, so numeric order is lexicographic
// order of sign strings with '+' < '-'.
using SparseVec = std::vector<std::pair<std::uint64_t, std::int64_t>>;

struct WeightBasis {
  int k = 0;
  int m = 0;
  std::vector<std::uint64_t> index;  // sorted tensor-basis indices of weight m
  WeightBasis(int k, int m);
  int dim() const { return static_cast<int>(index.size()); }
  int position(std::uint64_t idx) const;  // -1 when absent
  static std::string sign_string(std::uint64_t idx, int k);
};

SparseVec apply_gen(const GenSym& g, const SparseVec& v, int eps = kRotationSign);
SparseVec apply_word(const TangleWord& w, const SparseVec& v, int eps = kRotationSign);

// Full-space matrix 2^out x 2^in (only for in, out <= 12).
IntMatrix gen_matrix(const GenSym& g, int eps = kRotationSign);
IntMatrix full_matrix(const TangleWord& w, int eps = kRotationSign);

// Restriction to the weight-m spaces; asserts that weight is preserved.
IntMatrix psi_hat(const TangleWord& w, int m, int eps = kRotationSign);

// Columns are the classes of the irreducible objects, in enumeration order.
IntMatrix irreducible_classes(int m, int n);

struct EulerPairingEntry {
  std::string alpha, beta;
  std::int64_t s = 0;  // K-theory pairing
  std::int64_t e = 0;  // signed Euler characteristic of Ext
};

struct EulerPairingReport {
  int m = 0, n = 0;
  std::vector<EulerPairingEntry> entries;
  int global_sign = 0;  // +1 or -1 when consistent, 0 otherwise
  bool passed() const { return global_sign != 0; }
};

EulerPairingReport euler_pairing_check(int m, int n);

// Every relation instance up to max_size compared as full tensor matrices,
// once for each rotation sign.
struct RelationFamilyResult {
  RuleId rule;
  int instances = 0;
  int failures[2] = {0, 0};  // for eps = +1 and eps = -1
  std::string first_failure[2];
};

struct RelationReport {
  int max_size = 0;
  std::vector<RelationFamilyResult> families;  // in RuleId order
  bool holds(int eps) const;
  std::vector<int> satisfying_signs() const;
};

RelationReport relation_report(int max_size);

}  // namespace annular
