#include "annular/ktheory.hpp"

#include <algorithm>
#include <map>

#include "annular/diagram.hpp"
#include "annular/error.hpp"
#include "annular/matching.hpp"

namespace annular {

namespace {

using Acc = std::map<std::uint64_t, std::int64_t>;

SparseVec flush(const Acc& acc) {
  SparseVec v;
  for (auto [i, c] : acc)
    if (c) v.emplace_back(i, c);
  return v;
}

std::uint64_t low_mask(int bits) { return bits <= 0 ? 0 : ((std::uint64_t{1} << bits) - 1); }

// Insert the invariant vector v₊⊗v₋ - v₋⊗v₊ at factors (a, a+1) of a k-factor
// result; x has k-2 factors.
void cup_into(Acc& acc, std::uint64_t x, std::int64_t c, int a, int k) {
  const int below = k - 2 - a;  // factors after the pair
  const std::uint64_t hi = x >> below, lo = x & low_mask(below);
  auto put = [&](std::uint64_t pair, std::int64_t s) {
    acc[(hi << (below + 2)) | (pair << below) | lo] += s * c;
  };
  put(0b01, 1);
  put(0b10, -1);
}

// Pairing of factors (a, a+1): <v₊⊗v₋> = -1, <v₋⊗v₊> = +1, so that a closed
// loop evaluates to -2 and a zigzag to the identity.
void cap_into(Acc& acc, std::uint64_t x, std::int64_t c, int a, int k) {
  const int below = k - 2 - a;
  const std::uint64_t pair = (x >> below) & 3, hi = x >> (below + 2), lo = x & low_mask(below);
  std::int64_t s = pair == 0b01 ? -1 : pair == 0b10 ? 1 : 0;
  if (s) acc[(hi << below) | lo] += s * c;
}

SparseVec apply_linear(const GenSym& g, const SparseVec& v, int eps) {
  const int k = g.in_size;
  Acc acc;
  switch (g.kind) {
    case GenKind::Cup:
      for (auto [x, c] : v) cup_into(acc, x, c, g.index - 1, g.out_size);
      break;
    case GenKind::Cap:
      for (auto [x, c] : v) cap_into(acc, x, c, g.index - 1, k);
      break;
    case GenKind::CrossOver:
    case GenKind::CrossUnder:
      // Id + cup∘cap; squares to the identity, so both senses agree.
      for (auto [x, c] : v) {
        acc[x] += c;
        Acc mid;
        cap_into(mid, x, c, g.index - 1, k);
        for (auto [y, d] : mid) cup_into(acc, y, d, g.index - 1, k);
      }
      break;
    case GenKind::TwistPos:
    case GenKind::TwistNeg:
      for (auto [x, c] : v) acc[x] -= c;
      break;
    case GenKind::RotCW:
    case GenKind::RotCCW:
      if (k == 0) return v;
      for (auto [x, c] : v) {
        // Clockwise: the factor at position p moves to p-1.
        std::uint64_t y = g.kind == GenKind::RotCW
                              ? ((x << 1) | (x >> (k - 1))) & low_mask(k)
                              : (x >> 1) | ((x & 1) << (k - 1));
        acc[y] += eps * c;
      }
      break;
    case GenKind::Wrap: {
      // r = s ∘ t^{k-1}(2) ∘ ... ∘ t^1(2), so s = r ∘ t^1(2) ∘ ... ∘ t^{k-1}(2).
      SparseVec cur = v;
      for (int i = k - 1; i >= 1; --i) cur = apply_linear(GenSym::cross_under(i, k), cur, eps);
      return apply_linear(GenSym::rot_cw(k), cur, eps);
    }
  }
  return flush(acc);
}

int weight_of(std::uint64_t x, int k) {
  const int minus = __builtin_popcountll(x);
  return k - 2 * minus;
}

}  // namespace

WeightBasis::WeightBasis(int k_, int m_) : k(k_), m(m_) {
  if (k > 62) throw ArityMismatch("tensor power too large");
  if ((k - m) % 2 != 0 || m > k || m < -k) return;
  const int minus = (k - m) / 2;
  // Enumerate k-bit numbers with `minus` ones in increasing order.
  if (minus == 0) {
    index.push_back(0);
    return;
  }
  std::uint64_t x = low_mask(minus);
  const std::uint64_t limit = std::uint64_t{1} << k;
  while (x < limit) {
    index.push_back(x);
    const std::uint64_t t = x | (x - 1);
    x = (t + 1) | (((~t & -~t) - 1) >> (__builtin_ctzll(x) + 1));
  }
}

int WeightBasis::position(std::uint64_t idx) const {
  auto it = std::lower_bound(index.begin(), index.end(), idx);
  return it != index.end() && *it == idx ? static_cast<int>(it - index.begin()) : -1;
}

std::string WeightBasis::sign_string(std::uint64_t idx, int k) {
  std::string s(k, '+');
  for (int j = 0; j < k; ++j)
    if ((idx >> (k - 1 - j)) & 1) s[j] = '-';
  return s;
}

SparseVec apply_gen(const GenSym& g, const SparseVec& v, int eps) {
  if (g.is_wrap_index()) {
    SparseVec cur = v;
    const TangleWord expanded = expand_wrap_indices(TangleWord(g.in_size, {g}));
    for (const auto& h : expanded.gens())
      cur = apply_linear(h, cur, eps);
    return cur;
  }
  return apply_linear(g, v, eps);
}

SparseVec apply_word(const TangleWord& w, const SparseVec& v, int eps) {
  SparseVec cur = v;
  for (const auto& g : w.gens()) cur = apply_gen(g, cur, eps);
  return cur;
}

IntMatrix gen_matrix(const GenSym& g, int eps) {
  return full_matrix(TangleWord(g.in_size, {g}), eps);
}

IntMatrix full_matrix(const TangleWord& w, int eps) {
  const int p = w.source_size(), q = w.target_size();
  if (p > 12 || q > 12) throw ArityMismatch("full tensor matrices are limited to 12 factors");
  IntMatrix M(1 << q, 1 << p);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << p); ++x)
    for (auto [y, c] : apply_word(w, {{x, 1}}, eps)) M(static_cast<int>(y), static_cast<int>(x)) = c;
  return M;
}

IntMatrix psi_hat(const TangleWord& w, int m, int eps) {
  WeightBasis src(w.source_size(), m), dst(w.target_size(), m);
  IntMatrix M(dst.dim(), src.dim());
  for (int col = 0; col < src.dim(); ++col) {
    SparseVec cur{{src.index[col], 1}};
    int k = w.source_size();
    for (const auto& g : w.gens()) {
      cur = apply_gen(g, cur, eps);
      k = g.out_size;
      for (auto [y, c] : cur)
        if (weight_of(y, k) != m) throw InternalInvariant("generator " + g.token() + " changed the weight");
    }
    for (auto [y, c] : cur) M(dst.position(y), col) = c;
  }
  return M;
}

IntMatrix irreducible_classes(int m, int n) {
  const auto ms = enumerate(m, n);
  WeightBasis basis(m + 2 * n, m);
  IntMatrix M(basis.dim(), static_cast<int>(ms.size()));
  for (std::size_t c = 0; c < ms.size(); ++c)
    for (auto [y, v] : apply_word(cup_decomposition(ms[c]), {{0, 1}}))
      M(basis.position(y), static_cast<int>(c)) = v;
  return M;
}

EulerPairingReport euler_pairing_check(int m, int n) {
  EulerPairingReport rep;
  rep.m = m;
  rep.n = n;
  const auto ms = enumerate(m, n);
  bool plus = true, minus = true;
  for (const auto& a : ms)
    for (const auto& b : ms) {
      TangleWord word = compose(cup_decomposition(b), invert_diagrammatically(cup_decomposition(a)));
      std::int64_t s = 0;
      for (auto [y, c] : apply_word(word, {{0, 1}}))
        if (y == 0) s = c;
      std::int64_t e = ext_poincare(a, b).at_unit(-1) * (n % 2 ? -1 : 1);
      rep.entries.push_back({a.signs(), b.signs(), s, e});
      plus = plus && s == e;
      minus = minus && s == -e;
    }
  rep.global_sign = plus ? 1 : minus ? -1 : 0;
  return rep;
}

bool RelationReport::holds(int eps) const {
  const int slot = eps == 1 ? 0 : 1;
  return std::all_of(families.begin(), families.end(), [&](const auto& f) { return f.failures[slot] == 0; });
}

std::vector<int> RelationReport::satisfying_signs() const {
  std::vector<int> out;
  for (int eps : {1, -1})
    if (holds(eps)) out.push_back(eps);
  return out;
}

RelationReport relation_report(int max_size) {
  RelationReport rep;
  rep.max_size = max_size;
  for (int k = 0; k < kRuleCount; ++k) {
    RelationFamilyResult f;
    f.rule = rule_from_index(k);
    rep.families.push_back(f);
  }
  for (const auto& inst : relation_corpus(max_size)) {
    auto& fam = rep.families[static_cast<int>(inst.rule_id)];
    ++fam.instances;
    for (int slot = 0; slot < 2; ++slot) {
      const int eps = slot == 0 ? 1 : -1;
      if (full_matrix(inst.lhs, eps) == full_matrix(inst.rhs, eps)) continue;
      if (fam.failures[slot]++ == 0) fam.first_failure[slot] = inst.label;
    }
  }
  return rep;
}

}  // namespace annular
