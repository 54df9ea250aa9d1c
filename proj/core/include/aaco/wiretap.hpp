#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "aaco/block_code.hpp"
#include "aaco/matroid.hpp"
#include "aaco/subsets.hpp"

namespace aaco {

// Side map phi: F^s x F^s -> F^s masking the s redundancy digits with a
// message. Valid maps satisfy two conditions: phi(g, .) is a bijection for
// every g, and restrictions commute with the first argument
// (g|_X = h|_X  <=>  phi(g,m)|_X = phi(h,m)|_X for every X and m).
class SideMap {
 public:
  // phi(g,m)_j = g_j + m_j mod q; valid for every q.
  static SideMap componentwise_addition(int q, int positions);

  // One q*q table per position; tables[j][x][y] = phi_0^(j)(x, y). Each
  // table must be a Latin square, which is exactly the two conditions in
  // componentwise form.
  static SideMap componentwise(int q, std::vector<std::vector<std::vector<int>>> tables);

  // Full table over encoded tuples: table[g][m] = phi(g, m), tuples encoded
  // little-endian base q. Validation reduces the quantifier over subsets X
  // to singletons: phi(g,m)_j must factor through g_j injectively.
  static SideMap general(int q, int positions, std::vector<std::vector<int>> table);

  int q() const { return q_; }
  int positions() const { return positions_; }

  std::vector<int> apply(const std::vector<int>& g, const std::vector<int>& m) const;
  // The unique m with apply(g, m) = t.
  std::vector<int> invert(const std::vector<int>& g, const std::vector<int>& t) const;

 private:
  SideMap(int q, int positions) : q_(q), positions_(positions) {}
  void validate_componentwise() const;
  void validate_general() const;
  int encode(const std::vector<int>& tuple) const;
  std::vector<int> decode(int value) const;

  int q_;
  int positions_;
  std::vector<std::vector<std::vector<int>>> tables_;  // componentwise form
  std::vector<std::vector<int>> table_;                // general form
  std::vector<std::vector<int>> row_inverse_;          // general: [g][t] = m
};

// Coset scheme over an almost affine code: the first k positions (after an
// internal basis-aligning permutation) carry the codeword, the side map
// masks the rest with the message. Immutable after construction.
class WiretapScheme {
 public:
  WiretapScheme(BlockCode code, SideMap phi);
  static WiretapScheme with_addition(BlockCode code);

  const BlockCode& code() const { return original_; }
  const Matroid& matroid() const { return matroid_; }
  int k() const { return k_; }
  int message_positions() const { return original_.length() - k_; }
  // permutation[i-1] = original position carried at internal position i;
  // identity when {1..k} is already a basis.
  const std::vector<int>& permutation() const { return perm_; }

  // Uniformly random member of the message's coset under the seeded stream.
  Word encode(const Word& message, std::uint64_t seed) const;
  // Total on F^n: every word of the ambient space decodes to the unique
  // message whose coset contains it.
  Word decode(const Word& received) const;

  // C_m in original coordinates.
  BlockCode coset(const Word& message) const;

  // {w in C_m : w_X = t_X}, lex order; empty or of size q^(k - r(X)).
  std::vector<Word> lambda_set(const Word& t, Mask x, const Word& message) const;

  struct EquivocationRow {
    int mu;
    int equivocation;   // E_mu = (n-k) - delta
    int delta;          // max nullity over |X| = mu
    int lower_weight;   // d*_delta   (0 when delta = 0)
    int upper_weight;   // d*_{delta+1} (n+1 past the hierarchy)
    bool bracket_holds; // lower <= mu < upper
  };

  // Exact equivocation by nullity scan, mu = 0..n, with the dual-weight
  // bracket of each row.
  std::vector<EquivocationRow> equivocation_profile() const;

 private:
  Word internalize(const Word& original) const;
  Word externalize(const Word& internal) const;
  Word mask_word(const Word& internal_codeword, const Word& message) const;

  BlockCode original_;
  BlockCode permuted_;
  Matroid matroid_;  // of the original code
  int k_;
  std::vector<int> perm_;
  SideMap phi_;
  std::unordered_map<std::uint64_t, std::uint32_t> basis_index_;  // k-prefix -> word
};

}  // namespace aaco
