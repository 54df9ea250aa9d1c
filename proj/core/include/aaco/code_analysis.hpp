#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "aaco/block_code.hpp"
#include "aaco/matroid.hpp"
#include "aaco/subsets.hpp"

namespace aaco {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

struct AlmostAffineCheck {
  bool ok;
  Mask witness;  // first subset with a non-power puncture size; 0 when ok
};

// True iff every puncture of the code has size an exact power of q.
AlmostAffineCheck is_almost_affine(const BlockCode& code);

// Matroid on {1..n} with rank(X) = log_q |C_X|. Throws NotAlmostAffine
// with the offending subset when some puncture size is not a power of q.
Matroid code_matroid(const BlockCode& code);

// A subcode as an index selection into its parent's word list.
struct Subcode {
  const BlockCode* parent = nullptr;
  std::vector<std::uint32_t> members;  // ascending indices into parent->words()

  std::size_t size() const { return members.size(); }
  std::vector<Word> words() const;
  Mask support() const;  // union support of the selected words
};

// {c in C : c_X = reference_X}. Strict mode insists reference is a codeword
// so Proposition-style cardinality q^(k - r(X)) applies; the permissive mode
// accepts any reference word and may return an empty selection.
Subcode fixed_subcode(const BlockCode& code, Mask x, const Word& reference, bool strict = true);

// All size-q^dim subsets of the code that are almost affine, in canonical
// (index-combination) order. Throws EnumerationBudgetExceeded when
// C(|C|, q^dim) exceeds the budget.
std::vector<Subcode> enumerate_subcodes(const BlockCode& code, int dim,
                                        std::uint64_t budget = kDefaultEnumerationBudget);

// Generalized Hamming weights d_1..d_k of the code, three ways. The matroid
// route is the workhorse; it cross-checks the equivalent min/max forms and
// the fixed-subcode form before returning. The subcode and codeword routes
// recompute the same values from first principles and exist as verification
// paths behind the enumeration budget.
WeightHierarchy ghw_via_matroid(const BlockCode& code);
WeightHierarchy ghw_via_subcodes(const BlockCode& code,
                                 std::uint64_t budget = kDefaultEnumerationBudget);
WeightHierarchy ghw_via_codewords(const BlockCode& code, const Word* reference = nullptr,
                                  std::uint64_t budget = kDefaultEnumerationBudget);

// Codewords whose reference-support is inclusion-minimal among the nonzero
// supports. Their supports are exactly the circuits of dual(M_C).
std::vector<Word> minimal_codewords(const BlockCode& code, const Word& reference);

// Number of codewords whose reference-support is exactly x, computed by
// inclusion-exclusion over the rank function (not by filtering words).
std::int64_t count_words_with_support(const BlockCode& code, const Word& reference, Mask x);
std::int64_t count_words_with_support(const BlockCode& code, const Matroid& matroid,
                                      const Word& reference, Mask x);

struct CriticalExponent {
  int gamma;
  std::vector<Word> witness;  // gamma codewords whose supports cover >= i positions
};

// Fewest codewords whose reference-supports jointly cover >= i positions.
// The value is reference-independent; the argument only selects the witness.
CriticalExponent critical_exponent(const BlockCode& code, int i, const Word* reference = nullptr);

// gamma_1..gamma_n in one sweep.
std::vector<int> critical_exponent_profile(const BlockCode& code, const Word* reference = nullptr);

struct KungRow {
  int i;
  int gamma;
  int bound;  // s*_{n+1-i} + 2
  bool holds;
};

// Covering bound rows for i = k+1..n; empty when k = n.
std::vector<KungRow> kung_bound_report(const BlockCode& code);

struct AccessStructure {
  std::vector<Mask> gamma0;  // minimal authorized sets, over positions 2..n
  bool connected;
};

// Minimal authorized sets A with A + {1} a circuit of M_C; the dealer sits
// at position 1 and the participants at 2..n.
AccessStructure access_structure(const BlockCode& code);

// Dimension/length profile k_1..k_n with k_i = k - min{r(X) : |X| = n-i}.
std::vector<int> dlp(const Matroid& matroid);
std::vector<int> dlp(const BlockCode& code);

struct CodeEquivalence {
  std::vector<int> sigma;             // 1-based: source position i lands at sigma[i-1]
  std::vector<std::vector<int>> tau;  // tau[i-1][s] = image of symbol s at source position i
};

struct EquivalenceSearchResult {
  std::optional<CodeEquivalence> witness;
  bool exhausted;  // true when the search space was fully explored
};

// Searches for a code equivalence (per-position symbol bijections followed
// by a position permutation) within the node budget. A missing witness is a
// disproof only when `exhausted` is set.
EquivalenceSearchResult are_equivalent(const BlockCode& a, const BlockCode& b,
                                       std::uint64_t budget = kDefaultEnumerationBudget);

BlockCode apply_equivalence(const BlockCode& code, const CodeEquivalence& equivalence);

}  // namespace aaco
