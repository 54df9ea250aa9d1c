#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "aaco/code_analysis.hpp"
#include "aaco/errors.hpp"
#include "corpus.hpp"

using namespace aaco;

namespace {

const BlockCode& cprime() {
  static const BlockCode code = running_example_cprime();
  return code;
}

// codes small enough for the subcode-enumeration route
std::vector<corpus::Entry> triple_agreement_codes() {
  std::vector<corpus::Entry> out;
  for (const auto& entry : corpus::named_codes()) {
    if (entry.name == "frs_5_2_2_2" || entry.name == "frs_7_3_2_2") continue;
    out.push_back(entry);
  }
  for (const auto& entry : corpus::random_linear(8)) {
    if (entry.code.size() <= 16 && entry.code.length() <= 6) out.push_back(entry);
  }
  return out;
}

std::int64_t brute_force_support_count(const BlockCode& code, const Word& reference, Mask x) {
  std::int64_t count = 0;
  for (const Word& w : code.words()) {
    if (support(w, reference) == x) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("almost affinity detection") {
  CHECK(is_almost_affine(cprime()).ok);
  CHECK(is_almost_affine(corpus::full_space(3, 3)).ok);

  const BlockCode bad(Alphabet{2, {}}, 2, {{0, 0}, {0, 1}, {1, 0}});
  const AlmostAffineCheck check = is_almost_affine(bad);
  CHECK_FALSE(check.ok);
  CHECK(check.witness == 0b11);  // first failing subset in canonical order
  CHECK_THROWS_AS(code_matroid(bad), NotAlmostAffine);
}

TEST_CASE("associated matroids") {
  CHECK(code_matroid(cprime()) == Matroid::uniform(2, 3));
  CHECK(code_matroid(BlockCode(Alphabet{3, {}}, 2, {{1, 2}})) == Matroid::uniform(0, 2));
  CHECK(code_matroid(corpus::repetition3()) == Matroid::uniform(1, 3));
  for (const auto& entry : corpus::named_codes()) {
    CAPTURE(entry.name);
    CHECK_NOTHROW(code_matroid(entry.code).validate());
  }
}

TEST_CASE("fixed subcodes") {
  const Word zero{0, 0, 0};
  const Subcode sub = fixed_subcode(cprime(), 0b010, zero);
  CHECK(sub.words() == std::vector<Word>{{0, 0, 0}, {1, 0, 1}, {2, 0, 2}, {3, 0, 3}});
  CHECK(fixed_subcode(cprime(), 0, zero).size() == 16);
  CHECK(fixed_subcode(cprime(), 0b011, zero).words() == std::vector<Word>{zero});  // basis pins the word

  CHECK_THROWS_AS(fixed_subcode(cprime(), 0b010, {0, 0, 1}), WordNotInCode);
  CHECK(fixed_subcode(cprime(), 0b111, {0, 0, 1}, false).size() == 0);  // permissive
  CHECK_THROWS_AS(fixed_subcode(cprime(), 0b11111, zero), IndexOutOfRange);

  // cardinality law |C(X, c)| = q^(k - r(X)) for every X and every codeword
  for (const auto& entry : triple_agreement_codes()) {
    CAPTURE(entry.name);
    const Matroid m = code_matroid(entry.code);
    const int k = m.rank();
    const Mask all = full_mask(entry.code.length());
    for (Mask x = 0; x <= all; ++x) {
      for (const Word& c : entry.code.words()) {
        std::size_t expected = 1;
        for (int e = 0; e < k - m.rank(x); ++e) expected *= entry.code.q();
        CHECK(fixed_subcode(entry.code, x, c).size() == expected);
      }
      if (x == all) break;
    }
  }
}

TEST_CASE("subcode enumeration") {
  const std::vector<Subcode> dim1 = enumerate_subcodes(cprime(), 1);
  CHECK(dim1.size() == 12);
  for (const Subcode& sub : dim1) CHECK(set_size(sub.support()) == 2);
  // the paper's sample subcode appears
  const std::vector<Word> sample{{0, 2, 2}, {1, 1, 2}, {2, 0, 2}, {3, 3, 2}};
  bool found = false;
  for (const Subcode& sub : dim1) found = found || sub.words() == sample;
  CHECK(found);

  const std::vector<Subcode> dim2 = enumerate_subcodes(cprime(), 2);
  CHECK(dim2.size() == 1);
  CHECK(dim2[0].words() == cprime().words());
  CHECK(enumerate_subcodes(cprime(), 0).size() == 16);
  CHECK_THROWS_AS(enumerate_subcodes(cprime(), 3), IndexOutOfRange);
  CHECK_THROWS_AS(enumerate_subcodes(cprime(), 1, 10), EnumerationBudgetExceeded);
  CHECK_THROWS_AS(ghw_via_subcodes(cprime(), 10), EnumerationBudgetExceeded);
}

TEST_CASE("disjoint dimension-1 subcodes can share a support") {
  // two of the twelve dimension-1 subcodes are disjoint yet both are
  // supported on {1,3}, which is why supports anchor to a member word
  const std::vector<Word> first{{0, 0, 0}, {1, 0, 1}, {2, 0, 2}, {3, 0, 3}};
  const std::vector<Word> second{{0, 1, 1}, {1, 1, 2}, {2, 1, 3}, {3, 1, 0}};
  bool saw_first = false, saw_second = false;
  for (const Subcode& sub : enumerate_subcodes(cprime(), 1)) {
    if (sub.words() == first) saw_first = true;
    if (sub.words() == second) saw_second = true;
  }
  CHECK(saw_first);
  CHECK(saw_second);
  CHECK(code_support(first) == 0b101);
  CHECK(code_support(second) == 0b101);
  for (const Word& a : first) {
    for (const Word& b : second) CHECK(a != b);
  }
}

TEST_CASE("generalized Hamming weights, three routes") {
  CHECK(ghw_via_matroid(cprime()) == WeightHierarchy{2, 3});
  CHECK(ghw_via_matroid(corpus::full_space(2, 4)) == WeightHierarchy{1, 2, 3, 4});
  CHECK(ghw_via_matroid(corpus::repetition3()) == WeightHierarchy{3});
  CHECK(ghw_via_subcodes(cprime()) == WeightHierarchy{2, 3});
  CHECK(ghw_via_codewords(cprime()) == WeightHierarchy{2, 3});
  CHECK(ghw_via_codewords(corpus::repetition3()) == WeightHierarchy{3});

  for (const auto& entry : triple_agreement_codes()) {
    CAPTURE(entry.name);
    const WeightHierarchy expected = ghw_via_matroid(entry.code);
    CHECK(ghw_via_subcodes(entry.code) == expected);
    for (const Word& reference : entry.code.words()) {
      CHECK(ghw_via_codewords(entry.code, &reference) == expected);
    }
  }
}

TEST_CASE("minimal codewords carry the dual circuits") {
  for (const Word& reference : cprime().words()) {
    std::set<Mask> supports;
    for (const Word& w : minimal_codewords(cprime(), reference)) {
      supports.insert(support(w, reference));
    }
    const std::vector<Mask> circuits = code_matroid(cprime()).dual().circuits();
    CHECK(supports == std::set<Mask>(circuits.begin(), circuits.end()));
  }
  CHECK(minimal_codewords(BlockCode(Alphabet{2, {}}, 1, {{0}}), {0}).empty());

  const BlockCode full = corpus::full_space(2, 3);
  std::set<Mask> supports;
  for (const Word& w : minimal_codewords(full, {0, 0, 0})) supports.insert(support(w, {0, 0, 0}));
  CHECK(supports == std::set<Mask>{0b001, 0b010, 0b100});
  CHECK_THROWS_AS(minimal_codewords(cprime(), {0, 0, 1}), WordNotInCode);
}

TEST_CASE("support count formula matches brute force") {
  const Word zero{0, 0, 0};
  CHECK(count_words_with_support(cprime(), zero, 0b101) == 3);
  CHECK(count_words_with_support(cprime(), zero, 0) == 1);
  CHECK(count_words_with_support(cprime(), zero, 0b001) == 0);
  CHECK_THROWS_AS(count_words_with_support(cprime(), {0, 0, 1}, 0b001), WordNotInCode);

  for (const auto& entry : triple_agreement_codes()) {
    CAPTURE(entry.name);
    const Matroid m = code_matroid(entry.code);
    const Mask all = full_mask(entry.code.length());
    for (const Word& reference : entry.code.words()) {
      std::int64_t total = 0;
      for (Mask x = 0; x <= all; ++x) {
        const std::int64_t counted = count_words_with_support(entry.code, m, reference, x);
        CHECK(counted == brute_force_support_count(entry.code, reference, x));
        CHECK(counted >= 0);
        total += counted;
        if (x == all) break;
      }
      CHECK(total == static_cast<std::int64_t>(entry.code.size()));
    }
  }
}

TEST_CASE("critical exponents") {
  const Word anchor{3, 2, 1};
  const CriticalExponent g3 = critical_exponent(cprime(), 3, &anchor);
  CHECK(g3.gamma == 1);
  REQUIRE(g3.witness.size() == 1);
  CHECK(support(g3.witness[0], anchor) == 0b111);
  CHECK(support({2, 1, 3}, anchor) == 0b111);  // the paper's single-word certificate
  CHECK(critical_exponent(cprime(), 1).gamma == 1);
  CHECK(critical_exponent(cprime(), 2).gamma == 1);
  CHECK(critical_exponent(corpus::repetition3(), 3).gamma == 1);

  CHECK_THROWS_AS(critical_exponent(cprime(), 0), IndexOutOfRange);
  CHECK_THROWS_AS(critical_exponent(cprime(), 4), IndexOutOfRange);
  const BlockCode degenerate(Alphabet{2, {}}, 2, {{0, 0}, {1, 0}});
  CHECK_THROWS_AS(critical_exponent(degenerate, 1), Degenerate);

  // reference independence, monotonicity, and gamma_i = 1 up to the dimension
  for (const auto& entry : triple_agreement_codes()) {
    CAPTURE(entry.name);
    const int k = *entry.code.dimension();
    const std::vector<int> profile = critical_exponent_profile(entry.code);
    for (const Word& reference : entry.code.words()) {
      CHECK(critical_exponent_profile(entry.code, &reference) == profile);
    }
    for (std::size_t i = 1; i < profile.size(); ++i) CHECK(profile[i - 1] <= profile[i]);
    for (int i = 1; i <= k; ++i) CHECK(profile[i - 1] == 1);
    // witnesses really cover what they claim
    for (int i = 1; i <= entry.code.length(); ++i) {
      const CriticalExponent ce = critical_exponent(entry.code, i);
      CHECK(ce.gamma == profile[i - 1]);
      CHECK(static_cast<int>(ce.witness.size()) == ce.gamma);
      Mask covered = 0;
      for (const Word& w : ce.witness) covered |= support(w, entry.code.word(0));
      CHECK(set_size(covered) >= i);
    }
  }
}

TEST_CASE("covering bound report") {
  const std::vector<KungRow> rows = kung_bound_report(cprime());
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].i == 3);
  CHECK(rows[0].gamma == 1);
  CHECK(rows[0].bound == 2);
  CHECK(rows[0].holds);

  CHECK(kung_bound_report(corpus::full_space(2, 3)).empty());  // k = n

  // simplex [7,3]: the bound is attained somewhere
  const BlockCode simplex = linear_code(corpus::simplex73());
  bool tight = false;
  for (const KungRow& row : kung_bound_report(simplex)) {
    CHECK(row.holds);
    tight = tight || row.gamma == row.bound;
  }
  CHECK(tight);
}

TEST_CASE("access structures") {
  const AccessStructure cprime_access = access_structure(cprime());
  CHECK(cprime_access.gamma0 == std::vector<Mask>{0b110});
  CHECK(cprime_access.connected);

  CHECK(access_structure(corpus::full_space(2, 3)).gamma0.empty());
  const AccessStructure rep = access_structure(corpus::repetition3());
  CHECK(rep.gamma0 == std::vector<Mask>{0b010, 0b100});
  CHECK(rep.connected);
  const BlockCode degenerate(Alphabet{2, {}}, 2, {{0, 0}, {1, 0}});
  CHECK_THROWS_AS(access_structure(degenerate), Degenerate);
}

TEST_CASE("access structures satisfy the share-counting laws") {
  // participant sets that can recover the secret have |C_{A+1}| = |C_A|;
  // all others see the share count multiplied by q
  std::vector<corpus::Entry> entries = {{"cprime", cprime(), std::nullopt},
                                        {"repetition3", corpus::repetition3(), std::nullopt}};
  for (auto& e : corpus::random_linear(6, 2024)) entries.push_back(std::move(e));
  for (const auto& entry : entries) {
    CAPTURE(entry.name);
    if (entry.code.first_degenerate_position()) continue;
    const AccessStructure access = access_structure(entry.code);
    const int n = entry.code.length();
    const Mask participants = full_mask(n) & ~singleton(1);
    for_each_subset(participants, [&](Mask a) {
      bool authorized = false;
      for (Mask minimal : access.gamma0) authorized = authorized || (minimal & ~a) == 0;
      const std::size_t with_dealer = entry.code.puncture_size(with_element(a, 1));
      const std::size_t without = entry.code.puncture_size(a);
      if (authorized) {
        CHECK(with_dealer == without);
      } else {
        CHECK(with_dealer == without * entry.code.q());
      }
    });
  }
}

TEST_CASE("d_1 is the minimum pairwise Hamming distance") {
  for (const auto& entry : triple_agreement_codes()) {
    CAPTURE(entry.name);
    if (entry.code.size() < 2) continue;
    int min_distance = entry.code.length() + 1;
    for (std::size_t i = 0; i < entry.code.size(); ++i) {
      for (std::size_t j = i + 1; j < entry.code.size(); ++j) {
        min_distance = std::min(min_distance, hamming_distance(entry.code.word(i), entry.code.word(j)));
      }
    }
    CHECK(ghw_via_matroid(entry.code).front() == min_distance);
  }
}

TEST_CASE("dimension/length profiles and the weight conversion identities") {
  CHECK(dlp(cprime()) == std::vector<int>{0, 1, 2});
  CHECK(dlp(corpus::full_space(2, 4)) == std::vector<int>{1, 2, 3, 4});
  CHECK(dlp(corpus::repetition3()) == std::vector<int>{0, 0, 1});

  for (const auto& entry : triple_agreement_codes()) {
    CAPTURE(entry.name);
    const std::vector<int> profile = dlp(entry.code);
    const WeightHierarchy d = ghw_via_matroid(entry.code);
    const int n = entry.code.length();
    const int k = *entry.code.dimension();
    CHECK(profile[n - 1] == k);
    for (std::size_t i = 1; i < profile.size(); ++i) CHECK(profile[i - 1] <= profile[i]);
    for (int j = 1; j <= k; ++j) {
      int min_i = 0;
      for (int i = 1; i <= n; ++i) {
        if (profile[i - 1] >= j) {
          min_i = i;
          break;
        }
      }
      CHECK(d[j - 1] == min_i);
    }
    for (int i = 1; i <= n; ++i) {
      int max_j = 0;
      for (int j = 1; j <= k; ++j) {
        if (d[j - 1] <= i) max_j = j;
      }
      CHECK(profile[i - 1] == max_j);
    }
  }
}

TEST_CASE("optimal codeword tuples extend to optimal subcodes") {
  // a minimal non-redundant i-tuple whose union attains d_i spans, through
  // C(E - X, c), a dimension-i subcode supported exactly on that union
  const BlockCode& code = cprime();
  const Matroid m = code_matroid(code);
  const WeightHierarchy d = ghw_via_matroid(code);
  const Mask all = full_mask(code.length());
  for (const Word& reference : code.words()) {
    std::vector<Mask> supports;
    for (const Word& w : minimal_codewords(code, reference)) {
      supports.push_back(support(w, reference));
    }
    std::sort(supports.begin(), supports.end());
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
    for (int i = 1; i <= m.rank(); ++i) {
      bool extended = false;
      for_each_combination(static_cast<int>(supports.size()), i, [&](const std::vector<int>& idx) {
        std::vector<Mask> family;
        for (int j : idx) family.push_back(supports[j]);
        Mask total = 0;
        for (Mask s : family) total |= s;
        if (set_size(total) != d[i - 1]) return;
        bool redundant = false;
        for (std::size_t a = 0; a < family.size() && !redundant; ++a) {
          Mask rest = 0;
          for (std::size_t b = 0; b < family.size(); ++b) {
            if (b != a) rest |= family[b];
          }
          redundant = (family[a] & ~rest) == 0;
        }
        if (redundant) return;
        const Subcode sub = fixed_subcode(code, all & ~total, reference);
        std::size_t size = 1;
        for (int e = 0; e < i; ++e) size *= code.q();
        if (sub.size() == size && set_size(sub.support()) == d[i - 1]) extended = true;
      });
      CHECK(extended);
    }
  }
}

TEST_CASE("equivalence search finds identity witnesses") {
  const EquivalenceSearchResult self = are_equivalent(cprime(), cprime());
  REQUIRE(self.witness.has_value());
  CHECK(apply_equivalence(cprime(), *self.witness) == cprime());
}

TEST_CASE("dimension-1 codes with one matroid are equivalent") {
  const BlockCode a(Alphabet{4, {}}, 3, {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {3, 3, 3}});
  const BlockCode b(Alphabet{4, {}}, 3, {{2, 0, 1}, {3, 1, 2}, {0, 2, 3}, {1, 3, 0}});
  CHECK(code_matroid(a) == code_matroid(b));
  const EquivalenceSearchResult result = are_equivalent(a, b);
  REQUIRE(result.witness.has_value());
  CHECK(apply_equivalence(a, *result.witness) == b);
}

TEST_CASE("equivalence completes symbol maps over unused symbols") {
  // columns touch only {0,1} of a ternary alphabet; the witness bijections
  // must still cover symbol 2
  const BlockCode a(Alphabet{3, {}}, 2, {{0, 0}, {1, 1}, {2, 2}});
  const BlockCode b(Alphabet{3, {}}, 2, {{1, 0}, {2, 1}, {0, 2}});
  const EquivalenceSearchResult result = are_equivalent(a, b);
  REQUIRE(result.witness.has_value());
  for (const auto& tau : result.witness->tau) {
    std::set<int> image(tau.begin(), tau.end());
    CHECK(image == std::set<int>{0, 1, 2});
  }
  CHECK(apply_equivalence(a, *result.witness) == b);
}

TEST_CASE("codes with different matroids are exhaustively inequivalent") {
  std::vector<Word> flat;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) flat.push_back({a, b, 0});
  }
  const BlockCode degenerate_third(Alphabet{4, {}}, 3, std::move(flat));
  const EquivalenceSearchResult result = are_equivalent(cprime(), degenerate_third);
  CHECK_FALSE(result.witness.has_value());
  CHECK(result.exhausted);

  CHECK_THROWS_AS(are_equivalent(cprime(), corpus::repetition3()), Error);
  const EquivalenceSearchResult tiny_budget = are_equivalent(cprime(), cprime(), 2);
  CHECK_FALSE(tiny_budget.witness.has_value());
  CHECK_FALSE(tiny_budget.exhausted);
}

TEST_CASE("equivalent codes share matroid and subcode counts") {
  const BlockCode a = cprime();
  // a nontrivial equivalence: shift symbols per position, then rotate positions
  CodeEquivalence eq;
  eq.sigma = {2, 3, 1};
  eq.tau = {{1, 2, 3, 0}, {0, 1, 2, 3}, {2, 3, 0, 1}};
  const BlockCode b = apply_equivalence(a, eq);
  CHECK(code_matroid(a) == code_matroid(b));
  for (int dim = 0; dim <= 2; ++dim) {
    CHECK(enumerate_subcodes(a, dim).size() == enumerate_subcodes(b, dim).size());
  }
  const EquivalenceSearchResult result = are_equivalent(a, b);
  REQUIRE(result.witness.has_value());
  CHECK(apply_equivalence(a, *result.witness) == b);
}
