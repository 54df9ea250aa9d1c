#include "aaco/code_analysis.hpp"

#include <algorithm>
#include <climits>
#include <unordered_map>
#include <unordered_set>

#include "aaco/errors.hpp"

namespace aaco {

namespace {

std::uint64_t upow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  while (exp-- > 0) out *= base;
  return out;
}

// log_q(value) when value is an exact power of q.
std::optional<int> exact_log(std::size_t value, int q) {
  if (value == 0) return std::nullopt;
  int e = 0;
  while (value > 1) {
    if (value % q != 0) return std::nullopt;
    value /= q;
    ++e;
  }
  return e;
}

int require_dimension(const BlockCode& code) {
  const auto k = code.dimension();
  if (!k) throw NotAlmostAffine(full_mask(code.length()), "code size is not a power of q");
  return *k;
}

const Word& resolve_reference(const BlockCode& code, const Word* reference) {
  if (!reference) return code.word(0);
  if (static_cast<int>(reference->size()) != code.length()) {
    throw LengthMismatch("reference word has wrong length");
  }
  if (!code.contains(*reference)) throw WordNotInCode("reference word is not a codeword");
  return *reference;
}

void require_non_degenerate(const BlockCode& code) {
  if (auto pos = code.first_degenerate_position()) {
    throw Degenerate(*pos, "position " + std::to_string(*pos) + " is constant across the code");
  }
}

// Distinct projections of the selected words onto the positions in x.
std::size_t subset_puncture_size(const BlockCode& parent, const std::vector<std::uint32_t>& members,
                                 Mask x) {
  if (x == 0) return 1;
  const std::vector<int> pos = elements(x);
  std::vector<std::vector<int>> projections;
  projections.reserve(members.size());
  for (std::uint32_t idx : members) {
    const Word& w = parent.word(idx);
    std::vector<int> proj;
    proj.reserve(pos.size());
    for (int p : pos) proj.push_back(w[p - 1]);
    projections.push_back(std::move(proj));
  }
  std::sort(projections.begin(), projections.end());
  return std::unique(projections.begin(), projections.end()) - projections.begin();
}

bool subset_is_almost_affine(const BlockCode& parent, const std::vector<std::uint32_t>& members) {
  const Mask all = full_mask(parent.length());
  for (Mask x = 1; x <= all; ++x) {
    if (!exact_log(subset_puncture_size(parent, members, x), parent.q())) return false;
  }
  return true;
}

// Union of the family shrinks when any one member is dropped.
bool non_redundant(const std::vector<Mask>& family) {
  Mask total = 0;
  for (Mask m : family) total |= m;
  for (std::size_t j = 0; j < family.size(); ++j) {
    Mask rest = 0;
    for (std::size_t l = 0; l < family.size(); ++l) {
      if (l != j) rest |= family[l];
    }
    if (rest == total) return false;
  }
  return true;
}

}  // namespace

AlmostAffineCheck is_almost_affine(const BlockCode& code) {
  const Mask all = full_mask(code.length());
  for (Mask x = 1; x <= all; ++x) {
    if (!exact_log(code.puncture_size(x), code.q())) return {false, x};
  }
  return {true, 0};
}

Matroid code_matroid(const BlockCode& code) {
  const int n = code.length();
  std::vector<std::uint8_t> ranks(std::size_t{1} << n);
  const Mask all = full_mask(n);
  for (Mask x = 1; x <= all; ++x) {
    const auto log = exact_log(code.puncture_size(x), code.q());
    if (!log) {
      throw NotAlmostAffine(x, "puncture size at " + mask_to_string(x) + " is not a power of " +
                                   std::to_string(code.q()));
    }
    ranks[x] = static_cast<std::uint8_t>(*log);
  }
  return Matroid::from_rank_table(n, std::move(ranks));
}

std::vector<Word> Subcode::words() const {
  std::vector<Word> out;
  out.reserve(members.size());
  for (std::uint32_t idx : members) out.push_back(parent->word(idx));
  return out;
}

Mask Subcode::support() const { return code_support(words()); }

Subcode fixed_subcode(const BlockCode& code, Mask x, const Word& reference, bool strict) {
  if (x > full_mask(code.length())) throw IndexOutOfRange("subset outside ground set");
  if (static_cast<int>(reference.size()) != code.length()) {
    throw LengthMismatch("reference word has wrong length");
  }
  if (strict && !code.contains(reference)) {
    throw WordNotInCode("reference word is not a codeword (pass strict=false to allow)");
  }
  const std::vector<int> pos = elements(x);
  Subcode out;
  out.parent = &code;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const Word& w = code.word(i);
    bool match = true;
    for (int p : pos) {
      if (w[p - 1] != reference[p - 1]) {
        match = false;
        break;
      }
    }
    if (match) out.members.push_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

std::vector<Subcode> enumerate_subcodes(const BlockCode& code, int dim, std::uint64_t budget) {
  const int k = require_dimension(code);
  if (dim < 0 || dim > k) throw IndexOutOfRange("subcode dimension outside 0..k");
  const std::uint64_t target = upow(code.q(), dim);
  const std::uint64_t candidates = binomial_capped(code.size(), target, budget + 1);
  if (candidates > budget) {
    throw EnumerationBudgetExceeded("C(" + std::to_string(code.size()) + "," +
                                    std::to_string(target) + ") exceeds budget " +
                                    std::to_string(budget));
  }
  std::vector<Subcode> out;
  for_each_combination(static_cast<int>(code.size()), static_cast<int>(target),
                       [&](const std::vector<int>& idx) {
                         std::vector<std::uint32_t> members(idx.begin(), idx.end());
                         if (subset_is_almost_affine(code, members)) {
                           out.push_back(Subcode{&code, std::move(members)});
                         }
                       });
  return out;
}

WeightHierarchy ghw_via_matroid(const BlockCode& code) {
  const Matroid m = code_matroid(code);
  const int n = m.ground_size();
  const int k = m.rank();
  const WeightHierarchy d = m.dual().hamming_weights();

  // cross-check the three equivalent formulations before returning
  std::vector<int> min_complement(k + 1, INT_MAX);  // min |X| with r(E-X) = k-i
  std::vector<int> max_rank_set(k + 1, -1);         // max |X| with r(X) = k-i
  std::vector<int> max_fixed_set(k + 1, -1);        // max |X| with |C(X,c0)| = q^i
  const Word& c0 = code.word(0);
  const Mask all = full_mask(n);
  for (Mask x = 0; x <= all; ++x) {
    const int size = set_size(x);
    const int i_rank = k - m.rank(x);
    if (i_rank >= 1 && i_rank <= k) max_rank_set[i_rank] = std::max(max_rank_set[i_rank], size);
    const int i_comp = k - m.rank(all & ~x);
    if (i_comp >= 1 && i_comp <= k) min_complement[i_comp] = std::min(min_complement[i_comp], size);
    const std::vector<int> pos = elements(x);
    std::size_t fixed = 0;
    for (const Word& w : code.words()) {
      bool match = true;
      for (int p : pos) {
        if (w[p - 1] != c0[p - 1]) {
          match = false;
          break;
        }
      }
      if (match) ++fixed;
    }
    const auto log = exact_log(fixed, code.q());
    if (log && *log >= 1 && *log <= k) max_fixed_set[*log] = std::max(max_fixed_set[*log], size);
    if (x == all) break;
  }
  for (int i = 1; i <= k; ++i) {
    if (d[i - 1] != min_complement[i] || d[i - 1] != n - max_rank_set[i] ||
        d[i - 1] != n - max_fixed_set[i]) {
      throw Error("generalized Hamming weight formulations disagree at i=" + std::to_string(i));
    }
  }
  return d;
}

WeightHierarchy ghw_via_subcodes(const BlockCode& code, std::uint64_t budget) {
  const int k = require_dimension(code);
  WeightHierarchy d(k);
  for (int i = 1; i <= k; ++i) {
    int best = INT_MAX;
    for (const Subcode& sub : enumerate_subcodes(code, i, budget)) {
      best = std::min(best, set_size(sub.support()));
    }
    if (best == INT_MAX) throw Error("no subcode of dimension " + std::to_string(i));
    d[i - 1] = best;
  }
  return d;
}

std::vector<Word> minimal_codewords(const BlockCode& code, const Word& reference) {
  if (static_cast<int>(reference.size()) != code.length()) {
    throw LengthMismatch("reference word has wrong length");
  }
  if (!code.contains(reference)) throw WordNotInCode("reference word is not a codeword");
  std::vector<Mask> distinct;
  std::vector<Mask> word_support(code.size());
  for (std::size_t i = 0; i < code.size(); ++i) {
    word_support[i] = support(code.word(i), reference);
    if (word_support[i] != 0) distinct.push_back(word_support[i]);
  }
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::unordered_set<Mask> minimal;
  for (Mask s : distinct) {
    bool is_minimal = true;
    for (Mask t : distinct) {
      if (t != s && (t & s) == t) {
        is_minimal = false;
        break;
      }
    }
    if (is_minimal) minimal.insert(s);
  }
  std::vector<Word> out;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (word_support[i] != 0 && minimal.count(word_support[i])) out.push_back(code.word(i));
  }
  return out;
}

WeightHierarchy ghw_via_codewords(const BlockCode& code, const Word* reference,
                                  std::uint64_t budget) {
  const int k = require_dimension(code);
  const Word& ref = resolve_reference(code, reference);
  std::vector<Mask> supports;
  for (const Word& w : minimal_codewords(code, ref)) supports.push_back(support(w, ref));
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());

  // tuples repeating a support are never non-redundant, so distinct supports suffice
  WeightHierarchy d(k);
  for (int i = 1; i <= k; ++i) {
    if (binomial_capped(supports.size(), i, budget + 1) > budget) {
      throw EnumerationBudgetExceeded("C(" + std::to_string(supports.size()) + "," +
                                      std::to_string(i) + ") exceeds budget " + std::to_string(budget));
    }
    int best = INT_MAX;
    for_each_combination(static_cast<int>(supports.size()), i, [&](const std::vector<int>& idx) {
      std::vector<Mask> family;
      family.reserve(idx.size());
      for (int j : idx) family.push_back(supports[j]);
      if (!non_redundant(family)) return;
      Mask total = 0;
      for (Mask m : family) total |= m;
      best = std::min(best, set_size(total));
    });
    if (best == INT_MAX) {
      throw Error("no non-redundant family of " + std::to_string(i) + " minimal codewords");
    }
    d[i - 1] = best;
  }
  return d;
}

std::int64_t count_words_with_support(const BlockCode& code, const Matroid& matroid,
                                      const Word& reference, Mask x) {
  if (!code.contains(reference)) throw WordNotInCode("reference word is not a codeword");
  if (x > full_mask(code.length())) throw IndexOutOfRange("subset outside ground set");
  const int k = matroid.rank();
  const Mask all = full_mask(code.length());
  std::int64_t total = 0;
  for_each_subset(x, [&](Mask y) {
    const int sign = (set_size(x) - set_size(y)) % 2 == 0 ? 1 : -1;
    total += sign * static_cast<std::int64_t>(upow(code.q(), k - matroid.rank(all & ~y)));
  });
  return total;
}

std::int64_t count_words_with_support(const BlockCode& code, const Word& reference, Mask x) {
  return count_words_with_support(code, code_matroid(code), reference, x);
}

namespace {

struct CoverSearch {
  std::vector<Mask> supports;                          // distinct, ascending
  std::unordered_map<Mask, std::size_t> first_word;    // support -> lex-first word index
  std::unordered_map<Mask, int> level;                 // union mask -> fewest supports
  std::unordered_map<Mask, std::pair<Mask, Mask>> parent;  // union -> (previous union, support)
};

CoverSearch run_cover_search(const BlockCode& code, const Word& ref) {
  CoverSearch cs;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const Mask s = support(code.word(i), ref);
    if (s == 0) continue;
    if (!cs.first_word.count(s)) cs.first_word[s] = i;
    cs.supports.push_back(s);
  }
  std::sort(cs.supports.begin(), cs.supports.end());
  cs.supports.erase(std::unique(cs.supports.begin(), cs.supports.end()), cs.supports.end());

  std::vector<Mask> frontier;
  for (Mask s : cs.supports) {
    if (!cs.level.count(s)) {
      cs.level[s] = 1;
      cs.parent[s] = {0, s};
      frontier.push_back(s);
    }
  }
  int depth = 1;
  while (!frontier.empty()) {
    ++depth;
    std::vector<Mask> next;
    for (Mask u : frontier) {
      for (Mask s : cs.supports) {
        const Mask joined = u | s;
        if (joined == u || cs.level.count(joined)) continue;
        cs.level[joined] = depth;
        cs.parent[joined] = {u, s};
        next.push_back(joined);
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  return cs;
}

}  // namespace

CriticalExponent critical_exponent(const BlockCode& code, int i, const Word* reference) {
  require_non_degenerate(code);
  if (i < 1 || i > code.length()) throw IndexOutOfRange("coverage index outside 1..n");
  const Word& ref = resolve_reference(code, reference);
  const CoverSearch cs = run_cover_search(code, ref);

  int best_level = INT_MAX;
  Mask best_mask = 0;
  for (const auto& [mask, lvl] : cs.level) {
    if (set_size(mask) < i) continue;
    if (lvl < best_level || (lvl == best_level && mask < best_mask)) {
      best_level = lvl;
      best_mask = mask;
    }
  }
  if (best_level == INT_MAX) {
    throw Error("supports never cover " + std::to_string(i) + " positions");
  }
  CriticalExponent out;
  out.gamma = best_level;
  for (Mask u = best_mask; u != 0;) {
    const auto [prev, used] = cs.parent.at(u);
    out.witness.push_back(code.word(cs.first_word.at(used)));
    u = prev;
  }
  std::reverse(out.witness.begin(), out.witness.end());
  return out;
}

std::vector<int> critical_exponent_profile(const BlockCode& code, const Word* reference) {
  require_non_degenerate(code);
  const Word& ref = resolve_reference(code, reference);
  const CoverSearch cs = run_cover_search(code, ref);
  const int n = code.length();
  std::vector<int> best_for_cover(n + 1, INT_MAX);
  for (const auto& [mask, lvl] : cs.level) {
    best_for_cover[set_size(mask)] = std::min(best_for_cover[set_size(mask)], lvl);
  }
  std::vector<int> gamma(n);
  int suffix = INT_MAX;
  for (int i = n; i >= 1; --i) {
    suffix = std::min(suffix, best_for_cover[i]);
    gamma[i - 1] = suffix;
  }
  return gamma;
}

std::vector<KungRow> kung_bound_report(const BlockCode& code) {
  require_non_degenerate(code);
  const Matroid m = code_matroid(code);
  const int n = m.ground_size();
  const int k = m.rank();
  const WeightHierarchy dual_weights = m.hamming_weights();  // d*_1..d*_{n-k}
  const std::vector<int> gamma = critical_exponent_profile(code);
  std::vector<KungRow> rows;
  for (int i = k + 1; i <= n; ++i) {
    const int j = n + 1 - i;  // 1..n-k
    const int singleton_defect = k + j - dual_weights[j - 1];
    KungRow row;
    row.i = i;
    row.gamma = gamma[i - 1];
    row.bound = singleton_defect + 2;
    row.holds = row.gamma <= row.bound;
    rows.push_back(row);
  }
  return rows;
}

AccessStructure access_structure(const BlockCode& code) {
  require_non_degenerate(code);
  const Matroid m = code_matroid(code);
  AccessStructure out;
  for (Mask c : m.circuits()) {
    if (contains(c, 1)) out.gamma0.push_back(without_element(c, 1));
  }
  out.connected = m.is_connected();
  return out;
}

std::vector<int> dlp(const Matroid& matroid) {
  const int n = matroid.ground_size();
  const int k = matroid.rank();
  std::vector<int> min_rank_by_size(n + 1, INT_MAX);
  const Mask all = full_mask(n);
  for (Mask x = 0; x <= all; ++x) {
    const int s = set_size(x);
    min_rank_by_size[s] = std::min(min_rank_by_size[s], matroid.rank(x));
    if (x == all) break;
  }
  std::vector<int> profile(n);
  for (int i = 1; i <= n; ++i) profile[i - 1] = k - min_rank_by_size[n - i];
  return profile;
}

std::vector<int> dlp(const BlockCode& code) { return dlp(code_matroid(code)); }

namespace {

struct EquivalenceSearch {
  const BlockCode* a;
  const BlockCode* b;
  int n, q;
  std::vector<std::size_t> puncture_a, puncture_b;
  std::vector<std::vector<int>> column_profile_a, column_profile_b;  // sorted count multisets
  std::uint64_t budget;
  std::uint64_t spent = 0;
  bool out_of_budget = false;
  std::vector<int> sigma;  // sigma[src-1] = target position, 0 = unassigned
  std::vector<bool> target_used;
  std::optional<CodeEquivalence> found;

  bool charge() {
    if (++spent > budget) {
      out_of_budget = true;
      return false;
    }
    return true;
  }

  Mask map_mask(Mask src) const {
    Mask out = 0;
    for (int p : elements(src)) out = with_element(out, sigma[p - 1]);
    return out;
  }

  bool assign(int src) {
    if (found || out_of_budget) return false;
    if (src > n) return try_symbol_maps();
    for (int t = 1; t <= n; ++t) {
      if (target_used[t - 1]) continue;
      if (column_profile_a[src - 1] != column_profile_b[t - 1]) continue;
      if (!charge()) return false;
      sigma[src - 1] = t;
      target_used[t - 1] = true;
      // every puncture through the new position must match under sigma
      Mask assigned_rest = 0;
      for (int p = 1; p < src; ++p) assigned_rest = with_element(assigned_rest, p);
      bool consistent = true;
      for_each_subset(assigned_rest, [&](Mask rest) -> bool {
        const Mask s = with_element(rest, src);
        if (puncture_a[s] != puncture_b[map_mask(s)]) {
          consistent = false;
          return false;
        }
        return true;
      });
      if (consistent && assign(src + 1)) return true;
      sigma[src - 1] = 0;
      target_used[t - 1] = false;
      if (out_of_budget) return false;
    }
    return false;
  }

  bool try_symbol_maps() {
    std::vector<std::vector<int>> tau(n, std::vector<int>(q, -1));
    std::vector<std::vector<bool>> image_used(n, std::vector<bool>(q, false));
    if (!match_words(0, tau, image_used)) return false;
    // complete the partial bijections over symbols unused by the code
    for (int p = 0; p < n; ++p) {
      int next = 0;
      for (int s = 0; s < q; ++s) {
        if (tau[p][s] != -1) continue;
        while (image_used[p][next]) ++next;
        tau[p][s] = next;
        image_used[p][next] = true;
      }
    }
    found = CodeEquivalence{sigma, std::move(tau)};
    return true;
  }

  bool match_words(std::size_t wi, std::vector<std::vector<int>>& tau,
                   std::vector<std::vector<bool>>& image_used) {
    if (wi == a->size()) return true;
    const Word& w = a->word(wi);
    for (const Word& z : b->words()) {
      if (!charge()) return false;
      std::vector<std::pair<int, int>> applied;  // (position, symbol) set here
      bool ok = true;
      for (int p = 1; p <= n && ok; ++p) {
        const int s = w[p - 1];
        const int t = z[sigma[p - 1] - 1];
        if (tau[p - 1][s] == -1) {
          if (image_used[p - 1][t]) {
            ok = false;
          } else {
            tau[p - 1][s] = t;
            image_used[p - 1][t] = true;
            applied.push_back({p - 1, s});
          }
        } else if (tau[p - 1][s] != t) {
          ok = false;
        }
      }
      if (ok && match_words(wi + 1, tau, image_used)) return true;
      for (auto [p, s] : applied) {
        image_used[p][tau[p][s]] = false;
        tau[p][s] = -1;
      }
      if (out_of_budget) return false;
    }
    return false;
  }
};

std::vector<int> column_profile(const BlockCode& code, int pos) {
  std::vector<int> counts(code.q(), 0);
  for (const Word& w : code.words()) counts[w[pos - 1]]++;
  std::sort(counts.begin(), counts.end());
  return counts;
}

}  // namespace

EquivalenceSearchResult are_equivalent(const BlockCode& a, const BlockCode& b,
                                       std::uint64_t budget) {
  if (a.length() != b.length()) throw LengthMismatch("codes have different lengths");
  if (a.q() != b.q()) throw AlphabetMismatch("codes have different alphabet sizes");
  if (a.size() != b.size()) return {std::nullopt, true};

  EquivalenceSearch search;
  search.a = &a;
  search.b = &b;
  search.n = a.length();
  search.q = a.q();
  search.budget = budget;
  const Mask all = full_mask(a.length());
  search.puncture_a.resize(std::size_t{1} << a.length());
  search.puncture_b.resize(std::size_t{1} << a.length());
  for (Mask x = 0; x <= all; ++x) {
    search.puncture_a[x] = a.puncture_size(x);
    search.puncture_b[x] = b.puncture_size(x);
    if (x == all) break;
  }
  for (int p = 1; p <= a.length(); ++p) {
    search.column_profile_a.push_back(column_profile(a, p));
    search.column_profile_b.push_back(column_profile(b, p));
  }
  search.sigma.assign(a.length(), 0);
  search.target_used.assign(a.length(), false);
  search.assign(1);
  return {search.found, !search.out_of_budget};
}

BlockCode apply_equivalence(const BlockCode& code, const CodeEquivalence& equivalence) {
  const int n = code.length();
  if (static_cast<int>(equivalence.sigma.size()) != n ||
      static_cast<int>(equivalence.tau.size()) != n) {
    throw LengthMismatch("equivalence shape does not match the code");
  }
  std::vector<Word> out;
  out.reserve(code.size());
  for (const Word& w : code.words()) {
    Word z(n);
    for (int p = 1; p <= n; ++p) z[equivalence.sigma[p - 1] - 1] = equivalence.tau[p - 1][w[p - 1]];
    out.push_back(std::move(z));
  }
  return BlockCode(code.alphabet(), n, std::move(out));
}

}  // namespace aaco
