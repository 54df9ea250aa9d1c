#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "aaco/code_analysis.hpp"
#include "aaco/errors.hpp"
#include "aaco/wiretap.hpp"
#include "corpus.hpp"

using namespace aaco;

namespace {

const BlockCode& cprime() {
  static const BlockCode code = running_example_cprime();
  return code;
}

const WiretapScheme& cprime_scheme() {
  static const WiretapScheme scheme = WiretapScheme::with_addition(cprime());
  return scheme;
}

std::vector<Word> all_words(int q, int n) {
  std::vector<Word> out;
  Word w(n, 0);
  while (true) {
    out.push_back(w);
    int pos = 0;
    while (pos < n && ++w[pos] == q) w[pos++] = 0;
    if (pos == n) break;
  }
  return out;
}

}  // namespace

TEST_CASE("side map validation") {
  CHECK_NOTHROW(SideMap::componentwise_addition(4, 2));

  // a row that repeats a value is not a bijection
  std::vector<std::vector<std::vector<int>>> broken_row{{{0, 0}, {0, 1}}};
  CHECK_THROWS_AS(SideMap::componentwise(2, broken_row), InvalidSideMap);

  // rows bijective but a column repeats: restriction compatibility fails
  std::vector<std::vector<std::vector<int>>> broken_column{{{0, 1}, {0, 1}}};
  CHECK_THROWS_AS(SideMap::componentwise(2, broken_column), InvalidSideMap);

  // subtraction is a fine Latin square
  std::vector<std::vector<std::vector<int>>> subtraction(
      1, std::vector<std::vector<int>>(4, std::vector<int>(4)));
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) subtraction[0][x][y] = ((x - y) % 4 + 4) % 4;
  }
  CHECK_NOTHROW(SideMap::componentwise(4, subtraction));
}

TEST_CASE("general side map tables") {
  // phi(g, m) = g + pi(m) with pi swapping the two halves of the message space
  const int q = 2, s = 2;
  auto add = [&](int g, int m) {
    int out = 0;
    for (int j = 0, base = 1; j < s; ++j, base *= q) {
      out += ((g / base % q + m / base % q) % q) * base;
    }
    return out;
  };
  std::vector<std::vector<int>> table(4, std::vector<int>(4));
  const int pi[] = {2, 3, 0, 1};
  for (int g = 0; g < 4; ++g) {
    for (int m = 0; m < 4; ++m) table[g][m] = add(g, pi[m]);
  }
  CHECK_NOTHROW(SideMap::general(q, s, table));

  // phi(g, m) = m ignores g: rows are bijections but taps would leak nothing
  // consistently, and the compatibility direction "<=" fails
  std::vector<std::vector<int>> ignore_g(4, std::vector<int>{0, 1, 2, 3});
  CHECK_THROWS_AS(SideMap::general(q, s, ignore_g), InvalidSideMap);

  // round trip through a scheme built on the general table
  GeneratorMatrix g{FiniteField::prime(2), {{1, 0, 1, 1}, {0, 1, 0, 1}}};
  const BlockCode code = linear_code(g);
  const WiretapScheme scheme(code, SideMap::general(q, s, table));
  for (int m0 = 0; m0 < 2; ++m0) {
    for (int m1 = 0; m1 < 2; ++m1) {
      const Word message{m0, m1};
      for (std::uint64_t seed = 0; seed < 6; ++seed) {
        CHECK(scheme.decode(scheme.encode(message, seed)) == message);
      }
    }
  }
}

TEST_CASE("cosets of the running example") {
  const BlockCode c2 = cprime_scheme().coset({2});
  const std::vector<Word> expected = {
      {0, 0, 2}, {0, 1, 3}, {0, 2, 0}, {0, 3, 1}, {1, 0, 3}, {1, 1, 0}, {1, 2, 1}, {1, 3, 2},
      {2, 0, 0}, {2, 1, 1}, {2, 2, 2}, {2, 3, 3}, {3, 0, 1}, {3, 1, 2}, {3, 2, 3}, {3, 3, 0}};
  CHECK(c2.words() == expected);
  CHECK(c2.contains({1, 2, 1}));
  CHECK(c2.contains({2, 2, 2}));
  CHECK(cprime_scheme().coset({0}) == cprime());

  // every coset is almost affine with the matroid of the code
  for (int m = 0; m < 4; ++m) {
    CHECK(code_matroid(cprime_scheme().coset({m})) == Matroid::uniform(2, 3));
  }
  // and together they partition the ambient space
  std::set<Word> seen;
  for (int m = 0; m < 4; ++m) {
    const BlockCode coset = cprime_scheme().coset({m});
    for (const Word& w : coset.words()) CHECK(seen.insert(w).second);
  }
  CHECK(seen.size() == 64);
}

TEST_CASE("encode and decode") {
  const Word sent = cprime_scheme().encode({2}, 12345);
  CHECK(cprime_scheme().coset({2}).contains(sent));
  CHECK(cprime_scheme().decode({1, 2, 1}) == Word{2});
  for (const Word& w : cprime().words()) CHECK(cprime_scheme().decode(w) == Word{0});

  for (int m = 0; m < 4; ++m) {
    for (std::uint64_t seed = 0; seed < 32; ++seed) {
      CHECK(cprime_scheme().decode(cprime_scheme().encode({m}, seed)) == Word{m});
    }
  }
  // decode is total on the ambient space
  for (const Word& t : all_words(4, 3)) {
    const Word m = cprime_scheme().decode(t);
    CHECK(cprime_scheme().coset(m).contains(t));
  }

  CHECK_THROWS_AS(cprime_scheme().encode({1, 2}, 0), MessageLengthMismatch);
  CHECK_THROWS_AS(cprime_scheme().encode({7}, 0), AlphabetMismatch);
  CHECK_THROWS_AS(cprime_scheme().decode({1, 2}), LengthMismatch);
}

TEST_CASE("encode draws uniformly") {
  // fixed seed block; +-15% of the expected 625 is ~3.9 sigma
  std::map<Word, int> counts;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) counts[cprime_scheme().encode({2}, seed)]++;
  CHECK(counts.size() == 16);
  for (const auto& [word, count] : counts) {
    CHECK(count > 625 * 0.85);
    CHECK(count < 625 * 1.15);
  }
}

TEST_CASE("lambda sets") {
  // one word per coset looks like (1 . 1)
  const Word t{1, 9 % 4, 1};  // middle digit irrelevant for X = {1,3}
  const Word expected[] = {{1, 0, 1}, {1, 3, 1}, {1, 2, 1}, {1, 1, 1}};
  for (int m = 0; m < 4; ++m) {
    const std::vector<Word> lambda = cprime_scheme().lambda_set(t, 0b101, {m});
    REQUIRE(lambda.size() == 1);
    CHECK(lambda[0] == expected[m]);
  }
  CHECK(cprime_scheme().lambda_set(t, 0, {1}).size() == 16);  // X empty: the whole coset

  // cardinality law and the count of nonempty messages, exhaustively
  const Matroid m_c = code_matroid(cprime());
  for (const Word& t_any : all_words(4, 3)) {
    for (Mask x = 0; x <= 0b111; ++x) {
      int nonempty = 0;
      for (int m = 0; m < 4; ++m) {
        const std::size_t size = cprime_scheme().lambda_set(t_any, x, {m}).size();
        std::size_t allowed = 1;
        for (int e = 0; e < 2 - m_c.rank(x); ++e) allowed *= 4;
        CHECK((size == 0 || size == allowed));
        if (size > 0) ++nonempty;
      }
      std::size_t expected_nonempty = 1;
      for (int e = 0; e < 1 - m_c.nullity(x); ++e) expected_nonempty *= 4;
      CHECK(nonempty == static_cast<int>(expected_nonempty));
    }
  }
}

TEST_CASE("conditional entropy from joint counts matches the nullity formula") {
  // H(M | T_X) computed from the exact (t_X, m) joint distribution equals
  // (n - k) - nullity(X): per observed pattern the posterior is uniform
  // over the messages with a nonempty lambda set
  const Matroid m_c = code_matroid(cprime());
  const double log4 = std::log(4.0);
  for (Mask x = 0; x <= 0b111; ++x) {
    // joint[pattern][m] over a uniform sent word; the uniform repetition of
    // lambda counts across words sharing a pattern cancels in every ratio
    std::map<Word, std::map<int, double>> joint;
    double grand_total = 0.0;
    for (const Word& t : all_words(4, 3)) {
      Word pattern;
      for (int p : elements(x)) pattern.push_back(t[p - 1]);
      for (int m = 0; m < 4; ++m) {
        const double count = static_cast<double>(cprime_scheme().lambda_set(t, x, {m}).size());
        if (count > 0) {
          joint[pattern][m] += count;
          grand_total += count;
        }
      }
    }
    double entropy = 0.0;
    for (const auto& [pattern, per_message] : joint) {
      double mass = 0.0;
      for (const auto& [m, count] : per_message) mass += count;
      double h = 0.0;
      for (const auto& [m, count] : per_message) {
        h -= (count / mass) * std::log(count / mass) / log4;
      }
      entropy += (mass / grand_total) * h;
    }
    const double expected = (3 - 2) - m_c.nullity(x);
    CHECK(std::abs(entropy - expected) < 1e-9);
  }
}

TEST_CASE("equivocation profile of the running example") {
  const auto rows = cprime_scheme().equivocation_profile();
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].equivocation == 1);
  CHECK(rows[1].equivocation == 1);
  CHECK(rows[2].equivocation == 1);
  CHECK(rows[3].equivocation == 0);
  CHECK(rows[3].delta == 1);
  for (const auto& row : rows) CHECK(row.bracket_holds);
  // mu = 3 sits between d*_1 = 3 and the n+1 sentinel
  CHECK(rows[3].lower_weight == 3);
  CHECK(rows[3].upper_weight == 4);
}

TEST_CASE("equivocation of the folded Reed-Solomon scheme") {
  const WiretapScheme scheme =
      WiretapScheme::with_addition(folded_rs(FiniteField::prime(5), 2, 2, 2).code());
  const auto rows = scheme.equivocation_profile();
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].equivocation == 1);  // no taps, nothing learned
  CHECK(rows[1].equivocation == 1);  // k/r - 1 = 0 taps keep full uncertainty; d*_1 = 2
  CHECK(rows[2].equivocation == 0);
  CHECK(rows[1].upper_weight == 2);
  for (const auto& row : rows) CHECK(row.bracket_holds);
}

TEST_CASE("basis-aligning permutation") {
  // {1,2} is not a basis here; {1,3} is the first one
  GeneratorMatrix g{FiniteField::prime(2), {{1, 1, 0}, {0, 0, 1}}};
  const BlockCode code = linear_code(g);
  const WiretapScheme scheme = WiretapScheme::with_addition(code);
  CHECK(scheme.permutation() == std::vector<int>{1, 3, 2});
  CHECK(scheme.k() == 2);
  for (int m = 0; m < 2; ++m) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      CHECK(scheme.decode(scheme.encode({m}, seed)) == Word{m});
    }
  }
  // cosets still partition the space
  std::set<Word> seen;
  for (int m = 0; m < 2; ++m) {
    const BlockCode coset = scheme.coset({m});
    for (const Word& w : coset.words()) CHECK(seen.insert(w).second);
  }
  CHECK(seen.size() == 8);
}

TEST_CASE("scheme without redundancy") {
  const WiretapScheme scheme = WiretapScheme::with_addition(corpus::full_space(2, 2));
  CHECK(scheme.message_positions() == 0);
  const Word sent = scheme.encode({}, 3);
  CHECK(scheme.code().contains(sent));
  CHECK(scheme.decode(sent).empty());
  for (const auto& row : scheme.equivocation_profile()) {
    CHECK(row.equivocation == 0);
    CHECK(row.bracket_holds);
  }
}

TEST_CASE("theorem bracket across corpus schemes") {
  for (const auto& entry : corpus::random_linear(10, 777)) {
    CAPTURE(entry.name);
    const WiretapScheme scheme = WiretapScheme::with_addition(entry.code);
    for (const auto& row : scheme.equivocation_profile()) CHECK(row.bracket_holds);
    for (int m_first = 0; m_first < std::min(2, entry.code.q()); ++m_first) {
      Word message(scheme.message_positions(), 0);
      if (!message.empty()) message[0] = m_first;
      for (std::uint64_t seed = 0; seed < 4; ++seed) {
        CHECK(scheme.decode(scheme.encode(message, seed)) == message);
      }
    }
  }
}
