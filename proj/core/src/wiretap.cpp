#include "aaco/wiretap.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "aaco/code_analysis.hpp"
#include "aaco/errors.hpp"
#include "aaco/rng.hpp"

namespace aaco {

namespace {

constexpr std::uint64_t kPartitionCheckLimit = 1'000'000;

std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  while (exp-- > 0) out *= base;
  return out;
}

}  // namespace

SideMap SideMap::componentwise_addition(int q, int positions) {
  std::vector<std::vector<std::vector<int>>> tables(
      positions, std::vector<std::vector<int>>(q, std::vector<int>(q)));
  for (int j = 0; j < positions; ++j) {
    for (int x = 0; x < q; ++x) {
      for (int y = 0; y < q; ++y) tables[j][x][y] = (x + y) % q;
    }
  }
  return componentwise(q, std::move(tables));
}

SideMap SideMap::componentwise(int q, std::vector<std::vector<std::vector<int>>> tables) {
  SideMap out(q, static_cast<int>(tables.size()));
  out.tables_ = std::move(tables);
  out.validate_componentwise();
  return out;
}

SideMap SideMap::general(int q, int positions, std::vector<std::vector<int>> table) {
  SideMap out(q, positions);
  out.table_ = std::move(table);
  out.validate_general();
  return out;
}

void SideMap::validate_componentwise() const {
  for (int j = 0; j < positions_; ++j) {
    const auto& t = tables_[j];
    if (static_cast<int>(t.size()) != q_) throw InvalidSideMap("table " + std::to_string(j) + " is not q x q");
    for (int x = 0; x < q_; ++x) {
      if (static_cast<int>(t[x].size()) != q_) throw InvalidSideMap("table row is not of length q");
      std::vector<bool> seen(q_, false);
      for (int y = 0; y < q_; ++y) {
        const int v = t[x][y];
        if (v < 0 || v >= q_ || seen[v]) {
          throw InvalidSideMap("phi(" + std::to_string(x) + ",.) at position " + std::to_string(j + 1) +
                               " is not a bijection");
        }
        seen[v] = true;
      }
    }
    // injectivity in the first argument for each fixed second argument
    for (int y = 0; y < q_; ++y) {
      std::vector<bool> seen(q_, false);
      for (int x = 0; x < q_; ++x) {
        const int v = t[x][y];
        if (seen[v]) {
          throw InvalidSideMap("restriction compatibility fails at position " + std::to_string(j + 1) +
                               ": phi(.," + std::to_string(y) + ") is not injective");
        }
        seen[v] = true;
      }
    }
  }
}

void SideMap::validate_general() const {
  const std::size_t space = pow_u64(q_, positions_);
  if (table_.size() != space) throw InvalidSideMap("general table must have q^s rows");
  for (std::size_t g = 0; g < space; ++g) {
    if (table_[g].size() != space) throw InvalidSideMap("general table row must have q^s entries");
    std::vector<bool> seen(space, false);
    for (std::size_t m = 0; m < space; ++m) {
      const int v = table_[g][m];
      if (v < 0 || static_cast<std::size_t>(v) >= space || seen[v]) {
        throw InvalidSideMap("phi(g,.) is not a bijection at g = " + std::to_string(g));
      }
      seen[v] = true;
    }
  }
  // Restriction compatibility over all subsets X reduces to singletons:
  // component j of phi(g,m) must depend on g_j alone, injectively.
  for (int j = 0; j < positions_; ++j) {
    for (std::size_t m = 0; m < space; ++m) {
      std::vector<int> image(q_, -1);
      std::vector<bool> used(q_, false);
      for (std::size_t g = 0; g < space; ++g) {
        const int gj = decode(static_cast<int>(g))[j];
        const int vj = decode(table_[g][m])[j];
        if (image[gj] == -1) {
          if (used[vj]) {
            throw InvalidSideMap("restriction compatibility fails: component " + std::to_string(j + 1) +
                                 " is not injective in g");
          }
          image[gj] = vj;
          used[vj] = true;
        } else if (image[gj] != vj) {
          throw InvalidSideMap("restriction compatibility fails: component " + std::to_string(j + 1) +
                               " of phi(g,m) depends on more of g than g_" + std::to_string(j + 1));
        }
      }
    }
  }
}

int SideMap::encode(const std::vector<int>& tuple) const {
  int out = 0;
  for (int t = positions_ - 1; t >= 0; --t) out = out * q_ + tuple[t];
  return out;
}

std::vector<int> SideMap::decode(int value) const {
  std::vector<int> out(positions_);
  for (int t = 0; t < positions_; ++t) {
    out[t] = value % q_;
    value /= q_;
  }
  return out;
}

std::vector<int> SideMap::apply(const std::vector<int>& g, const std::vector<int>& m) const {
  if (static_cast<int>(g.size()) != positions_ || static_cast<int>(m.size()) != positions_) {
    throw MessageLengthMismatch("side map expects tuples of length " + std::to_string(positions_));
  }
  if (!tables_.empty() || positions_ == 0) {
    std::vector<int> out(positions_);
    for (int j = 0; j < positions_; ++j) out[j] = tables_[j][g[j]][m[j]];
    return out;
  }
  return decode(table_[encode(g)][encode(m)]);
}

std::vector<int> SideMap::invert(const std::vector<int>& g, const std::vector<int>& t) const {
  if (static_cast<int>(g.size()) != positions_ || static_cast<int>(t.size()) != positions_) {
    throw MessageLengthMismatch("side map expects tuples of length " + std::to_string(positions_));
  }
  if (!tables_.empty() || positions_ == 0) {
    std::vector<int> out(positions_);
    for (int j = 0; j < positions_; ++j) {
      const auto& row = tables_[j][g[j]];
      out[j] = static_cast<int>(std::find(row.begin(), row.end(), t[j]) - row.begin());
    }
    return out;
  }
  const auto& row = table_[encode(g)];
  const int target = encode(t);
  return decode(static_cast<int>(std::find(row.begin(), row.end(), target) - row.begin()));
}

WiretapScheme WiretapScheme::with_addition(BlockCode code) {
  const int k = code.dimension().value_or(-1);
  if (k < 0) throw NotAlmostAffine(full_mask(code.length()), "code size is not a power of q");
  SideMap phi = SideMap::componentwise_addition(code.q(), code.length() - k);
  return WiretapScheme(std::move(code), std::move(phi));
}

WiretapScheme::WiretapScheme(BlockCode code, SideMap phi)
    : original_(std::move(code)),
      permuted_(original_),
      matroid_(code_matroid(original_)),
      k_(matroid_.rank()),
      phi_(std::move(phi)) {
  const int n = original_.length();
  if (phi_.q() != original_.q()) {
    throw InvalidSideMap("side map alphabet differs from the code alphabet");
  }
  if (phi_.positions() != n - k_) {
    throw InvalidSideMap("side map covers " + std::to_string(phi_.positions()) +
                         " positions, the code has " + std::to_string(n - k_) + " redundancy digits");
  }

  // align a basis onto {1..k}: first basis in canonical order, positions kept ascending
  const Mask first_k = full_mask(k_);
  if (matroid_.is_basis(first_k)) {
    perm_.resize(n);
    for (int i = 1; i <= n; ++i) perm_[i - 1] = i;
  } else {
    const Mask basis = matroid_.bases().front();
    perm_ = elements(basis);
    for (int e : elements(full_mask(n) & ~basis)) perm_.push_back(e);
    std::vector<Word> permuted_words;
    permuted_words.reserve(original_.size());
    for (const Word& w : original_.words()) {
      Word v(n);
      for (int i = 1; i <= n; ++i) v[i - 1] = w[perm_[i - 1] - 1];
      permuted_words.push_back(std::move(v));
    }
    permuted_ = BlockCode(original_.alphabet(), n, std::move(permuted_words));
  }

  // the k-prefix determines the codeword (the prefix positions are a basis)
  for (std::size_t i = 0; i < permuted_.size(); ++i) {
    std::uint64_t key = 0;
    for (int p = 0; p < k_; ++p) key = key * original_.q() + permuted_.word(i)[p];
    basis_index_[key] = static_cast<std::uint32_t>(i);
  }
  if (basis_index_.size() != permuted_.size()) {
    throw Error("basis projection is not injective; matroid basis is wrong");
  }

  // eager partition check over the whole ambient space when affordable
  if (pow_u64(original_.q(), n) <= kPartitionCheckLimit) {
    std::unordered_set<std::uint64_t> seen;
    const std::uint64_t messages = pow_u64(original_.q(), n - k_);
    for (std::uint64_t m = 0; m < messages; ++m) {
      Word message(n - k_);
      std::uint64_t rest = m;
      for (int t = 0; t < n - k_; ++t) {
        message[t] = static_cast<int>(rest % original_.q());
        rest /= original_.q();
      }
      for (const Word& w : permuted_.words()) {
        std::uint64_t key = 0;
        for (int v : mask_word(w, message)) key = key * original_.q() + v;
        if (!seen.insert(key).second) {
          throw InvalidSideMap("coset codes overlap; side map is inconsistent");
        }
      }
    }
    if (seen.size() != pow_u64(original_.q(), n)) {
      throw InvalidSideMap("coset codes do not cover the ambient space");
    }
  }
}

Word WiretapScheme::internalize(const Word& original) const {
  Word v(original.size());
  for (std::size_t i = 0; i < original.size(); ++i) v[i] = original[perm_[i] - 1];
  return v;
}

Word WiretapScheme::externalize(const Word& internal) const {
  Word w(internal.size());
  for (std::size_t i = 0; i < internal.size(); ++i) w[perm_[i] - 1] = internal[i];
  return w;
}

Word WiretapScheme::mask_word(const Word& internal_codeword, const Word& message) const {
  const int n = original_.length();
  Word out = internal_codeword;
  const std::vector<int> redundancy(internal_codeword.begin() + k_, internal_codeword.end());
  const std::vector<int> masked = phi_.apply(redundancy, message);
  for (int j = 0; j < n - k_; ++j) out[k_ + j] = masked[j];
  return out;
}

Word WiretapScheme::encode(const Word& message, std::uint64_t seed) const {
  if (static_cast<int>(message.size()) != message_positions()) {
    throw MessageLengthMismatch("message has " + std::to_string(message.size()) + " digits, expected " +
                                std::to_string(message_positions()));
  }
  for (int s : message) {
    if (s < 0 || s >= original_.q()) throw AlphabetMismatch("message symbol outside the alphabet");
  }
  Rng rng(seed);
  const Word& w = permuted_.word(rng.below(permuted_.size()));
  return externalize(mask_word(w, message));
}

Word WiretapScheme::decode(const Word& received) const {
  if (static_cast<int>(received.size()) != original_.length()) {
    throw LengthMismatch("received word has wrong length");
  }
  for (int s : received) {
    if (s < 0 || s >= original_.q()) throw AlphabetMismatch("received symbol outside the alphabet");
  }
  const Word v = internalize(received);
  std::uint64_t key = 0;
  for (int p = 0; p < k_; ++p) key = key * original_.q() + v[p];
  const Word& w = permuted_.word(basis_index_.at(key));
  const std::vector<int> redundancy(w.begin() + k_, w.end());
  const std::vector<int> observed(v.begin() + k_, v.end());
  return phi_.invert(redundancy, observed);
}

BlockCode WiretapScheme::coset(const Word& message) const {
  if (static_cast<int>(message.size()) != message_positions()) {
    throw MessageLengthMismatch("message has wrong length");
  }
  std::vector<Word> words;
  words.reserve(permuted_.size());
  for (const Word& w : permuted_.words()) words.push_back(externalize(mask_word(w, message)));
  return BlockCode(original_.alphabet(), original_.length(), std::move(words));
}

std::vector<Word> WiretapScheme::lambda_set(const Word& t, Mask x, const Word& message) const {
  if (x > full_mask(original_.length())) throw IndexOutOfRange("subset outside ground set");
  if (static_cast<int>(t.size()) != original_.length()) {
    throw LengthMismatch("tapped word has wrong length");
  }
  std::vector<Word> out;
  const BlockCode members = coset(message);
  for (const Word& w : members.words()) {
    bool match = true;
    for (int p : elements(x)) {
      if (w[p - 1] != t[p - 1]) {
        match = false;
        break;
      }
    }
    if (match) out.push_back(w);
  }
  return out;
}

std::vector<WiretapScheme::EquivocationRow> WiretapScheme::equivocation_profile() const {
  const int n = original_.length();
  const int s = n - k_;
  std::vector<int> max_nullity(n + 1, 0);
  const Mask all = full_mask(n);
  for (Mask x = 0; x <= all; ++x) {
    const int size = set_size(x);
    max_nullity[size] = std::max(max_nullity[size], matroid_.nullity(x));
    if (x == all) break;
  }
  const WeightHierarchy dual_weights = matroid_.hamming_weights();  // d*_1..d*_s
  auto weight_at = [&](int j) {
    if (j <= 0) return 0;
    if (j > s) return n + 1;
    return dual_weights[j - 1];
  };
  std::vector<EquivocationRow> rows;
  for (int mu = 0; mu <= n; ++mu) {
    EquivocationRow row;
    row.mu = mu;
    row.delta = max_nullity[mu];
    row.equivocation = s - row.delta;
    row.lower_weight = weight_at(row.delta);
    row.upper_weight = weight_at(row.delta + 1);
    row.bracket_holds = row.lower_weight <= mu && mu < row.upper_weight;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace aaco
