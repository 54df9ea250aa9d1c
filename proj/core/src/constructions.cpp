#include "aaco/constructions.hpp"

#include <algorithm>
#include <string>

#include "aaco/code_analysis.hpp"
#include "aaco/errors.hpp"

namespace aaco {

namespace {

// row space of `rows` over the field, as plain vectors
std::vector<std::vector<int>> enumerate_span(const FiniteField& field,
                                             const std::vector<std::vector<int>>& rows, int cols) {
  const int k = static_cast<int>(rows.size());
  std::vector<std::vector<int>> out;
  std::vector<int> coefficients(k, 0);
  while (true) {
    std::vector<int> word(cols, 0);
    for (int i = 0; i < k; ++i) {
      if (coefficients[i] == 0) continue;
      for (int c = 0; c < cols; ++c) {
        word[c] = field.add(word[c], field.mul(coefficients[i], rows[i][c]));
      }
    }
    out.push_back(std::move(word));
    int pos = 0;
    while (pos < k && ++coefficients[pos] == field.size()) coefficients[pos++] = 0;
    if (pos == k) break;
  }
  return out;
}

std::vector<int> block_positions(Mask x, int r) {
  std::vector<int> out;
  for (int b : elements(x)) {
    for (int t = 0; t < r; ++t) out.push_back((b - 1) * r + t);
  }
  return out;
}

}  // namespace

BlockCode running_example_cprime() {
  const std::vector<Word> words = {
      {0, 0, 0}, {0, 1, 1}, {0, 2, 2}, {0, 3, 3}, {1, 0, 1}, {1, 1, 2}, {1, 2, 3}, {1, 3, 0},
      {2, 0, 2}, {2, 1, 3}, {2, 2, 0}, {2, 3, 1}, {3, 0, 3}, {3, 1, 0}, {3, 2, 1}, {3, 3, 2}};
  return BlockCode(Alphabet{4, {}}, 3, words);
}

BlockCode linear_code(const GeneratorMatrix& g) {
  if (g.k() == 0 || g.n() == 0) throw RankDeficient("empty generator matrix");
  if (g.rank() != g.k()) {
    throw RankDeficient("generator matrix has rank " + std::to_string(g.rank()) + " < " +
                        std::to_string(g.k()) + " rows");
  }
  return BlockCode(Alphabet{g.field.size(), {}}, g.n(), enumerate_span(g.field, g.rows, g.n()));
}

std::pair<Matroid, Matroid> linear_code_matroids(const GeneratorMatrix& g) {
  const Matroid code_side = code_matroid(linear_code(g));
  const std::vector<std::vector<int>> parity = matrix_nullspace(g.field, g.rows, g.n());
  const int n = g.n();
  std::vector<std::uint8_t> ranks(std::size_t{1} << n);
  const Mask all = full_mask(n);
  for (Mask x = 1; x <= all; ++x) {
    std::vector<std::vector<int>> sub;
    sub.reserve(parity.size());
    for (const auto& row : parity) {
      std::vector<int> projected;
      for (int p : elements(x)) projected.push_back(row[p - 1]);
      sub.push_back(std::move(projected));
    }
    ranks[x] = static_cast<std::uint8_t>(matrix_rank(g.field, sub));
  }
  Matroid parity_side = Matroid::from_rank_table(n, std::move(ranks));
  if (code_side != parity_side.dual()) {
    throw Error("puncture matroid disagrees with the dual of the parity matroid");
  }
  return {code_side, std::move(parity_side)};
}

GeneratorMatrix reed_solomon(const FiniteField& field, int gamma, int k) {
  const int q = field.size();
  if (k < 1 || k > q - 1) throw IndexOutOfRange("Reed-Solomon dimension outside 1..q-1");
  if (!field.is_generator(gamma)) {
    throw NotAGenerator(std::to_string(gamma) + " does not generate the multiplicative group of GF(" +
                        std::to_string(q) + ")");
  }
  GeneratorMatrix g{field, {}};
  for (int i = 1; i <= k; ++i) {
    std::vector<int> row(q - 1);
    for (int j = 1; j <= q - 1; ++j) row[j - 1] = field.pow(gamma, static_cast<long long>(i - 1) * j);
    g.rows.push_back(std::move(row));
  }
  return g;
}

MultilinearCode::MultilinearCode(FiniteField field, int r, int block_length,
                                 std::vector<std::vector<int>> generator_rows)
    : field_(std::move(field)), r_(r), n_(block_length), generator_(std::move(generator_rows)) {
  if (r_ < 1) throw DivisibilityViolated("block size r must be at least 1");
  if (n_ < 1) throw InvalidCode("block length must be positive");
  for (const auto& row : generator_) {
    if (static_cast<int>(row.size()) != r_ * n_) {
      throw LengthMismatch("generator row length is not r * block_length");
    }
  }
  if (matrix_rank(field_, generator_) != static_cast<int>(generator_.size())) {
    throw RankDeficient("generator rows are linearly dependent");
  }
  if (static_cast<int>(generator_.size()) % r_ != 0) {
    throw NotMultilinear("F_q-dimension " + std::to_string(generator_.size()) +
                         " is not divisible by " + std::to_string(r_));
  }
  // divisibility of every puncture dimension is the defining condition
  const Mask all = full_mask(n_);
  for (Mask x = 1; x <= all; ++x) {
    std::vector<std::vector<int>> sub;
    sub.reserve(generator_.size());
    for (const auto& row : generator_) {
      std::vector<int> projected;
      for (int p : block_positions(x, r_)) projected.push_back(row[p]);
      sub.push_back(std::move(projected));
    }
    if (matrix_rank(field_, sub) % r_ != 0) {
      throw NotMultilinear("puncture dimension at " + mask_to_string(x) + " is not divisible by " +
                           std::to_string(r_));
    }
  }
}

BlockCode MultilinearCode::code() const {
  const int q = field_.size();
  std::vector<Word> words;
  for (const std::vector<int>& flat : enumerate_span(field_, generator_, r_ * n_)) {
    words.push_back(fold_word(flat, q, r_));
  }
  int alphabet = 1;
  for (int t = 0; t < r_; ++t) alphabet *= q;
  return BlockCode(Alphabet{alphabet, {}}, n_, std::move(words));
}

Matroid MultilinearCode::matroid() const {
  std::vector<std::uint8_t> ranks(std::size_t{1} << n_);
  const Mask all = full_mask(n_);
  for (Mask x = 1; x <= all; ++x) {
    std::vector<std::vector<int>> sub;
    sub.reserve(generator_.size());
    for (const auto& row : generator_) {
      std::vector<int> projected;
      for (int p : block_positions(x, r_)) projected.push_back(row[p]);
      sub.push_back(std::move(projected));
    }
    ranks[x] = static_cast<std::uint8_t>(matrix_rank(field_, sub) / r_);
  }
  return Matroid::from_rank_table(n_, std::move(ranks));
}

MultilinearCode interleave(const GeneratorMatrix& g, int r) {
  if (r < 1) throw DivisibilityViolated("interleaving depth must be at least 1");
  if (g.rank() != g.k()) throw RankDeficient("generator matrix is rank deficient");
  const int k = g.k();
  const int n = g.n();
  std::vector<std::vector<int>> rows(k * r, std::vector<int>(n * r, 0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int t = 0; t < r; ++t) rows[i * r + t][j * r + t] = g.rows[i][j];
    }
  }
  return MultilinearCode(g.field, r, n, std::move(rows));
}

MultilinearCode folded_rs(const FiniteField& field, int gamma, int r, int k) {
  const int q = field.size();
  if (r < 1 || (q - 1) % r != 0) {
    throw DivisibilityViolated("folding depth " + std::to_string(r) + " does not divide q-1 = " +
                               std::to_string(q - 1));
  }
  if (k % r != 0) {
    throw DivisibilityViolated("dimension " + std::to_string(k) + " is not divisible by r = " +
                               std::to_string(r));
  }
  const GeneratorMatrix g = reed_solomon(field, gamma, k);
  return MultilinearCode(field, r, (q - 1) / r, g.rows);
}

MultilinearCode multilinear_dual(const MultilinearCode& c) {
  std::vector<std::vector<int>> parity =
      matrix_nullspace(c.field(), c.generator(), c.r() * c.block_length());
  return MultilinearCode(c.field(), c.r(), c.block_length(), std::move(parity));
}

std::vector<int> unfold_word(const Word& w, int q, int r) {
  std::vector<int> out;
  out.reserve(w.size() * r);
  for (int symbol : w) {
    for (int t = 0; t < r; ++t) {
      out.push_back(symbol % q);
      symbol /= q;
    }
  }
  return out;
}

Word fold_word(const std::vector<int>& flat, int q, int r) {
  Word out;
  out.reserve(flat.size() / r);
  for (std::size_t b = 0; b + r <= flat.size(); b += r) {
    int symbol = 0;
    for (int t = r - 1; t >= 0; --t) symbol = symbol * q + flat[b + t];
    out.push_back(symbol);
  }
  return out;
}

BlockCode multilinear_dual(const BlockCode& code, const FiniteField& field, int r) {
  const int q = field.size();
  int alphabet = 1;
  for (int t = 0; t < r; ++t) alphabet *= q;
  if (code.q() != alphabet) {
    throw AlphabetMismatch("code alphabet " + std::to_string(code.q()) + " is not q^r = " +
                           std::to_string(alphabet));
  }
  // recover a basis of the unfolded word set and check it really is a space
  std::vector<std::vector<int>> unfolded;
  unfolded.reserve(code.size());
  for (const Word& w : code.words()) unfolded.push_back(unfold_word(w, q, r));
  const int rank = matrix_rank(field, unfolded);
  std::size_t span_size = 1;
  for (int i = 0; i < rank; ++i) span_size *= q;
  if (span_size != code.size()) {
    throw NotMultilinear("words do not form an F_q-linear subspace");
  }
  // greedy basis: keep rows that increase the rank
  std::vector<std::vector<int>> basis;
  for (const auto& row : unfolded) {
    basis.push_back(row);
    if (matrix_rank(field, basis) < static_cast<int>(basis.size())) basis.pop_back();
  }
  const MultilinearCode primal(field, r, code.length(), std::move(basis));
  return multilinear_dual(primal).code();
}

}  // namespace aaco
