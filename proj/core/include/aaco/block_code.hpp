#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aaco/subsets.hpp"

namespace aaco {

// Symbols are the integers 0..q-1. `display` optionally maps each symbol
// to a label (used for folded alphabets whose symbols are tuples).
struct Alphabet {
  int q = 2;
  std::vector<std::string> display;

  std::string symbol_name(int s) const {
    return display.empty() ? std::to_string(s) : display[s];
  }
  bool operator==(const Alphabet& other) const { return q == other.q; }
};

using Word = std::vector<int>;

// A finite set of equal-length words over an integer alphabet, stored in
// lexicographic order without duplicates. Immutable after construction.
class BlockCode {
 public:
  BlockCode(Alphabet alphabet, int n, std::vector<Word> words);

  const Alphabet& alphabet() const { return alphabet_; }
  int q() const { return alphabet_.q; }
  int length() const { return n_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<Word>& words() const { return words_; }
  const Word& word(std::size_t i) const { return words_[i]; }

  bool contains(const Word& w) const;
  std::optional<std::size_t> index_of(const Word& w) const;

  // log_q |C| when |C| is an exact power of q.
  std::optional<int> dimension() const;

  // First position whose column is constant across all words, if any.
  std::optional<int> first_degenerate_position() const;

  // Number of distinct restrictions of the words to the positions in x.
  std::size_t puncture_size(Mask x) const;

  bool operator==(const BlockCode& other) const {
    return alphabet_.q == other.alphabet_.q && n_ == other.n_ && words_ == other.words_;
  }

 private:
  Alphabet alphabet_;
  int n_;
  std::vector<Word> words_;
};

// Positions where c and reference differ.
Mask support(const Word& c, const Word& reference);

// Union of supports against any one member; member-independent for almost
// affine codes. Throws EmptyCode on an empty family.
Mask code_support(const std::vector<Word>& words);

int hamming_distance(const Word& a, const Word& b);

// Compact digit string for q <= 10, otherwise space-separated labels.
std::string word_to_string(const Word& w, const Alphabet& alphabet);

// Accepts the compact digit form (q <= 10) or comma/space-separated ints.
Word parse_word(const std::string& text, int q, int n);

// Text format: '#' comment lines, a "q <int> n <int>" header line, then one
// word per line as n space-separated integers in [0,q). Duplicates rejected.
BlockCode parse_code_text(const std::string& text);
std::string code_to_text(const BlockCode& code);

// JSON alternative: {"q":int,"n":int,"words":[[int]]}.
BlockCode parse_code_json(const std::string& text);
std::string code_to_json(const BlockCode& code);

// Dispatches on the leading character ('{' selects JSON).
BlockCode read_code_file(const std::string& path);
void write_code_file(const BlockCode& code, const std::string& path);

}  // namespace aaco
