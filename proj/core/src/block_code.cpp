#include "aaco/block_code.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "aaco/errors.hpp"

namespace aaco {

BlockCode::BlockCode(Alphabet alphabet, int n, std::vector<Word> words)
    : alphabet_(std::move(alphabet)), n_(n), words_(std::move(words)) {
  if (alphabet_.q < 2) throw InvalidCode("alphabet size must be at least 2");
  if (!alphabet_.display.empty() && static_cast<int>(alphabet_.display.size()) != alphabet_.q) {
    throw InvalidCode("display map must cover all q symbols");
  }
  if (n_ < 1) throw InvalidCode("code length must be positive");
  if (n_ > ground_set_cap()) {
    throw CapExceeded("code length " + std::to_string(n_) + " exceeds ground-set cap " +
                      std::to_string(ground_set_cap()));
  }
  if (words_.empty()) throw EmptyCode("a block code needs at least one word");
  for (const Word& w : words_) {
    if (static_cast<int>(w.size()) != n_) {
      throw LengthMismatch("word of length " + std::to_string(w.size()) + " in a code of length " +
                           std::to_string(n_));
    }
    for (int s : w) {
      if (s < 0 || s >= alphabet_.q) {
        throw InvalidCode("symbol " + std::to_string(s) + " outside alphabet of size " +
                          std::to_string(alphabet_.q));
      }
    }
  }
  std::sort(words_.begin(), words_.end());
  if (std::adjacent_find(words_.begin(), words_.end()) != words_.end()) {
    throw InvalidCode("duplicate words in code");
  }
}

bool BlockCode::contains(const Word& w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

std::optional<std::size_t> BlockCode::index_of(const Word& w) const {
  auto it = std::lower_bound(words_.begin(), words_.end(), w);
  if (it == words_.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - words_.begin());
}

std::optional<int> BlockCode::dimension() const {
  std::size_t count = words_.size();
  int k = 0;
  while (count > 1) {
    if (count % alphabet_.q != 0) return std::nullopt;
    count /= alphabet_.q;
    ++k;
  }
  return k;
}

std::optional<int> BlockCode::first_degenerate_position() const {
  for (int pos = 1; pos <= n_; ++pos) {
    bool constant = true;
    for (const Word& w : words_) {
      if (w[pos - 1] != words_[0][pos - 1]) {
        constant = false;
        break;
      }
    }
    if (constant) return pos;
  }
  return std::nullopt;
}

std::size_t BlockCode::puncture_size(Mask x) const {
  if (x == 0) return 1;
  const std::vector<int> pos = elements(x);
  // pack the projection into one integer when q^|X| fits
  if (static_cast<double>(pos.size()) * std::log2(static_cast<double>(alphabet_.q)) < 62.0) {
    std::vector<std::uint64_t> keys;
    keys.reserve(words_.size());
    for (const Word& w : words_) {
      std::uint64_t key = 0;
      for (int p : pos) key = key * static_cast<std::uint64_t>(alphabet_.q) + w[p - 1];
      keys.push_back(key);
    }
    std::sort(keys.begin(), keys.end());
    return std::unique(keys.begin(), keys.end()) - keys.begin();
  }
  std::vector<Word> projections;
  projections.reserve(words_.size());
  for (const Word& w : words_) {
    Word proj;
    proj.reserve(pos.size());
    for (int p : pos) proj.push_back(w[p - 1]);
    projections.push_back(std::move(proj));
  }
  std::sort(projections.begin(), projections.end());
  return std::unique(projections.begin(), projections.end()) - projections.begin();
}

Mask support(const Word& c, const Word& reference) {
  if (c.size() != reference.size()) {
    throw LengthMismatch("support of words with lengths " + std::to_string(c.size()) + " and " +
                         std::to_string(reference.size()));
  }
  Mask out = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != reference[i]) out = with_element(out, static_cast<int>(i) + 1);
  }
  return out;
}

Mask code_support(const std::vector<Word>& words) {
  if (words.empty()) throw EmptyCode("support of an empty code");
  Mask out = 0;
  for (const Word& w : words) out |= support(w, words.front());
  return out;
}

int hamming_distance(const Word& a, const Word& b) { return set_size(support(a, b)); }

std::string word_to_string(const Word& w, const Alphabet& alphabet) {
  std::string out;
  const bool compact = alphabet.q <= 10 && alphabet.display.empty();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += alphabet.symbol_name(w[i]);
  }
  return out;
}

Word parse_word(const std::string& text, int q, int n) {
  Word out;
  if (text.find(',') != std::string::npos || text.find(' ') != std::string::npos) {
    std::string scratch = text;
    std::replace(scratch.begin(), scratch.end(), ',', ' ');
    std::istringstream in(scratch);
    int v;
    while (in >> v) out.push_back(v);
  } else if (q > 10 && n == 1) {
    try {
      out.push_back(std::stoi(text));
    } catch (const std::exception&) {
      throw ParseError(0, "bad symbol '" + text + "' in word");
    }
  } else {
    if (q > 10) throw ParseError(0, "compact word form needs q <= 10; separate symbols with commas");
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw ParseError(0, std::string("bad symbol '") + ch + "' in word");
      out.push_back(ch - '0');
    }
  }
  if (static_cast<int>(out.size()) != n) {
    throw LengthMismatch("word " + text + " has " + std::to_string(out.size()) +
                         " symbols, expected " + std::to_string(n));
  }
  for (int s : out) {
    if (s < 0 || s >= q) {
      throw ParseError(0, "symbol " + std::to_string(s) + " outside alphabet of size " + std::to_string(q));
    }
  }
  return out;
}

BlockCode parse_code_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int q = -1, n = -1;
  std::vector<Word> words;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    if (q < 0) {
      std::string key_q, key_n;
      if (!(fields >> key_q >> q >> key_n >> n) || key_q != "q" || key_n != "n") {
        throw ParseError(line_no, "expected header line \"q <int> n <int>\"");
      }
      if (q < 2 || n < 1) throw ParseError(line_no, "need q >= 2 and n >= 1");
      continue;
    }
    Word w;
    int v;
    while (fields >> v) {
      if (v < 0 || v >= q) {
        throw ParseError(line_no, "symbol " + std::to_string(v) + " outside [0," + std::to_string(q) + ")");
      }
      w.push_back(v);
    }
    if (!fields.eof()) throw ParseError(line_no, "non-integer token in word line");
    if (static_cast<int>(w.size()) != n) {
      throw ParseError(line_no, "expected " + std::to_string(n) + " symbols, got " + std::to_string(w.size()));
    }
    words.push_back(std::move(w));
  }
  if (q < 0) throw ParseError(line_no, "missing \"q <int> n <int>\" header line");
  std::vector<Word> sorted = words;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ParseError(0, "duplicate words in code file");
  }
  return BlockCode(Alphabet{q, {}}, n, std::move(words));
}

std::string code_to_text(const BlockCode& code) {
  std::string out = "q " + std::to_string(code.q()) + " n " + std::to_string(code.length()) + "\n";
  for (const Word& w : code.words()) {
    for (int i = 0; i < code.length(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(w[i]);
    }
    out += '\n';
  }
  return out;
}

BlockCode parse_code_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("bad code JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("q") || !j.contains("n") || !j.contains("words")) {
    throw ParseError(0, "code JSON needs fields \"q\", \"n\" and \"words\"");
  }
  const int q = j["q"].get<int>();
  const int n = j["n"].get<int>();
  if (q < 2 || n < 1) throw ParseError(0, "need q >= 2 and n >= 1");
  std::vector<Word> words;
  for (const auto& jw : j["words"]) {
    Word w;
    for (const auto& v : jw) {
      const int s = v.get<int>();
      if (s < 0 || s >= q) {
        throw ParseError(0, "symbol " + std::to_string(s) + " outside [0," + std::to_string(q) + ")");
      }
      w.push_back(s);
    }
    if (static_cast<int>(w.size()) != n) throw ParseError(0, "word of wrong length in code JSON");
    words.push_back(std::move(w));
  }
  std::vector<Word> sorted = words;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ParseError(0, "duplicate words in code JSON");
  }
  return BlockCode(Alphabet{q, {}}, n, std::move(words));
}

std::string code_to_json(const BlockCode& code) {
  nlohmann::json j;
  j["q"] = code.q();
  j["n"] = code.length();
  j["words"] = code.words();
  return j.dump();
}

BlockCode read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileNotFound("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_code_json(text);
  return parse_code_text(text);
}

void write_code_file(const BlockCode& code, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FileNotFound("cannot write " + path);
  out << code_to_text(code);
}

}  // namespace aaco
