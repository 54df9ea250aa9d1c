#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aaco/block_code.hpp"

namespace aaco {

// Layered labelled digraph whose source-to-sink path labels are exactly the
// code. Layer i holds one vertex per class of length-i prefixes sharing the
// same set of completions; that vertex count is minimal among proper
// trellises representing the code.
struct Trellis {
  struct Edge {
    int from;
    int to;
    int label;
    auto operator<=>(const Edge&) const = default;
  };

  int n = 0;
  int q = 0;
  // members[i][v] = prefixes of length i in class v, lex order; the first
  // member is the class representative. Vertex ids are (layer, index).
  std::vector<std::vector<std::vector<Word>>> members;
  // edges[i] connects layer i to layer i+1, sorted by (from, to, label).
  std::vector<std::vector<Edge>> edges;

  std::vector<std::size_t> layer_sizes() const;
  std::string to_json() const;
};

// The future-set construction. Works for any block code; minimality and
// properness are consequences checked by the test suite.
Trellis build_min_trellis(const BlockCode& code);

struct DecodeResult {
  std::vector<Word> words;  // all codewords at minimal distance, lex order
  int distance;
};

// Layer-by-layer survivor propagation keeping every tied prefix.
DecodeResult viterbi_decode(const Trellis& trellis, const Word& received);

struct VertexBoundRow {
  int layer;
  std::size_t vertices;
  int bound_exponent;  // k - k_i - k_{n-i}
  bool holds;          // |V_i| >= q^max(bound_exponent, 0)
};

// Compares every layer size against the profile lower bound.
std::vector<VertexBoundRow> vertex_bound_report(const BlockCode& code, const Trellis& trellis);

}  // namespace aaco
