#include "aaco/trellis.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>

#include <json.hpp>

#include "aaco/code_analysis.hpp"
#include "aaco/errors.hpp"

namespace aaco {

std::vector<std::size_t> Trellis::layer_sizes() const {
  std::vector<std::size_t> out;
  out.reserve(members.size());
  for (const auto& layer : members) out.push_back(layer.size());
  return out;
}

std::string Trellis::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["q"] = q;
  nlohmann::json layers = nlohmann::json::array();
  for (const auto& layer : members) {
    nlohmann::json jl = nlohmann::json::array();
    for (std::size_t v = 0; v < layer.size(); ++v) {
      nlohmann::json jv;
      jv["id"] = v;
      jv["prefix"] = layer[v].front();  // class representative
      jl.push_back(std::move(jv));
    }
    layers.push_back(std::move(jl));
  }
  j["layers"] = std::move(layers);
  nlohmann::json stages = nlohmann::json::array();
  for (const auto& stage : edges) {
    nlohmann::json js = nlohmann::json::array();
    for (const Edge& e : stage) {
      nlohmann::json je;
      je["from"] = e.from;
      je["to"] = e.to;
      je["label"] = e.label;
      js.push_back(std::move(je));
    }
    stages.push_back(std::move(js));
  }
  j["edges"] = std::move(stages);
  return j.dump();
}

Trellis build_min_trellis(const BlockCode& code) {
  const int n = code.length();
  Trellis t;
  t.n = n;
  t.q = code.q();
  t.members.resize(n + 1);
  t.edges.resize(n);

  // class id of every prefix at the previous layer, keyed by prefix
  std::map<Word, int> previous_class;
  for (int i = 0; i <= n; ++i) {
    // group length-i prefixes by their set of completions; words are sorted,
    // so prefixes arrive in lex order and futures come out sorted
    std::map<Word, std::vector<Word>> futures;
    std::vector<Word> prefix_order;
    for (const Word& w : code.words()) {
      Word prefix(w.begin(), w.begin() + i);
      Word suffix(w.begin() + i, w.end());
      auto [it, inserted] = futures.try_emplace(std::move(prefix));
      if (inserted) prefix_order.push_back(it->first);
      if (it->second.empty() || it->second.back() != suffix) it->second.push_back(std::move(suffix));
    }
    std::map<std::vector<Word>, int> class_of_future;
    std::map<Word, int> class_of_prefix;
    for (const Word& prefix : prefix_order) {
      const auto& future = futures[prefix];
      auto [it, inserted] = class_of_future.try_emplace(future, static_cast<int>(t.members[i].size()));
      if (inserted) t.members[i].emplace_back();
      t.members[i][it->second].push_back(prefix);
      class_of_prefix[prefix] = it->second;
    }
    if (i > 0) {
      std::set<Trellis::Edge> stage;
      for (const Word& prefix : prefix_order) {
        Word parent(prefix.begin(), prefix.end() - 1);
        stage.insert({previous_class.at(parent), class_of_prefix.at(prefix), prefix.back()});
      }
      t.edges[i - 1].assign(stage.begin(), stage.end());
    }
    previous_class = std::move(class_of_prefix);
  }
  return t;
}

DecodeResult viterbi_decode(const Trellis& trellis, const Word& received) {
  if (static_cast<int>(received.size()) != trellis.n) {
    throw LengthMismatch("received word has length " + std::to_string(received.size()) +
                         ", trellis expects " + std::to_string(trellis.n));
  }
  for (int s : received) {
    if (s < 0 || s >= trellis.q) {
      throw AlphabetMismatch("received symbol " + std::to_string(s) + " outside alphabet of size " +
                             std::to_string(trellis.q));
    }
  }
  // per vertex: minimal distance of any path prefix, and all tied prefixes
  std::vector<int> distance{0};
  std::vector<std::vector<Word>> survivors{{Word{}}};
  for (int i = 0; i < trellis.n; ++i) {
    const std::size_t next_size = trellis.members[i + 1].size();
    std::vector<int> next_distance(next_size, INT_MAX);
    std::vector<std::vector<Word>> next_survivors(next_size);
    for (const Trellis::Edge& e : trellis.edges[i]) {
      const int d = distance[e.from] + (e.label == received[i] ? 0 : 1);
      if (d > next_distance[e.to]) continue;
      if (d < next_distance[e.to]) {
        next_distance[e.to] = d;
        next_survivors[e.to].clear();
      }
      for (const Word& w : survivors[e.from]) {
        Word extended = w;
        extended.push_back(e.label);
        next_survivors[e.to].push_back(std::move(extended));
      }
    }
    distance = std::move(next_distance);
    survivors = std::move(next_survivors);
  }
  DecodeResult out{std::move(survivors.front()), distance.front()};
  std::sort(out.words.begin(), out.words.end());
  return out;
}

std::vector<VertexBoundRow> vertex_bound_report(const BlockCode& code, const Trellis& trellis) {
  const std::vector<int> profile = dlp(code);
  const int k = *code.dimension();
  const int n = code.length();
  // profile[i-1] = k_i for i = 1..n; k_0 = 0
  auto k_at = [&](int i) { return i == 0 ? 0 : profile[i - 1]; };
  std::vector<VertexBoundRow> rows;
  for (int i = 0; i <= n; ++i) {
    VertexBoundRow row;
    row.layer = i;
    row.vertices = trellis.members[i].size();
    row.bound_exponent = k - k_at(i) - k_at(n - i);
    std::size_t required = 1;
    for (int e = 0; e < row.bound_exponent; ++e) required *= code.q();
    row.holds = row.vertices >= required;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace aaco
