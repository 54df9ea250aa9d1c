#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "aaco/block_code.hpp"
#include "aaco/code_analysis.hpp"
#include "aaco/constructions.hpp"
#include "aaco/errors.hpp"
#include "aaco/matroid.hpp"
#include "aaco/trellis.hpp"
#include "aaco/wiretap.hpp"

namespace aaco::cli {

namespace {

using nlohmann::json;

struct Ctx {
  bool as_json = false;
  std::ostream* out = nullptr;
};

std::string render_word(const Word& w, const Alphabet& alphabet) {
  return word_to_string(w, alphabet);
}

std::string render_words(const std::vector<Word>& words, const Alphabet& alphabet) {
  std::string sep = alphabet.q <= 10 && alphabet.display.empty() ? " " : " | ";
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out += sep;
    out += render_word(words[i], alphabet);
  }
  return out;
}

std::string render_weights(const WeightHierarchy& d) {
  if (d.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i > 0) out += ", ";
    out += "d_" + std::to_string(i + 1) + " = " + std::to_string(d[i]);
  }
  return out;
}

json mask_to_json(Mask m) { return json(elements(m)); }

void emit(const Ctx& ctx, const json& j, const std::string& text) {
  if (ctx.as_json) {
    *ctx.out << j.dump() << "\n";
  } else {
    *ctx.out << text;
  }
}

// write to -o target or stdout
void emit_file(const Ctx& ctx, const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    *ctx.out << payload;
  } else {
    std::ofstream f(out_path);
    if (!f) throw FileNotFound("cannot write " + out_path);
    f << payload;
  }
}

FiniteField make_field(int q, const std::string& poly_text) {
  if (poly_text.empty()) {
    // factor q = p^m with prime p
    for (int p = 2; p <= q; ++p) {
      bool prime = true;
      for (int d = 2; d * d <= p; ++d) {
        if (p % d == 0) prime = false;
      }
      if (!prime || q % p != 0) continue;
      int m = 0, rest = q;
      while (rest % p == 0) {
        rest /= p;
        ++m;
      }
      if (rest != 1) break;
      if (m == 1) return FiniteField::prime(p);
      throw InvalidCode("q = " + std::to_string(q) + " needs --poly with an irreducible polynomial of degree " +
                        std::to_string(m));
    }
    throw InvalidCode("q = " + std::to_string(q) + " is not a prime power");
  }
  std::vector<int> coefficients;
  std::string scratch = poly_text;
  std::replace(scratch.begin(), scratch.end(), ',', ' ');
  std::istringstream in(scratch);
  int v;
  while (in >> v) coefficients.push_back(v);
  for (int p = 2; p <= q; ++p) {
    int m = 0, rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++m;
    }
    if (rest == 1 && m >= 1) return FiniteField::extension(p, m, coefficients);
  }
  throw InvalidCode("q = " + std::to_string(q) + " is not a prime power");
}

GeneratorMatrix parse_matrix(const FiniteField& field, const std::string& text) {
  GeneratorMatrix g{field, {}};
  std::istringstream rows(text);
  std::string row_text;
  while (std::getline(rows, row_text, ';')) {
    std::replace(row_text.begin(), row_text.end(), ',', ' ');
    std::istringstream in(row_text);
    std::vector<int> row;
    int v;
    while (in >> v) {
      if (v < 0 || v >= field.size()) {
        throw ParseError(0, "matrix entry " + std::to_string(v) + " outside GF(" +
                                std::to_string(field.size()) + ")");
      }
      row.push_back(v);
    }
    if (!row.empty()) g.rows.push_back(std::move(row));
  }
  if (g.rows.empty()) throw ParseError(0, "empty generator matrix");
  for (const auto& row : g.rows) {
    if (row.size() != g.rows[0].size()) throw ParseError(0, "ragged generator matrix");
  }
  return g;
}

// matroid JSON import: check the axioms and report the shape
void cmd_validate_matroid(const Ctx& ctx, const std::string& text) {
  const Matroid m = Matroid::from_json(text);  // throws AxiomViolation on bad tables
  emit(ctx, json{{"n", m.ground_size()}, {"rank", m.rank()}, {"valid", true}},
       "matroid axioms: ok (n = " + std::to_string(m.ground_size()) + ", rank = " +
           std::to_string(m.rank()) + ")\n");
}

void cmd_validate(const Ctx& ctx, const std::string& path) {
  {
    std::ifstream probe(path);
    if (!probe) throw FileNotFound("cannot open " + path);
    std::ostringstream buffer;
    buffer << probe.rdbuf();
    const std::string text = buffer.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{' &&
        text.find("\"rank\"") != std::string::npos) {
      cmd_validate_matroid(ctx, text);
      return;
    }
  }
  const BlockCode code = read_code_file(path);
  const AlmostAffineCheck check = is_almost_affine(code);
  json j{{"q", code.q()}, {"n", code.length()}, {"size", code.size()}, {"almost_affine", check.ok}};
  std::ostringstream text;
  text << "q " << code.q() << " n " << code.length() << " |C| " << code.size() << "\n";
  if (check.ok) {
    j["k"] = *code.dimension();
    text << "almost affine: yes (k = " << *code.dimension() << ")\n";
  } else {
    j["witness"] = mask_to_json(check.witness);
    j["puncture_size"] = code.puncture_size(check.witness);
    text << "almost affine: no, witness " << mask_to_string(check.witness) << " (|C_X| = "
         << code.puncture_size(check.witness) << " is not a power of " << code.q() << ")\n";
  }
  emit(ctx, j, text.str());
  if (!check.ok) throw Error("code is not almost affine");
}

void cmd_matroid(const Ctx& ctx, const std::string& path) {
  const Matroid m = code_matroid(read_code_file(path));
  if (ctx.as_json) {
    *ctx.out << m.to_json() << "\n";
    return;
  }
  *ctx.out << "n = " << m.ground_size() << ", rank = " << m.rank() << "\n" << m.to_json() << "\n";
}

void cmd_weights(const Ctx& ctx, const std::string& path, std::uint64_t budget) {
  const BlockCode code = read_code_file(path);
  const WeightHierarchy via_matroid = ghw_via_matroid(code);
  std::optional<WeightHierarchy> via_subcodes, via_codewords;
  try {
    via_subcodes = ghw_via_subcodes(code, budget);
  } catch (const EnumerationBudgetExceeded&) {
  }
  try {
    via_codewords = ghw_via_codewords(code, nullptr, budget);
  } catch (const EnumerationBudgetExceeded&) {
  }
  const bool agree = (!via_subcodes || *via_subcodes == via_matroid) &&
                     (!via_codewords || *via_codewords == via_matroid);

  auto route_text = [](const std::optional<WeightHierarchy>& d) {
    if (!d) return std::string("skipped (enumeration budget exceeded)");
    if (d->empty()) return std::string("none");
    std::string out;
    for (std::size_t i = 0; i < d->size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string((*d)[i]);
    }
    return out;
  };
  std::ostringstream text;
  text << render_weights(via_matroid) << "\n";
  text << "route matroid:   " << route_text(via_matroid) << "\n";
  text << "route subcodes:  " << route_text(via_subcodes) << "\n";
  text << "route codewords: " << route_text(via_codewords) << "\n";
  text << "agreement: " << (agree ? "yes" : "NO") << "\n";

  json j{{"weights", via_matroid}, {"agreement", agree}};
  j["routes"]["matroid"] = via_matroid;
  j["routes"]["subcodes"] = via_subcodes ? json(*via_subcodes) : json(nullptr);
  j["routes"]["codewords"] = via_codewords ? json(*via_codewords) : json(nullptr);
  emit(ctx, j, text.str());
  if (!agree) throw Error("generalized Hamming weight routes disagree");
}

void cmd_dlp(const Ctx& ctx, const std::string& path) {
  const std::vector<int> profile = dlp(read_code_file(path));
  std::ostringstream text;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i > 0) text << ", ";
    text << "k_" << (i + 1) << " = " << profile[i];
  }
  text << "\n";
  emit(ctx, json{{"dlp", profile}}, text.str());
}

void cmd_subcodes(const Ctx& ctx, const std::string& path, int dim, std::uint64_t budget) {
  const BlockCode code = read_code_file(path);
  const std::vector<Subcode> subs = enumerate_subcodes(code, dim, budget);
  std::ostringstream text;
  text << subs.size() << " subcodes of dimension " << dim << "\n";
  json j{{"dim", dim}, {"count", subs.size()}};
  j["subcodes"] = json::array();
  for (const Subcode& sub : subs) {
    const auto words = sub.words();
    const Mask supp = sub.support();
    text << "{";
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (i > 0) text << ", ";
      text << render_word(words[i], code.alphabet());
    }
    text << "} support " << mask_to_string(supp) << "\n";
    j["subcodes"].push_back(json{{"words", words}, {"support", mask_to_json(supp)}});
  }
  emit(ctx, j, text.str());
}

void cmd_kung(const Ctx& ctx, const std::string& path) {
  const std::vector<KungRow> rows = kung_bound_report(read_code_file(path));
  std::ostringstream text;
  if (rows.empty()) {
    text << "no rows (k = n)\n";
  } else {
    text << "i  gamma  bound  holds\n";
    for (const KungRow& row : rows) {
      text << std::left << std::setw(3) << row.i << std::setw(7) << row.gamma << std::setw(7)
           << row.bound << (row.holds ? "yes" : "NO") << "\n";
    }
  }
  json j = json::array();
  for (const KungRow& row : rows) {
    j.push_back(json{{"i", row.i}, {"gamma", row.gamma}, {"bound", row.bound}, {"holds", row.holds}});
  }
  emit(ctx, json{{"rows", j}}, text.str());
}

void cmd_access(const Ctx& ctx, const std::string& path) {
  const AccessStructure access = access_structure(read_code_file(path));
  std::ostringstream text;
  text << "Gamma_0:";
  if (access.gamma0.empty()) text << " (empty)";
  for (Mask a : access.gamma0) text << " " << mask_to_string(a);
  text << "\nconnected: " << (access.connected ? "yes" : "no") << "\n";
  json j{{"connected", access.connected}};
  j["gamma0"] = json::array();
  for (Mask a : access.gamma0) j["gamma0"].push_back(mask_to_json(a));
  emit(ctx, j, text.str());
}

void cmd_equiv(const Ctx& ctx, const std::string& path_a, const std::string& path_b,
               std::uint64_t budget) {
  const BlockCode a = read_code_file(path_a);
  const BlockCode b = read_code_file(path_b);
  const EquivalenceSearchResult result = are_equivalent(a, b, budget);
  std::ostringstream text;
  json j{{"exhausted", result.exhausted}};
  if (result.witness) {
    text << "equivalent: yes\nsigma:";
    for (int t : result.witness->sigma) text << " " << t;
    text << "\n";
    for (std::size_t i = 0; i < result.witness->tau.size(); ++i) {
      text << "tau_" << (i + 1) << ":";
      for (int v : result.witness->tau[i]) text << " " << v;
      text << "\n";
    }
    j["equivalent"] = true;
    j["sigma"] = result.witness->sigma;
    j["tau"] = result.witness->tau;
  } else {
    text << (result.exhausted ? "equivalent: no (search exhausted)\n"
                              : "equivalent: not found (budget exceeded, inconclusive)\n");
    j["equivalent"] = result.exhausted ? json(false) : json(nullptr);
  }
  emit(ctx, j, text.str());
}

void cmd_trellis_build(const Ctx& ctx, const std::string& path, const std::string& out_path) {
  const BlockCode code = read_code_file(path);
  const Trellis trellis = build_min_trellis(code);
  // the construction accepts any block code; the profile bound needs the matroid
  std::vector<VertexBoundRow> bounds;
  try {
    bounds = vertex_bound_report(code, trellis);
  } catch (const NotAlmostAffine&) {
  }
  std::ostringstream text;
  text << "layer sizes:";
  for (std::size_t s : trellis.layer_sizes()) text << " " << s;
  text << "\n";
  if (!bounds.empty()) {
    text << "layer  vertices  lower_bound  holds\n";
    for (const VertexBoundRow& row : bounds) {
      std::size_t required = 1;
      for (int e = 0; e < row.bound_exponent; ++e) required *= code.q();
      text << std::left << std::setw(7) << row.layer << std::setw(10) << row.vertices
           << std::setw(13) << required << (row.holds ? "yes" : "NO") << "\n";
    }
  } else {
    text << "(not almost affine: no profile bound)\n";
  }
  text << trellis.to_json() << "\n";
  if (ctx.as_json) {
    json j = json::parse(trellis.to_json());
    j["layer_sizes"] = trellis.layer_sizes();
    j["bounds"] = json::array();
    for (const VertexBoundRow& row : bounds) {
      j["bounds"].push_back(json{{"layer", row.layer},
                                 {"vertices", row.vertices},
                                 {"bound_exponent", row.bound_exponent},
                                 {"holds", row.holds}});
    }
    emit_file(ctx, j.dump() + "\n", out_path);
    return;
  }
  emit_file(ctx, text.str(), out_path);
}

void cmd_trellis_decode(const Ctx& ctx, const std::string& path, const std::string& word_text) {
  const BlockCode code = read_code_file(path);
  const Trellis trellis = build_min_trellis(code);
  const Word received = parse_word(word_text, code.q(), code.length());
  const DecodeResult result = viterbi_decode(trellis, received);
  std::ostringstream text;
  text << render_words(result.words, code.alphabet()) << " (distance " << result.distance << ")\n";
  emit(ctx, json{{"survivors", result.words}, {"distance", result.distance}}, text.str());
}

void cmd_wiretap_encode(const Ctx& ctx, const std::string& path, const std::string& message_text,
                        std::uint64_t seed) {
  const WiretapScheme scheme = WiretapScheme::with_addition(read_code_file(path));
  Word message;
  if (scheme.message_positions() > 0) {
    message = parse_word(message_text, scheme.code().q(), scheme.message_positions());
  }
  const Word sent = scheme.encode(message, seed);
  emit(ctx, json{{"codeword", sent}}, render_word(sent, scheme.code().alphabet()) + "\n");
}

void cmd_wiretap_decode(const Ctx& ctx, const std::string& path, const std::string& word_text) {
  const WiretapScheme scheme = WiretapScheme::with_addition(read_code_file(path));
  const Word received = parse_word(word_text, scheme.code().q(), scheme.code().length());
  const Word message = scheme.decode(received);
  const std::string rendered =
      message.empty() ? "(empty)" : render_word(message, scheme.code().alphabet());
  emit(ctx, json{{"message", message}}, rendered + "\n");
}

void cmd_wiretap_profile(const Ctx& ctx, const std::string& path) {
  const WiretapScheme scheme = WiretapScheme::with_addition(read_code_file(path));
  const auto rows = scheme.equivocation_profile();
  std::ostringstream text;
  text << "permutation:";
  for (int p : scheme.permutation()) text << " " << p;
  text << "\nmu  E   Delta  bracket\n";
  for (const auto& row : rows) {
    std::ostringstream bracket;
    bracket << row.lower_weight << " <= mu < " << row.upper_weight;
    text << std::left << std::setw(4) << row.mu << std::setw(4) << row.equivocation << std::setw(7)
         << row.delta << std::setw(15) << bracket.str() << (row.bracket_holds ? "ok" : "VIOLATED")
         << "\n";
  }
  json j{{"permutation", scheme.permutation()}};
  j["rows"] = json::array();
  for (const auto& row : rows) {
    j["rows"].push_back(json{{"mu", row.mu},
                             {"E", row.equivocation},
                             {"delta", row.delta},
                             {"lower", row.lower_weight},
                             {"upper", row.upper_weight},
                             {"holds", row.bracket_holds}});
  }
  emit(ctx, j, text.str());
}

void emit_code(const Ctx& ctx, const BlockCode& code, const std::string& out_path) {
  emit_file(ctx, ctx.as_json ? code_to_json(code) + "\n" : code_to_text(code), out_path);
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact toolkit for almost affine codes and their matroids"};
  app.require_subcommand(1);
  Ctx ctx;
  ctx.out = &out;
  app.add_flag("--json", ctx.as_json, "emit reports as JSON");

  std::function<void()> action;

  std::string path, path_b, word_text, message_text, out_path, matrix_text, poly_text;
  std::uint64_t budget = kDefaultEnumerationBudget;
  std::uint64_t seed = 0;
  int dim = 1, q = 2, gamma = 1, k = 1, r = 1, rank = 0, n = 1;

  auto* validate = app.add_subcommand("validate", "check a code file for almost affinity");
  validate->add_option("codefile", path)->required();
  validate->callback([&] { action = [&] { cmd_validate(ctx, path); }; });

  auto* matroid = app.add_subcommand("matroid", "associated matroid as JSON");
  matroid->add_option("codefile", path)->required();
  matroid->callback([&] { action = [&] { cmd_matroid(ctx, path); }; });

  auto* weights = app.add_subcommand("weights", "generalized Hamming weights, three routes");
  weights->add_option("codefile", path)->required();
  weights->add_option("--budget", budget, "enumeration budget for verification routes");
  weights->callback([&] { action = [&] { cmd_weights(ctx, path, budget); }; });

  auto* dlp_cmd = app.add_subcommand("dlp", "dimension/length profile");
  dlp_cmd->add_option("codefile", path)->required();
  dlp_cmd->callback([&] { action = [&] { cmd_dlp(ctx, path); }; });

  auto* subcodes = app.add_subcommand("subcodes", "enumerate almost affine subcodes");
  subcodes->add_option("codefile", path)->required();
  subcodes->add_option("--dim", dim, "subcode dimension")->required();
  subcodes->add_option("--budget", budget, "enumeration budget");
  subcodes->callback([&] { action = [&] { cmd_subcodes(ctx, path, dim, budget); }; });

  auto* kung = app.add_subcommand("kung", "critical exponents against the covering bound");
  kung->add_option("codefile", path)->required();
  kung->callback([&] { action = [&] { cmd_kung(ctx, path); }; });

  auto* access = app.add_subcommand("access", "secret-sharing access structure");
  access->add_option("codefile", path)->required();
  access->callback([&] { action = [&] { cmd_access(ctx, path); }; });

  auto* equiv = app.add_subcommand("equiv", "search for a code equivalence");
  equiv->add_option("codefile", path)->required();
  equiv->add_option("codefile2", path_b)->required();
  equiv->add_option("--budget", budget, "search budget");
  equiv->callback([&] { action = [&] { cmd_equiv(ctx, path, path_b, budget); }; });

  auto* trellis = app.add_subcommand("trellis", "minimal trellis construction and decoding");
  trellis->require_subcommand(1);
  auto* tbuild = trellis->add_subcommand("build", "build the minimal trellis");
  tbuild->add_option("codefile", path)->required();
  tbuild->add_option("-o,--out", out_path, "write the report to a file");
  tbuild->callback([&] { action = [&] { cmd_trellis_build(ctx, path, out_path); }; });
  auto* tdecode = trellis->add_subcommand("decode", "Viterbi nearest-codeword decoding");
  tdecode->add_option("codefile", path)->required();
  tdecode->add_option("word", word_text)->required();
  tdecode->callback([&] { action = [&] { cmd_trellis_decode(ctx, path, word_text); }; });

  auto* wiretap = app.add_subcommand("wiretap", "coset scheme over a code");
  wiretap->require_subcommand(1);
  auto* wencode = wiretap->add_subcommand("encode", "send a message as a random coset member");
  wencode->add_option("codefile", path)->required();
  wencode->add_option("message", message_text);
  wencode->add_option("--seed", seed, "generator seed")->required();
  wencode->callback([&] { action = [&] { cmd_wiretap_encode(ctx, path, message_text, seed); }; });
  auto* wdecode = wiretap->add_subcommand("decode", "recover the message of a sent word");
  wdecode->add_option("codefile", path)->required();
  wdecode->add_option("word", word_text)->required();
  wdecode->callback([&] { action = [&] { cmd_wiretap_decode(ctx, path, word_text); }; });
  auto* wprofile = wiretap->add_subcommand("profile", "equivocation profile");
  wprofile->add_option("codefile", path)->required();
  wprofile->callback([&] { action = [&] { cmd_wiretap_profile(ctx, path); }; });

  auto* construct = app.add_subcommand("construct", "build codes from the paper's families");
  construct->require_subcommand(1);
  auto* cprime = construct->add_subcommand("cprime", "the 16-word running example");
  cprime->add_option("-o,--out", out_path);
  cprime->callback([&] { action = [&] { emit_code(ctx, running_example_cprime(), out_path); }; });
  auto* linear = construct->add_subcommand("linear", "row space of a generator matrix");
  linear->add_option("--q", q)->required();
  linear->add_option("--matrix", matrix_text, "rows separated by ';'")->required();
  linear->add_option("--poly", poly_text, "irreducible modulus coefficients for q = p^m");
  linear->add_option("-o,--out", out_path);
  linear->callback([&] {
    action = [&] { emit_code(ctx, linear_code(parse_matrix(make_field(q, poly_text), matrix_text)), out_path); };
  });
  auto* rs = construct->add_subcommand("rs", "Reed-Solomon code");
  rs->add_option("--q", q)->required();
  rs->add_option("--gamma", gamma)->required();
  rs->add_option("--k", k)->required();
  rs->add_option("--poly", poly_text);
  rs->add_option("-o,--out", out_path);
  rs->callback([&] {
    action = [&] { emit_code(ctx, linear_code(reed_solomon(make_field(q, poly_text), gamma, k)), out_path); };
  });
  auto* frs = construct->add_subcommand("frs", "folded Reed-Solomon code");
  frs->add_option("--q", q)->required();
  frs->add_option("--gamma", gamma)->required();
  frs->add_option("--r", r)->required();
  frs->add_option("--k", k)->required();
  frs->add_option("--poly", poly_text);
  frs->add_option("-o,--out", out_path);
  frs->callback([&] {
    action = [&] { emit_code(ctx, folded_rs(make_field(q, poly_text), gamma, r, k).code(), out_path); };
  });
  auto* inter = construct->add_subcommand("interleave", "interleaved multilinear code");
  inter->add_option("--q", q)->required();
  inter->add_option("--matrix", matrix_text)->required();
  inter->add_option("--r", r)->required();
  inter->add_option("--poly", poly_text);
  inter->add_option("-o,--out", out_path);
  inter->callback([&] {
    action = [&] {
      emit_code(ctx, interleave(parse_matrix(make_field(q, poly_text), matrix_text), r).code(), out_path);
    };
  });
  auto* uniform = construct->add_subcommand("uniform", "uniform matroid as JSON");
  uniform->add_option("--rank", rank)->required();
  uniform->add_option("--n", n)->required();
  uniform->add_option("-o,--out", out_path);
  uniform->callback([&] {
    action = [&] { emit_file(ctx, Matroid::uniform(rank, n).to_json() + "\n", out_path); };
  });

  auto* dual = app.add_subcommand("dual", "dual of a multilinear code");
  bool multilinear_flag = false;
  dual->add_flag("--multilinear", multilinear_flag, "treat the code as F_q-linear in r-blocks")
      ->required();
  dual->add_option("codefile", path)->required();
  dual->add_option("--q", q, "base field size")->required();
  dual->add_option("--r", r, "block size")->required();
  dual->add_option("--poly", poly_text);
  dual->add_option("-o,--out", out_path);
  dual->callback([&] {
    action = [&] {
      emit_code(ctx, multilinear_dual(read_code_file(path), make_field(q, poly_text), r), out_path);
    };
  });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  try {
    action();
  } catch (const ParseError& e) {
    if (e.line > 0) {
      err << "error: line " << e.line << ": " << e.what() << "\n";
    } else {
      err << "error: " << e.what() << "\n";
    }
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace aaco::cli
