#include "aaco/matroid.hpp"

#include <algorithm>
#include <climits>

#include <json.hpp>

#include "aaco/errors.hpp"

namespace aaco {

namespace {

void check_axioms(int n, const std::vector<std::uint8_t>& r) {
  const Mask all = full_mask(n);
  if (r[0] != 0) {
    throw AxiomViolation("R1", {0}, "rank of the empty set is " + std::to_string(r[0]) + ", expected 0");
  }
  for (Mask x = 0; x <= all; ++x) {
    for (int e = 1; e <= n; ++e) {
      if (contains(x, e)) continue;
      const Mask xe = with_element(x, e);
      if (r[xe] < r[x] || r[xe] > r[x] + 1) {
        throw AxiomViolation("R2", {x, xe},
                             "rank " + std::to_string(r[x]) + " of " + mask_to_string(x) +
                                 " vs rank " + std::to_string(r[xe]) + " of " + mask_to_string(xe));
      }
    }
  }
  for (Mask x = 0; x <= all; ++x) {
    for (int e = 1; e <= n; ++e) {
      if (contains(x, e) || r[with_element(x, e)] != r[x]) continue;
      for (int f = e + 1; f <= n; ++f) {
        if (contains(x, f) || r[with_element(x, f)] != r[x]) continue;
        const Mask xef = with_element(with_element(x, e), f);
        if (r[xef] != r[x]) {
          throw AxiomViolation("R3", {x, with_element(x, e), with_element(x, f)},
                               "adding " + std::to_string(e) + " or " + std::to_string(f) +
                                   " to " + mask_to_string(x) + " keeps rank " +
                                   std::to_string(r[x]) + " but adding both gives " +
                                   std::to_string(r[xef]));
        }
      }
    }
  }
}

void check_ground_size(int n) {
  if (n < 0) throw CapExceeded("ground-set size must be non-negative");
  if (n > ground_set_cap()) {
    throw CapExceeded("ground-set size " + std::to_string(n) + " exceeds cap " +
                      std::to_string(ground_set_cap()) + " (AACO_SUBSET_CAP overrides)");
  }
}

}  // namespace

Matroid Matroid::from_rank_table(int n, std::vector<std::uint8_t> ranks) {
  check_ground_size(n);
  if (ranks.size() != (std::size_t{1} << n)) {
    throw InvalidCode("rank table has " + std::to_string(ranks.size()) + " entries, expected 2^" +
                      std::to_string(n));
  }
  check_axioms(n, ranks);
  return Matroid(n, std::move(ranks));
}

void Matroid::validate() const { check_axioms(n_, ranks_); }

Matroid Matroid::uniform(int r, int n) {
  check_ground_size(n);
  if (r < 0 || r > n) throw IndexOutOfRange("uniform matroid needs 0 <= r <= n");
  std::vector<std::uint8_t> ranks(std::size_t{1} << n);
  for (Mask x = 0; x < ranks.size(); ++x) {
    ranks[x] = static_cast<std::uint8_t>(std::min(set_size(x), r));
  }
  return Matroid(n, std::move(ranks));
}

Matroid Matroid::dual() const {
  const Mask all = full_mask(n_);
  const int k = rank();
  std::vector<std::uint8_t> dual_ranks(ranks_.size());
  for (Mask x = 0; x < dual_ranks.size(); ++x) {
    dual_ranks[x] = static_cast<std::uint8_t>(set_size(x) + ranks_[all & ~x] - k);
  }
  return Matroid(n_, std::move(dual_ranks));
}

std::vector<Mask> Matroid::circuits() const {
  std::vector<Mask> out;
  const Mask all = full_mask(n_);
  for (Mask x = 1; x <= all; ++x) {
    if (independent(x)) continue;
    bool minimal = true;
    for (int e : elements(x)) {
      if (!independent(without_element(x, e))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

std::vector<Mask> Matroid::bases() const {
  std::vector<Mask> out;
  const Mask all = full_mask(n_);
  for (Mask x = 0; x <= all; ++x) {
    if (is_basis(x)) out.push_back(x);
  }
  return out;
}

Mask Matroid::circuit_through(Mask independent_set, int e) const {
  const Mask joined = with_element(independent_set, e);
  Mask circuit = 0;
  for (int x : elements(joined)) {
    if (ranks_[without_element(joined, x)] == ranks_[joined]) circuit = with_element(circuit, x);
  }
  return circuit;
}

Mask Matroid::fundamental_circuit(Mask basis, int e) const {
  if (!is_basis(basis)) throw NotABasis(mask_to_string(basis) + " is not a basis");
  if (e < 1 || e > n_) throw IndexOutOfRange("element " + std::to_string(e) + " outside ground set");
  if (contains(basis, e)) {
    throw ElementInBasis("element " + std::to_string(e) + " lies in the basis " + mask_to_string(basis));
  }
  return circuit_through(basis, e);
}

Mask Matroid::basis_exchange_set(Mask basis, int x) const {
  return without_element(fundamental_circuit(basis, x), x);
}

WeightHierarchy Matroid::hamming_weights() const {
  const int count = n_ - rank();
  WeightHierarchy weights(count, INT_MAX);
  const Mask all = full_mask(n_);
  for (Mask x = 1; x <= all; ++x) {
    const int i = nullity(x);
    if (i >= 1) weights[i - 1] = std::min(weights[i - 1], set_size(x));
  }
  return weights;
}

bool Matroid::wei_duality_check() const {
  std::vector<int> hits(n_ + 1, 0);
  for (int d : hamming_weights()) hits[d]++;
  for (int d : dual().hamming_weights()) hits[n_ + 1 - d]++;
  for (int i = 1; i <= n_; ++i) {
    if (hits[i] != 1) return false;
  }
  return true;
}

std::pair<int, std::vector<Mask>> Matroid::max_nonredundant_circuits(Mask x) const {
  Mask independent_part = 0;
  for (int e : elements(x)) {
    if (ranks_[with_element(independent_part, e)] > ranks_[independent_part]) {
      independent_part = with_element(independent_part, e);
    }
  }
  // every leftover element closes one fundamental circuit; each such circuit
  // owns its leftover element, so the family is non-redundant
  std::vector<Mask> witness;
  for (int e : elements(x & ~independent_part)) {
    witness.push_back(circuit_through(independent_part, e));
  }
  return {nullity(x), std::move(witness)};
}

bool Matroid::is_connected() const {
  if (n_ < 2) return true;
  const std::vector<Mask> all_circuits = circuits();
  for (int a = 1; a <= n_; ++a) {
    for (int b = a + 1; b <= n_; ++b) {
      const Mask pair = with_element(singleton(a), b);
      bool covered = false;
      for (Mask c : all_circuits) {
        if ((c & pair) == pair) {
          covered = true;
          break;
        }
      }
      if (!covered) return false;
    }
  }
  return true;
}

std::string Matroid::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  j["rank"] = std::vector<int>(ranks_.begin(), ranks_.end());
  return j.dump();
}

Matroid Matroid::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("bad matroid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("rank")) {
    throw ParseError(0, "matroid JSON needs fields \"n\" and \"rank\"");
  }
  const int n = j["n"].get<int>();
  check_ground_size(n);
  std::vector<std::uint8_t> ranks;
  for (const auto& v : j["rank"]) {
    const int r = v.get<int>();
    if (r < 0 || r > n) throw ParseError(0, "rank entry " + std::to_string(r) + " out of range");
    ranks.push_back(static_cast<std::uint8_t>(r));
  }
  return from_rank_table(n, std::move(ranks));
}

}  // namespace aaco
