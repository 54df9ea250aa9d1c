#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "aaco/subsets.hpp"

namespace aaco {

// Generalized Hamming weights d_1 < d_2 < ... of a matroid, d_i being the
// least cardinality of a subset of nullity i. Empty when the matroid has
// full rank.
using WeightHierarchy = std::vector<int>;

// A matroid on {1..n} stored as its full rank table (2^n entries, indexed
// by mask). Immutable after construction; construction validates the rank
// axioms, so every reachable Matroid is a real matroid.
class Matroid {
 public:
  // Validates the table against (R1)-(R3) and throws AxiomViolation with
  // the first failing instance in canonical order.
  static Matroid from_rank_table(int n, std::vector<std::uint8_t> ranks);

  // Uniform matroid U_{r,n}: rank(X) = min(|X|, r).
  static Matroid uniform(int r, int n);

  // Rank-n free matroid, rank(X) = |X|.
  static Matroid free(int n) { return uniform(n, n); }

  int ground_size() const { return n_; }
  Mask ground_set() const { return full_mask(n_); }
  int rank() const { return ranks_[full_mask(n_)]; }

  // Re-runs the axiom check, throwing AxiomViolation with the first failing
  // instance in canonical order. from_rank_table already calls this; the
  // formula constructors (uniform, dual) are covered by tests through here.
  void validate() const;

  int rank(Mask x) const { return ranks_[x]; }
  int nullity(Mask x) const { return set_size(x) - ranks_[x]; }
  bool independent(Mask x) const { return ranks_[x] == set_size(x); }
  bool is_basis(Mask x) const { return independent(x) && ranks_[x] == rank(); }

  Matroid dual() const;

  // Inclusion-minimal dependent sets, in canonical mask order.
  std::vector<Mask> circuits() const;
  std::vector<Mask> bases() const;

  // The unique circuit inside B + {e} for a basis B and e outside B.
  Mask fundamental_circuit(Mask basis, int e) const;

  // {y in B : B - {y} + {x} is a basis}; equals fundamental_circuit(B,x) - {x}.
  Mask basis_exchange_set(Mask basis, int x) const;

  // d_i = min{|X| : nullity(X) = i} for i = 1..n-rank; empty at full rank.
  WeightHierarchy hamming_weights() const;

  // Wei duality: {d_i(M)} and {n+1-d_j(M*)} partition {1..n}.
  bool wei_duality_check() const;

  // Nullity of X together with a witness family of that many circuits
  // inside X whose union loses an element when any member is dropped.
  std::pair<int, std::vector<Mask>> max_nonredundant_circuits(Mask x) const;

  // Every 2-subset of the ground set lies in some circuit.
  bool is_connected() const;

  const std::vector<std::uint8_t>& rank_table() const { return ranks_; }

  bool operator==(const Matroid& other) const = default;

  // {"n": int, "rank": [int; 2^n]} with index = mask value.
  std::string to_json() const;
  static Matroid from_json(const std::string& text);

 private:
  Matroid(int n, std::vector<std::uint8_t> ranks) : n_(n), ranks_(std::move(ranks)) {}

  // Unique circuit inside independent + {e} when that union is dependent.
  Mask circuit_through(Mask independent_set, int e) const;

  int n_;
  std::vector<std::uint8_t> ranks_;
};

}  // namespace aaco
