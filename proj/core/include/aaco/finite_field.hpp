#pragma once

#include <vector>

namespace aaco {

// GF(p^m) with elements encoded as integers 0..p^m-1: the base-p digits of
// the code are the polynomial coefficients, least significant first. For
// m > 1 the caller supplies the irreducible modulus; there is no built-in
// polynomial database.
class FiniteField {
 public:
  static FiniteField prime(int p);
  // `modulus` holds m+1 coefficients a_0..a_m of an irreducible polynomial
  // over GF(p); it is normalized to monic form.
  static FiniteField extension(int p, int m, std::vector<int> modulus);

  int characteristic() const { return p_; }
  int degree() const { return m_; }
  int size() const { return q_; }

  int add(int a, int b) const;
  int neg(int a) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const;
  int inv(int a) const;
  int div(int a, int b) const { return mul(a, inv(b)); }
  int pow(int a, long long e) const;

  // Multiplicative order equals q-1.
  bool is_generator(int g) const;

  // Exhaustive axiom check (associativity, distributivity, inverses);
  // guarded to q <= 256.
  void validate() const;

  bool operator==(const FiniteField& other) const = default;

 private:
  FiniteField(int p, int m, std::vector<int> modulus);

  std::vector<int> to_poly(int a) const;
  int from_poly(const std::vector<int>& poly) const;

  int p_, m_, q_;
  std::vector<int> modulus_;  // monic, degree m; empty for m == 1
};

// Rank computation and null space over a finite field; rows are vectors.
int matrix_rank(const FiniteField& field, std::vector<std::vector<int>> rows);
std::vector<std::vector<int>> matrix_nullspace(const FiniteField& field,
                                               const std::vector<std::vector<int>>& rows,
                                               int cols);

}  // namespace aaco
