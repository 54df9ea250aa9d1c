#pragma once

#include <utility>
#include <vector>

#include "aaco/block_code.hpp"
#include "aaco/finite_field.hpp"
#include "aaco/matroid.hpp"

namespace aaco {

// k x n matrix over a finite field whose row space is a linear code.
struct GeneratorMatrix {
  FiniteField field;
  std::vector<std::vector<int>> rows;

  int k() const { return static_cast<int>(rows.size()); }
  int n() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
  int rank() const { return matrix_rank(field, rows); }
};

// The 16-word running example over {0,1,2,3}: length 3, dimension 2,
// matroid U_{2,3}; not equivalent to any linear code.
BlockCode running_example_cprime();

// Row space of G as a block code over the alphabet 0..q-1.
BlockCode linear_code(const GeneratorMatrix& g);

// (M_C, M_parity): M_C counted from codeword punctures, M_parity from the
// column ranks of a computed parity-check matrix. The two routes are tied
// by M_C = dual(M_parity), which is asserted before returning.
std::pair<Matroid, Matroid> linear_code_matroids(const GeneratorMatrix& g);

// Vandermonde generator of the Reed-Solomon code of dimension k evaluated
// at the powers of a generator gamma: entry (i,j) = gamma^((i-1)j).
GeneratorMatrix reed_solomon(const FiniteField& field, int gamma, int k);

// An F_q-linear code over blocks of r field symbols, carried as a basis of
// the unfolded code in F_q^(r*block_length). Every puncture dimension is
// divisible by r (validated on construction).
class MultilinearCode {
 public:
  MultilinearCode(FiniteField field, int r, int block_length,
                  std::vector<std::vector<int>> generator_rows);

  const FiniteField& field() const { return field_; }
  int r() const { return r_; }
  int block_length() const { return n_; }
  int dimension() const { return static_cast<int>(generator_.size()) / r_; }
  const std::vector<std::vector<int>>& generator() const { return generator_; }

  // Words folded into blocks; the alphabet has q^r symbols encoded
  // little-endian: symbol = sum_t component_t * q^t.
  BlockCode code() const;

  // rank(X) = rk G_{X_r} / r, computed from submatrix ranks.
  Matroid matroid() const;

 private:
  FiniteField field_;
  int r_;
  int n_;  // block length
  std::vector<std::vector<int>> generator_;  // independent rows, length r*n
};

// Interleaves r message streams through G: the block-diagonal generator
// [D_{g_ij}] over F_q, yielding a multilinear code with G's matroid.
MultilinearCode interleave(const GeneratorMatrix& g, int r);

// r-folded Reed-Solomon code: length (q-1)/r over F_q^r, dimension k/r,
// matroid U_{k/r,(q-1)/r}. Requires r | q-1 and r | k.
MultilinearCode folded_rs(const FiniteField& field, int gamma, int r, int k);

// Orthogonal complement in F_q^(rn), regrouped into r-blocks. The dual has
// the dual matroid.
MultilinearCode multilinear_dual(const MultilinearCode& c);

// Same, reconstructing the F_q-linear structure from a folded block code.
// Throws NotMultilinear when the words do not form a suitable subspace.
BlockCode multilinear_dual(const BlockCode& code, const FiniteField& field, int r);

// Decode a folded block code back to an F_q^(rn) vector set; exposed for
// round-trip use by the dual construction and the CLI.
std::vector<int> unfold_word(const Word& w, int q, int r);
Word fold_word(const std::vector<int>& flat, int q, int r);

}  // namespace aaco
