#include "aaco/finite_field.hpp"

#include <string>

#include "aaco/errors.hpp"

namespace aaco {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

int mod(int a, int p) { return ((a % p) + p) % p; }

// polynomial arithmetic over GF(p), little-endian coefficients
std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
  std::vector<int> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = mod(out[i + j] + a[i] * b[j], p);
  }
  return out;
}

void poly_trim(std::vector<int>& a) {
  while (a.size() > 1 && a.back() == 0) a.pop_back();
}

// remainder of a by monic modulus
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& modulus, int p) {
  const int deg_m = static_cast<int>(modulus.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= deg_m; --i) {
    const int factor = a[i];
    if (factor == 0) continue;
    for (int j = 0; j <= deg_m; ++j) {
      a[i - deg_m + j] = mod(a[i - deg_m + j] - factor * modulus[j], p);
    }
  }
  a.resize(deg_m > 0 ? deg_m : 1);
  return a;
}

bool poly_irreducible(const std::vector<int>& modulus, int p) {
  const int deg = static_cast<int>(modulus.size()) - 1;
  // trial division by every monic polynomial of degree 1..deg/2
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
      std::vector<int> divisor(d + 1, 0);
      long long rest = idx;
      for (int i = 0; i < d; ++i) {
        divisor[i] = static_cast<int>(rest % p);
        rest /= p;
      }
      divisor[d] = 1;
      std::vector<int> rem = poly_rem(modulus, divisor, p);
      poly_trim(rem);
      if (rem.size() == 1 && rem[0] == 0) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(int p, int m, std::vector<int> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
  q_ = 1;
  for (int i = 0; i < m_; ++i) q_ *= p_;
}

FiniteField FiniteField::prime(int p) {
  if (!is_prime(p)) throw InvalidCode("field characteristic " + std::to_string(p) + " is not prime");
  return FiniteField(p, 1, {});
}

FiniteField FiniteField::extension(int p, int m, std::vector<int> modulus) {
  if (!is_prime(p)) throw InvalidCode("field characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw InvalidCode("extension degree must be at least 1");
  if (m == 1) return prime(p);
  if (static_cast<int>(modulus.size()) != m + 1) {
    throw InvalidCode("modulus needs " + std::to_string(m + 1) + " coefficients");
  }
  for (int& c : modulus) c = mod(c, p);
  if (modulus.back() == 0) throw InvalidCode("modulus must have degree m");
  if (modulus.back() != 1) {
    // normalize to monic
    FiniteField base = prime(p);
    const int scale = base.inv(modulus.back());
    for (int& c : modulus) c = mod(c * scale, p);
  }
  if (!poly_irreducible(modulus, p)) throw InvalidCode("modulus polynomial is reducible");
  return FiniteField(p, m, std::move(modulus));
}

std::vector<int> FiniteField::to_poly(int a) const {
  std::vector<int> out(m_, 0);
  for (int i = 0; i < m_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

int FiniteField::from_poly(const std::vector<int>& poly) const {
  int out = 0;
  for (int i = m_ - 1; i >= 0; --i) out = out * p_ + (i < static_cast<int>(poly.size()) ? poly[i] : 0);
  return out;
}

int FiniteField::add(int a, int b) const {
  if (m_ == 1) return mod(a + b, p_);
  const std::vector<int> pa = to_poly(a), pb = to_poly(b);
  std::vector<int> out(m_);
  for (int i = 0; i < m_; ++i) out[i] = mod(pa[i] + pb[i], p_);
  return from_poly(out);
}

int FiniteField::neg(int a) const {
  if (m_ == 1) return mod(-a, p_);
  std::vector<int> pa = to_poly(a);
  for (int& c : pa) c = mod(-c, p_);
  return from_poly(pa);
}

int FiniteField::mul(int a, int b) const {
  if (m_ == 1) return mod(a * b, p_);
  std::vector<int> prod = poly_rem(poly_mul(to_poly(a), to_poly(b), p_), modulus_, p_);
  return from_poly(prod);
}

int FiniteField::pow(int a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  int out = 1;
  int base = a;
  while (e > 0) {
    if (e & 1) out = mul(out, base);
    base = mul(base, base);
    e >>= 1;
  }
  return out;
}

int FiniteField::inv(int a) const {
  if (a == 0) throw Error("division by zero in GF(" + std::to_string(q_) + ")");
  return pow(a, q_ - 2);
}

bool FiniteField::is_generator(int g) const {
  if (g <= 0 || g >= q_) return false;
  int value = g;
  for (int order = 1; order < q_ - 1; ++order) {
    if (value == 1) return false;
    value = mul(value, g);
  }
  return value == 1;
}

void FiniteField::validate() const {
  if (q_ > 256) throw CapExceeded("exhaustive field validation is limited to q <= 256");
  for (int a = 0; a < q_; ++a) {
    if (add(a, 0) != a || mul(a, 1) != a) throw Error("identity axiom fails");
    if (add(a, neg(a)) != 0) throw Error("additive inverse fails");
    if (a != 0 && mul(a, inv(a)) != 1) throw Error("multiplicative inverse fails");
  }
  for (int a = 0; a < q_; ++a) {
    for (int b = 0; b < q_; ++b) {
      if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) throw Error("commutativity fails");
      for (int c = 0; c < q_; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) throw Error("additive associativity fails");
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw Error("multiplicative associativity fails");
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) throw Error("distributivity fails");
      }
    }
  }
}

int matrix_rank(const FiniteField& field, std::vector<std::vector<int>> rows) {
  const int nrows = static_cast<int>(rows.size());
  if (nrows == 0) return 0;
  const int ncols = static_cast<int>(rows[0].size());
  int rank = 0;
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    int pivot = -1;
    for (int r = rank; r < nrows; ++r) {
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    const int scale = field.inv(rows[rank][col]);
    for (int c = col; c < ncols; ++c) rows[rank][c] = field.mul(rows[rank][c], scale);
    for (int r = 0; r < nrows; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const int factor = rows[r][col];
      for (int c = col; c < ncols; ++c) {
        rows[r][c] = field.sub(rows[r][c], field.mul(factor, rows[rank][c]));
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<int>> matrix_nullspace(const FiniteField& field,
                                               const std::vector<std::vector<int>>& rows,
                                               int cols) {
  std::vector<std::vector<int>> reduced = rows;
  std::vector<int> pivot_col;
  int rank = 0;
  const int nrows = static_cast<int>(reduced.size());
  for (int col = 0; col < cols && rank < nrows; ++col) {
    int pivot = -1;
    for (int r = rank; r < nrows; ++r) {
      if (reduced[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(reduced[rank], reduced[pivot]);
    const int scale = field.inv(reduced[rank][col]);
    for (int c = 0; c < cols; ++c) reduced[rank][c] = field.mul(reduced[rank][c], scale);
    for (int r = 0; r < nrows; ++r) {
      if (r == rank || reduced[r][col] == 0) continue;
      const int factor = reduced[r][col];
      for (int c = 0; c < cols; ++c) {
        reduced[r][c] = field.sub(reduced[r][c], field.mul(factor, reduced[rank][c]));
      }
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<int>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<int> vec(cols, 0);
    vec[free] = 1;
    for (int r = 0; r < rank; ++r) vec[pivot_col[r]] = field.neg(reduced[r][free]);
    basis.push_back(std::move(vec));
  }
  return basis;
}

}  // namespace aaco
