#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hnn/bigint.hpp"

namespace hnn {

using IntVector = std::vector<BigInt>;

/// Square integer matrix, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  explicit IntegerMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntegerMatrix identity(std::size_t dim);
  /// Rows separated by ';', entries by ',', e.g. "2,1;1,1". Throws ParseError.
  static IntegerMatrix parse(std::string_view text);

  std::size_t dim() const noexcept { return dim_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t dim_ = 0;
  std::vector<BigInt> entries_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
IntVector operator*(const IntegerMatrix& a, const IntVector& v);
IntegerMatrix matrix_power(const IntegerMatrix& a, unsigned exponent);

/// Fraction-free (Bareiss) determinant.
BigInt determinant(const IntegerMatrix& a);

/// Rank over the rationals.
std::size_t rank(const IntegerMatrix& a);

/// A primitive nonzero integer vector in the kernel, or an empty vector when
/// the kernel is trivial.
IntVector integer_kernel_vector(const IntegerMatrix& a);

/// Lower-triangular basis B = A U of the column lattice of a nonsingular A,
/// with U unimodular and positive diagonal. Residues of v modulo the lattice
/// are reduced coordinate by coordinate into [0, B(i,i)).
struct LatticeBasis {
  IntegerMatrix basis;
  IntegerMatrix unimodular;
};
LatticeBasis lower_hermite_basis(const IntegerMatrix& a);

/// Characteristic polynomial det(xI - A), coefficients lowest degree first.
std::vector<BigInt> characteristic_polynomial(const IntegerMatrix& a);

}  // namespace hnn
