#pragma once

#include <memory>
#include <optional>

#include "hnn/base_oracle.hpp"
#include "hnn/integer_matrix.hpp"

namespace hnn {

/// The ascending extension HNN(Z^d, Z^d, M Z^d, v -> M v) for a nonsingular
/// integer matrix M. Elements of Z^d print as products of the letters e1..ed.
class ZdOracle final : public BaseOracle {
 public:
  /// Throws InvalidArgument when det(M) == 0.
  explicit ZdOracle(IntegerMatrix matrix);

  const IntegerMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }

  static BaseElement vec(const IntVector& v);
  static IntVector to_vector(const BaseElement& x);

  /// Representative of v modulo M Z^d, coordinates in [0, B(i,i)).
  IntVector residue(const IntVector& v) const;

  BaseElement identity() const override;
  BaseElement mul(const BaseElement& x, const BaseElement& y) const override;
  BaseElement inv(const BaseElement& x) const override;
  BaseElement pow(const BaseElement& x, const BigInt& e) const override;
  bool contains(Subgroup s, const BaseElement& x) const override;
  BaseElement phi(const BaseElement& x) const override;
  BaseElement phi_inv(const BaseElement& y) const override;
  Split split_left(Subgroup s, const BaseElement& x) const override;
  Split split_right(Subgroup s, const BaseElement& x) const override { return split_left(s, x); }
  bool is_central(const BaseElement&) const override { return true; }
  std::optional<std::vector<BaseElement>> left_transversal(Subgroup s) const override;
  std::vector<BaseElement> generators() const override;
  std::optional<BaseElement> letter(std::string_view name) const override;
  std::string format(const BaseElement& x) const override;
  std::string describe() const override;

 private:
  IntegerMatrix matrix_;
  LatticeBasis lattice_;
};

std::shared_ptr<const ZdOracle> make_zd(IntegerMatrix matrix);

/// Smallest k >= 1 such that the characteristic polynomial of M shares a
/// factor with the k-th cyclotomic polynomial, i.e. M has a primitive k-th
/// root of unity as eigenvalue.
std::optional<unsigned> has_root_of_unity_eigenvalue(const IntegerMatrix& m);

/// Every k with totient(k) <= d is at most this bound.
unsigned root_of_unity_search_bound(std::size_t d);

/// lcm of all k with totient(k) <= d: M has a root-of-unity eigenvalue iff
/// M^j - I is singular for some j dividing it.
unsigned long long root_of_unity_period_bound(std::size_t d);

/// Rank of the integer kernel of M^j - I. Requires j >= 1.
std::size_t fixed_lattice_rank(const IntegerMatrix& m, unsigned j);

}  // namespace hnn
