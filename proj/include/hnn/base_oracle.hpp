#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "hnn/bigint.hpp"

namespace hnn {

/// An element of the base group, stored as the oracle's canonical coordinate
/// encoding. Two elements are equal iff their encodings are equal.
class BaseElement {
 public:
  using Coords = boost::container::small_vector<BigInt, 2>;

  BaseElement() = default;
  explicit BaseElement(Coords coords) : coords_(std::move(coords)) {}
  BaseElement(std::initializer_list<BigInt> coords) : coords_(coords) {}

  const Coords& coords() const noexcept { return coords_; }
  Coords& coords() noexcept { return coords_; }
  const BigInt& operator[](std::size_t i) const { return coords_[i]; }
  std::size_t size() const noexcept { return coords_.size(); }

  friend bool operator==(const BaseElement&, const BaseElement&) = default;

 private:
  Coords coords_;
};

/// The two associated subgroups H (domain of phi) and K (image of phi).
enum class Subgroup { H, K };

/// x = sub * rep (left split) or x = rep * sub (right split).
struct Split {
  BaseElement sub;
  BaseElement rep;
};

/// Everything the word calculus needs to know about HNN(Lambda, H, K, phi).
///
/// Implementations must satisfy:
///   - split_left(S, x) = {s, r}: s in S, s*r == x, r canonical for the right
///     coset S*x, and r is the identity iff x in S. split_right likewise for
///     the left coset x*S.
///   - phi_inv(phi(x)) == x on H and phi(phi_inv(y)) == y on K.
///   - Elements are canonically encoded, so eq is encoding equality unless
///     overridden.
class BaseOracle {
 public:
  virtual ~BaseOracle() = default;

  virtual BaseElement identity() const = 0;
  virtual BaseElement mul(const BaseElement& x, const BaseElement& y) const = 0;
  virtual BaseElement inv(const BaseElement& x) const = 0;
  virtual bool eq(const BaseElement& x, const BaseElement& y) const { return x == y; }
  bool is_identity(const BaseElement& x) const { return eq(x, identity()); }

  /// x^e by square-and-multiply; overridden where a closed form exists.
  virtual BaseElement pow(const BaseElement& x, const BigInt& e) const;

  virtual bool contains(Subgroup s, const BaseElement& x) const = 0;
  bool in_H(const BaseElement& x) const { return contains(Subgroup::H, x); }
  bool in_K(const BaseElement& x) const { return contains(Subgroup::K, x); }

  /// Requires in_H(x); throws DomainError otherwise.
  virtual BaseElement phi(const BaseElement& x) const = 0;
  /// Requires in_K(y); throws DomainError otherwise.
  virtual BaseElement phi_inv(const BaseElement& y) const = 0;

  virtual Split split_left(Subgroup s, const BaseElement& x) const = 0;
  virtual Split split_right(Subgroup s, const BaseElement& x) const = 0;

  virtual bool is_central(const BaseElement& x) const = 0;

  /// Canonical representatives of Lambda/S in a fixed order, identity first,
  /// or nullopt when the index is infinite.
  virtual std::optional<std::vector<BaseElement>> left_transversal(Subgroup s) const = 0;

  /// Generators of Lambda (without inverses).
  virtual std::vector<BaseElement> generators() const = 0;

  /// Resolves a base letter such as "b" or "e2"; nullopt if unknown.
  virtual std::optional<BaseElement> letter(std::string_view name) const = 0;
  /// Names accepted for the stable letter. The first one is used for printing.
  virtual std::vector<std::string> stable_letter_names() const { return {"t"}; }

  /// Canonical serialization as a product of base letters; "1" for identity.
  virtual std::string format(const BaseElement& x) const = 0;

  /// Short descriptor of the group, e.g. "BS(2,3)".
  virtual std::string describe() const = 0;
};

}  // namespace hnn
