#pragma once

#include <cstdint>
#include <memory>

#include "hnn/base_oracle.hpp"
#include "hnn/word.hpp"

namespace hnn {

/// Parameters of BS(m,n) = <a,b | a b^m a^-1 = b^n>.
struct BsParams {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t d = 0;   // gcd(|m|,|n|)
  std::int64_t m1 = 0;  // m / d
  std::int64_t n1 = 0;  // n / d

  /// Throws InvalidArgument unless m and n are nonzero.
  static BsParams make(std::int64_t m, std::int64_t n);
};

/// BS(m,n) as HNN(Z, nZ, mZ, phi) with phi(b^{nk}) = b^{mk}. The base element
/// b^z is encoded as the single coordinate z; the stable letter prints as "a",
/// so a^-1 b^n a = b^m.
class BsOracle final : public BaseOracle {
 public:
  explicit BsOracle(BsParams params) : params_(params) {}

  const BsParams& params() const noexcept { return params_; }

  static BaseElement b(BigInt z) { return BaseElement{std::move(z)}; }
  static const BigInt& exponent(const BaseElement& x) { return x[0]; }

  BaseElement identity() const override { return b(0); }
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
  std::vector<BaseElement> generators() const override { return {b(1)}; }
  std::optional<BaseElement> letter(std::string_view name) const override;
  std::vector<std::string> stable_letter_names() const override { return {"a", "t"}; }
  std::string format(const BaseElement& x) const override;
  std::string describe() const override;

 private:
  std::int64_t index(Subgroup s) const { return s == Subgroup::H ? params_.n : params_.m; }

  BsParams params_;
};

std::shared_ptr<const BsOracle> make_bs(std::int64_t m, std::int64_t n);

/// The positive generator g with Dom(phi^j) = gZ, i.e. |n1|^j * d. Requires j >= 1.
BigInt dom_phi_j_closed_form(const BsParams& params, unsigned j);

/// Word syntax over a (stable letter) and b.
HnnWord parse_bs_word(const BsOracle& oracle, std::string_view text);
std::string format_bs_word(const BsOracle& oracle, const HnnWord& w);

}  // namespace hnn
