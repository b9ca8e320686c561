#include "hnn/bs_base.hpp"

#include <numeric>

#include "hnn/errors.hpp"

namespace hnn {

BsParams BsParams::make(std::int64_t m, std::int64_t n) {
  if (m == 0 || n == 0) throw InvalidArgument("BS(m,n) requires nonzero m and n");
  BsParams p;
  p.m = m;
  p.n = n;
  p.d = std::gcd(m, n);
  p.m1 = m / p.d;
  p.n1 = n / p.d;
  return p;
}

BaseElement BsOracle::mul(const BaseElement& x, const BaseElement& y) const {
  return b(exponent(x) + exponent(y));
}

BaseElement BsOracle::inv(const BaseElement& x) const { return b(-exponent(x)); }

BaseElement BsOracle::pow(const BaseElement& x, const BigInt& e) const { return b(exponent(x) * e); }

bool BsOracle::contains(Subgroup s, const BaseElement& x) const {
  return exponent(x) % index(s) == 0;
}

BaseElement BsOracle::phi(const BaseElement& x) const {
  if (!in_H(x)) throw DomainError("phi: " + format(x) + " is not in H");
  return b(exponent(x) / params_.n * params_.m);
}

BaseElement BsOracle::phi_inv(const BaseElement& y) const {
  if (!in_K(y)) throw DomainError("phi_inv: " + format(y) + " is not in K");
  return b(exponent(y) / params_.m * params_.n);
}

Split BsOracle::split_left(Subgroup s, const BaseElement& x) const {
  BigInt r = floor_mod(exponent(x), index(s));
  BigInt sub = exponent(x) - r;
  return Split{b(std::move(sub)), b(std::move(r))};
}

std::optional<std::vector<BaseElement>> BsOracle::left_transversal(Subgroup s) const {
  const std::int64_t size = index(s) < 0 ? -index(s) : index(s);
  std::vector<BaseElement> reps;
  reps.reserve(static_cast<std::size_t>(size));
  for (std::int64_t r = 0; r < size; ++r) reps.push_back(b(r));
  return reps;
}

std::optional<BaseElement> BsOracle::letter(std::string_view name) const {
  if (name == "b") return b(1);
  return std::nullopt;
}

std::string BsOracle::format(const BaseElement& x) const {
  const BigInt& z = exponent(x);
  if (z == 0) return "1";
  if (z == 1) return "b";
  return "b^" + z.str();
}

std::string BsOracle::describe() const {
  return "BS(" + std::to_string(params_.m) + "," + std::to_string(params_.n) + ")";
}

std::shared_ptr<const BsOracle> make_bs(std::int64_t m, std::int64_t n) {
  return std::make_shared<const BsOracle>(BsParams::make(m, n));
}

BigInt dom_phi_j_closed_form(const BsParams& params, unsigned j) {
  if (j == 0) throw InvalidArgument("dom_phi_j_closed_form requires j >= 1");
  const BigInt n1 = params.n1 < 0 ? -params.n1 : params.n1;
  return pow(n1, j) * params.d;
}

HnnWord parse_bs_word(const BsOracle& oracle, std::string_view text) { return parse_word(oracle, text); }

std::string format_bs_word(const BsOracle& oracle, const HnnWord& w) { return format_word(oracle, w); }

}  // namespace hnn
