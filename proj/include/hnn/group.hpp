#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hnn/bs_base.hpp"
#include "hnn/word.hpp"
#include "hnn/zd_base.hpp"

namespace hnn {

/// A concrete HNN extension: BS(m,n) or Z^d extended by a matrix.
class Group {
 public:
  static Group bs(std::int64_t m, std::int64_t n);
  static Group zd(IntegerMatrix matrix);

  const BaseOracle& oracle() const noexcept { return *oracle_; }
  bool is_bs() const noexcept { return std::holds_alternative<BsParams>(shape_); }
  /// Throws InvalidArgument in zd mode.
  const BsParams& bs_params() const;
  /// Throws InvalidArgument in bs mode.
  const IntegerMatrix& matrix() const;

  std::string describe() const { return oracle_->describe(); }

  HnnWord parse(std::string_view text) const { return parse_word(*oracle_, text); }
  std::string format(const HnnWord& w) const { return format_word(*oracle_, w); }

  /// Base generators and the stable letter, each with its inverse.
  std::vector<HnnWord> generators_with_inverses() const;

 private:
  Group(std::shared_ptr<const BaseOracle> oracle, std::variant<BsParams, IntegerMatrix> shape)
      : oracle_(std::move(oracle)), shape_(std::move(shape)) {}

  std::shared_ptr<const BaseOracle> oracle_;
  std::variant<BsParams, IntegerMatrix> shape_;
};

}  // namespace hnn
