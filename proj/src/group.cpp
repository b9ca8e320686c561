#include "hnn/group.hpp"

#include "hnn/errors.hpp"

namespace hnn {

Group Group::bs(std::int64_t m, std::int64_t n) {
  auto oracle = make_bs(m, n);
  const BsParams params = oracle->params();
  return Group(std::move(oracle), params);
}

Group Group::zd(IntegerMatrix matrix) {
  auto oracle = make_zd(matrix);
  return Group(std::move(oracle), std::move(matrix));
}

const BsParams& Group::bs_params() const {
  if (!is_bs()) throw InvalidArgument("operation requires a Baumslag-Solitar group");
  return std::get<BsParams>(shape_);
}

const IntegerMatrix& Group::matrix() const {
  if (is_bs()) throw InvalidArgument("operation requires a Z^d group");
  return std::get<IntegerMatrix>(shape_);
}

std::vector<HnnWord> Group::generators_with_inverses() const {
  std::vector<HnnWord> gens;
  for (const BaseElement& g : oracle_->generators()) {
    gens.push_back(base_word(g));
    gens.push_back(base_word(oracle_->inv(g)));
  }
  gens.push_back(stable_word(*oracle_, 1));
  gens.push_back(stable_word(*oracle_, -1));
  return gens;
}

}  // namespace hnn
