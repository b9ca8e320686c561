#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "hnn/word.hpp"

namespace hnn {

/// Removes pinches t^-1 h t (h in H) and t k t^-1 (k in K), leftmost first,
/// until none remain. Idempotent.
HnnWord britton_reduce(const BaseOracle& oracle, const HnnWord& w);

/// t-length of the reduced form.
std::size_t length(const BaseOracle& oracle, const HnnWord& w);

/// Reduction followed by one right-to-left pass that replaces every segment
/// after a stable letter by its canonical right-coset representative (mod K
/// after t, mod H after t^-1) and pushes the subgroup part leftwards.
NormalForm normalize(const BaseOracle& oracle, const HnnWord& w);

HnnWord mul(const BaseOracle& oracle, const HnnWord& u, const HnnWord& v);
HnnWord inv(const BaseOracle& oracle, const HnnWord& u);
/// g x g^-1.
HnnWord conjugate(const BaseOracle& oracle, const HnnWord& g, const HnnWord& x);
HnnWord power(const BaseOracle& oracle, const HnnWord& u, long long exponent);

bool equals(const BaseOracle& oracle, const HnnWord& u, const HnnWord& v);
bool is_trivial(const BaseOracle& oracle, const HnnWord& w);

/// w == conjugator * core * conjugator^-1 with core of minimal t-length.
struct CyclicReduction {
  HnnWord core;
  HnnWord conjugator;
};

/// Strips wrap-around pinches by conjugation. When the core has stable
/// letters, the rotation whose normal form serializes least is returned, so
/// the result is deterministic; core is always in normal form.
CyclicReduction cyclic_reduce(const BaseOracle& oracle, const HnnWord& w);

/// Membership of x in Dom(phi^j), where Dom(phi^1) = H and
/// Dom(phi^j) = phi^-1(Dom(phi^{j-1}) cap K). Requires j >= 1.
bool phi_iter_domain(const BaseOracle& oracle, const BaseElement& x, unsigned j);

/// phi applied j times; DomainError outside Dom(phi^j).
BaseElement phi_iter(const BaseOracle& oracle, const BaseElement& x, unsigned j);

/// Smallest j <= j_max with x in Dom(phi^j) and phi^j(x) == x. Elements
/// outside the domain never count as fixed.
std::optional<unsigned> fixed_by_some_phi_j(const BaseOracle& oracle, const BaseElement& x,
                                            unsigned j_max);

}  // namespace hnn
