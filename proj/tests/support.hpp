#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hnn/calculus.hpp"
#include "hnn/group.hpp"

namespace hnn::test {

using Rng = std::mt19937_64;

inline long long uniform(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

/// Letter tokens of the group's presentation, each with its inverse.
inline std::vector<std::string> letter_tokens(const Group& g) {
  std::vector<std::string> out;
  if (g.is_bs()) {
    out = {"b", "b^-1"};
  } else {
    for (std::size_t i = 1; i <= g.matrix().dim(); ++i) {
      out.push_back("e" + std::to_string(i));
      out.push_back("e" + std::to_string(i) + "^-1");
    }
  }
  out.push_back(g.is_bs() ? "a" : "t");
  out.push_back(g.is_bs() ? "a^-1" : "t^-1");
  return out;
}

/// Word text with exactly `letters` generator tokens.
inline std::vector<std::string> random_tokens(const Group& g, Rng& rng, unsigned letters) {
  const auto tokens = letter_tokens(g);
  std::vector<std::string> out;
  for (unsigned i = 0; i < letters; ++i) out.push_back(tokens[uniform(rng, 0, tokens.size() - 1)]);
  return out;
}

inline std::string join(const std::vector<std::string>& tokens) {
  std::string s;
  for (const auto& t : tokens) {
    if (!s.empty()) s += ' ';
    s += t;
  }
  return s.empty() ? "1" : s;
}

inline HnnWord random_word(const Group& g, Rng& rng, unsigned max_letters) {
  return g.parse(join(random_tokens(g, rng, uniform(rng, 0, max_letters))));
}

inline BaseElement random_base(const BaseOracle& o, Rng& rng, int spread = 12) {
  BaseElement x = o.identity();
  for (const BaseElement& gen : o.generators()) x = o.mul(x, o.pow(gen, BigInt(uniform(rng, -spread, spread))));
  return x;
}

/// A word equal to the identity: t^-1 h t phi(h)^-1 or t k t^-1 phi^-1(k)^-1,
/// with h, k random in H, K.
inline std::string random_relator(const Group& g, Rng& rng) {
  const BaseOracle& o = g.oracle();
  const std::string t = g.is_bs() ? "a" : "t";
  const BaseElement x = random_base(o, rng);
  if (uniform(rng, 0, 1) == 0) {
    const BaseElement h = o.split_left(Subgroup::H, x).sub;
    return t + "^-1 " + o.format(h) + " " + t + " " + o.format(o.inv(o.phi(h)));
  }
  const BaseElement k = o.split_left(Subgroup::K, x).sub;
  return t + " " + o.format(k) + " " + t + "^-1 " + o.format(o.inv(o.phi_inv(k)));
}

/// Inserts a random relator between two random tokens.
inline std::string insert_relator(const Group& g, Rng& rng, std::vector<std::string> tokens) {
  const auto at = static_cast<std::ptrdiff_t>(uniform(rng, 0, tokens.size()));
  tokens.insert(tokens.begin() + at, random_relator(g, rng));
  return join(tokens);
}

/// equals, normal-form comparison and triviality of u v^-1 all agree.
inline bool equality_coherent(const BaseOracle& o, const HnnWord& u, const HnnWord& v) {
  const bool a = equals(o, u, v);
  const bool b = normalize(o, u) == normalize(o, v);
  const bool c = britton_reduce(o, mul(o, u, inv(o, v))) == identity_word(o);
  return a == b && b == c;
}

}  // namespace hnn::test
