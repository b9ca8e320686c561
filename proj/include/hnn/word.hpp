#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hnn/base_oracle.hpp"

namespace hnn {

/// One stable-letter occurrence t^sign followed by a base element.
struct Syllable {
  int sign = 1;  // +1 or -1
  BaseElement elem;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// head t^{e_1} l_1 ... t^{e_n} l_n.
struct HnnWord {
  BaseElement head;
  std::vector<Syllable> tail;

  std::size_t t_length() const noexcept { return tail.size(); }

  friend bool operator==(const HnnWord&, const HnnWord&) = default;
};

HnnWord identity_word(const BaseOracle& oracle);
HnnWord base_word(BaseElement x);
/// The single letter t^sign.
HnnWord stable_word(const BaseOracle& oracle, int sign);

/// A word produced by normalize(): pinch-free, coset-canonical segments.
/// Component-wise equality coincides with equality in the group.
class NormalForm {
 public:
  const HnnWord& word() const noexcept { return word_; }
  std::size_t t_length() const noexcept { return word_.t_length(); }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

 private:
  friend NormalForm normalize(const BaseOracle&, const HnnWord&);
  explicit NormalForm(HnnWord w) : word_(std::move(w)) {}
  HnnWord word_;
};

/// word := term*; term := letter ('^' signed-integer)?; "1" denotes the
/// identity. Letters are one alphabetic character plus optional digits.
/// Throws ParseError with the offending position.
HnnWord parse_word(const BaseOracle& oracle, std::string_view text);

/// Head then syllables; consecutive stable letters of equal sign with trivial
/// segments print as a power. Identity prints as "1".
std::string format_word(const BaseOracle& oracle, const HnnWord& w);
std::string format_word(const BaseOracle& oracle, const NormalForm& w);

}  // namespace hnn
