#include "hnn/word.hpp"

#include <algorithm>
#include <cctype>

#include "hnn/errors.hpp"

namespace hnn {

BaseElement BaseOracle::pow(const BaseElement& x, const BigInt& e) const {
  BaseElement base = e < 0 ? inv(x) : x;
  BigInt k = abs(e);
  BaseElement result = identity();
  while (k > 0) {
    if ((k & 1) != 0) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

HnnWord identity_word(const BaseOracle& oracle) { return HnnWord{oracle.identity(), {}}; }

HnnWord base_word(BaseElement x) { return HnnWord{std::move(x), {}}; }

HnnWord stable_word(const BaseOracle& oracle, int sign) {
  return HnnWord{oracle.identity(), {Syllable{sign, oracle.identity()}}};
}

namespace {

constexpr long long kMaxStablePower = 1'000'000;

void append_base(const BaseOracle& oracle, HnnWord& w, const BaseElement& x) {
  BaseElement& last = w.tail.empty() ? w.head : w.tail.back().elem;
  last = oracle.mul(last, x);
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

}  // namespace

HnnWord parse_word(const BaseOracle& oracle, std::string_view text) {
  const std::vector<std::string> stable_names = oracle.stable_letter_names();
  HnnWord w = identity_word(oracle);
  std::size_t i = 0;
  while (true) {
    while (i < text.size() && is_space(text[i])) ++i;
    if (i == text.size()) break;
    const std::size_t start = i;
    std::string name;
    if (text[i] == '1') {
      name = "1";
      ++i;
    } else if (is_alpha(text[i])) {
      name.push_back(text[i++]);
      while (i < text.size() && is_digit(text[i])) name.push_back(text[i++]);
    } else {
      throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
    }
    while (i < text.size() && is_space(text[i])) ++i;
    BigInt exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      while (i < text.size() && is_space(text[i])) ++i;
      const std::size_t exp_start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && is_digit(text[i])) ++i;
      try {
        exponent = parse_bigint(text.substr(exp_start, i - exp_start));
      } catch (const ParseError& e) {
        throw ParseError("malformed exponent", exp_start + e.position());
      }
    }
    if (name == "1") continue;
    if (std::find(stable_names.begin(), stable_names.end(), name) != stable_names.end()) {
      if (abs(exponent) > kMaxStablePower) throw ParseError("stable-letter exponent too large", start);
      const int sign = exponent < 0 ? -1 : 1;
      const long long count = static_cast<long long>(abs(exponent));
      for (long long k = 0; k < count; ++k) w.tail.push_back(Syllable{sign, oracle.identity()});
      continue;
    }
    std::optional<BaseElement> letter = oracle.letter(name);
    if (!letter) throw ParseError("unknown letter '" + name + "'", start);
    append_base(oracle, w, oracle.pow(*letter, exponent));
  }
  return w;
}

std::string format_word(const BaseOracle& oracle, const HnnWord& w) {
  const std::string stable = oracle.stable_letter_names().front();
  std::vector<std::string> tokens;
  if (!oracle.is_identity(w.head)) tokens.push_back(oracle.format(w.head));
  std::size_t i = 0;
  while (i < w.tail.size()) {
    const int sign = w.tail[i].sign;
    std::size_t j = i;
    // Merge t^s 1 t^s 1 ... into one power.
    while (j + 1 < w.tail.size() && w.tail[j + 1].sign == sign && oracle.is_identity(w.tail[j].elem)) ++j;
    const long long power = static_cast<long long>(j - i + 1) * sign;
    tokens.push_back(power == 1 ? stable : stable + "^" + std::to_string(power));
    if (!oracle.is_identity(w.tail[j].elem)) tokens.push_back(oracle.format(w.tail[j].elem));
    i = j + 1;
  }
  if (tokens.empty()) return "1";
  std::string out = tokens.front();
  for (std::size_t k = 1; k < tokens.size(); ++k) out += " " + tokens[k];
  return out;
}

std::string format_word(const BaseOracle& oracle, const NormalForm& w) {
  return format_word(oracle, w.word());
}

}  // namespace hnn
