#include "hnn/bigint.hpp"

#include <cctype>

#include "hnn/errors.hpp"

namespace hnn {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw InvalidArgument("division by zero");
  BigInt q = a / b;  // truncates toward zero
  BigInt r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

BigInt floor_mod(const BigInt& a, const BigInt& b) {
  if (b == 0) throw InvalidArgument("division by zero");
  BigInt m = abs(b);
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw ParseError("expected digits", i);
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected digit", i);
    value = value * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt x = abs(a), y = abs(b);
  while (y != 0) {
    BigInt r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

BigInt pow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

}  // namespace hnn
