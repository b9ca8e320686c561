#include "hnn/polynomial.hpp"

#include <map>
#include <mutex>

#include "hnn/errors.hpp"

namespace hnn {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::from_integers(const std::vector<BigInt>& coeffs) {
  std::vector<Rational> q;
  q.reserve(coeffs.size());
  for (const BigInt& c : coeffs) q.emplace_back(c);
  return Polynomial(std::move(q));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> q = coeffs_;
  const Rational lead = q.back();
  for (Rational& c : q) c /= lead;
  return Polynomial(std::move(q));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    const bool unit = mag == 1;
    if (!unit || k == 0) out += mag.str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return Polynomial(std::move(out));
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return DivMod{Polynomial{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  for (int k = a.degree(); k >= db; --k) {
    const Rational f = rem[static_cast<std::size_t>(k)] / b.leading();
    quot[static_cast<std::size_t>(k - db)] = f;
    if (f == 0) continue;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k - db + i)] -= f * b.coeffs()[static_cast<std::size_t>(i)];
  }
  return DivMod{Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial cyclotomic(unsigned k) {
  if (k == 0) throw InvalidArgument("cyclotomic index must be >= 1");
  static std::mutex mutex;
  static std::map<unsigned, Polynomial> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(k); it != cache.end()) return it->second;
  }
  // x^k - 1 = prod_{e | k} Phi_e.
  std::vector<Rational> c(k + 1);
  c[0] = -1;
  c[k] = 1;
  Polynomial p(std::move(c));
  for (unsigned e = 1; e < k; ++e) {
    if (k % e == 0) p = divmod(p, cyclotomic(e)).quotient;
  }
  std::lock_guard lock(mutex);
  cache.emplace(k, p);
  return p;
}

unsigned long long totient(unsigned long long k) {
  unsigned long long result = k;
  unsigned long long n = k;
  for (unsigned long long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace hnn
