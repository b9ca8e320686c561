#include "hnn/integer_matrix.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "hnn/errors.hpp"

namespace hnn {

namespace {

using Rational = boost::multiprecision::cpp_rational;

struct ExtendedGcd {
  BigInt g, x, y;  // x*a + y*b == g >= 0
};

ExtendedGcd extended_gcd(const BigInt& a, const BigInt& b) {
  BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

// Reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && m[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    const Rational pivot = m[row][col];
    for (auto& e : m[row]) e /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<Rational>> to_rational(const IntegerMatrix& a) {
  std::vector<std::vector<Rational>> m(a.dim(), std::vector<Rational>(a.dim()));
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) m[r][c] = Rational(a(r, c));
  return m;
}

}  // namespace

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : dim_(rows.size()), entries_() {
  entries_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw InvalidArgument("matrix must be square");
    for (long long v : row) entries_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t dim) {
  IntegerMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::parse(std::string_view text) {
  std::vector<std::vector<BigInt>> rows(1);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (true) {
    skip();
    const std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw ParseError("expected matrix entry", start);
    try {
      rows.back().push_back(parse_bigint(text.substr(start, i - start)));
    } catch (const ParseError&) {
      throw ParseError("malformed matrix entry", start);
    }
    skip();
    if (i == text.size()) break;
    if (text[i] == ',') {
      ++i;
    } else if (text[i] == ';') {
      ++i;
      rows.emplace_back();
    } else {
      throw ParseError(std::string("unexpected character '") + text[i] + "' in matrix", i);
    }
  }
  const std::size_t dim = rows.size();
  IntegerMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (rows[r].size() != dim) throw ParseError("matrix must be square", text.size());
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::string IntegerMatrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < dim_; ++r) {
    if (r > 0) out += ";";
    for (std::size_t c = 0; c < dim_; ++c) {
      if (c > 0) out += ",";
      out += (*this)(r, c).str();
    }
  }
  return out;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  const std::size_t d = a.dim();
  IntegerMatrix out(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t k = 0; k < d; ++k) {
      if (a(r, k) == 0) continue;
      for (std::size_t c = 0; c < d; ++c) out(r, c) += a(r, k) * b(k, c);
    }
  return out;
}

IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
  IntegerMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out(r, c) = a(r, c) - b(r, c);
  return out;
}

IntVector operator*(const IntegerMatrix& a, const IntVector& v) {
  IntVector out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out[r] += a(r, c) * v[c];
  return out;
}

IntegerMatrix matrix_power(const IntegerMatrix& a, unsigned exponent) {
  IntegerMatrix result = IntegerMatrix::identity(a.dim());
  IntegerMatrix base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

BigInt determinant(const IntegerMatrix& a) {
  const std::size_t d = a.dim();
  if (d == 0) return 1;
  IntegerMatrix m = a;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < d; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < d && m(p, k) == 0) ++p;
      if (p == d) return 0;
      for (std::size_t c = 0; c < d; ++c) std::swap(m(k, c), m(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < d; ++i) {
      for (std::size_t j = k + 1; j < d; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(d - 1, d - 1);
}

std::size_t rank(const IntegerMatrix& a) {
  auto m = to_rational(a);
  return rref(m).size();
}

IntVector integer_kernel_vector(const IntegerMatrix& a) {
  const std::size_t d = a.dim();
  auto m = to_rational(a);
  const std::vector<std::size_t> pivots = rref(m);
  std::size_t free_col = d;
  for (std::size_t c = 0; c < d; ++c) {
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) {
      free_col = c;
      break;
    }
  }
  if (free_col == d) return {};
  std::vector<Rational> x(d);
  x[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][free_col];
  BigInt denom_lcm = 1;
  for (const Rational& q : x) {
    const BigInt den = boost::multiprecision::denominator(q);
    denom_lcm = denom_lcm / gcd(denom_lcm, den) * den;
  }
  IntVector v(d);
  BigInt g = 0;
  for (std::size_t i = 0; i < d; ++i) {
    v[i] = boost::multiprecision::numerator(x[i]) * (denom_lcm / boost::multiprecision::denominator(x[i]));
    g = gcd(g, v[i]);
  }
  for (BigInt& e : v) e /= g;
  return v;
}

LatticeBasis lower_hermite_basis(const IntegerMatrix& a) {
  const std::size_t d = a.dim();
  IntegerMatrix b = a;
  IntegerMatrix u = IntegerMatrix::identity(d);
  auto combine = [d](IntegerMatrix& m, std::size_t i, std::size_t j, const BigInt& x, const BigInt& y,
                     const BigInt& p, const BigInt& q) {
    // col_i <- x col_i + y col_j ; col_j <- p col_i + q col_j (old values)
    for (std::size_t r = 0; r < d; ++r) {
      BigInt ci = m(r, i), cj = m(r, j);
      m(r, i) = x * ci + y * cj;
      m(r, j) = p * ci + q * cj;
    }
  };
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      if (b(i, j) == 0) continue;
      const BigInt ai = b(i, i), aj = b(i, j);
      const ExtendedGcd e = extended_gcd(ai, aj);
      const BigInt p = -aj / e.g, q = ai / e.g;
      combine(b, i, j, e.x, e.y, p, q);
      combine(u, i, j, e.x, e.y, p, q);
    }
    if (b(i, i) == 0) throw InvalidArgument("lattice basis requires a nonsingular matrix");
    if (b(i, i) < 0) {
      for (std::size_t r = 0; r < d; ++r) {
        b(r, i) = -b(r, i);
        u(r, i) = -u(r, i);
      }
    }
  }
  return LatticeBasis{std::move(b), std::move(u)};
}

std::vector<BigInt> characteristic_polynomial(const IntegerMatrix& a) {
  // Faddeev-LeVerrier; every division below is exact over Z.
  const std::size_t d = a.dim();
  std::vector<BigInt> c(d + 1);
  c[d] = 1;
  IntegerMatrix m = IntegerMatrix::identity(d);
  for (std::size_t k = 1; k <= d; ++k) {
    const IntegerMatrix am = a * m;
    BigInt trace = 0;
    for (std::size_t i = 0; i < d; ++i) trace += am(i, i);
    c[d - k] = -trace / static_cast<long long>(k);
    m = am;
    for (std::size_t i = 0; i < d; ++i) m(i, i) += c[d - k];
  }
  return c;
}

}  // namespace hnn
