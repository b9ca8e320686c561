#include "hnn/zd_base.hpp"

#include <cctype>
#include <numeric>

#include "hnn/errors.hpp"
#include "hnn/polynomial.hpp"

namespace hnn {

namespace {

constexpr std::size_t kMaxTransversal = 1U << 20;

}  // namespace

ZdOracle::ZdOracle(IntegerMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.dim() == 0) throw InvalidArgument("matrix must have dimension >= 1");
  if (determinant(matrix_) == 0) throw InvalidArgument("matrix must be nonsingular (det != 0)");
  lattice_ = lower_hermite_basis(matrix_);
}

BaseElement ZdOracle::vec(const IntVector& v) { return BaseElement(BaseElement::Coords(v.begin(), v.end())); }

IntVector ZdOracle::to_vector(const BaseElement& x) { return IntVector(x.coords().begin(), x.coords().end()); }

IntVector ZdOracle::residue(const IntVector& v) const {
  const IntegerMatrix& b = lattice_.basis;
  IntVector r = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    const BigInt q = floor_div(r[i], b(i, i));
    if (q == 0) continue;
    for (std::size_t k = i; k < dim(); ++k) r[k] -= q * b(k, i);
  }
  return r;
}

BaseElement ZdOracle::identity() const { return vec(IntVector(dim())); }

BaseElement ZdOracle::mul(const BaseElement& x, const BaseElement& y) const {
  BaseElement out = x;
  for (std::size_t i = 0; i < dim(); ++i) out.coords()[i] += y[i];
  return out;
}

BaseElement ZdOracle::inv(const BaseElement& x) const {
  BaseElement out = x;
  for (auto& c : out.coords()) c = -c;
  return out;
}

BaseElement ZdOracle::pow(const BaseElement& x, const BigInt& e) const {
  BaseElement out = x;
  for (auto& c : out.coords()) c *= e;
  return out;
}

bool ZdOracle::contains(Subgroup s, const BaseElement& x) const {
  if (s == Subgroup::H) return true;
  const IntVector r = residue(to_vector(x));
  return std::all_of(r.begin(), r.end(), [](const BigInt& c) { return c == 0; });
}

BaseElement ZdOracle::phi(const BaseElement& x) const { return vec(matrix_ * to_vector(x)); }

BaseElement ZdOracle::phi_inv(const BaseElement& y) const {
  // Solve B w = v by forward substitution, then x = U w.
  const IntegerMatrix& b = lattice_.basis;
  const IntVector v = to_vector(y);
  IntVector w(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    BigInt acc = v[i];
    for (std::size_t k = 0; k < i; ++k) acc -= b(i, k) * w[k];
    if (acc % b(i, i) != 0) throw DomainError("phi_inv: " + format(y) + " is not in K");
    w[i] = acc / b(i, i);
  }
  return vec(lattice_.unimodular * w);
}

Split ZdOracle::split_left(Subgroup s, const BaseElement& x) const {
  if (s == Subgroup::H) return Split{x, identity()};
  const IntVector v = to_vector(x);
  const IntVector r = residue(v);
  IntVector sub(dim());
  for (std::size_t i = 0; i < dim(); ++i) sub[i] = v[i] - r[i];
  return Split{vec(sub), vec(r)};
}

std::optional<std::vector<BaseElement>> ZdOracle::left_transversal(Subgroup s) const {
  if (s == Subgroup::H) return std::vector<BaseElement>{identity()};
  const IntegerMatrix& b = lattice_.basis;
  BigInt count = 1;
  for (std::size_t i = 0; i < dim(); ++i) count *= b(i, i);
  if (count > kMaxTransversal) throw InvalidArgument("index [Z^d : M Z^d] too large to enumerate");
  // Mixed radix: reduce each candidate so it is the canonical residue.
  std::vector<BaseElement> reps;
  IntVector digits(dim());
  const std::size_t total = static_cast<std::size_t>(count);
  for (std::size_t idx = 0; idx < total; ++idx) {
    reps.push_back(vec(residue(digits)));
    for (std::size_t i = dim(); i-- > 0;) {
      digits[i] += 1;
      if (digits[i] < b(i, i)) break;
      digits[i] = 0;
    }
  }
  return reps;
}

std::vector<BaseElement> ZdOracle::generators() const {
  std::vector<BaseElement> gens;
  for (std::size_t i = 0; i < dim(); ++i) {
    IntVector e(dim());
    e[i] = 1;
    gens.push_back(vec(e));
  }
  return gens;
}

std::optional<BaseElement> ZdOracle::letter(std::string_view name) const {
  if (name.size() < 2 || name[0] != 'e') return std::nullopt;
  std::size_t index = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    index = index * 10 + static_cast<std::size_t>(name[i] - '0');
    if (index > dim()) return std::nullopt;
  }
  if (index == 0) return std::nullopt;
  IntVector e(dim());
  e[index - 1] = 1;
  return vec(e);
}

std::string ZdOracle::format(const BaseElement& x) const {
  std::string out;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    if (!out.empty()) out += " ";
    out += "e" + std::to_string(i + 1);
    if (x[i] != 1) out += "^" + x[i].str();
  }
  return out.empty() ? "1" : out;
}

std::string ZdOracle::describe() const { return "Z^" + std::to_string(dim()) + " x| [" + matrix_.to_string() + "]"; }

std::shared_ptr<const ZdOracle> make_zd(IntegerMatrix matrix) {
  return std::make_shared<const ZdOracle>(std::move(matrix));
}

unsigned root_of_unity_search_bound(std::size_t d) { return static_cast<unsigned>(2 * d * d + 1); }

unsigned long long root_of_unity_period_bound(std::size_t d) {
  unsigned long long l = 1;
  for (unsigned k = 1; k <= root_of_unity_search_bound(d); ++k) {
    if (totient(k) <= d) l = std::lcm(l, static_cast<unsigned long long>(k));
  }
  return l;
}

std::optional<unsigned> has_root_of_unity_eigenvalue(const IntegerMatrix& m) {
  const Polynomial chi = Polynomial::from_integers(characteristic_polynomial(m));
  for (unsigned k = 1; k <= root_of_unity_search_bound(m.dim()); ++k) {
    if (totient(k) > m.dim()) continue;
    if (gcd(chi, cyclotomic(k)).degree() >= 1) return k;
  }
  return std::nullopt;
}

std::size_t fixed_lattice_rank(const IntegerMatrix& m, unsigned j) {
  if (j == 0) throw InvalidArgument("fixed_lattice_rank requires j >= 1");
  const IntegerMatrix shifted = matrix_power(m, j) - IntegerMatrix::identity(m.dim());
  return m.dim() - rank(shifted);
}

}  // namespace hnn
