#include "hnn/calculus.hpp"

#include <string>

#include "hnn/errors.hpp"

namespace hnn {

namespace {

BaseElement& last_segment(HnnWord& w) { return w.tail.empty() ? w.head : w.tail.back().elem; }

void append_base(const BaseOracle& oracle, HnnWord& w, const BaseElement& x) {
  BaseElement& last = last_segment(w);
  last = oracle.mul(last, x);
}

// Appends one syllable to an already reduced word, cancelling the pinch it
// may close with the current top.
void push_reduced(const BaseOracle& oracle, HnnWord& r, const Syllable& s) {
  if (!r.tail.empty()) {
    const Syllable& top = r.tail.back();
    if (top.sign == -1 && s.sign == 1 && oracle.in_H(top.elem)) {
      BaseElement image = oracle.phi(top.elem);
      r.tail.pop_back();
      append_base(oracle, r, image);
      append_base(oracle, r, s.elem);
      return;
    }
    if (top.sign == 1 && s.sign == -1 && oracle.in_K(top.elem)) {
      BaseElement image = oracle.phi_inv(top.elem);
      r.tail.pop_back();
      append_base(oracle, r, image);
      append_base(oracle, r, s.elem);
      return;
    }
  }
  r.tail.push_back(s);
}

}  // namespace

HnnWord britton_reduce(const BaseOracle& oracle, const HnnWord& w) {
  HnnWord r{w.head, {}};
  r.tail.reserve(w.tail.size());
  for (const Syllable& s : w.tail) push_reduced(oracle, r, s);
  return r;
}

std::size_t length(const BaseOracle& oracle, const HnnWord& w) {
  return britton_reduce(oracle, w).t_length();
}

NormalForm normalize(const BaseOracle& oracle, const HnnWord& w) {
  HnnWord r = britton_reduce(oracle, w);
  for (std::size_t i = r.tail.size(); i-- > 0;) {
    Syllable& syl = r.tail[i];
    const Subgroup s = syl.sign > 0 ? Subgroup::K : Subgroup::H;
    Split split = oracle.split_left(s, syl.elem);
    syl.elem = std::move(split.rep);
    // t k = phi^-1(k) t and t^-1 h = phi(h) t^-1.
    BaseElement pushed = syl.sign > 0 ? oracle.phi_inv(split.sub) : oracle.phi(split.sub);
    BaseElement& prev = i == 0 ? r.head : r.tail[i - 1].elem;
    prev = oracle.mul(prev, pushed);
  }
  return NormalForm(std::move(r));
}

HnnWord mul(const BaseOracle& oracle, const HnnWord& u, const HnnWord& v) {
  HnnWord r = britton_reduce(oracle, u);
  append_base(oracle, r, v.head);
  for (const Syllable& s : v.tail) push_reduced(oracle, r, s);
  return r;
}

HnnWord inv(const BaseOracle& oracle, const HnnWord& u) {
  HnnWord r;
  const std::size_t n = u.tail.size();
  r.head = oracle.inv(n == 0 ? u.head : u.tail.back().elem);
  r.tail.reserve(n);
  for (std::size_t i = n; i-- > 0;) {
    const BaseElement& before = i == 0 ? u.head : u.tail[i - 1].elem;
    r.tail.push_back(Syllable{-u.tail[i].sign, oracle.inv(before)});
  }
  return britton_reduce(oracle, r);
}

HnnWord conjugate(const BaseOracle& oracle, const HnnWord& g, const HnnWord& x) {
  return mul(oracle, mul(oracle, g, x), inv(oracle, g));
}

HnnWord power(const BaseOracle& oracle, const HnnWord& u, long long exponent) {
  const HnnWord step = exponent < 0 ? inv(oracle, u) : britton_reduce(oracle, u);
  HnnWord r = identity_word(oracle);
  for (long long k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) r = mul(oracle, r, step);
  return r;
}

bool equals(const BaseOracle& oracle, const HnnWord& u, const HnnWord& v) {
  const NormalForm a = normalize(oracle, u);
  const NormalForm b = normalize(oracle, v);
  const HnnWord& x = a.word();
  const HnnWord& y = b.word();
  if (x.tail.size() != y.tail.size() || !oracle.eq(x.head, y.head)) return false;
  for (std::size_t i = 0; i < x.tail.size(); ++i) {
    if (x.tail[i].sign != y.tail[i].sign || !oracle.eq(x.tail[i].elem, y.tail[i].elem)) return false;
  }
  return true;
}

bool is_trivial(const BaseOracle& oracle, const HnnWord& w) {
  const HnnWord r = britton_reduce(oracle, w);
  return r.tail.empty() && oracle.is_identity(r.head);
}

CyclicReduction cyclic_reduce(const BaseOracle& oracle, const HnnWord& w) {
  HnnWord c = britton_reduce(oracle, w);
  HnnWord g = identity_word(oracle);
  while (!c.tail.empty()) {
    // Rotate the trailing segment to the front: c = l^-1 c' l.
    const BaseElement last = c.tail.back().elem;
    if (!oracle.is_identity(last)) {
      c.head = oracle.mul(last, c.head);
      c.tail.back().elem = oracle.identity();
      g = mul(oracle, g, base_word(oracle.inv(last)));
    }
    const int first = c.tail.front().sign;
    const int final_sign = c.tail.back().sign;
    const bool wrap_pinch =
        first == -final_sign &&
        oracle.contains(final_sign < 0 ? Subgroup::H : Subgroup::K, c.head);
    if (!wrap_pinch) break;
    // c' = t^-e c'' t^e where c'' = t^e c' t^-e loses two stable letters.
    const HnnWord t_in = stable_word(oracle, final_sign);
    const HnnWord t_out = stable_word(oracle, -final_sign);
    c = mul(oracle, mul(oracle, t_in, c), t_out);
    g = mul(oracle, g, t_out);
  }
  if (c.tail.empty()) return CyclicReduction{normalize(oracle, c).word(), g};

  // c = mu_0 t^{e_1} mu_1 ... t^{e_n}; try every rotation R_i with
  // c = P_i R_i P_i^-1, P_i = mu_0 t^{e_1} ... t^{e_i} mu_i.
  const std::size_t n = c.tail.size();
  std::vector<Syllable> cyclic(c.tail);
  cyclic.back().elem = c.head;
  std::optional<std::string> best_key;
  CyclicReduction best;
  HnnWord prefix = base_word(c.head);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) prefix.tail.push_back(c.tail[i - 1]);
    HnnWord rotation{oracle.identity(), {}};
    for (std::size_t k = 0; k < n; ++k) rotation.tail.push_back(cyclic[(i + k) % n]);
    NormalForm nf = normalize(oracle, rotation);
    std::string key = format_word(oracle, nf);
    if (!best_key || key < *best_key) {
      best_key = std::move(key);
      best.core = nf.word();
      best.conjugator = mul(oracle, g, prefix);
    }
  }
  return best;
}

bool phi_iter_domain(const BaseOracle& oracle, const BaseElement& x, unsigned j) {
  if (j == 0) throw InvalidArgument("phi_iter_domain requires j >= 1");
  BaseElement y = x;
  for (unsigned step = 0; step < j; ++step) {
    if (!oracle.in_H(y)) return false;
    if (step + 1 < j) y = oracle.phi(y);
  }
  return true;
}

BaseElement phi_iter(const BaseOracle& oracle, const BaseElement& x, unsigned j) {
  if (!phi_iter_domain(oracle, x, j)) {
    throw DomainError(oracle.format(x) + " is outside Dom(phi^" + std::to_string(j) + ")");
  }
  BaseElement y = x;
  for (unsigned step = 0; step < j; ++step) y = oracle.phi(y);
  return y;
}

std::optional<unsigned> fixed_by_some_phi_j(const BaseOracle& oracle, const BaseElement& x,
                                            unsigned j_max) {
  if (j_max == 0) throw InvalidArgument("j_max must be >= 1");
  BaseElement y = x;
  for (unsigned j = 1; j <= j_max; ++j) {
    if (!oracle.in_H(y)) return std::nullopt;
    y = oracle.phi(y);
    if (oracle.eq(y, x)) return j;
  }
  return std::nullopt;
}

}  // namespace hnn
