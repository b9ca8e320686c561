#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "hnn/group.hpp"

namespace hnn {

enum class IccStatus { Icc, NotIcc, Empirical };
std::string to_string(IccStatus status);

struct OrbitGrowth {
  unsigned radius = 0;
  std::size_t orbit_size = 0;
};

/// Outcome of an ICC decision. A NOT_ICC witness is a nonempty finite
/// conjugacy class avoiding the identity; EMPIRICAL carries orbit growth.
struct IccVerdict {
  IccStatus status = IccStatus::Empirical;
  std::vector<HnnWord> witness;
  std::vector<OrbitGrowth> evidence;
};

/// BS(m,n) is ICC iff |m| != |n|; otherwise {b^m} (m = n) or {b^m, b^-m}
/// (m = -n) is a finite class. The witness is checked before returning.
IccVerdict icc_decide_bs(std::int64_t m, std::int64_t n);

/// Z^d extended by M is ICC iff no eigenvalue of M is a root of unity. A
/// negative answer carries the phi-orbit of a nonzero fixed vector of M^k.
IccVerdict icc_decide_zd(const IntegerMatrix& m);

IccVerdict icc_decide(const Group& group);

/// Nonempty, identity-free, and closed under conjugation by every generator
/// and its inverse.
bool is_closed_finite_class(const Group& group, const std::vector<HnnWord>& witness);

/// True iff no phi^j (j <= j_max) has a nontrivial fixed point. Computed both
/// on the generator of Dom(phi^j) and symbolically (m1^j != n1^j); a
/// disagreement raises InternalError.
bool thm1_hypothesis_bs(std::int64_t m, std::int64_t n, unsigned j_max);

/// Distinct elements expressible with at most `radius` generator letters,
/// in BFS order.
std::vector<NormalForm> generator_ball(const Group& group, unsigned radius);

/// {g x g^-1 : g in generator_ball(radius)}, sorted by serialization.
std::vector<NormalForm> orbit_sample(const Group& group, const HnnWord& x, unsigned radius);

/// Orbit sizes at each radius; always EMPIRICAL.
IccVerdict icc_probe(const Group& group, const HnnWord& x, std::span<const unsigned> radii);

/// h_0, ..., h_k with h_i = phi(h_{i-1}), all nontrivial and central.
struct FolnerChain {
  std::string group;
  unsigned k = 0;
  std::vector<BaseElement> elements;
  /// Chains of ascending extensions start at an arbitrary nontrivial element,
  /// so only h_1..h_k are required to lie in K.
  bool ascending = false;
};

/// Checks every chain invariant; throws InternalError on failure.
void verify_folner_chain(const BaseOracle& oracle, const FolnerChain& chain, bool require_distinct);

/// h_i = b^{m^{i+1} n^{k-i+1}}. Requires k >= 1.
FolnerChain folner_chain_bs(std::int64_t m, std::int64_t n, unsigned k);

/// h_i = phi^i(lambda) for an abelian base with H = Lambda.
FolnerChain folner_chain_ascending(const BaseOracle& oracle, const BaseElement& lambda, unsigned k);

using ExactRatio = boost::rational<long long>;
std::string to_string(const ExactRatio& r);

/// |g F g^-1 sym-diff F| / |F| for the window F = {h_1, ..., h_{k-1}}.
/// Requires k >= 2.
ExactRatio symdiff_ratio(const BaseOracle& oracle, const FolnerChain& chain, const HnnWord& g);

/// Every b^z eventually leaves H under iteration of phi iff n does not divide m.
bool escape_hypothesis_bs(std::int64_t m, std::int64_t n);

struct EscapeStep {
  unsigned exponent = 0;
  std::size_t still_in_base = 0;
};

struct EscapeResult {
  unsigned exponent = 0;
  std::vector<EscapeStep> trace;
};

/// Smallest n in [1, n_max] with a^-n x a^n outside the base for every x in
/// F. HypothesisError when n | m; ExhaustedError (carrying the trace) when
/// n_max is reached.
EscapeResult escape_exponent(const Group& group, const std::vector<HnnWord>& elements, unsigned n_max);

}  // namespace hnn
