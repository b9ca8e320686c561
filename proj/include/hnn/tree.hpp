#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hnn/base_oracle.hpp"
#include "hnn/word.hpp"

namespace hnn {

// Bass-Serre tree of HNN(Lambda, H, K, phi): vertices are cosets g Lambda,
// positively oriented edges g H run from g Lambda to g t Lambda.

/// One step r t^sign of a vertex path. r is the canonical representative of
/// r H (sign +1) or r K (sign -1).
struct PathStep {
  BaseElement rep;
  int sign = 1;

  friend bool operator==(const PathStep&, const PathStep&) = default;
};

/// Backtrack-free path from the base vertex; names r_1 t^{e_1} ... r_k t^{e_k} Lambda.
struct VertexLabel {
  std::vector<PathStep> path;

  std::size_t depth() const noexcept { return path.size(); }
  bool is_base() const noexcept { return path.empty(); }

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

/// Edge at `source` through representative `rep`. sign +1 is the outgoing
/// edge (g rep) H towards g rep t Lambda; sign -1 is the incoming edge from
/// g rep t^-1 Lambda.
struct EdgeRef {
  VertexLabel source;
  BaseElement rep;
  int sign = 1;
};

HnnWord vertex_word(const BaseOracle& oracle, const VertexLabel& v);
std::string format_label(const BaseOracle& oracle, const VertexLabel& v);
VertexLabel parent(const VertexLabel& v);

/// Canonical label of g Lambda.
VertexLabel to_vertex_label(const BaseOracle& oracle, const HnnWord& g);
VertexLabel edge_target(const BaseOracle& oracle, const EdgeRef& edge);

/// [Lambda:H] outgoing then [Lambda:K] incoming edges, in transversal order.
/// Throws InvalidArgument when an index is infinite.
std::vector<EdgeRef> neighbors(const BaseOracle& oracle, const VertexLabel& v);

VertexLabel act(const BaseOracle& oracle, const HnnWord& g, const VertexLabel& v);

/// Tree distance via the longest common prefix.
std::size_t distance(const VertexLabel& u, const VertexLabel& v);

/// Vertices within `radius` of the base, in BFS order; each layer is sorted
/// by serialization.
std::vector<VertexLabel> ball(const BaseOracle& oracle, unsigned radius);

enum class IsometryKind { Elliptic, Hyperbolic };
std::string to_string(IsometryKind kind);

struct IsometryClass {
  IsometryKind kind = IsometryKind::Elliptic;
  /// w = conjugator * core * conjugator^-1 (from cyclic_reduce).
  HnnWord conjugator;
  HnnWord core;
  /// Elliptic: conjugator Lambda, fixed by the element.
  VertexLabel fixed_vertex;
  /// Hyperbolic: t-length of the core, and consecutive axis vertices.
  std::size_t translation_length = 0;
  std::vector<VertexLabel> axis_sample;
};

IsometryClass classify(const BaseOracle& oracle, const HnnWord& gamma, unsigned axis_periods = 2);

struct Displacement {
  std::size_t value = 0;
  VertexLabel argmin;
};

/// Minimum of d(v, gamma v) over the ball, first minimizer in ball order.
Displacement min_displacement_bfs(const BaseOracle& oracle, const HnnWord& gamma, unsigned radius);

struct FixedSubtree {
  std::vector<VertexLabel> fixed;  // ordered by depth, then serialization
  bool touches_boundary = false;
};

/// Fixed vertices of an elliptic element within the ball, found by BFS inside
/// the fixed set starting from the fixed vertex nearest to the base.
/// NotEllipticError for hyperbolic input.
FixedSubtree fixed_subtree(const BaseOracle& oracle, const HnnWord& gamma, unsigned radius);

/// gamma fixes step^l Lambda for every l >= 0, at distance
/// distance_per_step * l from the base.
struct FixedFamily {
  HnnWord gamma;
  HnnWord step;
  unsigned distance_per_step = 1;

  VertexLabel vertex(const BaseOracle& oracle, unsigned l) const;
};

/// An elliptic element of BS(m,n) fixing an unbounded subtree: b^n along a^l
/// when n | m, b^m along a^-l when m | n, b^n along (a b a^-1 b^-1)^l otherwise.
FixedFamily unbounded_fixed_witness_bs(std::int64_t m, std::int64_t n);

/// Center of a nonempty finite vertex set by double sweep. On odd diameter the
/// middle vertex with the least serialization is returned.
VertexLabel center(const BaseOracle& oracle, std::span<const VertexLabel> vertices);

/// Attracting end of a hyperbolic element: the ray conjugator * period^k Lambda.
struct EndDescriptor {
  HnnWord conjugator;
  HnnWord period;
  std::size_t translation_length = 0;
};

VertexLabel ray_point(const BaseOracle& oracle, const EndDescriptor& end, unsigned periods);

/// Whether two rays converge, judged by growth of their common prefix between
/// 8 and 16 periods.
bool same_end(const BaseOracle& oracle, const EndDescriptor& a, const EndDescriptor& b);

struct DeltaPoint {
  enum class Kind { End, Vertex, PossiblyUnbounded, BeyondRadius };
  Kind kind = Kind::BeyondRadius;
  EndDescriptor end;     // Kind::End
  VertexLabel vertex;    // Kind::Vertex
};
std::string to_string(DeltaPoint::Kind kind);

/// Hyperbolic: attracting end. Elliptic: center of the fixed set when it lies
/// strictly inside the ball; PossiblyUnbounded when it reaches the boundary;
/// BeyondRadius when it misses the ball. InvalidArgument for the identity.
DeltaPoint delta(const BaseOracle& oracle, const HnnWord& gamma, unsigned radius);
DeltaPoint act(const BaseOracle& oracle, const HnnWord& g, const DeltaPoint& point);

/// Axis vertices of a hyperbolic element within the ball.
std::vector<VertexLabel> axis_in_ball(const BaseOracle& oracle, const HnnWord& gamma, unsigned radius);

/// Common axis vertices within the ball. NotHyperbolicError otherwise.
std::size_t axes_overlap(const BaseOracle& oracle, const HnnWord& gamma1, const HnnWord& gamma2,
                         unsigned radius);

/// Directed graph of the ball: positive edges solid and, when gamma is given,
/// dashed edges v -> gamma v.
std::string tree_dot(const BaseOracle& oracle, unsigned radius, const std::optional<HnnWord>& gamma);

}  // namespace hnn
