#include "hnn/tree.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "hnn/bs_base.hpp"
#include "hnn/calculus.hpp"
#include "hnn/errors.hpp"

namespace hnn {

namespace {

VertexLabel truncate(const VertexLabel& v, std::size_t depth) {
  return VertexLabel{std::vector<PathStep>(v.path.begin(), v.path.begin() + static_cast<std::ptrdiff_t>(depth))};
}

std::size_t common_prefix(const VertexLabel& u, const VertexLabel& v) {
  const std::size_t limit = std::min(u.depth(), v.depth());
  std::size_t p = 0;
  while (p < limit && u.path[p] == v.path[p]) ++p;
  return p;
}

// Vertex number s on the axis of conjugator * core * conjugator^-1, where
// s = 0 is conjugator Lambda and consecutive s are adjacent.
VertexLabel axis_vertex(const BaseOracle& o, const HnnWord& conjugator, const HnnWord& core, long long s) {
  const long long n = static_cast<long long>(core.t_length());
  long long k = s / n;
  long long i = s % n;
  if (i < 0) {
    i += n;
    --k;
  }
  HnnWord prefix{core.head, std::vector<Syllable>(core.tail.begin(), core.tail.begin() + i)};
  return to_vertex_label(o, mul(o, mul(o, conjugator, power(o, core, k)), prefix));
}

bool is_fixed(const BaseOracle& o, const HnnWord& gamma, const VertexLabel& v) { return act(o, gamma, v) == v; }

void sort_by_depth_then_key(const BaseOracle& o, std::vector<VertexLabel>& vs) {
  std::vector<std::pair<std::string, VertexLabel>> keyed;
  for (VertexLabel& v : vs) keyed.emplace_back(format_label(o, v), std::move(v));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.second.depth() != b.second.depth()) return a.second.depth() < b.second.depth();
    return a.first < b.first;
  });
  vs.clear();
  for (auto& [k, v] : keyed) vs.push_back(std::move(v));
}

}  // namespace

HnnWord vertex_word(const BaseOracle& o, const VertexLabel& v) {
  HnnWord w = identity_word(o);
  if (v.path.empty()) return w;
  w.head = v.path.front().rep;
  for (std::size_t i = 0; i < v.path.size(); ++i) {
    w.tail.push_back(Syllable{v.path[i].sign, i + 1 < v.path.size() ? v.path[i + 1].rep : o.identity()});
  }
  return w;
}

std::string format_label(const BaseOracle& o, const VertexLabel& v) { return format_word(o, vertex_word(o, v)); }

VertexLabel parent(const VertexLabel& v) {
  if (v.is_base()) throw InvalidArgument("the base vertex has no parent");
  return truncate(v, v.depth() - 1);
}

VertexLabel to_vertex_label(const BaseOracle& o, const HnnWord& g) {
  const HnnWord r = britton_reduce(o, g);
  VertexLabel label;
  label.path.reserve(r.tail.size());
  BaseElement current = r.head;
  for (const Syllable& syl : r.tail) {
    Split split = o.split_right(syl.sign > 0 ? Subgroup::H : Subgroup::K, current);
    // h t = t phi(h) and k t^-1 = t^-1 phi^-1(k).
    BaseElement pushed = syl.sign > 0 ? o.phi(split.sub) : o.phi_inv(split.sub);
    label.path.push_back(PathStep{std::move(split.rep), syl.sign});
    current = o.mul(pushed, syl.elem);
  }
  return label;
}

VertexLabel edge_target(const BaseOracle& o, const EdgeRef& edge) {
  const auto& path = edge.source.path;
  if (!path.empty() && path.back().sign == -edge.sign && o.is_identity(edge.rep)) return parent(edge.source);
  VertexLabel target = edge.source;
  target.path.push_back(PathStep{edge.rep, edge.sign});
  return target;
}

std::vector<EdgeRef> neighbors(const BaseOracle& o, const VertexLabel& v) {
  std::vector<EdgeRef> edges;
  for (const auto& [subgroup, sign] : {std::pair{Subgroup::H, 1}, std::pair{Subgroup::K, -1}}) {
    const auto reps = o.left_transversal(subgroup);
    if (!reps) throw InvalidArgument("subgroup has infinite index; the tree is not locally finite");
    for (const BaseElement& r : *reps) edges.push_back(EdgeRef{v, r, sign});
  }
  return edges;
}

VertexLabel act(const BaseOracle& o, const HnnWord& g, const VertexLabel& v) {
  return to_vertex_label(o, mul(o, g, vertex_word(o, v)));
}

std::size_t distance(const VertexLabel& u, const VertexLabel& v) {
  const std::size_t p = common_prefix(u, v);
  return u.depth() + v.depth() - 2 * p;
}

std::vector<VertexLabel> ball(const BaseOracle& o, unsigned radius) {
  std::vector<VertexLabel> out{VertexLabel{}};
  std::size_t layer_begin = 0;
  for (unsigned r = 0; r < radius; ++r) {
    const std::size_t layer_end = out.size();
    std::vector<VertexLabel> layer;
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const EdgeRef& e : neighbors(o, out[i])) {
        VertexLabel t = edge_target(o, e);
        if (t.depth() > out[i].depth()) layer.push_back(std::move(t));
      }
    }
    sort_by_depth_then_key(o, layer);
    for (VertexLabel& v : layer) out.push_back(std::move(v));
    layer_begin = layer_end;
  }
  return out;
}

std::string to_string(IsometryKind kind) { return kind == IsometryKind::Elliptic ? "ELLIPTIC" : "HYPERBOLIC"; }

IsometryClass classify(const BaseOracle& o, const HnnWord& gamma, unsigned axis_periods) {
  CyclicReduction cr = cyclic_reduce(o, gamma);
  IsometryClass result;
  result.conjugator = std::move(cr.conjugator);
  result.core = std::move(cr.core);
  if (result.core.t_length() == 0) {
    result.kind = IsometryKind::Elliptic;
    result.fixed_vertex = to_vertex_label(o, result.conjugator);
    return result;
  }
  result.kind = IsometryKind::Hyperbolic;
  result.translation_length = result.core.t_length();
  const long long last = static_cast<long long>(axis_periods * result.translation_length);
  for (long long s = 0; s <= last; ++s) result.axis_sample.push_back(axis_vertex(o, result.conjugator, result.core, s));
  return result;
}

Displacement min_displacement_bfs(const BaseOracle& o, const HnnWord& gamma, unsigned radius) {
  std::optional<Displacement> best;
  for (const VertexLabel& v : ball(o, radius)) {
    const std::size_t d = distance(v, act(o, gamma, v));
    if (!best || d < best->value) best = Displacement{d, v};
    if (best->value == 0) break;
  }
  return *best;
}

FixedSubtree fixed_subtree(const BaseOracle& o, const HnnWord& gamma, unsigned radius) {
  const IsometryClass cls = classify(o, gamma, 0);
  if (cls.kind != IsometryKind::Elliptic) throw NotEllipticError("element is hyperbolic; it fixes no vertex");
  // The fixed set is convex, so the geodesic from the base to any fixed
  // vertex enters it at the fixed vertex nearest to the base.
  const VertexLabel& witness = cls.fixed_vertex;
  std::optional<VertexLabel> start;
  for (std::size_t d = 0; d <= witness.depth() && d <= radius; ++d) {
    VertexLabel p = truncate(witness, d);
    if (is_fixed(o, gamma, p)) {
      start = std::move(p);
      break;
    }
  }
  FixedSubtree result;
  if (!start) return result;
  std::set<std::string> seen{format_label(o, *start)};
  std::vector<VertexLabel> queue{*start};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const VertexLabel v = queue[i];
    for (const EdgeRef& e : neighbors(o, v)) {
      VertexLabel t = edge_target(o, e);
      if (t.depth() > radius) continue;
      if (!seen.insert(format_label(o, t)).second) continue;
      if (is_fixed(o, gamma, t)) queue.push_back(std::move(t));
    }
  }
  result.touches_boundary =
      std::any_of(queue.begin(), queue.end(), [&](const VertexLabel& v) { return v.depth() == radius; });
  sort_by_depth_then_key(o, queue);
  result.fixed = std::move(queue);
  return result;
}

VertexLabel FixedFamily::vertex(const BaseOracle& o, unsigned l) const {
  return to_vertex_label(o, power(o, step, static_cast<long long>(l)));
}

FixedFamily unbounded_fixed_witness_bs(std::int64_t m, std::int64_t n) {
  const auto oracle = make_bs(m, n);
  const BsOracle& o = *oracle;
  FixedFamily family;
  if (m % n == 0) {
    family.gamma = base_word(BsOracle::b(n));
    family.step = stable_word(o, 1);
  } else if (n % m == 0) {
    family.gamma = base_word(BsOracle::b(m));
    family.step = stable_word(o, -1);
  } else {
    family.gamma = base_word(BsOracle::b(n));
    family.step = parse_word(o, "a b a^-1 b^-1");
    family.distance_per_step = 2;
  }
  return family;
}

VertexLabel center(const BaseOracle& o, std::span<const VertexLabel> vertices) {
  if (vertices.empty()) throw InvalidArgument("center of an empty vertex set");
  auto farthest = [&](const VertexLabel& from) {
    const VertexLabel* best = &vertices.front();
    std::size_t best_d = distance(from, *best);
    for (const VertexLabel& v : vertices) {
      const std::size_t d = distance(from, v);
      if (d > best_d) {
        best_d = d;
        best = &v;
      }
    }
    return *best;
  };
  const VertexLabel u = farthest(vertices.front());
  const VertexLabel w = farthest(u);
  const std::size_t p = common_prefix(u, w);
  const std::size_t diameter = u.depth() + w.depth() - 2 * p;
  auto on_geodesic = [&](std::size_t i) {
    const std::size_t up = u.depth() - p;
    return i <= up ? truncate(u, u.depth() - i) : truncate(w, p + (i - up));
  };
  if (diameter % 2 == 0) return on_geodesic(diameter / 2);
  VertexLabel a = on_geodesic(diameter / 2);
  VertexLabel b = on_geodesic(diameter / 2 + 1);
  return format_label(o, b) < format_label(o, a) ? b : a;
}

VertexLabel ray_point(const BaseOracle& o, const EndDescriptor& end, unsigned periods) {
  return to_vertex_label(o, mul(o, end.conjugator, power(o, end.period, periods)));
}

bool same_end(const BaseOracle& o, const EndDescriptor& a, const EndDescriptor& b) {
  constexpr unsigned kNear = 8, kFar = 16;
  const std::size_t near = common_prefix(ray_point(o, a, kNear), ray_point(o, b, kNear));
  const std::size_t far = common_prefix(ray_point(o, a, kFar), ray_point(o, b, kFar));
  const std::size_t step = std::min(a.translation_length, b.translation_length);
  return far >= near + (kFar - kNear) * step;
}

std::string to_string(DeltaPoint::Kind kind) {
  switch (kind) {
    case DeltaPoint::Kind::End: return "END";
    case DeltaPoint::Kind::Vertex: return "VERTEX";
    case DeltaPoint::Kind::PossiblyUnbounded: return "POSSIBLY_UNBOUNDED";
    case DeltaPoint::Kind::BeyondRadius: return "BEYOND_RADIUS";
  }
  return "UNKNOWN";
}

DeltaPoint delta(const BaseOracle& o, const HnnWord& gamma, unsigned radius) {
  if (is_trivial(o, gamma)) throw InvalidArgument("delta is undefined on the identity");
  IsometryClass cls = classify(o, gamma, 0);
  DeltaPoint point;
  if (cls.kind == IsometryKind::Hyperbolic) {
    point.kind = DeltaPoint::Kind::End;
    point.end = EndDescriptor{std::move(cls.conjugator), std::move(cls.core), cls.translation_length};
    return point;
  }
  const FixedSubtree fixed = fixed_subtree(o, gamma, radius);
  if (fixed.touches_boundary) {
    point.kind = DeltaPoint::Kind::PossiblyUnbounded;
  } else if (fixed.fixed.empty()) {
    point.kind = DeltaPoint::Kind::BeyondRadius;
  } else {
    point.kind = DeltaPoint::Kind::Vertex;
    point.vertex = center(o, fixed.fixed);
  }
  return point;
}

DeltaPoint act(const BaseOracle& o, const HnnWord& g, const DeltaPoint& point) {
  DeltaPoint out = point;
  if (point.kind == DeltaPoint::Kind::End) out.end.conjugator = mul(o, g, point.end.conjugator);
  if (point.kind == DeltaPoint::Kind::Vertex) out.vertex = act(o, g, point.vertex);
  return out;
}

std::vector<VertexLabel> axis_in_ball(const BaseOracle& o, const HnnWord& gamma, unsigned radius) {
  const IsometryClass cls = classify(o, gamma, 0);
  if (cls.kind != IsometryKind::Hyperbolic) throw NotHyperbolicError("element is elliptic; it has no axis");
  // Depth along a geodesic line is convex, so walk each direction until the
  // depth exceeds the radius while still increasing.
  std::vector<VertexLabel> out;
  VertexLabel origin = axis_vertex(o, cls.conjugator, cls.core, 0);
  const std::size_t origin_depth = origin.depth();
  if (origin_depth <= radius) out.push_back(std::move(origin));
  for (long long direction : {1LL, -1LL}) {
    std::size_t previous = origin_depth;
    for (long long s = direction;; s += direction) {
      VertexLabel v = axis_vertex(o, cls.conjugator, cls.core, s);
      const std::size_t depth = v.depth();
      if (depth <= radius) out.push_back(std::move(v));
      else if (depth > previous) break;
      previous = depth;
    }
  }
  sort_by_depth_then_key(o, out);
  return out;
}

std::size_t axes_overlap(const BaseOracle& o, const HnnWord& gamma1, const HnnWord& gamma2, unsigned radius) {
  std::set<std::string> first;
  for (const VertexLabel& v : axis_in_ball(o, gamma1, radius)) first.insert(format_label(o, v));
  std::size_t common = 0;
  for (const VertexLabel& v : axis_in_ball(o, gamma2, radius)) common += first.count(format_label(o, v));
  return common;
}

std::string tree_dot(const BaseOracle& o, unsigned radius, const std::optional<HnnWord>& gamma) {
  const std::vector<VertexLabel> vertices = ball(o, radius);
  std::ostringstream out;
  out << "digraph bass_serre {\n";
  for (const VertexLabel& v : vertices) out << "  \"" << format_label(o, v) << "\";\n";
  for (const VertexLabel& v : vertices) {
    for (const EdgeRef& e : neighbors(o, v)) {
      if (e.sign < 0) continue;
      const VertexLabel t = edge_target(o, e);
      if (t.depth() > radius) continue;
      out << "  \"" << format_label(o, v) << "\" -> \"" << format_label(o, t) << "\";\n";
    }
  }
  if (gamma) {
    for (const VertexLabel& v : vertices) {
      out << "  \"" << format_label(o, v) << "\" -> \"" << format_label(o, act(o, *gamma, v))
          << "\" [style=dashed];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace hnn
