#include "hnn/report.hpp"

#include <json.hpp>

#include "hnn/analysis.hpp"
#include "hnn/calculus.hpp"
#include "hnn/errors.hpp"
#include "hnn/tree.hpp"

namespace hnn {

namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string lines(const std::vector<std::string>& parts) { return join(parts, "\n"); }

std::vector<std::string> labels(const BaseOracle& o, const std::vector<VertexLabel>& vs) {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (const VertexLabel& v : vs) out.push_back(format_label(o, v));
  return out;
}

json verdict_json(const Group& group, const IccVerdict& v) {
  json witness = json::array();
  for (const HnnWord& w : v.witness) witness.push_back(group.format(w));
  json evidence = json::array();
  for (const OrbitGrowth& g : v.evidence) evidence.push_back({{"radius", g.radius}, {"orbit_size", g.orbit_size}});
  return {{"status", to_string(v.status)}, {"witness", witness}, {"evidence", evidence}};
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string report_reduce(const Group& group, const HnnWord& w, Format format) {
  const std::string s = group.format(britton_reduce(group.oracle(), w));
  return format == Format::Json ? dump({{"reduced", s}}) : s;
}

std::string report_normal(const Group& group, const HnnWord& w, Format format) {
  const std::string s = format_word(group.oracle(), normalize(group.oracle(), w));
  return format == Format::Json ? dump({{"normal_form", s}}) : s;
}

std::string report_equals(const Group& group, const HnnWord& u, const HnnWord& v, Format format) {
  const bool eq = equals(group.oracle(), u, v);
  return format == Format::Json ? dump({{"equal", eq}}) : bool_text(eq);
}

std::string report_length(const Group& group, const HnnWord& w, Format format) {
  const std::size_t n = length(group.oracle(), w);
  return format == Format::Json ? dump({{"length", n}}) : std::to_string(n);
}

std::string report_icc(const Group& group, Format format) {
  const IccVerdict v = icc_decide(group);
  if (format == Format::Json) return dump(verdict_json(group, v));
  std::string out = to_string(v.status);
  if (!v.witness.empty()) {
    std::vector<std::string> ws;
    for (const HnnWord& w : v.witness) ws.push_back(group.format(w));
    out += " witness: " + join(ws, ", ");
  }
  return out;
}

std::string report_orbit(const Group& group, const HnnWord& x, unsigned radius, Format format) {
  const std::vector<NormalForm> orbit = orbit_sample(group, x, radius);
  std::vector<std::string> words;
  for (const NormalForm& nf : orbit) words.push_back(format_word(group.oracle(), nf));
  if (format == Format::Text) return lines(words);
  json j = verdict_json(group, IccVerdict{IccStatus::Empirical, {}, {OrbitGrowth{radius, orbit.size()}}});
  j["orbit"] = words;
  return dump(j);
}

std::string report_folner(const Group& group, unsigned k, const std::optional<HnnWord>& gamma, Format format) {
  const BaseOracle& o = group.oracle();
  FolnerChain chain;
  if (group.is_bs()) {
    chain = folner_chain_bs(group.bs_params().m, group.bs_params().n, k);
  } else {
    chain = folner_chain_ascending(o, o.generators().front(), k);
  }
  std::optional<ExactRatio> ratio;
  if (gamma) ratio = symdiff_ratio(o, chain, *gamma);

  std::vector<std::string> elements;
  for (const BaseElement& h : chain.elements) elements.push_back(o.format(h));
  std::vector<std::string> exponents;
  if (group.is_bs()) {
    for (const BaseElement& h : chain.elements) exponents.push_back(to_string(BsOracle::exponent(h)));
  }

  if (format == Format::Json) {
    json j{{"group", chain.group}, {"k", chain.k}, {"elements", elements}};
    if (group.is_bs()) j["exponents"] = exponents;
    if (ratio) {
      j["gamma"] = group.format(*gamma);
      j["ratio"] = to_string(*ratio);
    }
    return dump(j);
  }
  std::vector<std::string> out{"group: " + chain.group, "k: " + std::to_string(chain.k)};
  if (group.is_bs()) out.push_back("exponents: " + join(exponents, " "));
  for (std::size_t i = 0; i < elements.size(); ++i) out.push_back("h" + std::to_string(i) + ": " + elements[i]);
  if (ratio) out.push_back("ratio: " + to_string(*ratio));
  return lines(out);
}

std::string report_classify(const Group& group, const HnnWord& gamma, Format format) {
  const BaseOracle& o = group.oracle();
  const IsometryClass c = classify(o, gamma);
  const bool elliptic = c.kind == IsometryKind::Elliptic;
  if (format == Format::Json) {
    json j{{"kind", to_string(c.kind)}, {"conjugator", group.format(c.conjugator)}, {"core", group.format(c.core)}};
    if (elliptic) {
      j["fixed_vertex"] = format_label(o, c.fixed_vertex);
    } else {
      j["translation_length"] = c.translation_length;
      j["axis_sample"] = labels(o, c.axis_sample);
    }
    return dump(j);
  }
  if (elliptic) return to_string(c.kind) + " fixed_vertex: " + format_label(o, c.fixed_vertex);
  return to_string(c.kind) + " translation_length: " + std::to_string(c.translation_length);
}

std::string report_fixed(const Group& group, const HnnWord& gamma, unsigned radius, Format format) {
  const BaseOracle& o = group.oracle();
  const FixedSubtree f = fixed_subtree(o, gamma, radius);
  const std::vector<std::string> vs = labels(o, f.fixed);
  if (format == Format::Json) return dump({{"radius", radius}, {"fixed", vs}, {"touches_boundary", f.touches_boundary}});
  std::vector<std::string> out = vs;
  out.push_back(std::string("touches_boundary: ") + bool_text(f.touches_boundary));
  return lines(out);
}

std::string report_delta(const Group& group, const HnnWord& gamma, unsigned radius, Format format) {
  const BaseOracle& o = group.oracle();
  const DeltaPoint p = delta(o, gamma, radius);
  json j{{"kind", to_string(p.kind)}};
  std::string text = to_string(p.kind);
  if (p.kind == DeltaPoint::Kind::End) {
    j["conjugator"] = group.format(p.end.conjugator);
    j["period"] = group.format(p.end.period);
    j["translation_length"] = p.end.translation_length;
    text += " conjugator: " + group.format(p.end.conjugator) + " period: " + group.format(p.end.period);
  } else if (p.kind == DeltaPoint::Kind::Vertex) {
    j["vertex"] = format_label(o, p.vertex);
    text += " " + format_label(o, p.vertex);
  }
  return format == Format::Json ? dump(j) : text;
}

std::string report_overlap(const Group& group, const HnnWord& gamma1, const HnnWord& gamma2, unsigned radius,
                           Format format) {
  const std::size_t n = axes_overlap(group.oracle(), gamma1, gamma2, radius);
  return format == Format::Json ? dump({{"radius", radius}, {"overlap", n}}) : std::to_string(n);
}

std::string report_witness_unbounded(const Group& group, unsigned count, Format format) {
  const BsParams& p = group.bs_params();
  const FixedFamily family = unbounded_fixed_witness_bs(p.m, p.n);
  std::vector<std::string> vs;
  for (unsigned l = 0; l < count; ++l) vs.push_back(format_label(group.oracle(), family.vertex(group.oracle(), l)));
  if (format == Format::Json) {
    return dump({{"gamma", group.format(family.gamma)},
                 {"step", group.format(family.step)},
                 {"distance_per_step", family.distance_per_step},
                 {"vertices", vs}});
  }
  std::vector<std::string> out{"gamma: " + group.format(family.gamma), "step: " + group.format(family.step)};
  for (const std::string& v : vs) out.push_back(v);
  return lines(out);
}

std::string report_escape(const Group& group, const std::vector<HnnWord>& elements, unsigned n_max, Format format) {
  const EscapeResult r = escape_exponent(group, elements, n_max);
  if (format == Format::Text) return std::to_string(r.exponent);
  json trace = json::array();
  for (const EscapeStep& s : r.trace) trace.push_back({{"exponent", s.exponent}, {"still_in_base", s.still_in_base}});
  return dump({{"exponent", r.exponent}, {"trace", trace}});
}

std::string report_domj(const Group& group, unsigned j, Format format) {
  if (j == 0) throw InvalidArgument("j must be at least 1");
  const std::string g = to_string(dom_phi_j_closed_form(group.bs_params(), j));
  return format == Format::Json ? dump({{"j", j}, {"generator", g}}) : g;
}

}  // namespace hnn
