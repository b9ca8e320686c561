#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hnn/group.hpp"

namespace hnn {

// Deterministic text and JSON renderings shared by the C API and the CLI.
// Text results end without a trailing newline; JSON results are compact.

enum class Format { Text, Json };

std::string report_reduce(const Group& group, const HnnWord& w, Format format);
std::string report_normal(const Group& group, const HnnWord& w, Format format);
std::string report_equals(const Group& group, const HnnWord& u, const HnnWord& v, Format format);
std::string report_length(const Group& group, const HnnWord& w, Format format);

/// Text: "ICC" or "NOT_ICC witness: w1, w2". JSON: {status, witness, evidence}.
std::string report_icc(const Group& group, Format format);
std::string report_orbit(const Group& group, const HnnWord& x, unsigned radius, Format format);
/// BS: folner_chain_bs. Z^d: folner_chain_ascending from e1.
std::string report_folner(const Group& group, unsigned k, const std::optional<HnnWord>& gamma, Format format);

std::string report_classify(const Group& group, const HnnWord& gamma, Format format);
std::string report_fixed(const Group& group, const HnnWord& gamma, unsigned radius, Format format);
std::string report_delta(const Group& group, const HnnWord& gamma, unsigned radius, Format format);
std::string report_overlap(const Group& group, const HnnWord& gamma1, const HnnWord& gamma2, unsigned radius,
                           Format format);
std::string report_witness_unbounded(const Group& group, unsigned count, Format format);
std::string report_escape(const Group& group, const std::vector<HnnWord>& elements, unsigned n_max, Format format);
std::string report_domj(const Group& group, unsigned j, Format format);

}  // namespace hnn
