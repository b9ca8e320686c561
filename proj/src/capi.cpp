#include "hnn/hnn.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "hnn/calculus.hpp"
#include "hnn/errors.hpp"
#include "hnn/group.hpp"
#include "hnn/report.hpp"
#include "hnn/tree.hpp"

struct hnn_group {
  hnn::Group group;
};

struct hnn_word {
  hnn::HnnWord word;
};

namespace {

thread_local std::string last_error;

template <typename F>
hnn_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return HNN_OK;
  } catch (const hnn::ParseError& e) {
    last_error = e.what();
    return HNN_ERR_PARSE;
  } catch (const hnn::DomainError& e) {
    last_error = e.what();
    return HNN_ERR_DOMAIN;
  } catch (const hnn::HypothesisError& e) {
    last_error = e.what();
    return HNN_ERR_HYPOTHESIS;
  } catch (const hnn::ExhaustedError& e) {
    last_error = e.what();
    return HNN_ERR_EXHAUSTED;
  } catch (const hnn::NotEllipticError& e) {
    last_error = e.what();
    return HNN_ERR_NOT_ELLIPTIC;
  } catch (const hnn::NotHyperbolicError& e) {
    last_error = e.what();
    return HNN_ERR_NOT_HYPERBOLIC;
  } catch (const hnn::InvalidArgument& e) {
    last_error = e.what();
    return HNN_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return HNN_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return HNN_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw hnn::InvalidArgument(std::string(what) + " is null");
}

hnn::Format to_format(hnn_format f) { return f == HNN_FORMAT_JSON ? hnn::Format::Json : hnn::Format::Text; }

hnn_word* wrap(hnn::HnnWord w) { return new hnn_word{std::move(w)}; }

template <typename Op>
hnn_status word_op(const hnn_group* g, hnn_word** out, Op&& op) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = wrap(op(g->group.oracle()));
  });
}

template <typename Op>
hnn_status string_op(const hnn_group* g, char** out, Op&& op) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = copy_string(op(g->group));
  });
}

}  // namespace

extern "C" {

const char* hnn_last_error_message(void) { return last_error.c_str(); }

const char* hnn_status_name(hnn_status status) {
  switch (status) {
    case HNN_OK: return "ok";
    case HNN_ERR_INVALID_ARGUMENT: return "invalid argument";
    case HNN_ERR_PARSE: return "parse error";
    case HNN_ERR_DOMAIN: return "domain error";
    case HNN_ERR_HYPOTHESIS: return "hypothesis violation";
    case HNN_ERR_EXHAUSTED: return "search exhausted";
    case HNN_ERR_NOT_ELLIPTIC: return "not elliptic";
    case HNN_ERR_NOT_HYPERBOLIC: return "not hyperbolic";
    case HNN_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void hnn_string_free(char* s) { std::free(s); }

hnn_status hnn_group_new_bs(int64_t m, int64_t n, hnn_group** out) {
  return guarded([&] {
    require(out, "out");
    *out = new hnn_group{hnn::Group::bs(m, n)};
  });
}

hnn_status hnn_group_new_zd(const char* matrix, hnn_group** out) {
  return guarded([&] {
    require(matrix, "matrix");
    require(out, "out");
    *out = new hnn_group{hnn::Group::zd(hnn::IntegerMatrix::parse(matrix))};
  });
}

void hnn_group_free(hnn_group* group) { delete group; }

hnn_status hnn_group_describe(const hnn_group* group, char** out) {
  return string_op(group, out, [](const hnn::Group& g) { return g.describe(); });
}

hnn_status hnn_word_parse(const hnn_group* group, const char* text, hnn_word** out) {
  return guarded([&] {
    require(group, "group");
    require(text, "text");
    require(out, "out");
    *out = wrap(group->group.parse(text));
  });
}

hnn_status hnn_word_to_string(const hnn_group* group, const hnn_word* word, char** out) {
  return string_op(group, out, [&](const hnn::Group& g) {
    require(word, "word");
    return g.format(word->word);
  });
}

void hnn_word_free(hnn_word* word) { delete word; }

hnn_status hnn_reduce(const hnn_group* group, const hnn_word* w, hnn_word** out) {
  return word_op(group, out, [&](const hnn::BaseOracle& o) {
    require(w, "word");
    return hnn::britton_reduce(o, w->word);
  });
}

hnn_status hnn_normalize(const hnn_group* group, const hnn_word* w, hnn_word** out) {
  return word_op(group, out, [&](const hnn::BaseOracle& o) {
    require(w, "word");
    return hnn::normalize(o, w->word).word();
  });
}

hnn_status hnn_mul(const hnn_group* group, const hnn_word* u, const hnn_word* v, hnn_word** out) {
  return word_op(group, out, [&](const hnn::BaseOracle& o) {
    require(u, "u");
    require(v, "v");
    return hnn::mul(o, u->word, v->word);
  });
}

hnn_status hnn_inverse(const hnn_group* group, const hnn_word* u, hnn_word** out) {
  return word_op(group, out, [&](const hnn::BaseOracle& o) {
    require(u, "u");
    return hnn::inv(o, u->word);
  });
}

hnn_status hnn_conjugate(const hnn_group* group, const hnn_word* g, const hnn_word* x, hnn_word** out) {
  return word_op(group, out, [&](const hnn::BaseOracle& o) {
    require(g, "g");
    require(x, "x");
    return hnn::conjugate(o, g->word, x->word);
  });
}

hnn_status hnn_equals(const hnn_group* group, const hnn_word* u, const hnn_word* v, int* out) {
  return guarded([&] {
    require(group, "group");
    require(u, "u");
    require(v, "v");
    require(out, "out");
    *out = hnn::equals(group->group.oracle(), u->word, v->word) ? 1 : 0;
  });
}

hnn_status hnn_length(const hnn_group* group, const hnn_word* w, size_t* out) {
  return guarded([&] {
    require(group, "group");
    require(w, "word");
    require(out, "out");
    *out = hnn::length(group->group.oracle(), w->word);
  });
}

hnn_status hnn_dom_phi_j(const hnn_group* group, unsigned j, char** out) {
  return string_op(group, out, [&](const hnn::Group& g) { return hnn::report_domj(g, j, hnn::Format::Text); });
}

hnn_status hnn_report_reduce(const hnn_group* group, const hnn_word* w, hnn_format format, char** out) {
  return string_op(group, out, [&](const hnn::Group& g) {
    require(w, "word");
    return hnn::report_reduce(g, w->word, to_format(format));
  });
}

hnn_status hnn_report_normal(const hnn_group* group, const hnn_word* w, hnn_format format, char** out) {
  return string_op(group, out, [&](const hnn::Group& g) {
    require(w, "word");
    return hnn::report_normal(g, w->word, to_format(format));
  });
}

hnn_status hnn_report_equals(const hnn_group* group, const hnn_word* u, const hnn_word* v, hnn_format format,
                             char** out) {
  return string_op(group, out, [&](const hnn::Group& g) {
    require(u, "u");
    require(v, "v");
    return hnn::report_equals(g, u->word, v->word, to_format(format));
  });
}

hnn_status hnn_report_length(const hnn_group* group, const hnn_word* w, hnn_format format, char** out) {
  return string_op(group, out, [&](const hnn::Group& g) {
    require(w, "word");
    return hnn::report_length(g, w->word, to_format(format));
  });
}

hnn_status hnn_report_icc(const hnn_group* group, hnn_format format, char** out) {
  return string_op(group, out, [&](const hnn::Group& g) { return hnn::report_icc(g, to_format(format)); });
}

hnn_status hnn_report_orbit(const hnn_group* group, const hnn_word* x, unsigned radius, hnn_format format,
                            char** out) {
  return string_op(group, out, [&](const hnn::Group& g) {
    require(x, "word");
    return hnn::report_orbit(g, x->word, radius, to_format(format));
  });
}

hnn_status hnn_report_folner(const hnn_group* group, unsigned k, const hnn_word* gamma, hnn_format format,
                             char** out) {
  return string_op(group, out, [&](const hnn::Group& g) {
    std::optional<hnn::HnnWord> gw;
    if (gamma) gw = gamma->word;
    return hnn::report_folner(g, k, gw, to_format(format));
  });
}

hnn_status hnn_report_classify(const hnn_group* group, const hnn_word* gamma, hnn_format format, char** out) {
  return string_op(group, out, [&](const hnn::Group& g) {
    require(gamma, "word");
    return hnn::report_classify(g, gamma->word, to_format(format));
  });
}

hnn_status hnn_report_fixed(const hnn_group* group, const hnn_word* gamma, unsigned radius, hnn_format format,
                            char** out) {
  return string_op(group, out, [&](const hnn::Group& g) {
    require(gamma, "word");
    return hnn::report_fixed(g, gamma->word, radius, to_format(format));
  });
}

hnn_status hnn_report_delta(const hnn_group* group, const hnn_word* gamma, unsigned radius, hnn_format format,
                            char** out) {
  return string_op(group, out, [&](const hnn::Group& g) {
    require(gamma, "word");
    return hnn::report_delta(g, gamma->word, radius, to_format(format));
  });
}

hnn_status hnn_report_overlap(const hnn_group* group, const hnn_word* gamma1, const hnn_word* gamma2,
                              unsigned radius, hnn_format format, char** out) {
  return string_op(group, out, [&](const hnn::Group& g) {
    require(gamma1, "first word");
    require(gamma2, "second word");
    return hnn::report_overlap(g, gamma1->word, gamma2->word, radius, to_format(format));
  });
}

hnn_status hnn_report_witness_unbounded(const hnn_group* group, unsigned count, hnn_format format, char** out) {
  return string_op(group, out,
                   [&](const hnn::Group& g) { return hnn::report_witness_unbounded(g, count, to_format(format)); });
}

hnn_status hnn_report_escape(const hnn_group* group, const hnn_word* const* words, size_t count, unsigned n_max,
                             hnn_format format, char** out) {
  return string_op(group, out, [&](const hnn::Group& g) {
    if (count) require(words, "words");
    std::vector<hnn::HnnWord> elements;
    for (size_t i = 0; i < count; ++i) {
      require(words[i], "word");
      elements.push_back(words[i]->word);
    }
    return hnn::report_escape(g, elements, n_max, to_format(format));
  });
}

hnn_status hnn_report_domj(const hnn_group* group, unsigned j, hnn_format format, char** out) {
  return string_op(group, out, [&](const hnn::Group& g) { return hnn::report_domj(g, j, to_format(format)); });
}

hnn_status hnn_tree_dot(const hnn_group* group, unsigned radius, const hnn_word* gamma, char** out) {
  return string_op(group, out, [&](const hnn::Group& g) {
    std::optional<hnn::HnnWord> gw;
    if (gamma) gw = gamma->word;
    return hnn::tree_dot(g.oracle(), radius, gw);
  });
}

}  // extern "C"
