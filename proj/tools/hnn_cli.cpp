#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hnn/hnn.h"

namespace {

struct Options {
  std::optional<std::int64_t> m, n;
  std::optional<std::string> matrix;
  bool json = false;
};

class CliError {
 public:
  CliError(hnn_status status, std::string message) : status_(status), message_(std::move(message)) {}
  hnn_status status() const { return status_; }
  const std::string& message() const { return message_; }

 private:
  hnn_status status_;
  std::string message_;
};

void check(hnn_status s) {
  if (s != HNN_OK) throw CliError(s, hnn_last_error_message());
}

struct GroupHandle {
  hnn_group* g = nullptr;
  ~GroupHandle() { hnn_group_free(g); }
};

struct WordHandle {
  hnn_word* w = nullptr;
  WordHandle() = default;
  WordHandle(WordHandle&& o) noexcept : w(o.w) { o.w = nullptr; }
  WordHandle(const WordHandle&) = delete;
  ~WordHandle() { hnn_word_free(w); }
};

void open_group(const Options& opt, GroupHandle& out) {
  if (opt.matrix) {
    if (opt.m || opt.n) throw CliError(HNN_ERR_INVALID_ARGUMENT, "give either --matrix or --m/--n, not both");
    check(hnn_group_new_zd(opt.matrix->c_str(), &out.g));
    return;
  }
  if (!opt.m || !opt.n) throw CliError(HNN_ERR_INVALID_ARGUMENT, "a group is required: --m M --n N or --matrix ROWS");
  check(hnn_group_new_bs(*opt.m, *opt.n, &out.g));
}

WordHandle parse(const GroupHandle& g, const std::string& text) {
  WordHandle w;
  check(hnn_word_parse(g.g, text.c_str(), &w.w));
  return w;
}

// Takes the out-parameter itself: the producing call runs before it is read.
void emit(hnn_status s, char** out) {
  check(s);
  char* text = *out;
  std::fputs(text, stdout);
  if (!*text || text[std::char_traits<char>::length(text) - 1] != '\n') std::fputc('\n', stdout);
  hnn_string_free(text);
}

int exit_code(hnn_status s) { return s == HNN_ERR_HYPOTHESIS ? 2 : 1; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word calculus, ICC decisions and Bass-Serre trees for HNN extensions"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--m", opt.m, "BS(m,n) parameter m");
  app.add_option("--n", opt.n, "BS(m,n) parameter n");
  app.add_option("--matrix", opt.matrix, "Z^d automorphism, rows separated by ';', entries by ','");
  app.add_flag("--json", opt.json, "JSON output");

  std::function<void()> action;
  GroupHandle group;
  auto fmt = [&] { return opt.json ? HNN_FORMAT_JSON : HNN_FORMAT_TEXT; };

  std::string word1, word2;
  std::vector<std::string> words;
  unsigned radius = 0, k = 0, j = 0, n_max = 64;
  std::optional<std::string> gamma;

  auto one_word = [&](const char* name, const char* help,
                      std::function<hnn_status(const hnn_word*, char**)> op) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("word", word1, "word")->required();
    sub->callback([&, op] {
      action = [&, op] {
        open_group(opt, group);
        WordHandle w = parse(group, word1);
        char* out = nullptr;
        emit(op(w.w, &out), &out);
      };
    });
    return sub;
  };

  one_word("reduce", "Britton-reduced form", [&](const hnn_word* w, char** out) {
    return hnn_report_reduce(group.g, w, fmt(), out);
  });
  one_word("normal", "normal form", [&](const hnn_word* w, char** out) {
    return hnn_report_normal(group.g, w, fmt(), out);
  });
  one_word("len", "stable-letter length", [&](const hnn_word* w, char** out) {
    return hnn_report_length(group.g, w, fmt(), out);
  });
  one_word("classify", "elliptic or hyperbolic", [&](const hnn_word* w, char** out) {
    return hnn_report_classify(group.g, w, fmt(), out);
  });
  one_word("orbit", "conjugates by the generator ball", [&](const hnn_word* w, char** out) {
    return hnn_report_orbit(group.g, w, radius, fmt(), out);
  })->add_option("--radius", radius)->required();
  one_word("fixed", "fixed vertices within a ball", [&](const hnn_word* w, char** out) {
    return hnn_report_fixed(group.g, w, radius, fmt(), out);
  })->add_option("--radius", radius)->required();
  one_word("delta", "end or fixed-set center", [&](const hnn_word* w, char** out) {
    return hnn_report_delta(group.g, w, radius, fmt(), out);
  })->add_option("--radius", radius)->required();

  auto two_words = [&](const char* name, const char* help,
                       std::function<hnn_status(const hnn_word*, const hnn_word*, char**)> op) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("first", word1, "word")->required();
    sub->add_option("second", word2, "word")->required();
    sub->callback([&, op] {
      action = [&, op] {
        open_group(opt, group);
        WordHandle u = parse(group, word1);
        WordHandle v = parse(group, word2);
        char* out = nullptr;
        emit(op(u.w, v.w, &out), &out);
      };
    });
    return sub;
  };
  two_words("eq", "equality in the group", [&](const hnn_word* u, const hnn_word* v, char** out) {
    return hnn_report_equals(group.g, u, v, fmt(), out);
  });
  two_words("overlap", "common axis vertices within a ball", [&](const hnn_word* u, const hnn_word* v, char** out) {
    return hnn_report_overlap(group.g, u, v, radius, fmt(), out);
  })->add_option("--radius", radius)->required();

  app.add_subcommand("icc", "ICC decision")->callback([&] {
    action = [&] {
      open_group(opt, group);
      char* out = nullptr;
      emit(hnn_report_icc(group.g, fmt(), &out), &out);
    };
  });

  CLI::App* folner = app.add_subcommand("folner", "Folner-type chain and symmetric-difference ratio");
  folner->add_option("--k", k)->required();
  folner->add_option("--gamma", gamma);
  folner->callback([&] {
    action = [&] {
      open_group(opt, group);
      std::optional<WordHandle> g;
      if (gamma) g.emplace(parse(group, *gamma));
      char* out = nullptr;
      emit(hnn_report_folner(group.g, k, g ? g->w : nullptr, fmt(), &out), &out);
    };
  });

  app.add_subcommand("witness-unbounded", "element fixing an unbounded subtree")->callback([&] {
    action = [&] {
      open_group(opt, group);
      char* out = nullptr;
      emit(hnn_report_witness_unbounded(group.g, 6, fmt(), &out), &out);
    };
  });

  CLI::App* escape = app.add_subcommand("escape", "escape exponent of a finite set");
  escape->add_option("words", words, "words")->required();
  escape->add_option("--max", n_max);
  escape->callback([&] {
    action = [&] {
      open_group(opt, group);
      std::vector<WordHandle> handles;
      std::vector<const hnn_word*> raw;
      for (const std::string& w : words) {
        handles.push_back(parse(group, w));
        raw.push_back(handles.back().w);
      }
      char* out = nullptr;
      emit(hnn_report_escape(group.g, raw.data(), raw.size(), n_max, fmt(), &out), &out);
    };
  });

  CLI::App* dot = app.add_subcommand("tree-dot", "ball of the Bass-Serre tree as DOT");
  dot->add_option("--radius", radius)->required();
  dot->add_option("--gamma", gamma);
  dot->callback([&] {
    action = [&] {
      open_group(opt, group);
      std::optional<WordHandle> g;
      if (gamma) g.emplace(parse(group, *gamma));
      char* out = nullptr;
      emit(hnn_tree_dot(group.g, radius, g ? g->w : nullptr, &out), &out);
    };
  });

  CLI::App* domj = app.add_subcommand("domj", "generator of Dom(phi^j)");
  domj->add_option("--j", j)->required();
  domj->callback([&] {
    action = [&] {
      open_group(opt, group);
      char* out = nullptr;
      emit(hnn_report_domj(group.g, j, fmt(), &out), &out);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    action();
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s: %s\n", hnn_status_name(e.status()), e.message().c_str());
    return exit_code(e.status());
  }
  return 0;
}
