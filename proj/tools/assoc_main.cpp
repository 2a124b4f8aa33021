// Command-line surface. Every command is a thin adapter over the library;
// exit codes: 0 success, 1 domain error (parse/inapplicable), 2 verification
// violations found, 3 usage error.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "assoc/fgroup.hpp"
#include "assoc/graph.hpp"
#include "assoc/verify.hpp"

namespace {

using nlohmann::ordered_json;

struct CliConfig {
  bool json = false;
  int max_n = 0;  // 0 = unset
  unsigned seed = 0;
  int jobs = 1;
  int env_cap = assoc::kDefaultLeafCap;

  // Leaf cap for enum/graph; ASSOC_MAX_N provides the default, --max-n wins.
  int cap() const { return max_n > 0 ? max_n : env_cap; }
  // Range for verify; the environment cap does not apply here.
  int range_or(int suite_default) const { return max_n > 0 ? max_n : suite_default; }
};

void emit(const CliConfig& cfg, const ordered_json& json_payload, const std::string& text) {
  if (cfg.json) {
    std::cout << json_payload.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int cmd_norm(const CliConfig& cfg, const std::string& expr_text) {
  const assoc::Expression e = assoc::parse(expr_text);
  const std::string word = assoc::word_to_string(assoc::normalize_word(e));
  const std::string target = assoc::render(assoc::left_comb(e.leaf_count()));
  emit(cfg, ordered_json{{"word", word}, {"target", target}}, word + "\n" + target + "\n");
  return 0;
}

int cmd_iso(const CliConfig& cfg, const std::string& source_text, const std::string& target_text) {
  const assoc::Expression source = assoc::parse(source_text);
  const assoc::Expression target = assoc::parse(target_text);
  const std::string word =
      assoc::word_to_string(assoc::free_reduce(assoc::canonical_iso(source, target)));
  emit(cfg, ordered_json{{"word", word}}, word + "\n");
  return 0;
}

int cmd_apply(const CliConfig& cfg, const std::string& word_text, const std::string& expr_text) {
  const assoc::Expression result =
      assoc::apply_word(assoc::parse_word(word_text), assoc::parse(expr_text));
  emit(cfg, ordered_json{{"expr", assoc::render(result)}}, assoc::render(result) + "\n");
  return 0;
}

int cmd_enum(const CliConfig& cfg, int n) {
  const std::vector<assoc::Expression> all = assoc::enumerate_expressions(n, cfg.cap());
  if (cfg.json) {
    auto texts = ordered_json::array();
    for (const assoc::Expression& e : all) texts.push_back(assoc::render(e));
    std::cout << ordered_json{{"n", n}, {"count", all.size()}, {"expressions", texts}}.dump(2) << "\n";
  } else {
    for (const assoc::Expression& e : all) std::cout << assoc::render(e) << "\n";
  }
  return 0;
}

int cmd_graph(const CliConfig& cfg, int n, bool full) {
  const std::string dot = assoc::rotation_graph_dot(n, full, cfg.cap());
  if (cfg.json) {
    const auto nodes = assoc::enumerate_expressions(n, cfg.cap()).size();
    const auto edges = assoc::rotation_edges(n, full, cfg.cap()).size();
    std::cout << ordered_json{{"n", n}, {"full", full}, {"nodes", nodes}, {"edges", edges}, {"dot", dot}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << dot;
  }
  return 0;
}

int cmd_rotate(const CliConfig& cfg, const std::string& expr_text, const std::string& addr_text) {
  const assoc::Expression result =
      assoc::rotate_at(assoc::parse(expr_text), assoc::NodeAddress::parse(addr_text));
  emit(cfg, ordered_json{{"expr", assoc::render(result)}}, assoc::render(result) + "\n");
  return 0;
}

int cmd_express(const CliConfig& cfg, const std::string& expr_text, const std::string& addr_text) {
  const assoc::Expression e = assoc::parse(expr_text);
  const assoc::Expression rotated = assoc::rotate_at(e, assoc::NodeAddress::parse(addr_text));
  const std::string word = assoc::word_to_string(assoc::free_reduce(assoc::canonical_iso(e, rotated)));
  emit(cfg, ordered_json{{"word", word}, {"target", assoc::render(rotated)}},
       word + "\n" + assoc::render(rotated) + "\n");
  return 0;
}

int emit_pair(const CliConfig& cfg, const assoc::TreePair& p) {
  const std::string word = assoc::word_to_string(assoc::canonical_word(p));
  const std::string pair = assoc::pair_to_string(p);
  emit(cfg, ordered_json{{"word", word}, {"pair", pair}}, word + "\n" + pair + "\n");
  return 0;
}

int cmd_f_mul(const CliConfig& cfg, const std::string& left, const std::string& right) {
  return emit_pair(cfg, assoc::multiply(assoc::from_word(assoc::parse_word(left)),
                                        assoc::from_word(assoc::parse_word(right))));
}

int cmd_f_inv(const CliConfig& cfg, const std::string& word_text) {
  return emit_pair(cfg, assoc::invert(assoc::from_word(assoc::parse_word(word_text))));
}

int cmd_f_canon(const CliConfig& cfg, const std::string& word_text) {
  const std::string word =
      assoc::word_to_string(assoc::canonical_word(assoc::from_word(assoc::parse_word(word_text))));
  emit(cfg, ordered_json{{"word", word}}, word + "\n");
  return 0;
}

int cmd_f_pair(const CliConfig& cfg, const std::string& word_text) {
  const std::string pair = assoc::pair_to_string(assoc::from_word(assoc::parse_word(word_text)));
  emit(cfg, ordered_json{{"pair", pair}}, pair + "\n");
  return 0;
}

int cmd_f_eq(const CliConfig& cfg, const std::string& left, const std::string& right) {
  const bool same = assoc::equal(assoc::from_word(assoc::parse_word(left)),
                                 assoc::from_word(assoc::parse_word(right)));
  emit(cfg, ordered_json{{"equal", same}}, std::string(same ? "true" : "false") + "\n");
  return 0;
}

struct SuiteEntry {
  const char* name;
  int default_range;
  assoc::VerificationReport (*run)(int, const assoc::SuiteOptions&);
};

constexpr SuiteEntry kSuites[] = {
    {"observations", 10, &assoc::check_observations},
    {"lemma", 8, &assoc::check_lemma_uniqueness},
    {"rectangle", 9, &assoc::check_rectangle},
    {"parallel", 6, &assoc::check_parallel_paths},
    {"pentagon", 7, &assoc::check_pentagon},
    {"presentation", 8, &assoc::check_presentation},
};

int cmd_verify(const CliConfig& cfg, const std::string& suite) {
  assoc::SuiteOptions opts;
  opts.jobs = cfg.jobs;
  opts.seed = cfg.seed;
  std::vector<assoc::VerificationReport> reports;
  for (const SuiteEntry& entry : kSuites) {
    if (suite == "all" || suite == entry.name) {
      reports.push_back(entry.run(cfg.range_or(entry.default_range), opts));
    }
  }
  if (cfg.json) {
    if (reports.size() == 1) {
      std::cout << assoc::report_to_json(reports[0]).dump(2) << "\n";
    } else {
      auto arr = ordered_json::array();
      for (const auto& r : reports) arr.push_back(assoc::report_to_json(r));
      std::cout << arr.dump(2) << "\n";
    }
  } else {
    for (std::size_t k = 0; k < reports.size(); ++k) {
      if (k) std::cout << "\n";
      std::cout << assoc::report_to_text(reports[k]);
    }
  }
  for (const auto& r : reports) {
    if (!r.passed()) return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parenthesized expressions, spine rotations, and Thompson's group F"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  CliConfig cfg;
  if (const char* env = std::getenv("ASSOC_MAX_N")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != nullptr && *end == '\0' && value >= 1 && value <= 1000000) {
      cfg.env_cap = static_cast<int>(value);
    }
  }
  app.add_flag("--json", cfg.json, "emit JSON instead of plain text");
  app.add_option("--max-n", cfg.max_n, "leaf-count cap; for verify, overrides the suite range")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for randomized extensions");
  app.add_option("--jobs", cfg.jobs, "worker threads for verification suites")->check(CLI::PositiveNumber);

  std::string expr_a, expr_b, word_a, word_b, addr_text, suite;
  int n = 0;
  bool full = false;

  CLI::App* norm = app.add_subcommand("norm", "normalization word and left comb of an expression");
  norm->add_option("expr", expr_a, "expression text")->required();

  CLI::App* iso = app.add_subcommand("iso", "canonical word from one expression to another");
  iso->add_option("source", expr_a, "source expression")->required();
  iso->add_option("target", expr_b, "target expression")->required();

  CLI::App* apply = app.add_subcommand("apply", "apply a word to an expression");
  apply->add_option("word", word_a, "word, e.g. 'a0 a1' or '-'")->required();
  apply->add_option("expr", expr_a, "expression text")->required();

  CLI::App* enum_cmd = app.add_subcommand("enum", "list all expressions on n leaves");
  enum_cmd->add_option("n", n, "leaf count")->required()->check(CLI::PositiveNumber);

  CLI::App* graph = app.add_subcommand("graph", "rotation graph in DOT form");
  graph->add_option("n", n, "leaf count")->required()->check(CLI::PositiveNumber);
  graph->add_flag("--full", full, "also include non-spine rotations");

  CLI::App* rotate = app.add_subcommand("rotate", "left rotation at a node address");
  rotate->add_option("expr", expr_a, "expression text")->required();
  rotate->add_option("address", addr_text, "address over {L,R}; '-' is the root")->required();

  CLI::App* express = app.add_subcommand("express", "write a rotation as a word in the generators");
  express->add_option("expr", expr_a, "expression text")->required();
  express->add_option("address", addr_text, "address over {L,R}; '-' is the root")->required();

  CLI::App* f = app.add_subcommand("f", "group arithmetic on words");
  f->require_subcommand(1);
  CLI::App* f_mul = f->add_subcommand("mul", "product of two words");
  f_mul->add_option("left", word_a)->required();
  f_mul->add_option("right", word_b)->required();
  CLI::App* f_inv = f->add_subcommand("inv", "inverse of a word");
  f_inv->add_option("word", word_a)->required();
  CLI::App* f_canon = f->add_subcommand("canon", "canonical word of a word");
  f_canon->add_option("word", word_a)->required();
  CLI::App* f_pair = f->add_subcommand("pair", "reduced tree pair of a word");
  f_pair->add_option("word", word_a)->required();
  CLI::App* f_eq = f->add_subcommand("eq", "whether two words are the same group element");
  f_eq->add_option("left", word_a)->required();
  f_eq->add_option("right", word_b)->required();

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember(
          {"observations", "lemma", "rectangle", "parallel", "pentagon", "presentation", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    if (norm->parsed()) return cmd_norm(cfg, expr_a);
    if (iso->parsed()) return cmd_iso(cfg, expr_a, expr_b);
    if (apply->parsed()) return cmd_apply(cfg, word_a, expr_a);
    if (enum_cmd->parsed()) return cmd_enum(cfg, n);
    if (graph->parsed()) return cmd_graph(cfg, n, full);
    if (rotate->parsed()) return cmd_rotate(cfg, expr_a, addr_text);
    if (express->parsed()) return cmd_express(cfg, expr_a, addr_text);
    if (f->parsed()) {
      if (f_mul->parsed()) return cmd_f_mul(cfg, word_a, word_b);
      if (f_inv->parsed()) return cmd_f_inv(cfg, word_a);
      if (f_canon->parsed()) return cmd_f_canon(cfg, word_a);
      if (f_pair->parsed()) return cmd_f_pair(cfg, word_a);
      if (f_eq->parsed()) return cmd_f_eq(cfg, word_a, word_b);
    }
    if (verify->parsed()) return cmd_verify(cfg, suite);
  } catch (const assoc::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 3;
}
