#include "assoc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdio>
#include <map>
#include <thread>
#include <utility>

namespace assoc {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Sink {
  long long checked = 0;
  std::vector<Violation> violations;

  void fail(std::string input, std::string message) {
    violations.push_back(Violation{std::move(input), std::move(message)});
  }
};

// Workers get contiguous chunks, so the merged violation order does not
// depend on the job count.
void run_cases(std::size_t count, int jobs, const std::function<void(std::size_t, Sink&)>& body,
               VerificationReport& report) {
  if (count == 0) return;
  jobs = std::clamp(jobs, 1, static_cast<int>(std::min<std::size_t>(count, 256)));
  std::vector<Sink> sinks(static_cast<std::size_t>(jobs));
  if (jobs == 1) {
    for (std::size_t k = 0; k < count; ++k) body(k, sinks[0]);
  } else {
    const std::size_t chunk = (count + sinks.size() - 1) / sinks.size();
    std::vector<std::thread> workers;
    workers.reserve(sinks.size());
    for (std::size_t w = 0; w < sinks.size(); ++w) {
      const std::size_t lo = w * chunk;
      const std::size_t hi = std::min(count, lo + chunk);
      workers.emplace_back([&body, &sinks, w, lo, hi] {
        for (std::size_t k = lo; k < hi; ++k) body(k, sinks[w]);
      });
    }
    for (std::thread& t : workers) t.join();
  }
  for (Sink& s : sinks) {
    report.cases_checked += s.checked;
    for (Violation& v : s.violations) report.violations.push_back(std::move(v));
  }
}

struct ExprCase {
  int n;
  Expression e;
};

std::vector<ExprCase> expression_cases(int n_min, int n_max) {
  std::vector<ExprCase> cases;
  for (int n = n_min; n <= n_max; ++n) {
    for (const Expression& e : enumerate_expressions(n, n)) cases.push_back(ExprCase{n, e});
  }
  return cases;
}

void fill_per_n(const std::vector<ExprCase>& cases, VerificationReport& report) {
  for (const ExprCase& c : cases) {
    if (!report.cases_per_n.empty() && report.cases_per_n.back().first == c.n) {
      ++report.cases_per_n.back().second;
    } else {
      report.cases_per_n.emplace_back(c.n, 1);
    }
  }
}

Expression apply_word_via(const MoveTable& mv, const Word& w, Expression e) {
  for (const GeneratorLetter& letter : w) {
    e = letter.sign > 0 ? mv.apply_alpha(letter.index, e) : mv.apply_alpha_inv(letter.index, e);
  }
  return e;
}

TreePair from_word_via(const MoveTable& mv, const Word& w) {
  TreePair acc;
  for (const GeneratorLetter& letter : w) {
    auto [source, target] = mv.generator_template(letter.index);
    acc = multiply(acc, letter.sign > 0 ? TreePair(source, target) : TreePair(target, source));
  }
  return acc;
}

std::string metrics_text(const Metrics& m) {
  return "(level " + std::to_string(m.level) + ", weight " + std::to_string(m.weight) + ")";
}

}  // namespace

VerificationReport check_observations(int n_max, const SuiteOptions& opts) {
  if (n_max < 1) throw Error("n_max must be at least 1, got " + std::to_string(n_max));
  const auto t0 = Clock::now();
  VerificationReport report;
  report.suite = "observations";
  report.n_min = 1;
  report.n_max = n_max;
  const std::vector<ExprCase> cases = expression_cases(1, n_max);
  fill_per_n(cases, report);
  const MoveTable& mv = opts.moves;

  run_cases(cases.size(), opts.jobs, [&](std::size_t k, Sink& sink) {
    const auto& [n, e] = cases[k];
    ++sink.checked;
    const std::string input = render(e);
    try {
      const Metrics m = metrics(e);
      for (int i = 0; i <= n; ++i) {
        if (!mv.can_apply(i, e)) continue;
        if (i > n - 3) {
          sink.fail(input, "A2: a" + std::to_string(i) + " applies but " + std::to_string(i) +
                               " > n-3 = " + std::to_string(n - 3));
        }
        if (i < m.level) {
          sink.fail(input, "A3: a" + std::to_string(i) + " applies but " + std::to_string(i) +
                               " < normalization level " + std::to_string(m.level));
        }
        const Expression once = mv.apply_alpha(i, e);
        const Expression twice = mv.apply_alpha(i, e);
        if (!(once == twice)) {
          sink.fail(input, "A1: a" + std::to_string(i) + " gave two different targets from one source");
        }
        if (once.leaf_count() != n) {
          sink.fail(input, "a" + std::to_string(i) + " changed the leaf count from " + std::to_string(n) +
                               " to " + std::to_string(once.leaf_count()));
        }
        if (m.weight > 1 && i > m.level) {
          const Metrics mt = metrics(once);
          if (!(mt == m)) {
            sink.fail(input, "A4: a" + std::to_string(i) + " target metrics " + metrics_text(mt) +
                                 " differ from " + metrics_text(m));
          }
        }
      }
      if (m.weight > 1) {
        if (!mv.can_apply(m.level, e)) {
          sink.fail(input, "A5: a" + std::to_string(m.level) + " is not applicable at the normalization level");
        } else {
          const Metrics mt = metrics(mv.apply_alpha(m.level, e));
          const bool advanced = mt.level > m.level || (mt.level == m.level && mt.weight < m.weight);
          if (!advanced) {
            sink.fail(input, "A5: target metrics " + metrics_text(mt) + " do not advance past " +
                                 metrics_text(m));
          }
        }
      }
    } catch (const std::exception& ex) {
      sink.fail(input, std::string("unexpected error: ") + ex.what());
    }
  }, report);

  report.elapsed_ms = ms_since(t0);
  return report;
}

namespace {

// Brute-force search over positive non-decreasing-index words from `start`
// to the left comb. The node budget and length bound only trip on corrupted
// move tables; honest tables cannot cycle.
struct OrderedWordSearch {
  const MoveTable& mv;
  int n;
  Expression target;
  std::size_t max_len;
  long long budget = 1000000;
  int found = 0;
  Word first{};
  bool too_long = false;
  bool out_of_budget = false;

  void run(const Expression& cur, int min_index, Word& word) {
    if (out_of_budget || found > 4) return;
    if (--budget < 0) {
      out_of_budget = true;
      return;
    }
    if (cur == target) {
      if (found == 0) first = word;
      ++found;
      return;
    }
    if (word.size() >= max_len) {
      too_long = true;
      return;
    }
    for (int i = min_index; i <= n; ++i) {
      if (!mv.can_apply(i, cur)) continue;
      word.push_back(alpha(i));
      run(mv.apply_alpha(i, cur), i, word);
      word.pop_back();
    }
  }
};

}  // namespace

VerificationReport check_lemma_uniqueness(int n_max, const SuiteOptions& opts) {
  if (n_max < 1) throw Error("n_max must be at least 1, got " + std::to_string(n_max));
  const auto t0 = Clock::now();
  VerificationReport report;
  report.suite = "lemma";
  report.n_min = 1;
  report.n_max = n_max;
  const std::vector<ExprCase> cases = expression_cases(1, n_max);
  fill_per_n(cases, report);
  const MoveTable& mv = opts.moves;

  run_cases(cases.size(), opts.jobs, [&](std::size_t k, Sink& sink) {
    const auto& [n, e] = cases[k];
    ++sink.checked;
    const std::string input = render(e);
    try {
      OrderedWordSearch search{mv, n, left_comb(n), static_cast<std::size_t>(n) * (n - 1) / 2};
      Word word;
      search.run(e, 0, word);
      if (search.out_of_budget) {
        sink.fail(input, "ordered-word search ran out of budget (move table cycles?)");
        return;
      }
      if (search.too_long) {
        sink.fail(input, "an ordered word exceeded the n(n-1)/2 length bound");
        return;
      }
      if (search.found != 1) {
        sink.fail(input, "expected exactly one ordered word to the left comb, found " +
                             std::to_string(search.found));
        return;
      }
      if (!(search.first == normalize_word(e))) {
        sink.fail(input, "the unique ordered word differs from normalize_word: " +
                             word_to_string(search.first) + " vs " + word_to_string(normalize_word(e)));
      }
    } catch (const std::exception& ex) {
      sink.fail(input, std::string("unexpected error: ") + ex.what());
    }
  }, report);

  report.elapsed_ms = ms_since(t0);
  return report;
}

VerificationReport check_rectangle(int n_max, const SuiteOptions& opts) {
  if (n_max < 1) throw Error("n_max must be at least 1, got " + std::to_string(n_max));
  const auto t0 = Clock::now();
  VerificationReport report;
  report.suite = "rectangle";
  report.n_min = 1;
  report.n_max = n_max;
  const std::vector<ExprCase> cases = expression_cases(1, n_max);
  fill_per_n(cases, report);
  const MoveTable& mv = opts.moves;

  run_cases(cases.size(), opts.jobs, [&](std::size_t k, Sink& sink) {
    const auto& [n, e] = cases[k];
    ++sink.checked;
    const std::string input = render(e);
    try {
      for (int i = 0; i <= n; ++i) {
        if (!mv.can_apply(i, e)) continue;
        const Expression ei = mv.apply_alpha(i, e);
        for (int j = i + 1; j <= n; ++j) {
          if (!mv.can_apply(j, e)) continue;
          const std::string where = " (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
          const Expression ej = mv.apply_alpha(j, e);
          if (!mv.can_apply(j + 1, ei)) {
            sink.fail(input, "rectangle" + where + ": a" + std::to_string(j + 1) +
                                 " is not applicable after a" + std::to_string(i));
            continue;
          }
          if (!mv.can_apply(i, ej)) {
            sink.fail(input, "rectangle" + where + ": a" + std::to_string(i) +
                                 " is not applicable after a" + std::to_string(j));
            continue;
          }
          if (!(mv.apply_alpha(i, ej) == mv.apply_alpha(j + 1, ei))) {
            sink.fail(input, "rectangle" + where + ": the two routes disagree");
          }
        }
      }
    } catch (const std::exception& ex) {
      sink.fail(input, std::string("unexpected error: ") + ex.what());
    }
  }, report);

  report.elapsed_ms = ms_since(t0);
  return report;
}

namespace {

// Enumerates every positive move path out of one source, comparing each
// arrival against the first path seen to the same endpoint and against the
// reduced pair.
struct ParallelPathSearch {
  const MoveTable& mv;
  int n;
  Expression source;
  std::size_t max_len;
  long long budget = 2000000;
  bool out_of_budget = false;
  bool too_long = false;
  Sink& sink;
  std::vector<TreePair> generator_pairs;

  struct Entry {
    Word normal_form;
    TreePair expected;
  };
  std::map<std::string, Entry> by_target;

  const TreePair& generator_pair(int i) {
    while (static_cast<int>(generator_pairs.size()) <= i) {
      auto [s, t] = mv.generator_template(static_cast<int>(generator_pairs.size()));
      generator_pairs.emplace_back(s, t);
    }
    return generator_pairs[static_cast<std::size_t>(i)];
  }

  void run(const Expression& cur, Word& letters, const TreePair& image) {
    if (out_of_budget) return;
    if (--budget < 0) {
      out_of_budget = true;
      return;
    }
    const std::string key = render(cur);
    auto it = by_target.find(key);
    if (it == by_target.end()) {
      it = by_target.emplace(key, Entry{rewrite_positive(letters), reduce_pair(TreePair(source, cur))}).first;
    } else if (!(rewrite_positive(letters) == it->second.normal_form)) {
      sink.fail(render(source) + " -> " + key,
                "two positive paths rewrite to different canonical words: " +
                    word_to_string(rewrite_positive(letters)) + " vs " +
                    word_to_string(it->second.normal_form));
    }
    if (!(image == it->second.expected)) {
      sink.fail(render(source) + " -> " + key,
                "a positive path's group image differs from the reduced pair");
    }
    for (int i = 0; i <= n; ++i) {
      if (!mv.can_apply(i, cur)) continue;
      if (letters.size() >= max_len) {
        too_long = true;
        return;
      }
      letters.push_back(alpha(i));
      run(mv.apply_alpha(i, cur), letters, multiply(image, generator_pair(i)));
      letters.pop_back();
    }
  }
};

}  // namespace

VerificationReport check_parallel_paths(int n_max, const SuiteOptions& opts) {
  if (n_max < 1) throw Error("n_max must be at least 1, got " + std::to_string(n_max));
  const auto t0 = Clock::now();
  VerificationReport report;
  report.suite = "parallel";
  report.n_min = 1;
  report.n_max = n_max;
  const std::vector<ExprCase> cases = expression_cases(1, n_max);
  fill_per_n(cases, report);
  const MoveTable& mv = opts.moves;

  run_cases(cases.size(), opts.jobs, [&](std::size_t k, Sink& sink) {
    const auto& [n, e] = cases[k];
    ++sink.checked;
    const std::string input = render(e);
    try {
      ParallelPathSearch search{mv, n, e, static_cast<std::size_t>(n) * (n - 1) / 2,
                                2000000, false, false, sink, {}, {}};
      Word letters;
      search.run(e, letters, TreePair());
      if (search.out_of_budget) sink.fail(input, "positive-path search ran out of budget (move table cycles?)");
      if (search.too_long) sink.fail(input, "a positive path exceeded the n(n-1)/2 length bound");
    } catch (const std::exception& ex) {
      sink.fail(input, std::string("unexpected error: ") + ex.what());
    }
  }, report);

  report.elapsed_ms = ms_since(t0);
  return report;
}

VerificationReport check_pentagon(int n_max, const SuiteOptions& opts) {
  if (n_max < 1) throw Error("n_max must be at least 1, got " + std::to_string(n_max));
  const auto t0 = Clock::now();
  VerificationReport report;
  report.suite = "pentagon";
  report.n_min = 1;
  report.n_max = n_max;
  const std::vector<ExprCase> cases = expression_cases(1, n_max);
  fill_per_n(cases, report);
  const MoveTable& mv = opts.moves;

  // Case index 0 is the fixed four-leaf instance; the sweep follows.
  run_cases(cases.size() + 1, opts.jobs, [&](std::size_t k, Sink& sink) {
    ++sink.checked;
    if (k == 0) {
      const std::string input = "(x*(x*(x*x))) rot@R";
      try {
        const Expression t1 = parse("(x*(x*(x*x)))");
        const Expression t2 = rotate_at(t1, NodeAddress::parse("R"));
        if (!(t2 == parse("(x*((x*x)*x))"))) {
          sink.fail(input, "rotation at R produced " + render(t2) + " instead of (x*((x*x)*x))");
          return;
        }
        const Word expected{alpha(0), alpha(0), alpha_inv(1), alpha_inv(0)};
        const Word w = canonical_iso(t1, t2);
        if (!(w == expected)) {
          sink.fail(input, "canonical word is " + word_to_string(w) + ", expected a0 a0 A1 A0");
        }
        if (!(apply_word_via(mv, w, t1) == t2)) {
          sink.fail(input, "applying the canonical word does not land on the rotated tree");
        }
        if (!(from_word_via(mv, w) == reduce_pair(TreePair(t1, t2)))) {
          sink.fail(input, "the canonical word's group image differs from the reduced pair");
        }
      } catch (const std::exception& ex) {
        sink.fail(input, std::string("unexpected error: ") + ex.what());
      }
      return;
    }
    const auto& [n, e] = cases[k - 1];
    const std::string input = render(e);
    try {
      for (const NodeAddress& a : rotation_sites(e)) {
        if (a.on_left_spine()) continue;
        const Expression f = rotate_at(e, a);
        const Word w = canonical_iso(e, f);
        if (!(apply_word_via(mv, w, e) == f)) {
          sink.fail(input + " rot@" + a.to_string(),
                    "the canonical word does not reproduce the rotation target");
        }
      }
    } catch (const std::exception& ex) {
      sink.fail(input, std::string("unexpected error: ") + ex.what());
    }
  }, report);

  report.elapsed_ms = ms_since(t0);
  return report;
}

VerificationReport check_presentation(int i_max, const SuiteOptions& opts) {
  if (i_max < 0) throw Error("i_max must be nonnegative, got " + std::to_string(i_max));
  const auto t0 = Clock::now();
  VerificationReport report;
  report.suite = "presentation";
  report.n_min = 0;  // generator index interval for this suite
  report.n_max = i_max;
  const MoveTable& mv = opts.moves;

  struct RelationCase {
    int i;
    int j;
    bool conjugation;
  };
  std::vector<RelationCase> cases;
  for (int i = 0; i <= i_max; ++i) {
    for (int j = i + 1; j <= i_max; ++j) cases.push_back(RelationCase{i, j, false});
  }
  for (int j = 1; j <= i_max; ++j) cases.push_back(RelationCase{0, j, true});

  run_cases(cases.size(), opts.jobs, [&](std::size_t k, Sink& sink) {
    const RelationCase& c = cases[k];
    ++sink.checked;
    try {
      if (!c.conjugation) {
        const std::string input = "i=" + std::to_string(c.i) + " j=" + std::to_string(c.j);
        const TreePair lhs = from_word_via(mv, Word{alpha(c.j), alpha(c.i)});
        const TreePair rhs = from_word_via(mv, Word{alpha(c.i), alpha(c.j + 1)});
        if (!(lhs == rhs)) {
          sink.fail(input, "relation failed: [a" + std::to_string(c.j) + " a" + std::to_string(c.i) +
                               "] != [a" + std::to_string(c.i) + " a" + std::to_string(c.j + 1) + "]");
        }
      } else {
        const std::string input = "j=" + std::to_string(c.j);
        const TreePair lhs = from_word_via(mv, Word{alpha_inv(0), alpha(c.j), alpha(0)});
        const TreePair rhs = from_word_via(mv, Word{alpha(c.j + 1)});
        if (!(lhs == rhs)) {
          sink.fail(input, "conjugation by a0 did not carry a" + std::to_string(c.j) + " to a" +
                               std::to_string(c.j + 1));
        }
      }
    } catch (const std::exception& ex) {
      sink.fail("i=" + std::to_string(c.i) + " j=" + std::to_string(c.j),
                std::string("unexpected error: ") + ex.what());
    }
  }, report);

  report.elapsed_ms = ms_since(t0);
  return report;
}

std::string report_to_text(const VerificationReport& r) {
  std::string out;
  out += "suite: " + r.suite + "\n";
  out += "n range: " + std::to_string(r.n_min) + ".." + std::to_string(r.n_max) + "\n";
  out += "cases checked: " + std::to_string(r.cases_checked);
  if (!r.cases_per_n.empty()) {
    out += " (";
    for (std::size_t k = 0; k < r.cases_per_n.size(); ++k) {
      if (k) out += ", ";
      out += "n=" + std::to_string(r.cases_per_n[k].first) + ": " + std::to_string(r.cases_per_n[k].second);
    }
    out += ")";
  }
  out += "\n";
  out += "violations: " + std::to_string(r.violations.size()) + "\n";
  for (const Violation& v : r.violations) out += "  " + v.input + ": " + v.message + "\n";
  char elapsed[64];
  std::snprintf(elapsed, sizeof elapsed, "%.1f", r.elapsed_ms);
  out += "elapsed: " + std::string(elapsed) + " ms\n";
  out += std::string("result: ") + (r.passed() ? "PASS" : "FAIL") + "\n";
  return out;
}

nlohmann::ordered_json report_to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["n_range"] = nlohmann::ordered_json::array({r.n_min, r.n_max});
  j["cases_checked"] = r.cases_checked;
  auto violations = nlohmann::ordered_json::array();
  for (const Violation& v : r.violations) {
    violations.push_back(nlohmann::ordered_json{{"input", v.input}, {"message", v.message}});
  }
  j["violations"] = violations;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace assoc
