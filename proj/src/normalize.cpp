#include "assoc/normalize.hpp"

#include <cctype>
#include <cstddef>
#include <utility>

namespace assoc {

std::string word_to_string(const Word& w) {
  if (w.empty()) return "-";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out.push_back(' ');
    out += to_string(w[k]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    tokens.emplace_back(start, text.substr(start, pos - start));
  }
  if (tokens.size() == 1 && tokens[0].second == "-") return {};
  Word w;
  w.reserve(tokens.size());
  for (const auto& [offset, token] : tokens) {
    try {
      w.push_back(parse_letter(token));
    } catch (const ParseError& pe) {
      throw ParseError("invalid word token '" + std::string(token) + "'", offset + pe.position);
    }
  }
  return w;
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

Expression apply_word(const Word& w, Expression e) {
  for (std::size_t k = 0; k < w.size(); ++k) {
    try {
      e = apply_letter(w[k], e);
    } catch (const InapplicableMove& m) {
      throw InapplicableMove("word position " + std::to_string(k + 1) + ": " + m.what(), k + 1);
    }
  }
  return e;
}

Word normalize_word(Expression e) {
  Word w;
  while (!is_fully_normalized(e)) {
    const int level = metrics(e).level;
    w.push_back(alpha(level));
    e = apply_alpha(level, e);
  }
  return w;
}

bool is_canonical_word(const Word& w) {
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k].sign <= 0) return false;
    if (k > 0 && w[k - 1].index > w[k].index) return false;
  }
  return true;
}

Word canonical_iso(const Expression& e, const Expression& f) {
  if (e.leaf_count() != f.leaf_count()) {
    throw LeafCountMismatch("expressions have " + std::to_string(e.leaf_count()) + " and " +
                            std::to_string(f.leaf_count()) + " leaves");
  }
  Word w = normalize_word(e);
  const Word back = inverse_word(normalize_word(f));
  w.insert(w.end(), back.begin(), back.end());
  return w;
}

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (const GeneratorLetter& letter : w) {
    if (!out.empty() && out.back().index == letter.index && out.back().sign == -letter.sign) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

Word rewrite_positive(Word w) {
  for (const GeneratorLetter& letter : w) {
    if (letter.sign <= 0) throw Error("rewrite_positive requires a positive word, got " + to_string(letter));
  }
  std::size_t k = 0;
  while (k + 1 < w.size()) {
    if (w[k].index > w[k + 1].index) {
      const int small = w[k + 1].index;
      const int big = w[k].index;
      w[k] = alpha(small);
      w[k + 1] = alpha(big + 1);
      // the letter that moved left may now clash with its new left neighbour
      if (k > 0) --k;
    } else {
      ++k;
    }
  }
  return w;
}

}  // namespace assoc
