#include "assoc/expr.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace assoc {

ParseError::ParseError(const std::string& message, std::size_t position)
    : Error(message + " at offset " + std::to_string(position)), position(position) {}

struct Expression::Rep {
  Expression left;
  Expression right;
  int leaves;
};

Expression Expression::node(Expression left, Expression right) {
  Expression e;
  const int leaves = left.leaf_count() + right.leaf_count();
  e.rep_ = std::make_shared<const Rep>(Rep{std::move(left), std::move(right), leaves});
  return e;
}

const Expression& Expression::left() const {
  assert(rep_);
  return rep_->left;
}

const Expression& Expression::right() const {
  assert(rep_);
  return rep_->right;
}

int Expression::leaf_count() const { return rep_ ? rep_->leaves : 1; }

bool operator==(const Expression& a, const Expression& b) {
  if (a.rep_ == b.rep_) return true;  // covers two leaves
  if (a.is_leaf() || b.is_leaf()) return false;
  if (a.leaf_count() != b.leaf_count()) return false;
  return a.left() == b.left() && a.right() == b.right();
}

NodeAddress NodeAddress::left_spine(int depth) {
  NodeAddress a;
  a.steps.assign(static_cast<std::size_t>(std::max(depth, 0)), Step::L);
  return a;
}

NodeAddress NodeAddress::parse(std::string_view text) {
  NodeAddress a;
  if (text.empty() || text == "-") return a;
  a.steps.reserve(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] == 'L') {
      a.steps.push_back(Step::L);
    } else if (text[k] == 'R') {
      a.steps.push_back(Step::R);
    } else {
      throw ParseError("invalid address step '" + std::string(1, text[k]) + "', expected 'L' or 'R'", k);
    }
  }
  return a;
}

std::string NodeAddress::to_string() const {
  if (steps.empty()) return "-";
  std::string out;
  out.reserve(steps.size());
  for (Step s : steps) out.push_back(s == Step::L ? 'L' : 'R');
  return out;
}

bool NodeAddress::on_left_spine() const {
  return std::all_of(steps.begin(), steps.end(), [](Step s) { return s == Step::L; });
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r')) {
      ++pos;
    }
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos); }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size()) fail(std::string("unexpected end of input, expected '") + c + "'");
    if (text[pos] != c) fail(std::string("expected '") + c + "', got '" + text[pos] + "'");
    ++pos;
  }

  Expression parse_expr() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input, expected 'x' or '('");
    const char c = text[pos];
    if (c == 'x') {
      ++pos;
      return Expression::leaf();
    }
    if (c == '(') {
      ++pos;
      Expression left = parse_expr();
      expect('*');
      Expression right = parse_expr();
      expect(')');
      return Expression::node(std::move(left), std::move(right));
    }
    fail(std::string("unexpected character '") + c + "', expected 'x' or '('");
  }
};

void render_into(const Expression& e, std::string& out) {
  if (e.is_leaf()) {
    out.push_back('x');
    return;
  }
  out.push_back('(');
  render_into(e.left(), out);
  out.push_back('*');
  render_into(e.right(), out);
  out.push_back(')');
}

}  // namespace

Expression parse(std::string_view text) {
  Parser p{text};
  Expression e = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return e;
}

std::string render(const Expression& e) {
  std::string out;
  out.reserve(static_cast<std::size_t>(e.leaf_count()) * 4);
  render_into(e, out);
  return out;
}

Expression left_comb(int n) {
  if (n < 1) throw Error("leaf count must be at least 1, got " + std::to_string(n));
  Expression e;
  for (int k = 1; k < n; ++k) e = Expression::node(std::move(e), Expression::leaf());
  return e;
}

Expression right_comb(int n) {
  if (n < 1) throw Error("leaf count must be at least 1, got " + std::to_string(n));
  Expression e;
  for (int k = 1; k < n; ++k) e = Expression::node(Expression::leaf(), std::move(e));
  return e;
}

bool is_fully_normalized(const Expression& e) {
  const Expression* cur = &e;
  while (!cur->is_leaf()) {
    if (!cur->right().is_leaf()) return false;
    cur = &cur->left();
  }
  return true;
}

Metrics metrics(const Expression& e) {
  if (is_fully_normalized(e)) return Metrics{e.leaf_count(), 1};
  const Expression* cur = &e;
  int level = 0;
  for (;;) {
    assert(!cur->is_leaf());  // e is not a left comb, so the walk stops early
    if (!cur->right().is_leaf()) break;
    cur = &cur->left();
    ++level;
  }
  return Metrics{level, cur->right().leaf_count()};
}

std::vector<Expression> enumerate_expressions(int n, int cap) {
  if (n < 1) throw Error("leaf count must be at least 1, got " + std::to_string(n));
  if (cap < 1) throw Error("cap must be at least 1, got " + std::to_string(cap));
  if (n > cap) throw CapExceeded("leaf count " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));

  std::vector<std::vector<Expression>> by_count(static_cast<std::size_t>(n) + 1);
  by_count[1] = {Expression::leaf()};
  for (int m = 2; m <= n; ++m) {
    auto& out = by_count[static_cast<std::size_t>(m)];
    for (int k = 1; k < m; ++k) {
      for (const Expression& l : by_count[static_cast<std::size_t>(k)]) {
        for (const Expression& r : by_count[static_cast<std::size_t>(m - k)]) {
          out.push_back(Expression::node(l, r));
        }
      }
    }
  }

  std::vector<std::pair<std::string, Expression>> keyed;
  keyed.reserve(by_count[static_cast<std::size_t>(n)].size());
  for (Expression& e : by_count[static_cast<std::size_t>(n)]) keyed.emplace_back(render(e), std::move(e));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<Expression> result;
  result.reserve(keyed.size());
  for (auto& [text, e] : keyed) result.push_back(std::move(e));
  return result;
}

Expression subtree_at(const Expression& e, const NodeAddress& a) {
  const Expression* cur = &e;
  for (std::size_t d = 0; d < a.steps.size(); ++d) {
    if (cur->is_leaf()) {
      throw InvalidAddress("address '" + a.to_string() + "' steps into a leaf at depth " + std::to_string(d));
    }
    cur = a.steps[d] == Step::L ? &cur->left() : &cur->right();
  }
  return *cur;
}

namespace {

Expression replace_rec(const Expression& e, const std::vector<Step>& steps, std::size_t d,
                       const Expression& replacement) {
  if (d == steps.size()) return replacement;
  if (e.is_leaf()) {
    throw InvalidAddress("address steps into a leaf at depth " + std::to_string(d));
  }
  if (steps[d] == Step::L) {
    return Expression::node(replace_rec(e.left(), steps, d + 1, replacement), e.right());
  }
  return Expression::node(e.left(), replace_rec(e.right(), steps, d + 1, replacement));
}

}  // namespace

Expression replace_at(const Expression& e, const NodeAddress& a, const Expression& replacement) {
  return replace_rec(e, a.steps, 0, replacement);
}

}  // namespace assoc
