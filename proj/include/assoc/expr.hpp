#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Parenthesized expressions as finite binary trees.
//
// A leaf stands for a variable; variables are positional, so the tree shape
// is the whole datum. An internal node is one application of the binary
// product. There are Catalan(n-1) distinct expressions on n leaves.

namespace assoc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Syntax error; position is a 0-based offset into the input text.
struct ParseError : Error {
  ParseError(const std::string& message, std::size_t position);
  std::size_t position;
};

struct InvalidAddress : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  using Error::Error;
};

struct LeafCountMismatch : Error {
  using Error::Error;
};

// Immutable tree value; copies are cheap and share structure.
class Expression {
 public:
  // A single leaf, the trivial expression.
  Expression() = default;

  static Expression leaf() { return Expression(); }
  static Expression node(Expression left, Expression right);

  bool is_leaf() const { return rep_ == nullptr; }
  const Expression& left() const;   // pre: !is_leaf()
  const Expression& right() const;  // pre: !is_leaf()
  int leaf_count() const;

  friend bool operator==(const Expression& a, const Expression& b);

 private:
  struct Rep;
  std::shared_ptr<const Rep> rep_;
};

enum class Step : unsigned char { L, R };

// Path from the root of an expression; empty = the root itself.
struct NodeAddress {
  std::vector<Step> steps;

  static NodeAddress root() { return {}; }
  static NodeAddress left_spine(int depth);          // L^depth
  static NodeAddress parse(std::string_view text);   // "-" (or "") for the root, else a string over {L, R}
  std::string to_string() const;                     // the root renders as "-"
  bool on_left_spine() const;                        // no R step

  friend bool operator==(const NodeAddress& a, const NodeAddress& b) = default;
};

// Normalization bookkeeping. `level` counts how many trailing right leaves
// the expression can be stripped of before the right child turns internal;
// `weight` is the leaf count of that internal right child. The fully
// left-associated expression on n leaves is assigned level n and weight 1,
// and nothing else has weight 1.
struct Metrics {
  int level = 0;
  int weight = 1;

  friend bool operator==(const Metrics& a, const Metrics& b) = default;
};

inline constexpr int kDefaultLeafCap = 12;

// Grammar: expr := "x" | "(" expr "*" expr ")", whitespace allowed between
// tokens. render() emits the canonical text (no whitespace) and round-trips
// with parse().
Expression parse(std::string_view text);
std::string render(const Expression& e);

Expression left_comb(int n);   // fully left-associated, n >= 1
Expression right_comb(int n);  // fully right-associated, n >= 1

bool is_fully_normalized(const Expression& e);  // e == left_comb(leaf count)
Metrics metrics(const Expression& e);

// All expressions on n leaves, sorted by render string.
std::vector<Expression> enumerate_expressions(int n, int cap = kDefaultLeafCap);

Expression subtree_at(const Expression& e, const NodeAddress& a);
Expression replace_at(const Expression& e, const NodeAddress& a, const Expression& replacement);

}  // namespace assoc
