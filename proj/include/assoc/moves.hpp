#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "assoc/expr.hpp"

// The restricted move set on expressions.
//
// The basic move a0 is the left rotation at the root, A*(B*C) -> (A*B)*C,
// and a<i> is the same rotation performed at the node i steps down the left
// spine. A move leaves everything outside the rotated node untouched, so
// a<i> exists exactly when the node at L^i exists and has an internal right
// child. rotate_at performs the rotation at an arbitrary node and is kept
// out of the restricted set: normalization and the coherence suites use only
// the spine moves, rotate_at serves the general-rotation demonstrations and
// the full graph export.

namespace assoc {

struct InapplicableMove : Error {
  explicit InapplicableMove(const std::string& message, std::size_t word_position = 0);
  // 1-based position of the failing letter when raised by apply_word, else 0.
  std::size_t word_position;
};

// One letter: a<index> (sign +1) or its inverse A<index> (sign -1).
struct GeneratorLetter {
  int index = 0;
  int sign = 1;

  friend bool operator==(const GeneratorLetter& a, const GeneratorLetter& b) = default;
};

GeneratorLetter alpha(int index);
GeneratorLetter alpha_inv(int index);
GeneratorLetter inverse(GeneratorLetter letter);

// Text form: "a3", "A3".
std::string to_string(const GeneratorLetter& letter);
GeneratorLetter parse_letter(std::string_view token);

bool can_apply(int i, const Expression& e);      // node at L^i exists, right child internal
bool can_apply_inv(int i, const Expression& e);  // node at L^i exists, left child internal

Expression apply_alpha(int i, const Expression& e);
Expression apply_alpha_inv(int i, const Expression& e);
Expression apply_letter(const GeneratorLetter& letter, const Expression& e);

// Left rotation at an arbitrary node; rotate_at(e, L^i) == apply_alpha(i, e).
Expression rotate_at(const Expression& e, const NodeAddress& a);

// Every address where a left rotation applies, in preorder.
std::vector<NodeAddress> rotation_sites(const Expression& e);

// Minimal source/target pair of a<i>, on i+3 leaves.
std::pair<Expression, Expression> generator_template(int i);

}  // namespace assoc
