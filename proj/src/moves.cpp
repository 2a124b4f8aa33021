#include "assoc/moves.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace assoc {

InapplicableMove::InapplicableMove(const std::string& message, std::size_t word_position)
    : Error(message), word_position(word_position) {}

GeneratorLetter alpha(int index) { return GeneratorLetter{index, +1}; }
GeneratorLetter alpha_inv(int index) { return GeneratorLetter{index, -1}; }

GeneratorLetter inverse(GeneratorLetter letter) {
  letter.sign = -letter.sign;
  return letter;
}

std::string to_string(const GeneratorLetter& letter) {
  return (letter.sign > 0 ? "a" : "A") + std::to_string(letter.index);
}

GeneratorLetter parse_letter(std::string_view token) {
  if (token.empty()) throw ParseError("empty generator letter", 0);
  int sign = 0;
  if (token[0] == 'a') {
    sign = +1;
  } else if (token[0] == 'A') {
    sign = -1;
  } else {
    throw ParseError("generator letter must start with 'a' or 'A', got '" + std::string(1, token[0]) + "'", 0);
  }
  if (token.size() == 1) throw ParseError("generator letter '" + std::string(token) + "' has no index", 1);
  long index = 0;
  for (std::size_t k = 1; k < token.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(token[k]))) {
      throw ParseError("invalid character '" + std::string(1, token[k]) + "' in generator index", k);
    }
    index = index * 10 + (token[k] - '0');
    if (index > 1000000) throw ParseError("generator index out of range", k);
  }
  return GeneratorLetter{static_cast<int>(index), sign};
}

bool can_apply(int i, const Expression& e) {
  if (i < 0) return false;
  const Expression* cur = &e;
  for (int d = 0; d < i; ++d) {
    if (cur->is_leaf()) return false;
    cur = &cur->left();
  }
  return !cur->is_leaf() && !cur->right().is_leaf();
}

bool can_apply_inv(int i, const Expression& e) {
  if (i < 0) return false;
  const Expression* cur = &e;
  for (int d = 0; d < i; ++d) {
    if (cur->is_leaf()) return false;
    cur = &cur->left();
  }
  return !cur->is_leaf() && !cur->left().is_leaf();
}

namespace {

// Walk i steps down the left spine, rotate there, rebuild the spine.
Expression rotate_on_spine(int i, const Expression& e, bool inverse_direction) {
  const std::string name = (inverse_direction ? "A" : "a") + std::to_string(i);
  if (i < 0) throw InapplicableMove(name + " inapplicable: negative index");
  std::vector<const Expression*> spine;
  spine.reserve(static_cast<std::size_t>(i));
  const Expression* cur = &e;
  for (int d = 0; d < i; ++d) {
    if (cur->is_leaf()) {
      throw InapplicableMove(name + " inapplicable: no internal node at left-spine depth " + std::to_string(i));
    }
    spine.push_back(cur);
    cur = &cur->left();
  }
  if (cur->is_leaf()) {
    throw InapplicableMove(name + " inapplicable: no internal node at left-spine depth " + std::to_string(i));
  }
  Expression rotated;
  if (!inverse_direction) {
    if (cur->right().is_leaf()) {
      throw InapplicableMove(name + " inapplicable: right child at left-spine depth " + std::to_string(i) +
                             " is a leaf");
    }
    const Expression& bc = cur->right();
    rotated = Expression::node(Expression::node(cur->left(), bc.left()), bc.right());
  } else {
    if (cur->left().is_leaf()) {
      throw InapplicableMove(name + " inapplicable: left child at left-spine depth " + std::to_string(i) +
                             " is a leaf");
    }
    const Expression& ab = cur->left();
    rotated = Expression::node(ab.left(), Expression::node(ab.right(), cur->right()));
  }
  for (auto it = spine.rbegin(); it != spine.rend(); ++it) {
    rotated = Expression::node(std::move(rotated), (*it)->right());
  }
  return rotated;
}

}  // namespace

Expression apply_alpha(int i, const Expression& e) { return rotate_on_spine(i, e, false); }

Expression apply_alpha_inv(int i, const Expression& e) { return rotate_on_spine(i, e, true); }

Expression apply_letter(const GeneratorLetter& letter, const Expression& e) {
  return letter.sign > 0 ? apply_alpha(letter.index, e) : apply_alpha_inv(letter.index, e);
}

Expression rotate_at(const Expression& e, const NodeAddress& a) {
  const Expression v = subtree_at(e, a);
  if (v.is_leaf()) {
    throw InapplicableMove("rotation at '" + a.to_string() + "' inapplicable: subtree is a leaf");
  }
  if (v.right().is_leaf()) {
    throw InapplicableMove("rotation at '" + a.to_string() + "' inapplicable: right child is a leaf");
  }
  const Expression rotated =
      Expression::node(Expression::node(v.left(), v.right().left()), v.right().right());
  return replace_at(e, a, rotated);
}

namespace {

void sites_rec(const Expression& sub, std::vector<Step>& path, std::vector<NodeAddress>& out) {
  if (sub.is_leaf()) return;
  if (!sub.right().is_leaf()) out.push_back(NodeAddress{path});
  path.push_back(Step::L);
  sites_rec(sub.left(), path, out);
  path.back() = Step::R;
  sites_rec(sub.right(), path, out);
  path.pop_back();
}

}  // namespace

std::vector<NodeAddress> rotation_sites(const Expression& e) {
  std::vector<NodeAddress> out;
  std::vector<Step> path;
  sites_rec(e, path, out);
  return out;
}

std::pair<Expression, Expression> generator_template(int i) {
  if (i < 0) throw Error("generator index must be nonnegative, got " + std::to_string(i));
  Expression source = right_comb(3);
  Expression target = left_comb(3);
  for (int k = 0; k < i; ++k) {
    source = Expression::node(std::move(source), Expression::leaf());
    target = Expression::node(std::move(target), Expression::leaf());
  }
  return {std::move(source), std::move(target)};
}

}  // namespace assoc
