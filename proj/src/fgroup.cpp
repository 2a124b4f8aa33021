#include "assoc/fgroup.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace assoc {

TreePair::TreePair(Expression domain, Expression range)
    : domain_(std::move(domain)), range_(std::move(range)) {
  if (domain_.leaf_count() != range_.leaf_count()) {
    throw LeafCountMismatch("tree pair sides have " + std::to_string(domain_.leaf_count()) + " and " +
                            std::to_string(range_.leaf_count()) + " leaves");
  }
}

bool operator==(const TreePair& a, const TreePair& b) {
  return a.domain() == b.domain() && a.range() == b.range();
}

namespace {

// Leaf positions j (0-based) such that leaves j and j+1 are the two children
// of one internal node. Ascending.
void carets_into(const Expression& e, int base, std::vector<int>& out) {
  if (e.is_leaf()) return;
  if (e.left().is_leaf() && e.right().is_leaf()) {
    out.push_back(base);
    return;
  }
  carets_into(e.left(), base, out);
  carets_into(e.right(), base + e.left().leaf_count(), out);
}

std::vector<int> caret_positions(const Expression& e) {
  std::vector<int> out;
  carets_into(e, 0, out);
  return out;
}

// pre: leaves pos, pos+1 are a caret of e
Expression collapse_caret(const Expression& e, int pos) {
  if (e.is_leaf()) throw Error("internal: collapse_caret on a leaf");
  if (e.left().is_leaf() && e.right().is_leaf()) {
    if (pos != 0) throw Error("internal: collapse_caret position out of range");
    return Expression::leaf();
  }
  const int m = e.left().leaf_count();
  if (pos <= m - 2) return Expression::node(collapse_caret(e.left(), pos), e.right());
  if (pos >= m) return Expression::node(e.left(), collapse_caret(e.right(), pos - m));
  throw Error("internal: collapse_caret position is not a caret");
}

// pre: prefix is a caret-prefix of refined; appends, per leaf of prefix, the
// subtree of refined sitting at that leaf
void decompose_into(const Expression& refined, const Expression& prefix, std::vector<Expression>& out) {
  if (prefix.is_leaf()) {
    out.push_back(refined);
    return;
  }
  if (refined.is_leaf()) throw Error("internal: refinement does not extend the tree");
  decompose_into(refined.left(), prefix.left(), out);
  decompose_into(refined.right(), prefix.right(), out);
}

Expression graft_rec(const Expression& e, const std::vector<Expression>& parts, std::size_t& next) {
  if (e.is_leaf()) return parts[next++];
  Expression l = graft_rec(e.left(), parts, next);
  Expression r = graft_rec(e.right(), parts, next);
  return Expression::node(std::move(l), std::move(r));
}

// Replace the k-th leaf of e by parts[k].
Expression graft(const Expression& e, const std::vector<Expression>& parts) {
  std::size_t next = 0;
  Expression out = graft_rec(e, parts, next);
  if (next != parts.size()) throw Error("internal: graft part count mismatch");
  return out;
}

int first_common(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return a[i];
    if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return -1;
}

}  // namespace

bool is_reduced(const TreePair& p) {
  return first_common(caret_positions(p.domain()), caret_positions(p.range())) < 0;
}

TreePair reduce_pair(const TreePair& p) {
  Expression d = p.domain();
  Expression r = p.range();
  for (;;) {
    const int j = first_common(caret_positions(d), caret_positions(r));
    if (j < 0) break;
    d = collapse_caret(d, j);
    r = collapse_caret(r, j);
  }
  return TreePair(std::move(d), std::move(r));
}

Expression common_refinement(const Expression& a, const Expression& b) {
  if (a.is_leaf()) return b;
  if (b.is_leaf()) return a;
  return Expression::node(common_refinement(a.left(), b.left()),
                          common_refinement(a.right(), b.right()));
}

TreePair multiply(const TreePair& p, const TreePair& q) {
  const Expression m = common_refinement(p.range(), q.domain());
  std::vector<Expression> left_parts;
  decompose_into(m, p.range(), left_parts);
  std::vector<Expression> right_parts;
  decompose_into(m, q.domain(), right_parts);
  return reduce_pair(TreePair(graft(p.domain(), left_parts), graft(q.range(), right_parts)));
}

TreePair invert(const TreePair& p) {
  const TreePair r = reduce_pair(p);
  return TreePair(r.range(), r.domain());
}

TreePair from_word(const Word& w) {
  TreePair acc;
  for (const GeneratorLetter& letter : w) {
    auto [source, target] = generator_template(letter.index);
    const TreePair g = letter.sign > 0 ? TreePair(std::move(source), std::move(target))
                                       : TreePair(std::move(target), std::move(source));
    acc = multiply(acc, g);
  }
  return acc;
}

Word canonical_word(const TreePair& p) {
  const TreePair r = reduce_pair(p);
  Word w = normalize_word(r.domain());
  const Word back = inverse_word(normalize_word(r.range()));
  w.insert(w.end(), back.begin(), back.end());
  return w;
}

bool equal(const TreePair& p, const TreePair& q) { return reduce_pair(p) == reduce_pair(q); }

std::string pair_to_string(const TreePair& p) {
  return render(p.domain()) + " | " + render(p.range());
}

}  // namespace assoc
