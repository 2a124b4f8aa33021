#pragma once

#include <string>

#include "assoc/normalize.hpp"

// Thompson's group F as reduced tree pairs.
//
// A pair (domain, range) of equal-leaf-count expressions names the formal
// isomorphism from domain to range. A pair is reduced when no leaf position
// j has leaves j, j+1 siblings in both trees; reduced pairs are the unique
// representatives of group elements. multiply(p, q) is "p then q": both
// pairs are expanded over the common refinement of p.range and q.domain and
// the outer trees are kept, so (T1,T2)(T2,T3) = (T1,T3).

namespace assoc {

class TreePair {
 public:
  TreePair() = default;                            // identity: (leaf, leaf)
  TreePair(Expression domain, Expression range);   // throws LeafCountMismatch

  const Expression& domain() const { return domain_; }
  const Expression& range() const { return range_; }

  // Structural equality of the two trees; use equal() for group equality.
  friend bool operator==(const TreePair& a, const TreePair& b);

 private:
  Expression domain_;
  Expression range_;
};

bool is_reduced(const TreePair& p);
TreePair reduce_pair(const TreePair& p);  // removes common carets, smallest leaf index first
TreePair multiply(const TreePair& p, const TreePair& q);
TreePair invert(const TreePair& p);

// Smallest expression having both a and b as caret-prefixes. Total on any
// two expressions: a leaf unions with anything to that anything.
Expression common_refinement(const Expression& a, const Expression& b);

TreePair from_word(const Word& w);       // product of generator pairs, application order
Word canonical_word(const TreePair& p);  // positive prefix + inverse suffix via the left comb
bool equal(const TreePair& p, const TreePair& q);

std::string pair_to_string(const TreePair& p);  // "domain | range"

}  // namespace assoc
