#pragma once

#include <string>
#include <vector>

#include "tukeyspec/cards.hpp"
#include "tukeyspec/orders.hpp"
#include "tukeyspec/tukey.hpp"

namespace tukeyspec {

// Symbolic well-founded tree: a well-ordered trunk (no reversals anywhere)
// with finitely many branch entries, each attaching mult-many incomparable
// copies of a subtree immediately above the whole trunk. Branch points in
// the middle of a chain are expressed by splitting the trunk into nested
// terms.
struct TreeTerm {
  struct Branch;
  OrderTerm trunk = OrderTerm::fin(1);
  std::vector<Branch> branches;
};

struct TreeTerm::Branch {
  Card mult = Card::fin(1);  // >= 1
  TreeTerm sub;
};

// Rejects reversed trunks ("not a tree") and zero multiplicities.
void validate_tree(const TreeTerm& t);

// An initial-chain class of a tree: the chain's cofinality, the number of
// immediate successors of the chain, and the type cf x prod^w 2's.
struct TreeChainClass {
  Card cf = Card::fin(1);
  Card succ_count = Card::fin(0);
  TukeyType tukey;

  friend bool operator==(const TreeChainClass&, const TreeChainClass&) = default;
};

std::vector<TreeChainClass> tree_chain_classes(const TreeTerm& t);
std::vector<TukeyType> tree_spectrum(const TreeTerm& t);

// Whether the tree algebra of t (of symbolic size kappa, supplied by the
// caller) has an ultrafilter of the maximum type [kappa]^<w.
bool tree_has_max_type(const TreeTerm& t, Card kappa);

std::string to_sexpr(const TreeTerm& t);

}  // namespace tukeyspec
