#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tukeyspec/cards.hpp"
#include "tukeyspec/orders.hpp"
#include "tukeyspec/trees.hpp"
#include "tukeyspec/tukey.hpp"

namespace tukeyspec {

// Symbolic pseudo-tree: a linear trunk (reversals allowed) with finitely
// many branch entries, each attaching mult-many incomparable copies of a
// subtree above the whole trunk. A least root block is supplied implicitly
// at the top level when the trunk lacks a least element.
struct PTreeTerm {
  struct Branch;
  OrderTerm trunk = OrderTerm::fin(1);
  std::vector<Branch> branches;
};

struct PTreeTerm::Branch {
  Card mult = Card::fin(1);  // >= 1
  PTreeTerm sub;
};

// The fan of approximate immediate successors above a chain: pairwise
// incomparable classes, each a strictly decreasing coinitial chain of
// length theta (1 or infinite regular), grouped with multiplicities.
// lambda is the total number of classes.
struct FanClass {
  Card mult = Card::fin(1);
  Card theta = Card::fin(1);

  friend auto operator<=>(const FanClass&, const FanClass&) = default;
};

struct Fan {
  std::vector<FanClass> classes;  // sorted by (theta, mult)
  Card lambda = Card::fin(0);

  friend bool operator==(const Fan&, const Fan&) = default;
};

// Identifies a chain class inside a term: a branch path from the root,
// then either a trunk-cut index or the whole-trunk chain of that subtree.
struct ClassHandle {
  std::vector<std::size_t> path;
  bool whole_trunk = true;
  std::size_t cut_index = 0;
};

struct PTreeClass {
  Card cf = Card::fin(1);
  Fan fan;
  TukeyType tukey;
  ClassHandle handle;
};

std::vector<PTreeClass> ptree_chain_classes(const PTreeTerm& t);

// Re-derives the fan of the identified class; rejects stale handles.
Fan fan_at(const PTreeTerm& t, const ClassHandle& which);

std::vector<TukeyType> ptree_spectrum(const PTreeTerm& t);

// Minimal approximate-successor count and ultrafilter character of a class:
// epsilon is the fan mass, chi = max(epsilon, cf).
std::pair<Card, Card> epsilon_and_character(const PTreeClass& c);

// Root plus one inverted-ordinal (or one-point) chain per entry; the root
// class then has type prod^w of the requested cardinals. Entries are
// (cardinal, multiplicity) with each cardinal 2 or infinite regular.
PTreeTerm realize_weak_product(const std::vector<std::pair<Card, Card>>& entries);
PTreeTerm realize_weak_product(const std::vector<Card>& cards);

// Trees are pseudo-trees; reinterprets the term.
PTreeTerm embed(const TreeTerm& t);

void validate_ptree(const PTreeTerm& t);

std::string to_sexpr(const PTreeTerm& t);

}  // namespace tukeyspec
