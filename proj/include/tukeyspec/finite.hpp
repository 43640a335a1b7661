#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tukeyspec/pseudotrees.hpp"
#include "tukeyspec/trees.hpp"

namespace tukeyspec {

// Explicit finite single-rooted pseudo-tree on elements 0..n-1. Element
// sets are bitmasks. Construction validates the partial-order axioms, the
// chain property of every down-set, and single-rootedness.
class FinitePoset {
 public:
  static constexpr int max_elements = 16;

  static FinitePoset from_leq_pairs(int n, const std::vector<std::pair<int, int>>& lt);

  int size() const { return n_; }
  int root() const { return root_; }
  bool leq(int s, int t) const { return (down_[static_cast<std::size_t>(t)] >> s) & 1u; }
  std::uint32_t down(int t) const { return down_[static_cast<std::size_t>(t)]; }
  std::uint32_t up(int t) const { return up_[static_cast<std::size_t>(t)]; }
  std::uint32_t full() const { return n_ == 32 ? ~0u : (1u << n_) - 1u; }

  // Parent in the induced rooted tree (-1 for the root).
  int parent(int t) const;

  std::string edge_list() const;

 private:
  int n_ = 1;
  int root_ = 0;
  std::vector<std::uint32_t> down_;
  std::vector<std::uint32_t> up_;
};

// Edge-list text: element count, then lines "a < b".
FinitePoset parse_poset(std::string_view text);

// All non-empty downward-closed chains, exhaustively over subsets.
std::vector<std::uint32_t> initial_chains(const FinitePoset& p);

// Elements strictly above every member of the chain.
std::uint32_t above_chain(const FinitePoset& p, std::uint32_t chain);

// Every R above C meeting each element above C from below, exhaustively
// over subsets.
std::vector<std::uint32_t> approx_successor_sets(const FinitePoset& p, std::uint32_t chain);

struct FiniteFan {
  std::vector<std::uint32_t> classes;  // compatibility classes of S
  int lambda = 0;
  std::vector<int> thetas;  // all 1 on finite pseudo-trees
};

// Groups an approximate-successor set by overlap of down-sets above the
// chain and takes per-class coinitial chains.
FiniteFan lambda_fan_finite(const FinitePoset& p, std::uint32_t chain, std::uint32_t succs);

// Isomorph-free single-rooted pseudo-trees on n elements, as parent arrays
// (parent[0] = -1). Finite single-rooted pseudo-trees are rooted trees.
std::vector<std::vector<int>> rooted_trees(int n);
FinitePoset poset_from_parents(const std::vector<int>& parent);
TreeTerm term_from_parents(const std::vector<int>& parent);

// Rooted-tree isomorphism invariant.
std::string canonical_string(const FinitePoset& p);

// Explicit poset of a finite symbolic term; rejects infinite terms and
// terms with more than max_elements elements.
FinitePoset lower_tree(const TreeTerm& t);
FinitePoset lower_ptree(const PTreeTerm& t);

struct FanSweepReport {
  int max_n = 0;
  std::uint64_t posets = 0;
  std::uint64_t chains = 0;
  std::uint64_t successor_sets = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks over every generated pseudo-tree, initial chain, and
// approximate-successor set that the extracted (lambda, theta-multiset)
// depends on the chain only, and that the minimal successor set realizes
// lambda = |S|.
FanSweepReport fan_invariance_oracle(int max_n);

struct StoneReport {
  int max_n = 0;  // 0 when run on a single poset
  std::uint64_t posets = 0;
  std::uint64_t ultrafilters = 0;
  std::uint64_t chains = 0;
  std::uint64_t generator_checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Builds the finite set algebra generated by the cones, enumerates its
// ultrafilters, and verifies the chain correspondence and the H_C
// generating sets.
StoneReport stone_correspondence_oracle(const FinitePoset& p);
StoneReport stone_sweep(int max_n);

struct BridgeReport {
  int max_n = 0;
  std::uint64_t terms = 0;
  std::uint64_t classes = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Lowers every generated rooted tree to a term and back, then checks that
// symbolic chain classes, fans, and spectra agree with exhaustive finite
// enumeration.
BridgeReport bridge_oracle(int max_n);

std::string mask_str(std::uint32_t mask);

}  // namespace tukeyspec
