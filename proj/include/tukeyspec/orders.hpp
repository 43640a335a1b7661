#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tukeyspec/cards.hpp"
#include "tukeyspec/tukey.hpp"

namespace tukeyspec {

// Symbolic linear orders: finite chains, regular ordinals, reversals,
// finite concatenations, and homogeneous lexicographic sums. Every term
// denotes a non-empty order. Top-level terms are implicitly preceded by a
// one-element least block when interval algebras are built from them.
struct OrderTerm {
  enum class Kind { Fin, Ord, Rev, Sum, LexSum };

  Kind kind = Kind::Fin;
  std::uint64_t n = 1;               // Fin
  Card card = Card::omega();         // Ord, LexSum index
  std::vector<OrderTerm> kids;       // Rev: 1, Sum: >= 1, LexSum: 1

  static OrderTerm fin(std::uint64_t n);          // n >= 1
  static OrderTerm ord(Card k);                   // k infinite
  static OrderTerm rev(OrderTerm t);
  static OrderTerm sum(std::vector<OrderTerm> blocks);
  static OrderTerm lexsum(Card k, OrderTerm t);   // k infinite
};

struct OrderAttrs {
  Card cf;  // cofinality: 1 or infinite regular
  Card ci;  // coinitiality: 1 or infinite regular
};

OrderAttrs order_attrs(const OrderTerm& t);
bool has_least(const OrderTerm& t);
bool has_greatest(const OrderTerm& t);

// (cf C, ci of the remainder) over cuts with both sides non-empty; no
// implicit least block is added.
std::vector<std::pair<Card, Card>> proper_cut_pairs(const OrderTerm& t);

// An initial-chain class of a linear order: its cofinality, the
// coinitiality of the remainder (absent for the full chain), and the
// resulting type cf x ci.
struct ChainClass {
  Card cf = Card::fin(1);
  std::optional<Card> coinitiality;  // nullopt: C = L
  TukeyType tukey;

  friend bool operator==(const ChainClass&, const ChainClass&) = default;
};

bool chain_class_less(const ChainClass& a, const ChainClass& b);

// All initial-chain classes of the order with the least block prefixed.
std::vector<ChainClass> classify_cuts(const OrderTerm& t);

std::vector<TukeyType> intalg_spectrum(const OrderTerm& t);

// Builds a linear order whose interval-algebra spectrum includes
// cf x ci for every requested (cf, ci) pair; entries are 1 or infinite.
OrderTerm realize_interval(const std::vector<std::pair<Card, Card>>& pairs);

std::string to_sexpr(const OrderTerm& t);

// Type of a single cut pair: normal form of cf x ci (1s contribute nothing).
TukeyType cut_pair_type(Card cf, Card ci);

}  // namespace tukeyspec
