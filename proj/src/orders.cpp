#include "tukeyspec/orders.hpp"

#include <algorithm>
#include <set>

#include "tukeyspec/errors.hpp"

namespace tukeyspec {

OrderTerm OrderTerm::fin(std::uint64_t n) {
  if (n == 0) throw DomainError("empty order");
  OrderTerm t;
  t.kind = Kind::Fin;
  t.n = n;
  return t;
}

OrderTerm OrderTerm::ord(Card k) {
  if (k.is_finite()) throw DomainError("ord requires an infinite cardinal");
  OrderTerm t;
  t.kind = Kind::Ord;
  t.card = k;
  return t;
}

OrderTerm OrderTerm::rev(OrderTerm inner) {
  OrderTerm t;
  t.kind = Kind::Rev;
  t.kids.push_back(std::move(inner));
  return t;
}

OrderTerm OrderTerm::sum(std::vector<OrderTerm> blocks) {
  if (blocks.empty()) throw DomainError("empty sum of orders");
  OrderTerm t;
  t.kind = Kind::Sum;
  t.kids = std::move(blocks);
  return t;
}

OrderTerm OrderTerm::lexsum(Card k, OrderTerm inner) {
  if (k.is_finite()) throw DomainError("lexsum requires an infinite index cardinal");
  OrderTerm t;
  t.kind = Kind::LexSum;
  t.card = k;
  t.kids.push_back(std::move(inner));
  return t;
}

OrderAttrs order_attrs(const OrderTerm& t) {
  switch (t.kind) {
    case OrderTerm::Kind::Fin:
      return {Card::fin(1), Card::fin(1)};
    case OrderTerm::Kind::Ord:
      return {t.card, Card::fin(1)};
    case OrderTerm::Kind::Rev: {
      OrderAttrs a = order_attrs(t.kids.front());
      return {a.ci, a.cf};
    }
    case OrderTerm::Kind::Sum:
      return {order_attrs(t.kids.back()).cf, order_attrs(t.kids.front()).ci};
    case OrderTerm::Kind::LexSum:
      return {t.card, order_attrs(t.kids.front()).ci};
  }
  return {Card::fin(1), Card::fin(1)};
}

bool has_least(const OrderTerm& t) {
  switch (t.kind) {
    case OrderTerm::Kind::Fin:
    case OrderTerm::Kind::Ord:
      return true;
    case OrderTerm::Kind::Rev:
      return has_greatest(t.kids.front());
    case OrderTerm::Kind::Sum:
      return has_least(t.kids.front());
    case OrderTerm::Kind::LexSum:
      return has_least(t.kids.front());
  }
  return true;
}

bool has_greatest(const OrderTerm& t) {
  switch (t.kind) {
    case OrderTerm::Kind::Fin:
      return true;
    case OrderTerm::Kind::Ord:
      return false;  // limit ordinal
    case OrderTerm::Kind::Rev:
      return has_least(t.kids.front());
    case OrderTerm::Kind::Sum:
      return has_greatest(t.kids.back());
    case OrderTerm::Kind::LexSum:
      return false;  // no last copy
  }
  return true;
}

namespace {

using PairSet = std::set<std::pair<Card, Card>>;

// Infinite regular cardinals strictly below k, i.e. the alephs with smaller
// index.
void alephs_below(Card k, std::vector<Card>& out) {
  for (std::uint32_t i = 0; i < k.aleph_index(); ++i) out.push_back(Card::aleph(i));
}

void collect_proper(const OrderTerm& t, PairSet& out) {
  switch (t.kind) {
    case OrderTerm::Kind::Fin:
      if (t.n >= 2) out.emplace(Card::fin(1), Card::fin(1));
      return;
    case OrderTerm::Kind::Ord: {
      out.emplace(Card::fin(1), Card::fin(1));
      std::vector<Card> ls;
      alephs_below(t.card, ls);
      for (const Card& l : ls) out.emplace(l, Card::fin(1));
      return;
    }
    case OrderTerm::Kind::Rev: {
      PairSet inner;
      collect_proper(t.kids.front(), inner);
      for (const auto& [cf, ci] : inner) out.emplace(ci, cf);
      return;
    }
    case OrderTerm::Kind::Sum: {
      // n-ary sums fold left: cuts inside blocks plus each block boundary.
      collect_proper(t.kids.front(), out);
      Card left_cf = order_attrs(t.kids.front()).cf;
      for (std::size_t i = 1; i < t.kids.size(); ++i) {
        out.emplace(left_cf, order_attrs(t.kids[i]).ci);
        collect_proper(t.kids[i], out);
        left_cf = order_attrs(t.kids[i]).cf;
      }
      return;
    }
    case OrderTerm::Kind::LexSum: {
      const OrderTerm& inner = t.kids.front();
      collect_proper(inner, out);
      OrderAttrs a = order_attrs(inner);
      out.emplace(a.cf, a.ci);  // successor copy boundaries
      std::vector<Card> ls;
      alephs_below(t.card, ls);
      for (const Card& l : ls) out.emplace(l, a.ci);  // limit copy boundaries
      return;
    }
  }
}

TypeTerm card_as_term(Card c) {
  if (c == Card::fin(1)) return TypeTerm::one();
  return TypeTerm::ord(c);
}

}  // namespace

TukeyType cut_pair_type(Card cf, Card ci) {
  return normal_form(TypeTerm::prod({card_as_term(cf), card_as_term(ci)}));
}

std::vector<std::pair<Card, Card>> proper_cut_pairs(const OrderTerm& t) {
  PairSet pairs;
  collect_proper(t, pairs);
  return {pairs.begin(), pairs.end()};
}

bool chain_class_less(const ChainClass& a, const ChainClass& b) {
  if (a.cf != b.cf) return a.cf < b.cf;
  if (a.coinitiality.has_value() != b.coinitiality.has_value())
    return a.coinitiality.has_value();  // full chain sorts last
  if (a.coinitiality && b.coinitiality && *a.coinitiality != *b.coinitiality)
    return *a.coinitiality < *b.coinitiality;
  return type_less(a.tukey, b.tukey);
}

std::vector<ChainClass> classify_cuts(const OrderTerm& t) {
  OrderTerm prefixed = OrderTerm::sum({OrderTerm::fin(1), t});
  std::vector<ChainClass> out;
  for (const auto& [cf, ci] : proper_cut_pairs(prefixed))
    out.push_back(ChainClass{cf, ci, cut_pair_type(cf, ci)});
  Card full_cf = order_attrs(prefixed).cf;
  out.push_back(ChainClass{full_cf, std::nullopt, normal_form(card_as_term(full_cf))});
  std::sort(out.begin(), out.end(), chain_class_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<TukeyType> intalg_spectrum(const OrderTerm& t) {
  std::vector<TukeyType> out;
  for (const ChainClass& c : classify_cuts(t)) out.push_back(c.tukey);
  std::sort(out.begin(), out.end(), type_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

OrderTerm realize_interval(const std::vector<std::pair<Card, Card>>& pairs) {
  if (pairs.empty()) throw DomainError("no pairs to realize");
  auto check = [](Card c) {
    if (c.is_finite() && c != Card::fin(1))
      throw DomainError("pair entries must be 1 or infinite");
  };
  std::vector<OrderTerm> blocks;
  for (const auto& [cf, ci] : pairs) {
    check(cf);
    check(ci);
    OrderTerm left = cf == Card::fin(1) ? OrderTerm::fin(1) : OrderTerm::ord(cf);
    OrderTerm right =
        ci == Card::fin(1) ? OrderTerm::fin(1) : OrderTerm::rev(OrderTerm::ord(ci));
    blocks.push_back(OrderTerm::sum({std::move(left), std::move(right)}));
  }
  if (blocks.size() == 1) return blocks.front();
  return OrderTerm::sum(std::move(blocks));
}

std::string to_sexpr(const OrderTerm& t) {
  switch (t.kind) {
    case OrderTerm::Kind::Fin:
      return "(fin " + std::to_string(t.n) + ")";
    case OrderTerm::Kind::Ord:
      return "(ord " + to_string(t.card) + ")";
    case OrderTerm::Kind::Rev:
      return "(rev " + to_sexpr(t.kids.front()) + ")";
    case OrderTerm::Kind::Sum: {
      std::string out = "(sum";
      for (const auto& k : t.kids) out += " " + to_sexpr(k);
      return out + ")";
    }
    case OrderTerm::Kind::LexSum:
      return "(lexsum " + to_string(t.card) + " " + to_sexpr(t.kids.front()) + ")";
  }
  return "";
}

}  // namespace tukeyspec
