#include "tukeyspec/pseudotrees.hpp"

#include <algorithm>

#include "tukeyspec/errors.hpp"

namespace tukeyspec {

namespace {

bool fan_less(const Fan& a, const Fan& b) {
  if (a.lambda != b.lambda) return a.lambda < b.lambda;
  return a.classes < b.classes;
}

bool ptree_class_less(const PTreeClass& a, const PTreeClass& b) {
  if (a.cf != b.cf) return a.cf < b.cf;
  if (!(a.fan == b.fan)) return fan_less(a.fan, b.fan);
  return type_less(a.tukey, b.tukey);
}

bool ptree_class_eq(const PTreeClass& a, const PTreeClass& b) {
  return a.cf == b.cf && a.fan == b.fan && a.tukey == b.tukey;
}

Fan make_fan(std::vector<FanClass> classes) {
  Fan f;
  std::sort(classes.begin(), classes.end());
  if (!classes.empty()) {
    std::vector<std::pair<Card, Card>> mults;
    for (const auto& c : classes) mults.emplace_back(c.mult, Card::fin(1));
    f.lambda = card_sum(mults);
  }
  f.classes = std::move(classes);
  return f;
}

// Fan of the whole-trunk chain: one class per branch entry, theta the
// coinitiality of the subtree's trunk.
Fan whole_trunk_fan(const PTreeTerm& t) {
  std::vector<FanClass> classes;
  for (const auto& b : t.branches)
    classes.push_back(FanClass{b.mult, order_attrs(b.sub.trunk).ci});
  return make_fan(std::move(classes));
}

// Type cf x prod^w (1 + theta) over the fan: theta = 1 contributes a
// two-point factor, infinite theta contributes theta itself.
TukeyType fan_class_type(Card cf, const Fan& fan) {
  std::vector<TypeTerm> parts;
  if (cf != Card::fin(1)) parts.push_back(TypeTerm::ord(cf));
  std::vector<std::pair<Card, Card>> entries;
  for (const auto& c : fan.classes) {
    Card base = c.theta == Card::fin(1) ? Card::fin(2) : c.theta;
    entries.emplace_back(base, c.mult);
  }
  if (!entries.empty()) parts.push_back(TypeTerm::wprod(std::move(entries)));
  return normal_form(TypeTerm::prod(std::move(parts)));
}

// The effective trunk of a subterm: the top-level trunk is preceded by a
// root block when it has no least element; nested trunks sit above their
// parent and are used as written.
OrderTerm effective_trunk(const PTreeTerm& t, bool top) {
  if (top && !has_least(t.trunk))
    return OrderTerm::sum({OrderTerm::fin(1), t.trunk});
  return t.trunk;
}

void collect_classes(const PTreeTerm& t, bool top, std::vector<std::size_t>& path,
                     std::vector<PTreeClass>& out) {
  OrderTerm trunk = effective_trunk(t, top);
  auto pairs = proper_cut_pairs(trunk);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    Fan f = make_fan({FanClass{Card::fin(1), pairs[i].second}});
    ClassHandle h{path, false, i};
    out.push_back(PTreeClass{pairs[i].first, f, fan_class_type(pairs[i].first, f), h});
  }
  Fan f = whole_trunk_fan(t);
  Card cf = order_attrs(trunk).cf;
  out.push_back(PTreeClass{cf, f, fan_class_type(cf, f), ClassHandle{path, true, 0}});
  for (std::size_t j = 0; j < t.branches.size(); ++j) {
    path.push_back(j);
    collect_classes(t.branches[j].sub, false, path, out);
    path.pop_back();
  }
}

}  // namespace

void validate_ptree(const PTreeTerm& t) {
  for (const auto& b : t.branches) {
    if (b.mult == Card::fin(0)) throw DomainError("zero branch multiplicity");
    validate_ptree(b.sub);
  }
}

std::vector<PTreeClass> ptree_chain_classes(const PTreeTerm& t) {
  validate_ptree(t);
  std::vector<PTreeClass> out;
  std::vector<std::size_t> path;
  collect_classes(t, true, path, out);
  std::sort(out.begin(), out.end(), ptree_class_less);
  out.erase(std::unique(out.begin(), out.end(), ptree_class_eq), out.end());
  return out;
}

Fan fan_at(const PTreeTerm& t, const ClassHandle& which) {
  const PTreeTerm* node = &t;
  for (std::size_t j : which.path) {
    if (j >= node->branches.size()) throw DomainError("stale class handle");
    node = &node->branches[j].sub;
  }
  if (which.whole_trunk) return whole_trunk_fan(*node);
  auto pairs = proper_cut_pairs(effective_trunk(*node, which.path.empty()));
  if (which.cut_index >= pairs.size()) throw DomainError("stale class handle");
  return make_fan({FanClass{Card::fin(1), pairs[which.cut_index].second}});
}

std::vector<TukeyType> ptree_spectrum(const PTreeTerm& t) {
  std::vector<TukeyType> out;
  for (const auto& c : ptree_chain_classes(t)) out.push_back(c.tukey);
  std::sort(out.begin(), out.end(), type_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<Card, Card> epsilon_and_character(const PTreeClass& c) {
  if (c.fan.classes.empty()) return {Card::fin(0), c.cf};
  std::vector<std::pair<Card, Card>> parts;
  for (const auto& fc : c.fan.classes) parts.emplace_back(fc.theta, fc.mult);
  Card eps = card_sum(parts);
  return {eps, std::max(eps, c.cf)};
}

PTreeTerm realize_weak_product(const std::vector<std::pair<Card, Card>>& entries) {
  if (entries.empty()) throw DomainError("no cardinals to realize");
  PTreeTerm root;
  root.trunk = OrderTerm::fin(1);
  for (const auto& [k, mult] : entries) {
    if (mult == Card::fin(0)) throw DomainError("zero multiplicity");
    if (k.is_finite() && k != Card::fin(2))
      throw DomainError("cardinals must be 2 or infinite");
    PTreeTerm sub;
    sub.trunk = k == Card::fin(2) ? OrderTerm::fin(1) : OrderTerm::rev(OrderTerm::ord(k));
    root.branches.push_back(PTreeTerm::Branch{mult, std::move(sub)});
  }
  return root;
}

PTreeTerm realize_weak_product(const std::vector<Card>& cards) {
  std::vector<std::pair<Card, Card>> entries;
  for (const Card& k : cards) entries.emplace_back(k, Card::fin(1));
  return realize_weak_product(entries);
}

PTreeTerm embed(const TreeTerm& t) {
  validate_tree(t);
  PTreeTerm out;
  out.trunk = t.trunk;
  for (const auto& b : t.branches)
    out.branches.push_back(PTreeTerm::Branch{b.mult, embed(b.sub)});
  return out;
}

std::string to_sexpr(const PTreeTerm& t) {
  std::string out = "(ptree " + to_sexpr(t.trunk);
  for (const auto& b : t.branches)
    out += " (branch " + to_string(b.mult) + " " + to_sexpr(b.sub) + ")";
  return out + ")";
}

}  // namespace tukeyspec
