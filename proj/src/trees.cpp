#include "tukeyspec/trees.hpp"

#include <algorithm>

#include "tukeyspec/errors.hpp"

namespace tukeyspec {

namespace {

bool contains_rev(const OrderTerm& t) {
  if (t.kind == OrderTerm::Kind::Rev) return true;
  for (const auto& k : t.kids)
    if (contains_rev(k)) return true;
  return false;
}

bool tree_class_less(const TreeChainClass& a, const TreeChainClass& b) {
  if (a.cf != b.cf) return a.cf < b.cf;
  if (a.succ_count != b.succ_count) return a.succ_count < b.succ_count;
  return type_less(a.tukey, b.tukey);
}

// cf x prod^w of succ-many two-point factors; an empty successor set leaves
// the cofinality alone.
TukeyType tree_class_type(Card cf, Card succ) {
  std::vector<TypeTerm> parts;
  if (cf != Card::fin(1)) parts.push_back(TypeTerm::ord(cf));
  if (succ != Card::fin(0)) parts.push_back(TypeTerm::wprod({{Card::fin(2), succ}}));
  return normal_form(TypeTerm::prod(std::move(parts)));
}

void collect_classes(const TreeTerm& t, std::vector<TreeChainClass>& out) {
  // Cuts inside the well-ordered trunk always leave a least remainder
  // element: exactly one immediate successor.
  for (const auto& [cf, ci] : proper_cut_pairs(t.trunk))
    out.push_back(TreeChainClass{cf, Card::fin(1), tree_class_type(cf, Card::fin(1))});

  Card trunk_cf = order_attrs(t.trunk).cf;
  Card succ = Card::fin(0);
  if (!t.branches.empty()) {
    std::vector<std::pair<Card, Card>> mults;
    for (const auto& b : t.branches) mults.emplace_back(b.mult, Card::fin(1));
    succ = card_sum(mults);
  }
  out.push_back(TreeChainClass{trunk_cf, succ, tree_class_type(trunk_cf, succ)});

  for (const auto& b : t.branches) collect_classes(b.sub, out);
}

}  // namespace

void validate_tree(const TreeTerm& t) {
  if (contains_rev(t.trunk)) throw DomainError("not a tree: reversed trunk segment");
  for (const auto& b : t.branches) {
    if (b.mult == Card::fin(0)) throw DomainError("zero branch multiplicity");
    validate_tree(b.sub);
  }
}

std::vector<TreeChainClass> tree_chain_classes(const TreeTerm& t) {
  validate_tree(t);
  std::vector<TreeChainClass> out;
  collect_classes(t, out);
  std::sort(out.begin(), out.end(), tree_class_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<TukeyType> tree_spectrum(const TreeTerm& t) {
  std::vector<TukeyType> out;
  for (const auto& c : tree_chain_classes(t)) out.push_back(c.tukey);
  std::sort(out.begin(), out.end(), type_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool tree_has_max_type(const TreeTerm& t, Card kappa) {
  if (kappa.is_uncountable()) {
    for (const auto& c : tree_chain_classes(t))
      if (c.succ_count == kappa) return true;
    return false;
  }
  if (kappa == Card::omega()) {
    TukeyType omega_type;
    omega_type.factors.emplace_back(Card::omega(), Card::fin(1));
    for (const auto& ty : tree_spectrum(t))
      if (ty == omega_type) return true;
  }
  return false;
}

std::string to_sexpr(const TreeTerm& t) {
  std::string out = "(tree " + to_sexpr(t.trunk);
  for (const auto& b : t.branches)
    out += " (branch " + to_string(b.mult) + " " + to_sexpr(b.sub) + ")";
  return out + ")";
}

}  // namespace tukeyspec
