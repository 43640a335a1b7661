#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tukeyspec/cards.hpp"
#include "tukeyspec/catalog.hpp"
#include "tukeyspec/orders.hpp"
#include "tukeyspec/pseudotrees.hpp"
#include "tukeyspec/trees.hpp"
#include "tukeyspec/tukey.hpp"

namespace tukeyspec {

struct SNode {
  bool is_atom = true;
  std::string text;          // atoms
  std::vector<SNode> kids;   // lists
  std::size_t pos = 0;       // byte offset into the source
};

// One s-expression spanning the whole input.
SNode parse_sexpr(std::string_view src);

Card read_card(const SNode& n);
TypeTerm read_type_term(const SNode& n);
OrderTerm read_order_term(const SNode& n);
TreeTerm read_tree_term(const SNode& n);
PTreeTerm read_ptree_term(const SNode& n);
CatalogSpec read_catalog_spec(const SNode& n);

// Realizer inputs: "((cf ci) ...)" and "(card-or-(card mult) ...)".
std::vector<std::pair<Card, Card>> read_card_pairs(const SNode& n);
std::vector<std::pair<Card, Card>> read_weighted_cards(const SNode& n);

Card parse_card(std::string_view src);
TypeTerm parse_type_term(std::string_view src);
OrderTerm parse_order_term(std::string_view src);
TreeTerm parse_tree_term(std::string_view src);
PTreeTerm parse_ptree_term(std::string_view src);
CatalogSpec parse_catalog_spec(std::string_view src);

}  // namespace tukeyspec
