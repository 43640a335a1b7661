#include "tukeyspec/sexpr.hpp"

#include <cctype>

#include "tukeyspec/errors.hpp"

namespace tukeyspec {

namespace {

constexpr std::uint32_t max_aleph_index = 10000;

struct Lexer {
  std::string_view src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  bool done() {
    skip_ws();
    return pos >= src.size();
  }

  SNode node() {
    skip_ws();
    if (pos >= src.size()) throw ParseError("unexpected end of input", pos);
    if (src[pos] == ')') throw ParseError("unexpected ')'", pos);
    if (src[pos] == '(') {
      SNode list;
      list.is_atom = false;
      list.pos = pos;
      ++pos;
      while (true) {
        skip_ws();
        if (pos >= src.size()) throw ParseError("missing ')'", list.pos);
        if (src[pos] == ')') {
          ++pos;
          return list;
        }
        list.kids.push_back(node());
      }
    }
    SNode atom;
    atom.pos = pos;
    while (pos < src.size() && src[pos] != '(' && src[pos] != ')' &&
           !std::isspace(static_cast<unsigned char>(src[pos])))
      ++pos;
    atom.text = std::string(src.substr(atom.pos, pos - atom.pos));
    return atom;
  }
};

[[noreturn]] void fail(const SNode& n, const std::string& msg) {
  throw ParseError(msg, n.pos);
}

const SNode& arg(const SNode& n, std::size_t i, const std::string& what) {
  if (i >= n.kids.size()) fail(n, "missing " + what);
  return n.kids[i];
}

std::string head_of(const SNode& n) {
  if (n.is_atom || n.kids.empty() || !n.kids.front().is_atom) return "";
  return n.kids.front().text;
}

void expect_arity(const SNode& n, std::size_t arity, const std::string& form) {
  if (n.kids.size() != arity) fail(n, "'" + form + "' takes " + std::to_string(arity - 1) +
                                          " argument(s)");
}

std::uint64_t read_natural(const SNode& n, const std::string& what) {
  if (!n.is_atom || n.text.empty()) fail(n, "expected " + what);
  std::uint64_t value = 0;
  for (char c : n.text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) fail(n, "expected " + what);
    if (value > (UINT64_MAX - 9) / 10) fail(n, what + " out of range");
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return value;
}

// Wraps factory validation into a positioned parse error.
template <typename F>
auto positioned(const SNode& n, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw ParseError(e.what(), n.pos);
  }
}

}  // namespace

SNode parse_sexpr(std::string_view src) {
  Lexer lex{src};
  SNode n = lex.node();
  if (!lex.done()) throw ParseError("trailing input after term", lex.pos);
  return n;
}

Card read_card(const SNode& n) {
  if (!n.is_atom || n.text.empty()) fail(n, "expected a cardinal");
  if (n.text[0] == 'w') {
    if (n.text.size() == 1) return Card::omega();
    std::uint64_t idx = 0;
    for (std::size_t i = 1; i < n.text.size(); ++i) {
      char c = n.text[i];
      if (!std::isdigit(static_cast<unsigned char>(c))) fail(n, "expected a cardinal");
      idx = idx * 10 + static_cast<std::uint64_t>(c - '0');
      if (idx > max_aleph_index) fail(n, "aleph index out of range");
    }
    return Card::aleph(static_cast<std::uint32_t>(idx));
  }
  return Card::fin(read_natural(n, "a cardinal"));
}

TypeTerm read_type_term(const SNode& n) {
  if (n.is_atom) {
    if (n.text == "1") return TypeTerm::one();
    fail(n, "expected a type term");
  }
  std::string head = head_of(n);
  if (head == "ord") {
    expect_arity(n, 2, head);
    return positioned(n, [&] { return TypeTerm::ord(read_card(arg(n, 1, "cardinal"))); });
  }
  if (head == "finsets") {
    expect_arity(n, 2, head);
    return positioned(n, [&] { return TypeTerm::finsets(read_card(arg(n, 1, "cardinal"))); });
  }
  if (head == "prod") {
    if (n.kids.size() < 2) fail(n, "'prod' needs at least one factor");
    std::vector<TypeTerm> parts;
    for (std::size_t i = 1; i < n.kids.size(); ++i) parts.push_back(read_type_term(n.kids[i]));
    return TypeTerm::prod(std::move(parts));
  }
  if (head == "wprod") {
    if (n.kids.size() < 2) fail(n, "'wprod' needs at least one (base mult) entry");
    std::vector<std::pair<Card, Card>> entries;
    for (std::size_t i = 1; i < n.kids.size(); ++i) {
      const SNode& e = n.kids[i];
      if (e.is_atom || e.kids.size() != 2) fail(e, "expected a (base mult) entry");
      entries.emplace_back(read_card(e.kids[0]), read_card(e.kids[1]));
    }
    return TypeTerm::wprod(std::move(entries));
  }
  fail(n, "unknown type term");
}

OrderTerm read_order_term(const SNode& n) {
  if (n.is_atom) fail(n, "expected an order term");
  std::string head = head_of(n);
  if (head == "fin") {
    expect_arity(n, 2, head);
    return positioned(n, [&] { return OrderTerm::fin(read_natural(arg(n, 1, "size"), "a size")); });
  }
  if (head == "ord") {
    expect_arity(n, 2, head);
    return positioned(n, [&] { return OrderTerm::ord(read_card(arg(n, 1, "cardinal"))); });
  }
  if (head == "rev") {
    expect_arity(n, 2, head);
    return OrderTerm::rev(read_order_term(arg(n, 1, "order term")));
  }
  if (head == "sum") {
    if (n.kids.size() < 2) fail(n, "'sum' needs at least one block");
    std::vector<OrderTerm> blocks;
    for (std::size_t i = 1; i < n.kids.size(); ++i) blocks.push_back(read_order_term(n.kids[i]));
    return OrderTerm::sum(std::move(blocks));
  }
  if (head == "lexsum") {
    expect_arity(n, 3, head);
    Card k = read_card(arg(n, 1, "cardinal"));
    OrderTerm inner = read_order_term(arg(n, 2, "order term"));
    return positioned(n, [&] { return OrderTerm::lexsum(k, std::move(inner)); });
  }
  fail(n, "unknown order term");
}

namespace {

template <typename Term, typename ReadSub>
Term read_branchy(const SNode& n, const char* head, ReadSub&& read_sub) {
  Term t;
  t.trunk = read_order_term(arg(n, 1, "trunk"));
  for (std::size_t i = 2; i < n.kids.size(); ++i) {
    const SNode& b = n.kids[i];
    if (b.is_atom || head_of(b) != "branch" || b.kids.size() != 3)
      fail(b, std::string("expected (branch MULT SUBTREE) inside '") + head + "'");
    Card mult = read_card(b.kids[1]);
    if (mult == Card::fin(0)) fail(b, "branch multiplicity must be at least 1");
    t.branches.push_back({mult, read_sub(b.kids[2])});
  }
  return t;
}

}  // namespace

TreeTerm read_tree_term(const SNode& n) {
  if (n.is_atom || head_of(n) != "tree") fail(n, "expected a tree term");
  if (n.kids.size() < 2) fail(n, "'tree' needs a trunk");
  TreeTerm t = read_branchy<TreeTerm>(n, "tree", read_tree_term);
  positioned(n, [&] {
    validate_tree(t);
    return 0;
  });
  return t;
}

PTreeTerm read_ptree_term(const SNode& n) {
  if (n.is_atom || head_of(n) != "ptree") fail(n, "expected a pseudo-tree term");
  if (n.kids.size() < 2) fail(n, "'ptree' needs a trunk");
  return read_branchy<PTreeTerm>(n, "ptree", read_ptree_term);
}

CatalogSpec read_catalog_spec(const SNode& n) {
  if (n.is_atom) fail(n, "expected a catalog spec");
  std::string head = head_of(n);
  if (head == "free") {
    expect_arity(n, 2, head);
    return positioned(n, [&] { return CatalogSpec::free_algebra(read_card(arg(n, 1, "cardinal"))); });
  }
  if (head == "fincofin") {
    expect_arity(n, 2, head);
    return positioned(n, [&] { return CatalogSpec::fin_cofin(read_card(arg(n, 1, "cardinal"))); });
  }
  if (head == "adfamily") {
    expect_arity(n, 3, head);
    Card kappa = read_card(arg(n, 1, "cardinal"));
    if (kappa.is_finite()) fail(arg(n, 1, "cardinal"), "family cardinal must be infinite");
    const SNode& mus_node = arg(n, 2, "(mus ...)");
    if (mus_node.is_atom || head_of(mus_node) != "mus") fail(mus_node, "expected (mus ...)");
    std::vector<Card> mus;
    for (std::size_t i = 1; i < mus_node.kids.size(); ++i)
      mus.push_back(read_card(mus_node.kids[i]));
    // constraints between the parts are the operation's contract, not syntax
    return CatalogSpec::ad_family(kappa, std::move(mus));
  }
  fail(n, "unknown catalog spec");
}

std::vector<std::pair<Card, Card>> read_card_pairs(const SNode& n) {
  if (n.is_atom) fail(n, "expected a list of (cf ci) pairs");
  std::vector<std::pair<Card, Card>> out;
  for (const SNode& e : n.kids) {
    if (e.is_atom || e.kids.size() != 2) fail(e, "expected a (cf ci) pair");
    out.emplace_back(read_card(e.kids[0]), read_card(e.kids[1]));
  }
  return out;
}

std::vector<std::pair<Card, Card>> read_weighted_cards(const SNode& n) {
  if (n.is_atom) fail(n, "expected a list of cardinals");
  std::vector<std::pair<Card, Card>> out;
  for (const SNode& e : n.kids) {
    if (e.is_atom) {
      out.emplace_back(read_card(e), Card::fin(1));
    } else {
      if (e.kids.size() != 2) fail(e, "expected a cardinal or a (cardinal mult) entry");
      out.emplace_back(read_card(e.kids[0]), read_card(e.kids[1]));
    }
  }
  return out;
}

Card parse_card(std::string_view src) { return read_card(parse_sexpr(src)); }
TypeTerm parse_type_term(std::string_view src) { return read_type_term(parse_sexpr(src)); }
OrderTerm parse_order_term(std::string_view src) { return read_order_term(parse_sexpr(src)); }
TreeTerm parse_tree_term(std::string_view src) { return read_tree_term(parse_sexpr(src)); }
PTreeTerm parse_ptree_term(std::string_view src) { return read_ptree_term(parse_sexpr(src)); }
CatalogSpec parse_catalog_spec(std::string_view src) {
  return read_catalog_spec(parse_sexpr(src));
}

}  // namespace tukeyspec
