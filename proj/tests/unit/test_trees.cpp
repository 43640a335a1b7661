#include <doctest.h>

#include <set>
#include <string>
#include <utility>

#include "generators.hpp"
#include "tukeyspec/errors.hpp"
#include "tukeyspec/finite.hpp"
#include "tukeyspec/pseudotrees.hpp"
#include "tukeyspec/sexpr.hpp"
#include "tukeyspec/trees.hpp"

using namespace tukeyspec;

namespace {

std::string classes_str(const std::vector<TreeChainClass>& cs) {
  std::string out;
  for (const auto& c : cs) {
    if (!out.empty()) out += " ";
    out += "(" + to_string(c.cf) + "," + to_string(c.succ_count) + "," + pretty(c.tukey) + ")";
  }
  return out;
}

std::string spectrum_str(const std::vector<TukeyType>& sp) {
  std::string out;
  for (const auto& t : sp) {
    if (!out.empty()) out += " ";
    out += pretty(t);
  }
  return out;
}

}  // namespace

TEST_CASE("tree chain classes of reference trees") {
  auto star = parse_tree_term("(tree (fin 1) (branch w (tree (fin 1))))");
  CHECK(classes_str(tree_chain_classes(star)) == "(1,0,1) (1,w,w)");

  auto chain = parse_tree_term("(tree (ord w1))");
  CHECK(classes_str(tree_chain_classes(chain)) == "(1,1,1) (w,1,w) (w1,0,w1)");

  auto binary = parse_tree_term(
      "(tree (fin 1) (branch 2 (tree (fin 1) (branch 2 (tree (fin 1))))))");
  for (const auto& c : tree_chain_classes(binary)) {
    CHECK(c.cf == Card::fin(1));
    CHECK(c.succ_count.is_finite());
    CHECK(c.tukey.is_one());
  }
}

TEST_CASE("tree spectra of reference trees") {
  CHECK(spectrum_str(tree_spectrum(parse_tree_term("(tree (fin 1) (branch w (tree (fin 1))))"))) ==
        "1 w");
  CHECK(spectrum_str(tree_spectrum(parse_tree_term("(tree (ord w1))"))) == "1 w w1");
  CHECK(spectrum_str(tree_spectrum(parse_tree_term("(tree (fin 1) (branch w1 (tree (fin 1))))"))) ==
        "1 [w1]^<w");
}

TEST_CASE("maximum-type criterion") {
  auto star_w1 = parse_tree_term("(tree (fin 1) (branch w1 (tree (fin 1))))");
  CHECK(tree_has_max_type(star_w1, Card::aleph(1)));
  CHECK(!tree_has_max_type(parse_tree_term("(tree (ord w1))"), Card::aleph(1)));
  CHECK(tree_has_max_type(parse_tree_term("(tree (fin 1) (branch w (tree (fin 1))))"),
                          Card::omega()));
}

TEST_CASE("reversed trunks are rejected") {
  TreeTerm bad;
  bad.trunk = OrderTerm::rev(OrderTerm::ord(Card::omega()));
  CHECK_THROWS_AS(tree_chain_classes(bad), DomainError);
  CHECK_THROWS_WITH_AS(tree_chain_classes(bad), "not a tree: reversed trunk segment",
                       DomainError);
  CHECK_THROWS_AS(parse_tree_term("(tree (rev (ord w)))"), ParseError);
}

TEST_CASE("trunk-internal classes never contribute a finsets component") {
  testgen::Rng rng(6301);
  for (int i = 0; i < 500; ++i) {
    TreeTerm t = testgen::rand_tree_term(rng);
    for (const auto& c : tree_chain_classes(t))
      if (c.succ_count == Card::fin(1)) CHECK(!c.tukey.finsets.has_value());
  }
}

TEST_CASE("tree and pseudo-tree spectra agree under embedding") {
  testgen::Rng rng(6302);
  for (int i = 0; i < 800; ++i) {
    TreeTerm t = testgen::rand_tree_term(rng);
    CHECK(spectrum_str(tree_spectrum(t)) == spectrum_str(ptree_spectrum(embed(t))));
  }
}

TEST_CASE("embedded fans reproduce successor counts with unit chain lengths") {
  testgen::Rng rng(6304);
  for (int i = 0; i < 500; ++i) {
    TreeTerm t = testgen::rand_tree_term(rng);
    std::set<std::pair<Card, Card>> tree_side, ptree_side;
    for (const auto& c : tree_chain_classes(t)) tree_side.emplace(c.cf, c.succ_count);
    for (const auto& c : ptree_chain_classes(embed(t))) {
      ptree_side.emplace(c.cf, c.fan.lambda);
      for (const auto& fc : c.fan.classes) CHECK(fc.theta == Card::fin(1));
    }
    CHECK(tree_side == ptree_side);
  }
}

TEST_CASE("finite trees have trivial spectra matching exhaustive enumeration") {
  testgen::Rng rng(6303);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    TreeTerm t = testgen::rand_tree_term(rng, 2, /*finite_only=*/true);
    auto sp = tree_spectrum(t);
    REQUIRE(sp.size() == 1);
    CHECK(sp.front().is_one());
    FinitePoset p = [&]() -> FinitePoset {
      try {
        return lower_tree(t);
      } catch (const DomainError&) {
        return FinitePoset::from_leq_pairs(1, {});  // too large to lower; skip
      }
    }();
    if (p.size() > 1) {
      CHECK(initial_chains(p).size() == static_cast<std::size_t>(p.size()));
      ++checked;
    }
  }
  CHECK(checked > 100);
}
