#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "generators.hpp"
#include "tukeyspec/errors.hpp"
#include "tukeyspec/orders.hpp"
#include "tukeyspec/sexpr.hpp"

using namespace tukeyspec;

namespace {

std::string classes_str(const std::vector<ChainClass>& cs) {
  std::string out;
  for (const auto& c : cs) {
    if (!out.empty()) out += " ";
    out += "(" + to_string(c.cf) + "," +
           (c.coinitiality ? to_string(*c.coinitiality) : std::string("full")) + ")";
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

std::uint64_t explicit_length(const OrderTerm& t) {
  switch (t.kind) {
    case OrderTerm::Kind::Fin:
      return t.n;
    case OrderTerm::Kind::Rev:
      return explicit_length(t.kids.front());
    case OrderTerm::Kind::Sum: {
      std::uint64_t total = 0;
      for (const auto& k : t.kids) total += explicit_length(k);
      return total;
    }
    default:
      REQUIRE(false);
      return 0;
  }
}

// Exhaustive cut enumeration on the explicit finite chain (prefixed by the
// least block): every initial segment is inspected directly.
std::vector<ChainClass> explicit_chain_cuts(std::uint64_t term_length) {
  std::uint64_t n = term_length + 1;  // least block
  std::set<std::pair<Card, bool>> seen;
  std::vector<ChainClass> out;
  for (std::uint64_t k = 1; k <= n; ++k) {
    // the segment 0..k-1 has a greatest element, so its cofinality is 1;
    // a non-empty remainder has a least element, so its coinitiality is 1
    Card cf = Card::fin(1);
    bool full = k == n;
    if (!seen.emplace(cf, full).second) continue;
    if (full)
      out.push_back(ChainClass{cf, std::nullopt, normal_form(TypeTerm::one())});
    else
      out.push_back(ChainClass{cf, Card::fin(1), cut_pair_type(cf, Card::fin(1))});
  }
  std::sort(out.begin(), out.end(), chain_class_less);
  return out;
}

}  // namespace

TEST_CASE("order attributes") {
  auto a = order_attrs(parse_order_term("(ord w1)"));
  CHECK(a.cf == Card::aleph(1));
  CHECK(a.ci == Card::fin(1));
  auto b = order_attrs(parse_order_term("(rev (ord w))"));
  CHECK(b.cf == Card::fin(1));
  CHECK(b.ci == Card::omega());
  auto c = order_attrs(parse_order_term("(lexsum w (fin 2))"));
  CHECK(c.cf == Card::omega());
  CHECK(c.ci == Card::fin(1));
  auto d = order_attrs(parse_order_term("(sum (rev (ord w)) (ord w2))"));
  CHECK(d.cf == Card::aleph(2));
  CHECK(d.ci == Card::omega());
}

TEST_CASE("cut classification of reference orders") {
  CHECK(classes_str(classify_cuts(parse_order_term("(ord w)"))) == "(1,1) (w,full)");
  CHECK(classes_str(classify_cuts(parse_order_term("(sum (ord w1) (rev (ord w1)))"))) ==
        "(1,1) (1,w) (1,full) (w,1) (w1,w1)");
  CHECK(classes_str(classify_cuts(parse_order_term("(fin 3)"))) == "(1,1) (1,full)");
}

TEST_CASE("classification agrees with explicit enumeration on finite terms") {
  testgen::Rng rng(5201);
  for (int i = 0; i < 1000; ++i) {
    OrderTerm t = testgen::rand_order_term(rng, 3, /*fin_only=*/true);
    auto expected = explicit_chain_cuts(explicit_length(t));
    auto got = classify_cuts(t);
    CHECK(classes_str(got) == classes_str(expected));
    for (std::size_t j = 0; j < got.size() && j < expected.size(); ++j)
      CHECK(got[j].tukey == expected[j].tukey);
  }
}

TEST_CASE("lexicographic sums take their coinitiality from the first copy") {
  // finite unrollings of the index cardinal must show the same coinitial
  // structure as the symbolic rule
  testgen::Rng rng(5205);
  for (int i = 0; i < 300; ++i) {
    OrderTerm inner = testgen::rand_order_term(rng, 2);
    OrderTerm symbolic = OrderTerm::lexsum(Card::aleph(static_cast<std::uint32_t>(rng() % 3)),
                                           inner);
    std::size_t copies = 2 + rng() % 3;
    std::vector<OrderTerm> unrolled(copies, inner);
    OrderTerm prefix = OrderTerm::sum(std::move(unrolled));
    CHECK(order_attrs(symbolic).ci == order_attrs(prefix).ci);
    CHECK(has_least(symbolic) == has_least(prefix));
  }
}

TEST_CASE("double reversal preserves the classification") {
  testgen::Rng rng(5202);
  for (int i = 0; i < 500; ++i) {
    OrderTerm t = testgen::rand_order_term(rng);
    OrderTerm rr = OrderTerm::rev(OrderTerm::rev(t));
    CHECK(classes_str(classify_cuts(t)) == classes_str(classify_cuts(rr)));
  }
}

TEST_CASE("interval spectra of reference orders") {
  CHECK(spectrum_str(intalg_spectrum(parse_order_term("(sum (ord w1) (rev (ord w1)))"))) ==
        "1 w w1");
  CHECK(spectrum_str(intalg_spectrum(parse_order_term("(ord w)"))) == "1 w");
  CHECK(spectrum_str(intalg_spectrum(parse_order_term("(fin 5)"))) == "1");
}

TEST_CASE("interval types are rectangular: at most two factors, no finsets") {
  testgen::Rng rng(5203);
  for (int i = 0; i < 800; ++i) {
    OrderTerm t = testgen::rand_order_term(rng);
    for (const auto& ty : intalg_spectrum(t)) {
      CHECK(!ty.finsets.has_value());
      CHECK(ty.factors.size() <= 2);
    }
  }
}

TEST_CASE("interval realizer on reference pairs") {
  OrderTerm a = realize_interval({{Card::omega(), Card::aleph(1)}});
  CHECK(to_sexpr(a) == "(sum (ord w) (rev (ord w1)))");
  auto sp = intalg_spectrum(a);
  TukeyType want = normal_form(
      TypeTerm::prod({TypeTerm::ord(Card::omega()), TypeTerm::ord(Card::aleph(1))}));
  CHECK(std::count(sp.begin(), sp.end(), want) == 1);

  OrderTerm b = realize_interval({{Card::aleph(1), Card::aleph(1)}});
  CHECK(to_sexpr(b) == "(sum (ord w1) (rev (ord w1)))");
  CHECK(spectrum_str(intalg_spectrum(b)) == "1 w w1");

  OrderTerm c = realize_interval({{Card::fin(1), Card::fin(1)}});
  CHECK(to_sexpr(c) == "(sum (fin 1) (fin 1))");
  CHECK(spectrum_str(intalg_spectrum(c)) == "1");

  CHECK_THROWS_AS(realize_interval({}), DomainError);
  CHECK_THROWS_AS(realize_interval({{Card::fin(2), Card::omega()}}), DomainError);
}

TEST_CASE("realized pair sets are contained in the resulting spectrum") {
  testgen::Rng rng(5204);
  for (int i = 0; i < 300; ++i) {
    auto pairs = testgen::rand_interval_pairs(rng);
    auto sp = intalg_spectrum(realize_interval(pairs));
    for (const auto& [cf, ci] : pairs) {
      TukeyType want = cut_pair_type(cf, ci);
      CHECK(std::count(sp.begin(), sp.end(), want) == 1);
    }
  }
}
