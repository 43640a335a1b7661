#pragma once

// Independent small-step rewriter used as the confluence oracle: it applies
// the canonicalization rules one at a time in a random order and must reach
// the same normal form as the production pipeline, whatever the order.

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "tukeyspec/cards.hpp"
#include "tukeyspec/tukey.hpp"

namespace tukeyspec::testgen {

namespace detail {

struct Atom {
  enum class Kind { One, Entry, Fins };
  Kind kind = Kind::One;
  Card base = Card::fin(1);
  Card mult = Card::fin(1);
};

inline void seed(const TypeTerm& t, std::vector<Atom>& out) {
  switch (t.kind) {
    case TypeTerm::Kind::One:
      out.push_back(Atom{Atom::Kind::One, Card::fin(1), Card::fin(1)});
      return;
    case TypeTerm::Kind::Ord:
      out.push_back(Atom{Atom::Kind::Entry, t.card, Card::fin(1)});
      return;
    case TypeTerm::Kind::FinSets:
      out.push_back(Atom{Atom::Kind::Fins, t.card, Card::fin(1)});
      return;
    case TypeTerm::Kind::Prod:
      for (const auto& p : t.parts) seed(p, out);
      return;
    case TypeTerm::Kind::WeakProd:
      for (const auto& [base, mult] : t.entries)
        out.push_back(Atom{Atom::Kind::Entry, base, mult});
      return;
  }
}

struct Move {
  std::size_t i = 0;
  std::size_t j = 0;  // second operand for binary moves
  int rule = 0;
};

// 0: drop one, 1: drop base-1 entry, 2: drop finite bounded entry,
// 3: finite base with infinite mult -> fins, 4: idem finite mult,
// 5: wfold, 6: merge same base, 7: fins max, 8: day, 9: absorb
inline std::vector<Move> applicable(const std::vector<Atom>& st) {
  std::vector<Move> out;
  for (std::size_t i = 0; i < st.size(); ++i) {
    const Atom& a = st[i];
    if (a.kind == Atom::Kind::One) out.push_back({i, 0, 0});
    if (a.kind == Atom::Kind::Entry) {
      if (a.base == Card::fin(1)) out.push_back({i, 0, 1});
      if (a.base.is_finite() && a.base.finite_value() >= 2) {
        if (a.mult.is_finite())
          out.push_back({i, 0, 2});
        else
          out.push_back({i, 0, 3});
      }
      if (a.base.is_infinite()) {
        if (a.mult.is_finite() && a.mult.finite_value() >= 2) out.push_back({i, 0, 4});
        if (a.mult.is_infinite() && a.mult >= a.base) out.push_back({i, 0, 5});
      }
      for (std::size_t j = i + 1; j < st.size(); ++j)
        if (st[j].kind == Atom::Kind::Entry && st[j].base == a.base &&
            a.base.is_infinite())
          out.push_back({i, j, 6});
    }
    if (a.kind == Atom::Kind::Fins) {
      for (std::size_t j = i + 1; j < st.size(); ++j)
        if (st[j].kind == Atom::Kind::Fins) out.push_back({i, j, 7});
      if (a.base == Card::omega()) out.push_back({i, 0, 8});
      // the absorbed factor must have size <= the finsets component, so an
      // infinite multiplicity has to fit under it as well
      for (std::size_t j = 0; j < st.size(); ++j)
        if (st[j].kind == Atom::Kind::Entry && st[j].base.is_infinite() &&
            st[j].base <= a.base && st[j].mult <= a.base)
          out.push_back({j, i, 9});
    }
  }
  return out;
}

inline void apply(std::vector<Atom>& st, const Move& m) {
  auto erase_at = [&st](std::size_t k) {
    st.erase(st.begin() + static_cast<std::ptrdiff_t>(k));
  };
  switch (m.rule) {
    case 0:
    case 1:
    case 2:
    case 9:
      erase_at(m.i);
      return;
    case 3:
    case 5:
      st[m.i] = Atom{Atom::Kind::Fins, st[m.i].mult, Card::fin(1)};
      return;
    case 4:
      st[m.i].mult = Card::fin(1);
      return;
    case 6: {
      Card combined = card_sum({{st[m.i].mult, Card::fin(1)}, {st[m.j].mult, Card::fin(1)}});
      st[m.i].mult = combined;
      erase_at(m.j);
      return;
    }
    case 7: {
      st[m.i].base = std::max(st[m.i].base, st[m.j].base);
      erase_at(m.j);
      return;
    }
    case 8:
      st[m.i] = Atom{Atom::Kind::Entry, Card::omega(), Card::fin(1)};
      return;
  }
}

}  // namespace detail

inline TukeyType random_order_normal_form(const TypeTerm& t, Rng& rng) {
  std::vector<detail::Atom> st;
  detail::seed(t, st);
  for (int guard = 0; guard < 100000; ++guard) {
    auto moves = detail::applicable(st);
    if (moves.empty()) {
      TukeyType out;
      for (const auto& a : st) {
        if (a.kind == detail::Atom::Kind::Fins) {
          if (out.finsets) throw std::logic_error("rewriter fixpoint with two finsets");
          out.finsets = a.base;
        } else if (a.kind == detail::Atom::Kind::Entry) {
          out.factors.emplace_back(a.base, a.mult);
        } else {
          throw std::logic_error("rewriter fixpoint with a unit atom");
        }
      }
      std::sort(out.factors.begin(), out.factors.end());
      return out;
    }
    detail::apply(st, moves[static_cast<std::size_t>(rng() % moves.size())]);
  }
  throw std::logic_error("rewriter did not terminate");
}

}  // namespace tukeyspec::testgen
