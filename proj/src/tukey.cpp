#include "tukeyspec/tukey.hpp"

#include <algorithm>

#include "tukeyspec/errors.hpp"

namespace tukeyspec {

TypeTerm TypeTerm::one() { return TypeTerm{}; }

TypeTerm TypeTerm::ord(Card k) {
  if (k.is_finite()) throw DomainError("ord requires an infinite cardinal");
  TypeTerm t;
  t.kind = Kind::Ord;
  t.card = k;
  return t;
}

TypeTerm TypeTerm::finsets(Card k) {
  if (k.is_finite()) throw DomainError("finsets requires an infinite cardinal");
  TypeTerm t;
  t.kind = Kind::FinSets;
  t.card = k;
  return t;
}

TypeTerm TypeTerm::prod(std::vector<TypeTerm> ps) {
  TypeTerm t;
  t.kind = Kind::Prod;
  t.parts = std::move(ps);
  return t;
}

TypeTerm TypeTerm::wprod(std::vector<std::pair<Card, Card>> es) {
  TypeTerm t;
  t.kind = Kind::WeakProd;
  t.entries = std::move(es);
  return t;
}

namespace {

// Accumulates factors and the finsets component while rewriting, recording
// one step per applied rule.
struct Canonicalizer {
  std::vector<std::pair<Card, Card>> factors;  // merged, unsorted
  std::optional<Card> fins;
  std::vector<RewriteStep>* steps;

  void step(const char* rule, std::string note) {
    steps->push_back(RewriteStep{rule, std::move(note)});
  }

  static std::string entry_str(const Card& base, const Card& mult) {
    if (mult == Card::fin(1)) return to_string(base);
    return to_string(base) + "^" + to_string(mult);
  }

  void add_finsets(Card k) {
    if (!fins) {
      fins = k;
      return;
    }
    Card m = std::max(*fins, k);
    step(rules::finsets_max, "[" + to_string(*fins) + "]^<w x [" + to_string(k) +
                                 "]^<w -> [" + to_string(m) + "]^<w");
    fins = m;
  }

  // Merge an entry with infinite base and multiplicity 1-or-infinite-below-base.
  void merge_factor(Card base, Card mult) {
    for (auto& [b, m] : factors) {
      if (b != base) continue;
      if (m.is_finite() && mult.is_finite()) {
        // k x k -> k
        step(rules::idem, entry_str(base, Card::fin(2)) + " -> " + to_string(base));
        m = Card::fin(1);
      } else {
        // index sets union; the larger multiplicity wins
        m = std::max(m, mult);
      }
      return;
    }
    factors.emplace_back(base, mult);
  }

  void add_entry(Card base, Card mult) {
    if (mult == Card::fin(0) || base == Card::fin(0)) throw DomainError("empty factor");
    if (base == Card::fin(1)) {
      step(rules::one, "drop factor 1");
      return;
    }
    if (base.is_finite()) {
      if (mult.is_finite()) {
        step(rules::two_fin, "drop bounded factor " + entry_str(base, mult));
        return;
      }
      step(rules::two_inf, entry_str(base, mult) + " -> [" + to_string(mult) + "]^<w");
      add_finsets(mult);
      return;
    }
    if (mult.is_finite()) {
      if (mult != Card::fin(1)) {
        step(rules::idem, entry_str(base, mult) + " -> " + to_string(base));
        mult = Card::fin(1);
      }
      merge_factor(base, mult);
      return;
    }
    if (mult >= base) {
      step(rules::wfold, entry_str(base, mult) + " -> [" + to_string(mult) + "]^<w");
      add_finsets(mult);
      return;
    }
    merge_factor(base, mult);
  }

  void add_term(const TypeTerm& t, bool inside_prod) {
    switch (t.kind) {
      case TypeTerm::Kind::One:
        if (inside_prod) step(rules::one, "drop factor 1");
        return;
      case TypeTerm::Kind::Ord:
        if (t.card.is_finite()) throw DomainError("ord requires an infinite cardinal");
        add_entry(t.card, Card::fin(1));
        return;
      case TypeTerm::Kind::FinSets:
        if (t.card.is_finite()) throw DomainError("finsets requires an infinite cardinal");
        add_finsets(t.card);
        return;
      case TypeTerm::Kind::Prod:
        for (const auto& p : t.parts) add_term(p, true);
        return;
      case TypeTerm::Kind::WeakProd:
        for (const auto& [base, mult] : t.entries) add_entry(base, mult);
        return;
    }
  }

  TukeyType finish() {
    if (fins) {
      for (std::size_t i = 0; i < factors.size();) {
        auto [base, mult] = factors[i];
        if (base <= *fins) {
          step(rules::absorb, entry_str(base, mult) + " x [" + to_string(*fins) +
                                  "]^<w -> [" + to_string(*fins) + "]^<w");
          factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
          ++i;
        }
      }
      if (*fins == Card::omega()) {
        step(rules::day, "[w]^<w -> w");
        fins.reset();
        merge_factor(Card::omega(), Card::fin(1));
      }
    }
    TukeyType out;
    out.finsets = fins;
    out.factors = std::move(factors);
    std::sort(out.factors.begin(), out.factors.end());
    return out;
  }
};

}  // namespace

NormalizeResult normalize(const TypeTerm& t) {
  NormalizeResult result;
  Canonicalizer canon;
  canon.steps = &result.steps;
  canon.add_term(t, false);
  result.type = canon.finish();
  return result;
}

TukeyType normal_form(const TypeTerm& t) { return normalize(t).type; }

Card type_size(const TukeyType& t) {
  Card best = Card::fin(1);
  if (t.finsets && *t.finsets > best) best = *t.finsets;
  for (const auto& [base, mult] : t.factors) {
    if (base > best) best = base;
    if (mult > best) best = mult;
  }
  return best;
}

TypeTerm render(const TukeyType& t) {
  std::vector<TypeTerm> parts;
  for (const auto& [base, mult] : t.factors) {
    if (mult == Card::fin(1))
      parts.push_back(TypeTerm::ord(base));
    else
      parts.push_back(TypeTerm::wprod({{base, mult}}));
  }
  if (t.finsets) parts.push_back(TypeTerm::finsets(*t.finsets));
  if (parts.empty()) return TypeTerm::one();
  if (parts.size() == 1) return parts.front();
  return TypeTerm::prod(std::move(parts));
}

bool type_less(const TukeyType& a, const TukeyType& b) {
  if (a.is_one() != b.is_one()) return a.is_one();
  Card sa = type_size(a), sb = type_size(b);
  if (sa != sb) return sa < sb;
  if (a.factors != b.factors) return a.factors < b.factors;
  if (a.finsets.has_value() != b.finsets.has_value()) return !a.finsets.has_value();
  if (a.finsets && b.finsets) return *a.finsets < *b.finsets;
  return false;
}

std::string pretty(const TukeyType& t) {
  if (t.is_one()) return "1";
  std::string out;
  auto append = [&out](const std::string& piece) {
    if (!out.empty()) out += " x ";
    out += piece;
  };
  for (const auto& [base, mult] : t.factors) {
    if (mult == Card::fin(1))
      append(to_string(base));
    else
      append(to_string(base) + "^" + to_string(mult));
  }
  if (t.finsets) append("[" + to_string(*t.finsets) + "]^<w");
  return out;
}

std::string to_sexpr(const TypeTerm& t) {
  switch (t.kind) {
    case TypeTerm::Kind::One:
      return "1";
    case TypeTerm::Kind::Ord:
      return "(ord " + to_string(t.card) + ")";
    case TypeTerm::Kind::FinSets:
      return "(finsets " + to_string(t.card) + ")";
    case TypeTerm::Kind::Prod: {
      std::string out = "(prod";
      for (const auto& p : t.parts) out += " " + to_sexpr(p);
      return out + ")";
    }
    case TypeTerm::Kind::WeakProd: {
      std::string out = "(wprod";
      for (const auto& [base, mult] : t.entries)
        out += " (" + to_string(base) + " " + to_string(mult) + ")";
      return out + ")";
    }
  }
  return "1";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::LE: return "LE";
    case Verdict::GE: return "GE";
    case Verdict::EQ: return "EQ";
    case Verdict::Incomparable: return "INCOMPARABLE";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

namespace {

std::string factor_str(const Card& base, const Card& mult) {
  if (mult == Card::fin(1)) return to_string(base);
  return to_string(base) + "^" + to_string(mult);
}

// Derives a <=_T b inside the canonical fragment, or reports failure.
// Every successful step is justified by containment (C3) or the size bound
// into a finsets component (C1).
std::optional<std::vector<std::string>> derive_le(const TukeyType& a, const TukeyType& b) {
  std::vector<std::string> trace;
  if (a.is_one()) {
    trace.push_back(std::string(rules::c3) + ": 1 is the empty subproduct of any type");
    return trace;
  }
  if (a.finsets) {
    if (!b.finsets || *a.finsets > *b.finsets) return std::nullopt;
    if (*a.finsets == *b.finsets)
      trace.push_back(std::string(rules::c3) + ": shared component [" +
                      to_string(*a.finsets) + "]^<w");
    else
      trace.push_back(std::string(rules::c1) + ": [" + to_string(*a.finsets) +
                      "]^<w has size " + to_string(*a.finsets) + " <= " +
                      to_string(*b.finsets) + ", below [" + to_string(*b.finsets) + "]^<w");
  }
  for (const auto& [base, mult] : a.factors) {
    bool matched = false;
    for (const auto& [bb, bm] : b.factors) {
      if (bb == base && mult <= bm) {
        trace.push_back(std::string(rules::c3) + ": factor " + factor_str(base, mult) +
                        " contained in " + factor_str(bb, bm));
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (b.finsets && base <= *b.finsets) {
      trace.push_back(std::string(rules::c1) + ": factor " + factor_str(base, mult) +
                      " has size <= " + to_string(*b.finsets) + ", below [" +
                      to_string(*b.finsets) + "]^<w");
      continue;
    }
    return std::nullopt;
  }
  return trace;
}

// The literal shape of rule C2: (k,<=) against [k]^<w for uncountable k.
bool c2_pattern(const TukeyType& lo, const TukeyType& hi) {
  if (lo.finsets || lo.factors.size() != 1) return false;
  if (!hi.finsets || !hi.factors.empty()) return false;
  const auto& [base, mult] = lo.factors.front();
  return mult == Card::fin(1) && base == *hi.finsets && base.is_uncountable();
}

}  // namespace

CompareResult compare_types(const TukeyType& a, const TukeyType& b, CompareMode mode) {
  auto le = derive_le(a, b);
  auto ge = derive_le(b, a);
  CompareResult r;
  if (le && ge) {
    r.verdict = Verdict::EQ;
    r.trace.push_back(std::string(rules::c3) + ": equal canonical forms");
    return r;
  }
  if (le || ge) {
    r.verdict = le ? Verdict::LE : Verdict::GE;
    r.trace = le ? *le : *ge;
    const TukeyType& lo = le ? a : b;
    const TukeyType& hi = le ? b : a;
    if (c2_pattern(lo, hi)) {
      r.strict_order = true;
      r.trace.push_back(std::string(rules::c2) + ": [" + to_string(*hi.finsets) +
                        "]^<w lies strictly above (" + to_string(*hi.finsets) + ",<=)");
    } else if (mode == CompareMode::Extended) {
      r.strict_order = true;
      r.trace.push_back(std::string(rules::c4) +
                        ": no reverse embedding (regular-cardinal invariants)");
    }
    return r;
  }
  if (mode == CompareMode::Extended) {
    r.verdict = Verdict::Incomparable;
    r.trace.push_back(std::string(rules::c4) +
                      ": no embedding either way (regular-cardinal invariants)");
    return r;
  }
  r.verdict = Verdict::Unknown;
  return r;
}

}  // namespace tukeyspec
