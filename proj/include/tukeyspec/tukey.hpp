#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tukeyspec/cards.hpp"

namespace tukeyspec {

// Term grammar for Tukey types: 1, ordinals (k,<=), finite-set lattices
// ([k]^<w, subset), finite products, and weak products given as
// (base, multiplicity) entries.
struct TypeTerm {
  enum class Kind { One, Ord, FinSets, Prod, WeakProd };

  Kind kind = Kind::One;
  Card card = Card::fin(1);                    // Ord, FinSets
  std::vector<TypeTerm> parts;                 // Prod
  std::vector<std::pair<Card, Card>> entries;  // WeakProd: (base, mult)

  static TypeTerm one();
  static TypeTerm ord(Card k);      // k infinite
  static TypeTerm finsets(Card k);  // k infinite
  static TypeTerm prod(std::vector<TypeTerm> ps);
  static TypeTerm wprod(std::vector<std::pair<Card, Card>> es);
};

// Canonical form of a type in the fragment mu x prod^w k_a: an optional
// [phi]^<w component plus weak-product factors (base -> multiplicity).
//
// Invariants of a canonical value:
//   - every base is infinite and greater than the finsets component,
//   - every multiplicity is 1 or an infinite cardinal below its base,
//   - the finsets component is uncountable ([w]^<w is kept as the factor w),
//   - factors are sorted by base, one entry per base.
struct TukeyType {
  std::optional<Card> finsets;
  std::vector<std::pair<Card, Card>> factors;

  bool is_one() const { return !finsets.has_value() && factors.empty(); }
  friend bool operator==(const TukeyType&, const TukeyType&) = default;
};

// Display / set ordering: 1 first, then by size, then structurally.
bool type_less(const TukeyType& a, const TukeyType& b);

// Ledger ids for the rewrite and comparison rules; statements and one-line
// proofs live in docs/rules.md.
namespace rules {
inline constexpr const char* one = "R-one";
inline constexpr const char* idem = "R-idem";
inline constexpr const char* two_fin = "R-2fin";
inline constexpr const char* two_inf = "R-2inf";
inline constexpr const char* day = "R-day";
inline constexpr const char* absorb = "R-absorb";
inline constexpr const char* finsets_max = "R-finsets-max";
inline constexpr const char* wfold = "R-wfold";
inline constexpr const char* c1 = "C1";
inline constexpr const char* c2 = "C2";
inline constexpr const char* c3 = "C3";
inline constexpr const char* c4 = "C4";
}  // namespace rules

struct RewriteStep {
  std::string rule;  // ledger id
  std::string note;
};

struct NormalizeResult {
  TukeyType type;
  std::vector<RewriteStep> steps;
};

// Canonicalization. Rejects multiplicity-0 and base-0 entries.
NormalizeResult normalize(const TypeTerm& t);
TukeyType normal_form(const TypeTerm& t);

// Cardinality of the underlying directed set.
Card type_size(const TukeyType& t);

// A term whose normal form is t again; used for round trips and output.
TypeTerm render(const TukeyType& t);

std::string pretty(const TukeyType& t);
std::string to_sexpr(const TypeTerm& t);

enum class CompareMode { Strict, Extended };
enum class Verdict { LE, GE, EQ, Incomparable, Unknown };

std::string to_string(Verdict v);

// Three-valued Tukey comparison of canonical types. Strict mode derives
// verdicts from rules C1-C3 only and answers Unknown otherwise; extended
// mode additionally decides non-embeddable pairs via C4.
//
// `strict_order` is set on one-sided verdicts whose reverse direction is
// refuted (C2 in strict mode, C4 in extended mode).
struct CompareResult {
  Verdict verdict = Verdict::Unknown;
  bool strict_order = false;
  std::vector<std::string> trace;  // entries start with a ledger id
};

CompareResult compare_types(const TukeyType& a, const TukeyType& b, CompareMode mode);

}  // namespace tukeyspec
