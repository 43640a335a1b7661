#pragma once

#include <string>
#include <vector>

#include "tukeyspec/cards.hpp"
#include "tukeyspec/tukey.hpp"

namespace tukeyspec {

// Closed-form spectra for named algebra families. The almost-disjoint
// family takes the realized intermediate cardinals as input: which mu < k
// occur depends on infinitary data of the family, not on (k, mu) alone.
struct CatalogSpec {
  enum class Kind { Free, FinCofin, ADFamily };

  Kind kind = Kind::Free;
  Card kappa = Card::omega();  // infinite
  std::vector<Card> mus;       // ADFamily: each infinite, <= kappa

  static CatalogSpec free_algebra(Card kappa);
  static CatalogSpec fin_cofin(Card kappa);
  static CatalogSpec ad_family(Card kappa, std::vector<Card> mus);
};

std::vector<TukeyType> catalog_spectrum(const CatalogSpec& s);

std::string to_sexpr(const CatalogSpec& s);

}  // namespace tukeyspec
