#include "tukeyspec/catalog.hpp"

#include <algorithm>

#include "tukeyspec/errors.hpp"

namespace tukeyspec {

namespace {

void require_infinite(Card k, const char* what) {
  if (k.is_finite()) throw DomainError(std::string(what) + " must be infinite");
}

}  // namespace

CatalogSpec CatalogSpec::free_algebra(Card kappa) {
  require_infinite(kappa, "free algebra cardinal");
  return CatalogSpec{Kind::Free, kappa, {}};
}

CatalogSpec CatalogSpec::fin_cofin(Card kappa) {
  require_infinite(kappa, "finite-cofinite cardinal");
  return CatalogSpec{Kind::FinCofin, kappa, {}};
}

CatalogSpec CatalogSpec::ad_family(Card kappa, std::vector<Card> mus) {
  require_infinite(kappa, "family cardinal");
  for (const Card& mu : mus) {
    require_infinite(mu, "realized cardinal");
    if (mu > kappa) throw DomainError("realized cardinal exceeds the family cardinal");
  }
  return CatalogSpec{Kind::ADFamily, kappa, std::move(mus)};
}

std::vector<TukeyType> catalog_spectrum(const CatalogSpec& s) {
  std::vector<TukeyType> out;
  TukeyType top = normal_form(TypeTerm::finsets(s.kappa));
  switch (s.kind) {
    case CatalogSpec::Kind::Free:
      out.push_back(top);
      break;
    case CatalogSpec::Kind::FinCofin:
      out.push_back(TukeyType{});  // principal ultrafilters
      out.push_back(top);
      break;
    case CatalogSpec::Kind::ADFamily:
      out.push_back(TukeyType{});
      out.push_back(top);
      for (const Card& mu : s.mus) out.push_back(normal_form(TypeTerm::finsets(mu)));
      break;
  }
  std::sort(out.begin(), out.end(), type_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string to_sexpr(const CatalogSpec& s) {
  switch (s.kind) {
    case CatalogSpec::Kind::Free:
      return "(free " + to_string(s.kappa) + ")";
    case CatalogSpec::Kind::FinCofin:
      return "(fincofin " + to_string(s.kappa) + ")";
    case CatalogSpec::Kind::ADFamily: {
      std::string out = "(adfamily " + to_string(s.kappa) + " (mus";
      for (const Card& mu : s.mus) out += " " + to_string(mu);
      return out + "))";
    }
  }
  return "";
}

}  // namespace tukeyspec
