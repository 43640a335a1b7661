#include "tukeyspec/cards.hpp"

#include <limits>

#include "tukeyspec/errors.hpp"

namespace tukeyspec {

std::string to_string(const Card& c) {
  if (c.is_finite()) return std::to_string(c.finite_value());
  if (c.aleph_index() == 0) return "w";
  return "w" + std::to_string(c.aleph_index());
}

Card card_sum(const std::vector<std::pair<Card, Card>>& parts) {
  if (parts.empty()) throw DomainError("empty sum");
  bool any_infinite = false;
  Card best = Card::fin(0);
  std::uint64_t finite_total = 0;
  for (const auto& [value, mult] : parts) {
    if (mult == Card::fin(0)) throw DomainError("zero multiplicity");
    if (value.is_infinite() || mult.is_infinite()) {
      any_infinite = true;
      if (value > best) best = value;
      if (mult.is_infinite() && mult > best) best = mult;
    } else {
      std::uint64_t v = value.finite_value(), m = mult.finite_value();
      if (v != 0 && m > std::numeric_limits<std::uint64_t>::max() / v)
        throw DomainError("finite sum overflow");
      std::uint64_t add = v * m;
      if (finite_total > std::numeric_limits<std::uint64_t>::max() - add)
        throw DomainError("finite sum overflow");
      finite_total += add;
    }
  }
  if (any_infinite) return best;
  return Card::fin(finite_total);
}

}  // namespace tukeyspec
