#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tukeyspec {

// Symbolic cardinal: a finite value or an aleph with a finite index.
// Every aleph here is a regular cardinal. The order is total:
// fin(m) < fin(n) iff m < n, every fin is below every aleph, and
// aleph(i) < aleph(j) iff i < j.
class Card {
 public:
  static Card fin(std::uint64_t n) { return Card(false, n); }
  static Card aleph(std::uint32_t i) { return Card(true, i); }
  static Card omega() { return aleph(0); }

  bool is_finite() const { return !infinite_; }
  bool is_infinite() const { return infinite_; }
  bool is_uncountable() const { return infinite_ && v_ > 0; }

  std::uint64_t finite_value() const { return v_; }                       // pre: finite
  std::uint32_t aleph_index() const { return static_cast<std::uint32_t>(v_); }  // pre: infinite

  friend auto operator<=>(const Card&, const Card&) = default;

 private:
  Card(bool inf, std::uint64_t v) : infinite_(inf), v_(v) {}
  bool infinite_;
  std::uint64_t v_;
};

std::string to_string(const Card& c);

// Cardinal sum over (value, multiplicity) parts. If any value or any
// multiplicity is infinite the sum is the maximum of all values and all
// infinite multiplicities; an all-finite input is summed arithmetically.
// Multiplicities must be >= 1; the empty sum is rejected.
Card card_sum(const std::vector<std::pair<Card, Card>>& parts);

}  // namespace tukeyspec
