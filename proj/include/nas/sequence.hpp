#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nas/tuple.hpp"

namespace nas {

// One period of a periodic k-ary sequence together with the span n used to
// read its windows. Window i is symbols[i..i+n) taken cyclically, so it is
// defined even when n exceeds the period.
class CyclicSequence {
 public:
  CyclicSequence(std::uint32_t k, std::size_t span, std::vector<Symbol> symbols);

  std::uint32_t k() const noexcept { return k_; }
  std::size_t span() const noexcept { return span_; }
  std::size_t period() const noexcept { return symbols_.size(); }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  Symbol operator[](std::size_t i) const { return symbols_[i % symbols_.size()]; }

  KTuple window(std::size_t i) const;

  // Lexicographically least rotation of the period.
  CyclicSequence canonical() const;
  CyclicSequence negated() const;
  CyclicSequence reversed() const;

  friend bool operator==(const CyclicSequence&, const CyclicSequence&) = default;

 private:
  std::uint32_t k_;
  std::size_t span_;
  std::vector<Symbol> symbols_;
};

}  // namespace nas
