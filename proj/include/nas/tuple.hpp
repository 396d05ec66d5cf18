#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace nas {

using Symbol = std::uint32_t;

// Number of k-ary tuples of the given length, k^length. Throws
// ErrorKind::Overflow instead of wrapping.
std::uint64_t tuple_count(std::uint32_t k, std::size_t length);

// A word over Z_k. Entries are canonical residues in [0, k-1], so equality is
// structural. Ordering is lexicographic on entries and only meaningful
// between tuples of the same alphabet and length.
class KTuple {
 public:
  KTuple(std::uint32_t k, std::vector<Symbol> entries);
  KTuple(std::uint32_t k, std::initializer_list<Symbol> entries)
      : KTuple(k, std::vector<Symbol>(entries)) {}

  // Inverse of code(): big-endian base-k digits, first entry most significant.
  static KTuple from_code(std::uint32_t k, std::size_t length, std::uint64_t code);

  std::uint32_t k() const noexcept { return k_; }
  std::size_t size() const noexcept { return entries_.size(); }
  Symbol operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Symbol> entries() const noexcept { return entries_; }

  // Base-k integer value. Numeric order of codes equals lexicographic order
  // of equal-length tuples. Throws Overflow if k^size does not fit.
  std::uint64_t code() const;

  friend bool operator==(const KTuple&, const KTuple&) = default;
  friend std::strong_ordering operator<=>(const KTuple& a, const KTuple& b) {
    if (auto c = a.k_ <=> b.k_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

 private:
  std::uint32_t k_;
  std::vector<Symbol> entries_;
};

// Twice the pseudoweight: each nonzero entry u contributes 2u, each zero
// contributes k. Always an integer, so comparisons are exact.
struct Pseudoweight2 {
  std::uint64_t value = 0;
  friend auto operator<=>(const Pseudoweight2&, const Pseudoweight2&) = default;
};

KTuple negate(const KTuple& t);
bool is_self_negative(const KTuple& t);
Pseudoweight2 pseudoweight2(const KTuple& t);

// Left rotation: entry i of the result is t[(i + shift) mod n].
KTuple rotate(const KTuple& t, std::size_t shift);

// Smallest c >= 1 with t_i = t_{(i+c) mod n} for all i; always divides n.
std::size_t circuit_period(const KTuple& t);

KTuple canonical_rotation(const KTuple& t);

// Code-level helpers used by the graph builders. Codes are the big-endian
// base-k values produced by KTuple::code().
std::uint64_t negate_code(std::uint32_t k, std::size_t length, std::uint64_t code);
std::uint64_t pseudoweight2_code(std::uint32_t k, std::size_t length, std::uint64_t code);

}  // namespace nas
