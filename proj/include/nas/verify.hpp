#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nas/sequence.hpp"
#include "nas/tuple.hpp"

namespace nas {

enum class Violation {
  RepeatedWindow,      // windows i and j are equal
  NegatedPair,         // window j is the negation of window i
  SelfNegativeWindow,  // window i equals its own negation (i == j)
};

std::string_view to_string(Violation v) noexcept;

struct Counterexample {
  Violation kind;
  std::size_t first_index;
  std::size_t second_index;
  KTuple first_window;
  KTuple second_window;
};

// Result of a single property check. The witness is present iff ok is false.
struct Check {
  bool ok = true;
  std::optional<Counterexample> witness;
  explicit operator bool() const noexcept { return ok; }
};

struct VerifyReport {
  bool window_ok = false;
  bool nas_ok = false;
  bool maximal = false;
  std::uint64_t period = 0;
  std::uint64_t bound = 0;
  std::optional<Counterexample> counterexample;
};

// All cyclic span-windows pairwise distinct.
Check is_window_sequence(const CyclicSequence& s);

// Window sequence in which no window's negation is also a window.
Check is_nas(const CyclicSequence& s);

// Full report; requires k >= 3 (InvalidParams otherwise).
VerifyReport is_maximal_nas(const CyclicSequence& s);

enum class Pairing { Negation, Complement };

std::string_view to_string(Pairing p) noexcept;

// Exhaustive search bound: k^n must not exceed this.
inline constexpr std::uint64_t kMaxOracleTuples = std::uint64_t{1} << 16;

struct OracleOptions {
  // Also enumerate every maximum-period sequence (in least rotation).
  bool collect_all = false;
};

struct OracleResult {
  std::uint64_t max_period = 0;
  // Lexicographically least sequence of maximum period, in least rotation.
  std::optional<CyclicSequence> witness;
  // Filled only with OracleOptions::collect_all, in lexicographic order.
  std::vector<CyclicSequence> all_maximal;
};

// Depth-first search over closed trails of B_k(n-1) whose edges avoid their
// pairing partner. Negation works for any k >= 2; Complement needs k == 2.
// Throws SearchSpaceTooLarge above kMaxOracleTuples.
OracleResult oracle_max_period(std::uint32_t k, std::size_t n, Pairing pairing, OracleOptions options = {});

// Brute-force count of self-negative n-tuples.
std::uint64_t count_self_negative(std::uint32_t k, std::size_t n);

// Least form of a binary sequence over rotation, reversal and complement.
CyclicSequence binary_equivalence_class(const CyclicSequence& s);

}  // namespace nas
