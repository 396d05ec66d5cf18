#pragma once

#include <cstddef>
#include <cstdint>

#include "nas/graph.hpp"

namespace nas {

// Builders enumerate all k^n tuples; anything above this is refused with
// SearchSpaceTooLarge.
inline constexpr std::uint64_t kMaxEnumeratedTuples = std::uint64_t{1} << 26;

// k^n, or Overflow / SearchSpaceTooLarge if it cannot be enumerated.
std::uint64_t enumerable_tuple_count(std::uint32_t k, std::size_t n);

// n-tuples of pseudoweight below nk/2, as a subgraph of B_k(n-1).
Subgraph build_E(std::uint32_t k, std::size_t n);

// n-tuples of pseudoweight exactly nk/2, as a subgraph of B_k(n-1).
Subgraph build_H(std::uint32_t k, std::size_t n);

}  // namespace nas
