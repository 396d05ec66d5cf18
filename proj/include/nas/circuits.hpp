#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nas/graph.hpp"
#include "nas/tuple.hpp"

namespace nas {

// Necklace circuit [a_0,...,a_{n-1}]: the closed walk through the distinct
// rotations of a tuple. Identity is the canonical (least) rotation.
class Circuit {
 public:
  explicit Circuit(const KTuple& any_rotation);

  const KTuple& representative() const noexcept { return representative_; }
  std::size_t period() const noexcept { return period_; }

  // The `period` distinct rotations, starting from the representative.
  std::vector<KTuple> edges() const;

  friend bool operator==(const Circuit& a, const Circuit& b) { return a.representative_ == b.representative_; }
  friend auto operator<=>(const Circuit& a, const Circuit& b) { return a.representative_ <=> b.representative_; }

 private:
  KTuple representative_;
  std::size_t period_;
};

Circuit negate(const Circuit& c);
bool is_self_negative_circuit(const Circuit& c);

// Necklace circuits covering the edges of H_k(n-1), sorted by representative.
std::vector<Circuit> partition_H(std::uint32_t k, std::size_t n);

// Drops self-negative circuits and keeps, from each {c, -c} pair, the one
// with the smaller representative. Requires odd n; throws PairingViolation
// if a partner is missing or a circuit is its own negative.
std::vector<Circuit> select_one_per_pair(const std::vector<Circuit>& circuits, std::size_t n);

// Subgraph of B_k(n-1) made of the circuits' edges.
Subgraph circuits_subgraph(std::uint32_t k, std::size_t n, const std::vector<Circuit>& circuits);

}  // namespace nas
