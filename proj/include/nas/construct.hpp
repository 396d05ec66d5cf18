#pragma once

#include <cstddef>
#include <cstdint>

#include "nas/graph.hpp"
#include "nas/sequence.hpp"

namespace nas {

// Largest possible NAS period: (k^n - 1)/2 for odd k, (k^n - 2^n)/2 for even
// k. Throws Overflow if k^n does not fit in 64 bits.
std::uint64_t max_period_bound(std::uint32_t k, std::size_t n);

// E_k(n) plus one circuit from each negative pair of H_k(n-1); n odd >= 3.
Subgraph build_W(std::uint32_t k, std::size_t n);

// Y_k for odd k: (x,y) with y-x mod k in [1,(k-1)/2], plus loops (x,x) for
// x in [1,(k-1)/2].
Subgraph build_Y(std::uint32_t k);

// U_k(1) with (0,i),(i,i) swapped for (0,-i),(-i,-i),(-i,i), 0 < i < k/2;
// even k >= 4.
Subgraph build_U_prime(std::uint32_t k);

// Self-negative n-tuples as a subgraph of B_k(n-1).
Subgraph build_T(std::uint32_t k, std::size_t n);

// Lift of build_W(k, n) into B_k(n) plus the circuits a_x, 0 < x < k/2: the
// lift of an Eulerian circuit of build_T(k, n) that starts at symbol x.
// n odd >= 3; the result holds (n+1)-tuples.
Subgraph build_Z(std::uint32_t k, std::size_t n);

CyclicSequence construct_odd(std::uint32_t k, std::size_t n);
CyclicSequence construct_n2_odd_k(std::uint32_t k);
CyclicSequence construct_n2_even_k(std::uint32_t k);
CyclicSequence construct_even(std::uint32_t k, std::size_t n);

// Maximal NAS_k(n) for any k >= 3, n >= 2, emitted in least rotation.
CyclicSequence construct_maximal(std::uint32_t k, std::size_t n);

// Binary n-tuples of Hamming weight below n/2 as a subgraph of B_2(n-1).
Subgraph build_low_weight_binary(std::size_t n);

// Binary span-n sequence of period 2^(n-1) with no window whose complement
// also occurs; n odd >= 3.
CyclicSequence construct_binary_complement_odd(std::size_t n);

}  // namespace nas
