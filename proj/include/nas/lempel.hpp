#pragma once

#include <vector>

#include "nas/graph.hpp"
#include "nas/tuple.hpp"

namespace nas {

// Difference map: entry i is t[i+1] - t[i] mod k. Throws TupleTooShort for
// tuples of length 1.
KTuple d_map(const KTuple& t);

// The k preimages of t under d_map, ordered by first symbol.
std::vector<KTuple> d_inverse(const KTuple& t);

// Preimage subgraph in B_k(window+1): the union of d_inverse over all edges.
Subgraph lift_subgraph(const Subgraph& g);

}  // namespace nas
