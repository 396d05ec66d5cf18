#include "nas/circuits.hpp"

#include <algorithm>
#include <string>

#include "nas/error.hpp"
#include "nas/format.hpp"
#include "nas/weight_sets.hpp"

namespace nas {

Circuit::Circuit(const KTuple& any_rotation)
    : representative_(canonical_rotation(any_rotation)), period_(circuit_period(representative_)) {}

std::vector<KTuple> Circuit::edges() const {
  std::vector<KTuple> out;
  out.reserve(period_);
  for (std::size_t r = 0; r < period_; ++r) out.push_back(rotate(representative_, r));
  return out;
}

Circuit negate(const Circuit& c) { return Circuit(negate(c.representative())); }

bool is_self_negative_circuit(const Circuit& c) { return is_self_negative(c.representative()); }

std::vector<Circuit> partition_H(std::uint32_t k, std::size_t n) {
  if (k < 3 || n < 2) throw Error(ErrorKind::InvalidParams, "partition needs k >= 3 and n >= 2");
  std::vector<Circuit> circuits;
  for (const auto& edge : build_H(k, n).edges())
    if (canonical_rotation(edge) == edge) circuits.emplace_back(edge);
  // Edges come out in code order, so representatives are already sorted.
  return circuits;
}

std::vector<Circuit> select_one_per_pair(const std::vector<Circuit>& circuits, std::size_t n) {
  if (n % 2 == 0) throw Error(ErrorKind::InvalidParams, "pair selection requires odd n");
  std::vector<Circuit> sorted = circuits;
  std::sort(sorted.begin(), sorted.end());

  std::vector<Circuit> kept;
  for (const auto& c : sorted) {
    if (is_self_negative_circuit(c)) continue;
    const Circuit partner = negate(c);
    if (partner == c)
      throw Error(ErrorKind::PairingViolation,
                  "circuit [" + format_spaced(c.representative()) + "] contains a tuple and its negative");
    if (!std::binary_search(sorted.begin(), sorted.end(), partner))
      throw Error(ErrorKind::PairingViolation,
                  "negative of circuit [" + format_spaced(c.representative()) + "] is missing");
    if (c < partner) kept.push_back(c);
  }
  return kept;
}

Subgraph circuits_subgraph(std::uint32_t k, std::size_t n, const std::vector<Circuit>& circuits) {
  std::vector<std::uint64_t> codes;
  for (const auto& c : circuits) {
    if (c.representative().k() != k || c.representative().size() != n)
      throw Error(ErrorKind::InvalidParams, "circuit does not match k/n");
    for (const auto& e : c.edges()) codes.push_back(e.code());
  }
  return Subgraph::from_codes(k, n - 1, std::move(codes));
}

}  // namespace nas
