#include "nas/weight_sets.hpp"

#include <string>
#include <vector>

#include "nas/error.hpp"

namespace nas {

namespace {

void require_params(std::uint32_t k, std::size_t n) {
  if (k < 3 || n < 2)
    throw Error(ErrorKind::InvalidParams,
                "need k >= 3 and n >= 2 (got k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
}

// Odometer over all n-tuples in code order, keeping those whose doubled
// pseudoweight satisfies keep(pw2, n*k), where n*k is twice nk/2.
template <typename Keep>
Subgraph collect_by_weight(std::uint32_t k, std::size_t n, Keep keep) {
  require_params(k, n);
  const std::uint64_t total = enumerable_tuple_count(k, n);
  const std::uint64_t threshold = std::uint64_t{n} * k;

  std::vector<Symbol> digits(n, 0);
  std::uint64_t weight = threshold;  // all zeros: n contributions of k
  std::vector<std::uint64_t> codes;
  for (std::uint64_t code = 0; code < total; ++code) {
    if (keep(weight, threshold)) codes.push_back(code);
    for (std::size_t i = n; i-- > 0;) {
      weight -= digits[i] == 0 ? k : 2 * digits[i];
      if (++digits[i] < k) {
        weight += 2 * digits[i];
        break;
      }
      digits[i] = 0;
      weight += k;
    }
  }
  return Subgraph::from_codes(k, n - 1, std::move(codes));
}

}  // namespace

std::uint64_t enumerable_tuple_count(std::uint32_t k, std::size_t n) {
  const std::uint64_t total = tuple_count(k, n);
  if (total > kMaxEnumeratedTuples)
    throw Error(ErrorKind::SearchSpaceTooLarge,
                std::to_string(k) + "^" + std::to_string(n) + " tuples exceeds the enumeration limit");
  return total;
}

Subgraph build_E(std::uint32_t k, std::size_t n) {
  return collect_by_weight(k, n, [](std::uint64_t w, std::uint64_t threshold) { return w < threshold; });
}

Subgraph build_H(std::uint32_t k, std::size_t n) {
  return collect_by_weight(k, n, [](std::uint64_t w, std::uint64_t threshold) { return w == threshold; });
}

}  // namespace nas
