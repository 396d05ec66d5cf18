#include "nas/construct.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "nas/circuits.hpp"
#include "nas/error.hpp"
#include "nas/lempel.hpp"
#include "nas/weight_sets.hpp"

namespace nas {

namespace {

std::string params(std::uint32_t k, std::size_t n) {
  return "k=" + std::to_string(k) + ", n=" + std::to_string(n);
}

void require_odd_span(std::uint32_t k, std::size_t n) {
  if (k < 3 || n < 3 || n % 2 == 0)
    throw Error(ErrorKind::InvalidParams, "need k >= 3 and odd n >= 3 (" + params(k, n) + ")");
}

// delta^n: the number of self-negative n-tuples (1 for odd k, 2^n for even k).
std::uint64_t self_negative_count(std::uint32_t k, std::size_t n) { return k % 2 ? 1 : tuple_count(2, n); }

// Graph invariants are re-checked on every construction.
void require_nas_graph(const Subgraph& g, std::uint64_t expected_edges, const std::string& what) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::ConstructionInvariantViolation, what + ": " + why);
  };
  if (g.size() != expected_edges)
    fail("has " + std::to_string(g.size()) + " edges, expected " + std::to_string(expected_edges));
  if (!is_balanced(g)) fail("not balanced");
  if (!is_connected(g)) fail("not connected");
  if (!is_antinegative(g)) fail("not antinegative");
}

CyclicSequence sequence_of(const Subgraph& g) { return spell(eulerian_circuit(g)).canonical(); }

}  // namespace

std::uint64_t max_period_bound(std::uint32_t k, std::size_t n) {
  if (k < 3 || n < 2) throw Error(ErrorKind::InvalidParams, "bound needs k >= 3 and n >= 2 (" + params(k, n) + ")");
  return (tuple_count(k, n) - self_negative_count(k, n)) / 2;
}

Subgraph build_W(std::uint32_t k, std::size_t n) {
  require_odd_span(k, n);
  const Subgraph selected = circuits_subgraph(k, n, select_one_per_pair(partition_H(k, n), n));
  Subgraph w = build_E(k, n).merged(selected);
  require_nas_graph(w, max_period_bound(k, n), "W(" + params(k, n) + ")");
  return w;
}

Subgraph build_Y(std::uint32_t k) {
  if (k < 3 || k % 2 == 0) throw Error(ErrorKind::InvalidParams, "Y_k needs odd k >= 3");
  const std::uint32_t half = (k - 1) / 2;
  std::vector<std::uint64_t> codes;
  for (std::uint32_t x = 0; x < k; ++x)
    for (std::uint32_t y = 0; y < k; ++y) {
      const std::uint32_t diff = (y + k - x) % k;
      if ((diff >= 1 && diff <= half) || (x == y && x >= 1 && x <= half)) codes.push_back(std::uint64_t{x} * k + y);
    }
  return Subgraph::from_codes(k, 1, std::move(codes));
}

Subgraph build_U_prime(std::uint32_t k) {
  if (k < 4 || k % 2 != 0) throw Error(ErrorKind::InvalidParams, "U'_k(1) needs even k >= 4");
  auto edge = [k](std::uint32_t a, std::uint32_t b) { return std::uint64_t{a} * k + b; };
  const Subgraph base = build_E(k, 2);
  std::vector<std::uint64_t> removed, added;
  for (std::uint32_t i = 1; 2 * i < k; ++i) {
    removed.push_back(edge(0, i));
    removed.push_back(edge(i, i));
    added.push_back(edge(0, k - i));
    added.push_back(edge(k - i, k - i));
    added.push_back(edge(k - i, i));
  }
  for (auto r : removed)
    if (!base.contains_code(r))
      throw Error(ErrorKind::ConstructionInvariantViolation, "U_k(1) lacks an edge scheduled for removal");
  std::vector<std::uint64_t> codes;
  for (auto c : base.codes())
    if (std::find(removed.begin(), removed.end(), c) == removed.end()) codes.push_back(c);
  codes.insert(codes.end(), added.begin(), added.end());
  return Subgraph::from_codes(k, 1, std::move(codes));
}

Subgraph build_T(std::uint32_t k, std::size_t n) {
  if (k < 3 || n < 2) throw Error(ErrorKind::InvalidParams, "T needs k >= 3 and n >= 2 (" + params(k, n) + ")");
  // Self-negative entries are 0 and, for even k, k/2: enumerate as binary.
  const std::uint64_t count = self_negative_count(k, n);
  const std::uint32_t high = k % 2 ? 0 : k / 2;
  std::vector<std::uint64_t> codes;
  codes.reserve(count);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    std::uint64_t code = 0;
    for (std::size_t i = n; i-- > 0;) code = code * k + (((bits >> i) & 1) ? high : 0);
    codes.push_back(code);
  }
  return Subgraph::from_codes(k, n - 1, std::move(codes));
}

Subgraph build_Z(std::uint32_t k, std::size_t n) {
  require_odd_span(k, n);
  const Subgraph lifted = lift_subgraph(build_W(k, n));

  const CyclicSequence base = spell(eulerian_circuit(build_T(k, n)));
  std::vector<std::uint64_t> extra;
  for (std::uint32_t x = 1; 2 * x < k; ++x) {
    // a_x: integrate the self-negative circuit starting from symbol x.
    std::vector<Symbol> symbols(base.period());
    Symbol current = x;
    for (std::size_t i = 0; i < base.period(); ++i) {
      symbols[i] = current;
      current = (current + base[i]) % k;
    }
    if (current != x)
      throw Error(ErrorKind::ConstructionInvariantViolation, "lifted self-negative circuit does not close");
    const CyclicSequence circuit(k, n + 1, std::move(symbols));
    for (std::size_t i = 0; i < circuit.period(); ++i) extra.push_back(circuit.window(i).code());
  }

  Subgraph z = lifted.merged(Subgraph::from_codes(k, n, std::move(extra)));
  require_nas_graph(z, max_period_bound(k, n + 1), "Z(" + params(k, n) + ")");
  return z;
}

CyclicSequence construct_odd(std::uint32_t k, std::size_t n) { return sequence_of(build_W(k, n)); }

CyclicSequence construct_n2_odd_k(std::uint32_t k) {
  const Subgraph y = build_Y(k);
  require_nas_graph(y, max_period_bound(k, 2), "Y_" + std::to_string(k));
  return sequence_of(y);
}

CyclicSequence construct_n2_even_k(std::uint32_t k) {
  const Subgraph u = build_U_prime(k);
  require_nas_graph(u, max_period_bound(k, 2), "U'_" + std::to_string(k) + "(1)");
  return sequence_of(u);
}

CyclicSequence construct_even(std::uint32_t k, std::size_t n) {
  if (k < 3 || n < 4 || n % 2 != 0)
    throw Error(ErrorKind::InvalidParams, "need k >= 3 and even n >= 4 (" + params(k, n) + ")");
  return sequence_of(build_Z(k, n - 1));
}

CyclicSequence construct_maximal(std::uint32_t k, std::size_t n) {
  if (k < 3 || n < 2) throw Error(ErrorKind::InvalidParams, "need k >= 3 and n >= 2 (" + params(k, n) + ")");
  enumerable_tuple_count(k, n);
  CyclicSequence s = n == 2       ? (k % 2 ? construct_n2_odd_k(k) : construct_n2_even_k(k))
                     : n % 2 == 1 ? construct_odd(k, n)
                                  : construct_even(k, n);
  if (s.period() != max_period_bound(k, n))
    throw Error(ErrorKind::ConstructionInvariantViolation, "period misses the bound for " + params(k, n));
  return s;
}

Subgraph build_low_weight_binary(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidParams, "need n >= 2");
  const std::uint64_t total = enumerable_tuple_count(2, n);
  std::vector<std::uint64_t> codes;
  for (std::uint64_t code = 0; code < total; ++code)
    if (2 * static_cast<std::size_t>(std::popcount(code)) < n) codes.push_back(code);
  return Subgraph::from_codes(2, n - 1, std::move(codes));
}

CyclicSequence construct_binary_complement_odd(std::size_t n) {
  if (n < 3 || n % 2 == 0) throw Error(ErrorKind::InvalidParams, "need odd n >= 3");
  const Subgraph g = build_low_weight_binary(n);
  if (g.size() != tuple_count(2, n - 1))
    throw Error(ErrorKind::ConstructionInvariantViolation, "low-weight set has the wrong size");
  return sequence_of(g);
}

}  // namespace nas
