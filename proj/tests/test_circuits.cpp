#include <doctest.h>

#include "nas/circuits.hpp"
#include "nas/error.hpp"
#include "nas/weight_sets.hpp"
#include "oracles.hpp"

using nas::Circuit;
using nas::KTuple;

TEST_CASE("Circuit identity and edges") {
  const Circuit c(KTuple(3, {1, 2, 0}));
  CHECK(c.representative() == KTuple(3, {0, 1, 2}));
  CHECK(c.period() == 3);
  CHECK(c.edges() == std::vector<KTuple>{KTuple(3, {0, 1, 2}), KTuple(3, {1, 2, 0}), KTuple(3, {2, 0, 1})});
  CHECK(Circuit(KTuple(3, {2, 1, 2, 1})).edges().size() == 2);
  CHECK(Circuit(KTuple(3, {2, 0, 1})) == c);
}

TEST_CASE("partition_H examples") {
  const auto c33 = nas::partition_H(3, 3);
  REQUIRE(c33.size() == 3);
  CHECK(c33[0].representative() == KTuple(3, {0, 0, 0}));
  CHECK(c33[0].period() == 1);
  CHECK(c33[1].representative() == KTuple(3, {0, 1, 2}));
  CHECK(c33[1].period() == 3);
  CHECK(c33[2].representative() == KTuple(3, {0, 2, 1}));
  CHECK(c33[2].period() == 3);
  std::size_t edges = 0;
  for (const auto& c : c33) edges += c.period();
  CHECK(edges == 7);

  const auto c32 = nas::partition_H(3, 2);
  REQUIRE(c32.size() == 2);
  CHECK(c32[0].representative() == KTuple(3, {0, 0}));
  CHECK(c32[1].representative() == KTuple(3, {1, 2}));
  CHECK(c32[1].period() == 2);
}

TEST_CASE("is_self_negative_circuit") {
  CHECK(nas::is_self_negative_circuit(Circuit(KTuple(3, {0, 0, 0}))));
  CHECK_FALSE(nas::is_self_negative_circuit(Circuit(KTuple(3, {0, 1, 2}))));
  CHECK(nas::is_self_negative_circuit(Circuit(KTuple(4, {0, 2, 0, 2}))));
}

TEST_CASE("select_one_per_pair") {
  const auto kept = nas::select_one_per_pair(nas::partition_H(3, 3), 3);
  REQUIRE(kept.size() == 1);
  CHECK(kept[0].representative() == KTuple(3, {0, 1, 2}));

  CHECK(nas::select_one_per_pair({Circuit(KTuple(3, {0, 0, 0}))}, 3).empty());

  // (|H_5(3)| - 1) / 2 by brute-force count of pseudoweight-7.5 tuples.
  std::size_t h = 0;
  for (const auto& w : oracle::all_words(5, 3)) h += oracle::pseudoweight(5, w) == 7.5;
  std::size_t retained = 0;
  for (const auto& c : nas::select_one_per_pair(nas::partition_H(5, 3), 3)) retained += c.period();
  CHECK(retained == (h - 1) / 2);
}

TEST_CASE("select_one_per_pair reports pairing violations") {
  auto kind_of = [](const std::vector<Circuit>& input, std::size_t n) {
    try {
      nas::select_one_per_pair(input, n);
    } catch (const nas::Error& e) {
      return e.kind();
    }
    FAIL("expected nas::Error");
    return nas::ErrorKind::InvalidParams;
  };
  CHECK(kind_of({Circuit(KTuple(3, {0, 1, 2}))}, 3) == nas::ErrorKind::PairingViolation);
  CHECK(kind_of({Circuit(KTuple(3, {1, 2, 1, 2, 0}))}, 5) == nas::ErrorKind::PairingViolation);
  // [1212] contains its own negative 2121
  CHECK(kind_of({Circuit(KTuple(3, {1, 2, 1, 2}))}, 5) == nas::ErrorKind::PairingViolation);
  CHECK(kind_of(nas::partition_H(3, 4), 4) == nas::ErrorKind::InvalidParams);
}

TEST_CASE("circuit partition invariants") {
  for (std::uint32_t k : {3u, 4u, 5u}) {
    for (std::size_t n : {3u, 4u, 5u}) {
      const auto circuits = nas::partition_H(k, n);
      const nas::Subgraph h = nas::build_H(k, n);
      std::set<oracle::Word> seen;
      std::size_t periods = 0;
      for (const auto& c : circuits) {
        REQUIRE(n % c.period() == 0);
        periods += c.period();
        for (const auto& e : c.edges()) REQUIRE(seen.emplace(e.entries().begin(), e.entries().end()).second);
        // negation permutes the circuit set
        REQUIRE(std::binary_search(circuits.begin(), circuits.end(), nas::negate(c)));
        if (n % 2 == 1 && !nas::is_self_negative_circuit(c)) {
          for (const auto& e : c.edges())
            for (const auto& f : c.edges()) REQUIRE(nas::negate(e) != f);
        }
      }
      REQUIRE(periods == h.size());
      REQUIRE(seen == oracle::edge_words(h));

      if (n % 2 == 1) {
        const auto kept = nas::select_one_per_pair(circuits, n);
        std::set<Circuit> kept_set(kept.begin(), kept.end()), union_set;
        std::size_t non_self_negative = 0;
        for (const auto& c : circuits)
          if (!nas::is_self_negative_circuit(c)) {
            ++non_self_negative;
            union_set.insert(c);
          }
        std::set<Circuit> both;
        for (const auto& c : kept) {
          REQUIRE(kept_set.count(nas::negate(c)) == 0);
          both.insert(c);
          both.insert(nas::negate(c));
        }
        REQUIRE(both == union_set);
        REQUIRE(2 * kept.size() == non_self_negative);
      }
    }
  }
}
