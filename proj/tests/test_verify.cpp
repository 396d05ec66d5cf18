#include <doctest.h>

#include <random>

#include "nas/construct.hpp"
#include "nas/error.hpp"
#include "nas/format.hpp"
#include "nas/graph.hpp"
#include "nas/verify.hpp"
#include "oracles.hpp"

namespace {

nas::CyclicSequence seq(std::uint32_t k, std::size_t n, const char* text) {
  return nas::CyclicSequence(k, n, nas::parse_symbols(text, k));
}

std::uint64_t power(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("is_window_sequence") {
  CHECK(nas::is_window_sequence(seq(3, 2, "0112")).ok);
  CHECK(nas::is_window_sequence(seq(3, 3, "1110010112")).ok);
  const auto bad = nas::is_window_sequence(seq(3, 2, "0101"));
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.witness);
  CHECK(bad.witness->kind == nas::Violation::RepeatedWindow);
  CHECK(bad.witness->first_window == bad.witness->second_window);
  CHECK(bad.witness->first_index != bad.witness->second_index);
}

TEST_CASE("is_nas") {
  CHECK(nas::is_nas(seq(3, 2, "0112")).ok);
  CHECK(nas::is_nas(seq(3, 3, "1110010112")).ok);

  CHECK(nas::is_nas(seq(4, 2, "130121")).ok);

  const auto pair = nas::is_nas(seq(3, 4, "1212100"));
  CHECK_FALSE(pair.ok);
  REQUIRE(pair.witness);
  CHECK(pair.witness->kind == nas::Violation::NegatedPair);
  CHECK(nas::negate(pair.witness->first_window) == pair.witness->second_window);

  const auto zero = nas::is_nas(seq(3, 2, "0012"));
  CHECK_FALSE(zero.ok);
  REQUIRE(zero.witness);
  CHECK(zero.witness->kind == nas::Violation::SelfNegativeWindow);
  CHECK(zero.witness->first_window == nas::KTuple(3, {0, 0}));
}

TEST_CASE("is_maximal_nas") {
  const auto r = nas::is_maximal_nas(seq(3, 2, "0112"));
  CHECK(r.window_ok);
  CHECK(r.nas_ok);
  CHECK(r.maximal);
  CHECK(r.period == 4);
  CHECK(r.bound == 4);

  const auto short_one = nas::is_maximal_nas(seq(3, 3, "1110010112"));
  CHECK(short_one.nas_ok);
  CHECK_FALSE(short_one.maximal);
  CHECK(short_one.period == 10);
  CHECK(short_one.bound == 13);

  CHECK(nas::is_maximal_nas(seq(3, 3, "1110012010112")).maximal);
  CHECK(nas::is_maximal_nas(seq(4, 2, "130121")).maximal);
  CHECK_THROWS_AS(nas::is_maximal_nas(seq(2, 3, "0001")), nas::Error);
}

TEST_CASE("count_self_negative") {
  for (std::uint32_t k = 3; k <= 6; ++k)
    for (std::size_t n = 2; n <= 4; ++n) CHECK(nas::count_self_negative(k, n) == power(k % 2 ? 1 : 2, n));
}

TEST_CASE("verification agrees with the quadratic reference") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::uint32_t k = 3 + rng() % 3;
    const std::size_t n = 2 + rng() % 3;
    const std::size_t m = 1 + rng() % 14;
    std::vector<nas::Symbol> s(m);
    for (auto& x : s) x = rng() % k;
    const nas::CyclicSequence cs(k, n, s);
    REQUIRE(nas::is_nas(cs).ok == oracle::is_nas(k, n, s));
    const auto windows = oracle::window_set(n, s);
    REQUIRE(nas::is_window_sequence(cs).ok == (windows.size() == m));
  }
}

TEST_CASE("NAS iff the edge graph is antinegative") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t k = 3 + rng() % 3;
    const std::size_t w = 1 + rng() % 2;
    const std::uint64_t vertices = nas::tuple_count(k, w);
    std::set<std::uint64_t> used;
    std::uint64_t v = rng() % vertices;
    const auto start = v;
    // closed trail, so the spelled windows are distinct
    for (;;) {
      std::vector<std::uint64_t> options;
      for (std::uint32_t s = 0; s < k; ++s)
        if (!used.count(v * k + s)) options.push_back(v * k + s);
      if (options.empty()) break;
      const std::uint64_t e = options[rng() % options.size()];
      used.insert(e);
      v = e % vertices;
      if (rng() % 6 == 0 && v == start) break;
    }
    REQUIRE(v == start);
    const auto g = nas::Subgraph::from_codes(k, w, std::vector<std::uint64_t>(used.begin(), used.end()));
    const auto s = nas::spell(nas::eulerian_circuit(g));
    REQUIRE(nas::is_window_sequence(s).ok);
    REQUIRE(nas::is_nas(s).ok == nas::is_antinegative(nas::edge_graph(s)));
  }
}

TEST_CASE("oracle examples") {
  const auto r32 = nas::oracle_max_period(3, 2, nas::Pairing::Negation);
  CHECK(r32.max_period == 4);
  REQUIRE(r32.witness);
  CHECK(nas::is_nas(*r32.witness).ok);
  CHECK(nas::oracle_max_period(4, 2, nas::Pairing::Negation).max_period == 6);

  const auto b4 = nas::oracle_max_period(2, 4, nas::Pairing::Complement, {.collect_all = true});
  CHECK(b4.max_period == 8);
  std::set<std::string> classes;
  for (const auto& s : b4.all_maximal) classes.insert(nas::format_compact(nas::binary_equivalence_class(s).symbols()));
  CHECK(classes.size() == 1);
  CHECK(classes.count(nas::format_compact(nas::binary_equivalence_class(seq(2, 4, "11110010")).symbols())) == 1);

  CHECK_THROWS_AS(nas::oracle_max_period(3, 11, nas::Pairing::Negation), nas::Error);
  try {
    nas::oracle_max_period(3, 3, nas::Pairing::Complement);
    FAIL("expected InvalidParams");
  } catch (const nas::Error& e) {
    CHECK(e.kind() == nas::ErrorKind::InvalidParams);
  }
}

TEST_CASE("oracle agrees with the bound") {
  for (std::uint32_t k : {3u, 4u, 5u}) {
    for (std::size_t n = 2; nas::tuple_count(k, n) <= 4096; ++n) {
      const auto r = nas::oracle_max_period(k, n, nas::Pairing::Negation);
      CAPTURE(k);
      CAPTURE(n);
      CHECK(r.max_period == nas::max_period_bound(k, n));
      REQUIRE(r.witness);
      CHECK(nas::is_maximal_nas(*r.witness).maximal);
    }
  }
}
