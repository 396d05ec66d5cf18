#pragma once

// Brute-force reference implementations used only by the tests. They work on
// plain vectors and never touch the library's code-based fast paths.

#include <cstdint>
#include <set>
#include <vector>

#include "nas/graph.hpp"
#include "nas/sequence.hpp"
#include "nas/tuple.hpp"

namespace oracle {

using Word = std::vector<nas::Symbol>;

inline void all_words_rec(std::uint32_t k, std::size_t n, Word& cur, std::vector<Word>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (nas::Symbol s = 0; s < k; ++s) {
    cur.push_back(s);
    all_words_rec(k, n, cur, out);
    cur.pop_back();
  }
}

// Every k-ary word of length n, in lexicographic order.
inline std::vector<Word> all_words(std::uint32_t k, std::size_t n) {
  std::vector<Word> out;
  Word cur;
  all_words_rec(k, n, cur, out);
  return out;
}

// Pseudoweight evaluated in floating point with f(0) = k/2. Half-integers are
// exact in binary, so equality comparisons are safe.
inline double pseudoweight(std::uint32_t k, const Word& w) {
  double sum = 0;
  for (auto u : w) sum += u == 0 ? k / 2.0 : static_cast<double>(u);
  return sum;
}

inline Word negated(std::uint32_t k, const Word& w) {
  Word out;
  for (auto u : w) out.push_back((k - u) % k);
  return out;
}

inline Word cyclic_window(const std::vector<nas::Symbol>& s, std::size_t i, std::size_t n) {
  Word w;
  for (std::size_t t = 0; t < n; ++t) w.push_back(s[(i + t) % s.size()]);
  return w;
}

// Quadratic pairwise check of the defining properties.
inline bool is_nas(std::uint32_t k, std::size_t n, const std::vector<nas::Symbol>& s) {
  const std::size_t m = s.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Word a = cyclic_window(s, i, n), b = cyclic_window(s, j, n);
      if (i != j && a == b) return false;
      if (a == negated(k, b)) return false;
    }
  return true;
}

inline std::set<Word> window_set(std::size_t n, const std::vector<nas::Symbol>& s) {
  std::set<Word> out;
  for (std::size_t i = 0; i < s.size(); ++i) out.insert(cyclic_window(s, i, n));
  return out;
}

inline std::set<Word> edge_words(const nas::Subgraph& g) {
  std::set<Word> out;
  for (const auto& e : g.edges()) out.emplace(e.entries().begin(), e.entries().end());
  return out;
}

// Walks the circuit edge by edge: consecutive overlap (cyclically) and every
// subgraph edge used exactly once.
inline bool covers_exactly_once(const nas::Subgraph& g, const nas::EulerianCircuit& c) {
  const auto edges = c.edge_tuples();
  if (edges.size() != g.size()) return false;
  std::set<Word> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& a = edges[i];
    const auto& b = edges[(i + 1) % edges.size()];
    for (std::size_t t = 1; t < a.size(); ++t)
      if (a[t] != b[t - 1]) return false;
    if (!g.contains(a)) return false;
    if (!seen.emplace(a.entries().begin(), a.entries().end()).second) return false;
  }
  return true;
}

inline nas::KTuple tuple(std::uint32_t k, const Word& w) { return nas::KTuple(k, w); }

}  // namespace oracle
