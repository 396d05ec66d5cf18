#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nas/sequence.hpp"
#include "nas/tuple.hpp"

namespace nas {

// Subgraph of the de Bruijn digraph B_k(window). Edges are (window+1)-tuples
// held as sorted, duplicate-free codes; vertices are implied by the edges
// (every length-window prefix and suffix).
class Subgraph {
 public:
  // Throws DuplicateEdge if an edge repeats, InvalidParams on a length or
  // alphabet mismatch.
  Subgraph(std::uint32_t k, std::size_t window, std::span<const KTuple> edges);
  static Subgraph from_codes(std::uint32_t k, std::size_t window, std::vector<std::uint64_t> codes);
  static Subgraph empty(std::uint32_t k, std::size_t window) { return from_codes(k, window, {}); }

  std::uint32_t k() const noexcept { return k_; }
  std::size_t window() const noexcept { return window_; }
  std::size_t edge_length() const noexcept { return window_ + 1; }
  std::size_t size() const noexcept { return codes_.size(); }
  bool empty() const noexcept { return codes_.empty(); }

  std::span<const std::uint64_t> codes() const noexcept { return codes_; }
  std::vector<KTuple> edges() const;
  bool contains(const KTuple& edge) const;
  bool contains_code(std::uint64_t code) const;

  // Head and tail vertex codes of an edge code.
  std::uint64_t tail_of(std::uint64_t edge) const noexcept { return edge / k_; }
  std::uint64_t head_of(std::uint64_t edge) const noexcept { return edge % vertex_count_; }

  // Disjoint union; throws DuplicateEdge if the graphs share an edge.
  Subgraph merged(const Subgraph& other) const;

  friend bool operator==(const Subgraph&, const Subgraph&) = default;

 private:
  Subgraph(std::uint32_t k, std::size_t window, std::vector<std::uint64_t> sorted_codes, int);

  std::uint32_t k_;
  std::size_t window_;
  std::uint64_t vertex_count_;  // k^window
  std::vector<std::uint64_t> codes_;
};

struct EulerianCircuit {
  std::uint32_t k;
  std::size_t window;
  std::vector<std::uint64_t> edges;  // edge codes in traversal order

  KTuple start_vertex() const;
  std::vector<KTuple> edge_tuples() const;
};

std::optional<KTuple> find_unbalanced_vertex(const Subgraph& g);
bool is_balanced(const Subgraph& g);
// Undirected connectivity over incident vertices; true for the empty graph.
bool is_connected(const Subgraph& g);
bool is_antinegative(const Subgraph& g);

// Hierholzer with a fixed traversal order: start at the least vertex with an
// out-edge, always take the unused out-edge with the smallest final symbol,
// and splice each sub-circuit in at the earliest position that still has an
// unused out-edge. Throws NotEulerian for unbalanced, disconnected or empty
// input.
EulerianCircuit eulerian_circuit(const Subgraph& g);

// Symbol i is the first entry of edge i; span is window + 1.
CyclicSequence spell(const EulerianCircuit& c);

// Edge-graph of a sequence: its span-windows as edges of B_k(span-1).
// Throws DuplicateEdge if a window repeats.
Subgraph edge_graph(const CyclicSequence& s);

// One edge per line, space-separated entries, ascending order.
std::string dump_edges(const Subgraph& g);
// Graphviz digraph with vertices labelled by their digit strings.
std::string dump_dot(const Subgraph& g);

}  // namespace nas
