#include "nas/graph.hpp"

#include <algorithm>
#include <list>
#include <numeric>
#include <sstream>

#include "nas/error.hpp"
#include "nas/format.hpp"

namespace nas {

namespace {

void require_unique(const std::vector<std::uint64_t>& sorted, std::uint32_t k, std::size_t length) {
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end())
    throw Error(ErrorKind::DuplicateEdge,
                "edge (" + format_spaced(KTuple::from_code(k, length, *dup)) + ") repeats");
}

// Sorted vertex codes touched by at least one edge, plus lookup.
struct VertexIndex {
  std::vector<std::uint64_t> vertices;

  explicit VertexIndex(const Subgraph& g) {
    vertices.reserve(2 * g.size());
    for (auto e : g.codes()) {
      vertices.push_back(g.tail_of(e));
      vertices.push_back(g.head_of(e));
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  }

  std::size_t operator()(std::uint64_t v) const {
    return static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
  }
  std::size_t size() const { return vertices.size(); }
};

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

Subgraph::Subgraph(std::uint32_t k, std::size_t window, std::vector<std::uint64_t> sorted_codes, int)
    : k_(k), window_(window), codes_(std::move(sorted_codes)) {
  if (k_ < 2) throw Error(ErrorKind::InvalidParams, "alphabet size must be at least 2");
  if (window_ < 1) throw Error(ErrorKind::InvalidParams, "window must be at least 1");
  const std::uint64_t edge_space = tuple_count(k_, window_ + 1);
  vertex_count_ = edge_space / k_;
  if (!codes_.empty() && codes_.back() >= edge_space)
    throw Error(ErrorKind::InvalidParams, "edge code out of range");
  require_unique(codes_, k_, window_ + 1);
}

Subgraph::Subgraph(std::uint32_t k, std::size_t window, std::span<const KTuple> edges)
    : Subgraph(k, window,
               [&] {
                 std::vector<std::uint64_t> codes;
                 codes.reserve(edges.size());
                 for (const auto& e : edges) {
                   if (e.k() != k || e.size() != window + 1)
                     throw Error(ErrorKind::InvalidParams, "edge (" + format_spaced(e) +
                                                               ") does not match k/window of the subgraph");
                   codes.push_back(e.code());
                 }
                 std::sort(codes.begin(), codes.end());
                 return codes;
               }(),
               0) {}

Subgraph Subgraph::from_codes(std::uint32_t k, std::size_t window, std::vector<std::uint64_t> codes) {
  std::sort(codes.begin(), codes.end());
  return Subgraph(k, window, std::move(codes), 0);
}

std::vector<KTuple> Subgraph::edges() const {
  std::vector<KTuple> out;
  out.reserve(codes_.size());
  for (auto c : codes_) out.push_back(KTuple::from_code(k_, window_ + 1, c));
  return out;
}

bool Subgraph::contains(const KTuple& edge) const {
  return edge.k() == k_ && edge.size() == window_ + 1 && contains_code(edge.code());
}

bool Subgraph::contains_code(std::uint64_t code) const {
  return std::binary_search(codes_.begin(), codes_.end(), code);
}

Subgraph Subgraph::merged(const Subgraph& other) const {
  if (other.k_ != k_ || other.window_ != window_)
    throw Error(ErrorKind::InvalidParams, "cannot merge subgraphs of different shape");
  std::vector<std::uint64_t> codes;
  codes.reserve(codes_.size() + other.codes_.size());
  std::merge(codes_.begin(), codes_.end(), other.codes_.begin(), other.codes_.end(), std::back_inserter(codes));
  return Subgraph(k_, window_, std::move(codes), 0);
}

KTuple EulerianCircuit::start_vertex() const {
  if (edges.empty()) throw Error(ErrorKind::InvalidParams, "empty circuit has no start vertex");
  return KTuple::from_code(k, window, edges.front() / k);
}

std::vector<KTuple> EulerianCircuit::edge_tuples() const {
  std::vector<KTuple> out;
  out.reserve(edges.size());
  for (auto e : edges) out.push_back(KTuple::from_code(k, window + 1, e));
  return out;
}

std::optional<KTuple> find_unbalanced_vertex(const Subgraph& g) {
  const VertexIndex index(g);
  std::vector<std::int64_t> excess(index.size(), 0);
  for (auto e : g.codes()) {
    ++excess[index(g.tail_of(e))];
    --excess[index(g.head_of(e))];
  }
  for (std::size_t v = 0; v < excess.size(); ++v)
    if (excess[v] != 0) return KTuple::from_code(g.k(), g.window(), index.vertices[v]);
  return std::nullopt;
}

bool is_balanced(const Subgraph& g) { return !find_unbalanced_vertex(g).has_value(); }

bool is_connected(const Subgraph& g) {
  if (g.empty()) return true;
  const VertexIndex index(g);
  DisjointSets sets(index.size());
  for (auto e : g.codes()) sets.unite(index(g.tail_of(e)), index(g.head_of(e)));
  const std::size_t root = sets.find(0);
  for (std::size_t v = 1; v < index.size(); ++v)
    if (sets.find(v) != root) return false;
  return true;
}

bool is_antinegative(const Subgraph& g) {
  for (auto e : g.codes())
    if (g.contains_code(negate_code(g.k(), g.edge_length(), e))) return false;
  return true;
}

EulerianCircuit eulerian_circuit(const Subgraph& g) {
  if (g.empty()) throw Error(ErrorKind::NotEulerian, "graph has no edges");
  if (auto v = find_unbalanced_vertex(g))
    throw Error(ErrorKind::NotEulerian, "vertex (" + format_spaced(*v) + ") has in-degree != out-degree");
  if (!is_connected(g)) throw Error(ErrorKind::NotEulerian, "graph has more than one component");

  const VertexIndex index(g);
  const auto codes = g.codes();
  // Edges are sorted by code, so each vertex's out-edges form one contiguous
  // run ordered by final symbol.
  std::vector<std::size_t> next(index.size(), codes.size()), end(index.size(), codes.size());
  for (std::size_t i = codes.size(); i-- > 0;) next[index(g.tail_of(codes[i]))] = i;
  for (std::size_t i = 0; i < codes.size(); ++i) end[index(g.tail_of(codes[i]))] = i + 1;

  auto walk = [&](std::size_t v) {
    std::list<std::uint64_t> path;
    while (next[v] < end[v]) {
      const std::uint64_t e = codes[next[v]++];
      path.push_back(e);
      v = index(g.head_of(e));
    }
    return path;
  };

  std::list<std::uint64_t> circuit = walk(index(g.tail_of(codes.front())));
  for (auto it = circuit.begin(); it != circuit.end();) {
    const std::size_t v = index(g.tail_of(*it));
    if (next[v] < end[v]) {
      auto sub = walk(v);
      auto first = sub.begin();
      circuit.splice(it, sub);
      it = first;
    }
    ++it;
  }

  EulerianCircuit result{g.k(), g.window(), std::vector<std::uint64_t>(circuit.begin(), circuit.end())};
  if (result.edges.size() != g.size())
    throw Error(ErrorKind::NotEulerian, "circuit does not cover every edge");
  return result;
}

CyclicSequence spell(const EulerianCircuit& c) {
  const std::uint64_t lead = tuple_count(c.k, c.window);
  std::vector<Symbol> symbols;
  symbols.reserve(c.edges.size());
  for (auto e : c.edges) symbols.push_back(static_cast<Symbol>(e / lead));
  return CyclicSequence(c.k, c.window + 1, std::move(symbols));
}

Subgraph edge_graph(const CyclicSequence& s) {
  if (s.span() < 2) throw Error(ErrorKind::InvalidParams, "edge-graph needs span >= 2");
  std::vector<std::uint64_t> codes;
  codes.reserve(s.period());
  for (std::size_t i = 0; i < s.period(); ++i) codes.push_back(s.window(i).code());
  return Subgraph::from_codes(s.k(), s.span() - 1, std::move(codes));
}

std::string dump_edges(const Subgraph& g) {
  std::string out;
  for (const auto& e : g.edges()) {
    out += format_spaced(e);
    out += '\n';
  }
  return out;
}

std::string dump_dot(const Subgraph& g) {
  auto label = [&](std::uint64_t vertex) {
    const KTuple t = KTuple::from_code(g.k(), g.window(), vertex);
    if (g.k() <= 10) return format_compact(t);
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "." : "") + std::to_string(t[i]);
    return s;
  };
  std::ostringstream out;
  out << "digraph B" << g.k() << "_" << g.window() << " {\n";
  for (auto e : g.codes())
    out << "  \"" << label(g.tail_of(e)) << "\" -> \"" << label(g.head_of(e)) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace nas
