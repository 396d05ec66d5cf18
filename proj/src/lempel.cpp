#include "nas/lempel.hpp"

#include "nas/error.hpp"

namespace nas {

KTuple d_map(const KTuple& t) {
  if (t.size() < 2) throw Error(ErrorKind::TupleTooShort, "difference map needs length >= 2");
  const std::uint32_t k = t.k();
  std::vector<Symbol> out(t.size() - 1);
  for (std::size_t i = 0; i + 1 < t.size(); ++i) out[i] = (t[i + 1] + k - t[i]) % k;
  return KTuple(k, std::move(out));
}

std::vector<KTuple> d_inverse(const KTuple& t) {
  const std::uint32_t k = t.k();
  std::vector<KTuple> out;
  out.reserve(k);
  for (Symbol first = 0; first < k; ++first) {
    std::vector<Symbol> entries(t.size() + 1);
    entries[0] = first;
    for (std::size_t i = 0; i < t.size(); ++i) entries[i + 1] = (entries[i] + t[i]) % k;
    out.emplace_back(k, std::move(entries));
  }
  return out;
}

Subgraph lift_subgraph(const Subgraph& g) {
  const std::uint32_t k = g.k();
  std::vector<std::uint64_t> codes;
  codes.reserve(g.size() * k);
  for (const auto& edge : g.edges())
    for (const auto& pre : d_inverse(edge)) codes.push_back(pre.code());
  return Subgraph::from_codes(k, g.window() + 1, std::move(codes));
}

}  // namespace nas
