#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nas/tuple.hpp"

namespace nas {

// Accepts "0 1 1 2", "0,1,1,2" and, for k <= 10 only, the compact digit form
// "0112". Every entry must lie in [0, k-1]. Throws ErrorKind::ParseError.
std::vector<Symbol> parse_symbols(std::string_view text, std::uint32_t k);

KTuple parse_tuple(std::string_view text, std::uint32_t k);

std::string format_spaced(std::span<const Symbol> symbols);
std::string format_csv(std::span<const Symbol> symbols);
// Digit string; only valid for k <= 10.
std::string format_compact(std::span<const Symbol> symbols);

inline std::string format_spaced(const KTuple& t) { return format_spaced(t.entries()); }
inline std::string format_compact(const KTuple& t) { return format_compact(t.entries()); }

}  // namespace nas
