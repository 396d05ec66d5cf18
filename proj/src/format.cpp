#include "nas/format.hpp"

#include <cctype>
#include <charconv>

#include "nas/error.hpp"

namespace nas {

namespace {

bool is_separator(char c) { return c == ' ' || c == ',' || c == '\t' || c == '\n' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_separator(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_separator(s.back())) s.remove_suffix(1);
  return s;
}

Symbol check_range(std::uint64_t value, std::uint32_t k, std::string_view token) {
  if (value >= k)
    throw Error(ErrorKind::ParseError, "symbol '" + std::string(token) + "' out of range for k=" +
                                           std::to_string(k));
  return static_cast<Symbol>(value);
}

std::string join(std::span<const Symbol> symbols, char sep) {
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(symbols[i]);
  }
  return out;
}

}  // namespace

std::vector<Symbol> parse_symbols(std::string_view text, std::uint32_t k) {
  if (k < 2) throw Error(ErrorKind::ParseError, "alphabet size must be at least 2");
  text = trim(text);
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty sequence");

  std::vector<Symbol> out;
  const bool separated = text.find_first_of(" ,\t\n\r") != std::string_view::npos;
  if (!separated && k <= 10) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw Error(ErrorKind::ParseError, std::string("unexpected character '") + c + "'");
      out.push_back(check_range(static_cast<std::uint64_t>(c - '0'), k, std::string_view(&c, 1)));
    }
    return out;
  }

  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && is_separator(text[pos])) ++pos;
    std::size_t end = pos;
    while (end < text.size() && !is_separator(text[end])) ++end;
    if (end == pos) break;
    const std::string_view token = text.substr(pos, end - pos);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw Error(ErrorKind::ParseError, "bad symbol '" + std::string(token) + "'");
    out.push_back(check_range(value, k, token));
    pos = end;
  }
  return out;
}

KTuple parse_tuple(std::string_view text, std::uint32_t k) { return KTuple(k, parse_symbols(text, k)); }

std::string format_spaced(std::span<const Symbol> symbols) { return join(symbols, ' '); }

std::string format_csv(std::span<const Symbol> symbols) { return join(symbols, ','); }

std::string format_compact(std::span<const Symbol> symbols) {
  std::string out;
  out.reserve(symbols.size());
  for (Symbol s : symbols) {
    if (s > 9) throw Error(ErrorKind::InvalidParams, "compact form requires k <= 10");
    out += static_cast<char>('0' + s);
  }
  return out;
}

}  // namespace nas
