#include "nas/tuple.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "nas/error.hpp"

namespace nas {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::InvalidTuple: return "InvalidTuple";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::TupleTooShort: return "TupleTooShort";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::NotEulerian: return "NotEulerian";
    case ErrorKind::PairingViolation: return "PairingViolation";
    case ErrorKind::ConstructionInvariantViolation: return "ConstructionInvariantViolation";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::uint64_t tuple_count(std::uint32_t k, std::size_t length) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (result > std::numeric_limits<std::uint64_t>::max() / k)
      throw Error(ErrorKind::Overflow,
                  std::to_string(k) + "^" + std::to_string(length) + " exceeds 64 bits");
    result *= k;
  }
  return result;
}

KTuple::KTuple(std::uint32_t k, std::vector<Symbol> entries) : k_(k), entries_(std::move(entries)) {
  if (k_ < 2) throw Error(ErrorKind::InvalidTuple, "alphabet size must be at least 2");
  if (entries_.empty()) throw Error(ErrorKind::InvalidTuple, "tuple must be non-empty");
  for (Symbol e : entries_)
    if (e >= k_)
      throw Error(ErrorKind::InvalidTuple,
                  "entry " + std::to_string(e) + " out of range for k=" + std::to_string(k_));
}

KTuple KTuple::from_code(std::uint32_t k, std::size_t length, std::uint64_t code) {
  if (code >= tuple_count(k, length))
    throw Error(ErrorKind::InvalidTuple, "code out of range");
  std::vector<Symbol> entries(length);
  for (std::size_t i = length; i-- > 0;) {
    entries[i] = static_cast<Symbol>(code % k);
    code /= k;
  }
  return KTuple(k, std::move(entries));
}

std::uint64_t KTuple::code() const {
  tuple_count(k_, entries_.size());
  std::uint64_t code = 0;
  for (Symbol e : entries_) code = code * k_ + e;
  return code;
}

KTuple negate(const KTuple& t) {
  std::vector<Symbol> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = (t.k() - t[i]) % t.k();
  return KTuple(t.k(), std::move(out));
}

bool is_self_negative(const KTuple& t) {
  return std::all_of(t.entries().begin(), t.entries().end(), [&](Symbol e) {
    return e == 0 || 2 * e == t.k();
  });
}

Pseudoweight2 pseudoweight2(const KTuple& t) {
  Pseudoweight2 w;
  for (Symbol e : t.entries()) w.value += e == 0 ? t.k() : 2 * std::uint64_t{e};
  return w;
}

KTuple rotate(const KTuple& t, std::size_t shift) {
  const std::size_t n = t.size();
  std::vector<Symbol> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = t[(i + shift) % n];
  return KTuple(t.k(), std::move(out));
}

std::size_t circuit_period(const KTuple& t) {
  const std::size_t n = t.size();
  for (std::size_t c = 1; c < n; ++c) {
    if (n % c != 0) continue;
    bool fixed = true;
    for (std::size_t i = 0; i < n && fixed; ++i) fixed = t[i] == t[(i + c) % n];
    if (fixed) return c;
  }
  return n;
}

KTuple canonical_rotation(const KTuple& t) {
  const std::size_t n = t.size();
  const auto e = t.entries();
  // Two-candidate minimum-rotation scan, linear in n.
  std::size_t i = 0, j = 1, len = 0;
  while (i < n && j < n && len < n) {
    const Symbol a = e[(i + len) % n], b = e[(j + len) % n];
    if (a == b) {
      ++len;
      continue;
    }
    if (a > b)
      i += len + 1;
    else
      j += len + 1;
    if (i == j) ++j;
    len = 0;
  }
  const std::size_t best = std::min(i, j);
  return best == 0 ? t : rotate(t, best);
}

std::uint64_t negate_code(std::uint32_t k, std::size_t length, std::uint64_t code) {
  std::uint64_t out = 0, place = 1;
  for (std::size_t i = 0; i < length; ++i) {
    std::uint64_t digit = code % k;
    code /= k;
    out += ((k - digit) % k) * place;
    place *= k;
  }
  return out;
}

std::uint64_t pseudoweight2_code(std::uint32_t k, std::size_t length, std::uint64_t code) {
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < length; ++i) {
    std::uint64_t digit = code % k;
    code /= k;
    w += digit == 0 ? k : 2 * digit;
  }
  return w;
}

}  // namespace nas
