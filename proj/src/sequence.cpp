#include "nas/sequence.hpp"

#include <algorithm>
#include <string>

#include "nas/error.hpp"

namespace nas {

CyclicSequence::CyclicSequence(std::uint32_t k, std::size_t span, std::vector<Symbol> symbols)
    : k_(k), span_(span), symbols_(std::move(symbols)) {
  if (k_ < 2) throw Error(ErrorKind::InvalidParams, "alphabet size must be at least 2");
  if (span_ < 1) throw Error(ErrorKind::InvalidParams, "span must be at least 1");
  if (symbols_.empty()) throw Error(ErrorKind::InvalidParams, "sequence period must be at least 1");
  for (Symbol s : symbols_)
    if (s >= k_)
      throw Error(ErrorKind::InvalidParams,
                  "symbol " + std::to_string(s) + " out of range for k=" + std::to_string(k_));
}

KTuple CyclicSequence::window(std::size_t i) const {
  std::vector<Symbol> w(span_);
  for (std::size_t j = 0; j < span_; ++j) w[j] = (*this)[i + j];
  return KTuple(k_, std::move(w));
}

CyclicSequence CyclicSequence::canonical() const {
  // Same rotation rule as canonical_rotation(), applied to the period.
  const KTuple least = canonical_rotation(KTuple(k_, symbols_));
  return CyclicSequence(k_, span_, std::vector<Symbol>(least.entries().begin(), least.entries().end()));
}

CyclicSequence CyclicSequence::negated() const {
  std::vector<Symbol> out(symbols_.size());
  std::transform(symbols_.begin(), symbols_.end(), out.begin(), [&](Symbol s) { return (k_ - s) % k_; });
  return CyclicSequence(k_, span_, std::move(out));
}

CyclicSequence CyclicSequence::reversed() const {
  return CyclicSequence(k_, span_, std::vector<Symbol>(symbols_.rbegin(), symbols_.rend()));
}

}  // namespace nas
