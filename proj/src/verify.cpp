#include "nas/verify.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "nas/construct.hpp"
#include "nas/error.hpp"

namespace nas {

std::string_view to_string(Violation v) noexcept {
  switch (v) {
    case Violation::RepeatedWindow: return "repeated-window";
    case Violation::NegatedPair: return "negated-pair";
    case Violation::SelfNegativeWindow: return "self-negative-window";
  }
  return "unknown";
}

std::string_view to_string(Pairing p) noexcept { return p == Pairing::Negation ? "negation" : "complement"; }

namespace {

// Window start indices sorted by the window they start, compared cyclically
// in place so no window needs to be materialised or encoded.
class WindowIndex {
 public:
  explicit WindowIndex(const CyclicSequence& s) : s_(s), order_(s.period()) {
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return compare(a, b) < 0; });
  }

  const std::vector<std::size_t>& order() const { return order_; }

  // Three-way comparison of windows a and b.
  int compare(std::size_t a, std::size_t b) const {
    for (std::size_t t = 0; t < s_.span(); ++t) {
      const Symbol x = s_[a + t], y = s_[b + t];
      if (x != y) return x < y ? -1 : 1;
    }
    return 0;
  }

  // Some window equal to the negation of window a, if any.
  std::optional<std::size_t> find_negation(std::size_t a) const {
    const std::uint32_t k = s_.k();
    auto compare_negated = [&](std::size_t b) {  // sign of window(b) - (-window(a))
      for (std::size_t t = 0; t < s_.span(); ++t) {
        const Symbol x = s_[b + t], y = (k - s_[a + t]) % k;
        if (x != y) return x < y ? -1 : 1;
      }
      return 0;
    };
    auto it = std::partition_point(order_.begin(), order_.end(), [&](std::size_t b) { return compare_negated(b) < 0; });
    if (it != order_.end() && compare_negated(*it) == 0) return *it;
    return std::nullopt;
  }

 private:
  const CyclicSequence& s_;
  std::vector<std::size_t> order_;
};

Check fail(Violation kind, const CyclicSequence& s, std::size_t i, std::size_t j) {
  return Check{false, Counterexample{kind, i, j, s.window(i), s.window(j)}};
}

Check repeated_window(const CyclicSequence& s, const WindowIndex& index) {
  const auto& order = index.order();
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t r = 1; r < order.size(); ++r) {
    if (index.compare(order[r - 1], order[r]) != 0) continue;
    // stable sort keeps equal windows in index order
    const std::pair<std::size_t, std::size_t> pair{order[r - 1], order[r]};
    if (!best || pair < *best) best = pair;
  }
  if (best) return fail(Violation::RepeatedWindow, s, best->first, best->second);
  return {};
}

}  // namespace

Check is_window_sequence(const CyclicSequence& s) { return repeated_window(s, WindowIndex(s)); }

Check is_nas(const CyclicSequence& s) {
  const WindowIndex index(s);
  if (Check windows = repeated_window(s, index); !windows) return windows;
  for (std::size_t i = 0; i < s.period(); ++i) {
    if (auto j = index.find_negation(i)) {
      if (*j == i) return fail(Violation::SelfNegativeWindow, s, i, i);
      return fail(Violation::NegatedPair, s, i, *j);
    }
  }
  return {};
}

VerifyReport is_maximal_nas(const CyclicSequence& s) {
  VerifyReport report;
  report.period = s.period();
  report.bound = max_period_bound(s.k(), s.span());
  const Check windows = is_window_sequence(s);
  report.window_ok = windows.ok;
  if (!windows) {
    report.counterexample = windows.witness;
    return report;
  }
  const Check nas = is_nas(s);
  report.nas_ok = nas.ok;
  report.counterexample = nas.witness;
  report.maximal = nas.ok && report.period == report.bound;
  return report;
}

namespace {

class TrailSearch {
 public:
  TrailSearch(std::uint32_t k, std::size_t n, Pairing pairing)
      : k_(k),
        edges_(tuple_count(k, n)),
        vertices_(edges_ / k),
        partner_(edges_),
        used_(edges_, false),
        seen_vertex_(vertices_, 0),
        seen_class_(edges_, 0) {
    for (std::uint64_t e = 0; e < edges_; ++e) {
      const KTuple t = KTuple::from_code(k, n, e);
      if (pairing == Pairing::Negation) {
        partner_[e] = negate(t).code();
      } else {
        std::vector<Symbol> c(t.entries().begin(), t.entries().end());
        for (auto& x : c) x = k - 1 - x;
        partner_[e] = KTuple(k, std::move(c)).code();
      }
    }
    for (std::uint64_t e = 0; e < edges_; ++e)
      if (partner_[e] != e && e < partner_[e]) ++pair_classes_;
  }

  // Trivial pairing bound: at most one edge from each non-fixed pair.
  std::uint64_t pair_classes() const { return pair_classes_; }

  // target == 0: maximise. Otherwise collect every trail of exactly target.
  void run(std::uint64_t target) {
    target_ = target;
    for (first_ = 0; first_ < edges_ && !done_; ++first_) {
      if (partner_[first_] == first_) continue;
      // Classes still usable once the first edge is fixed as the trail minimum.
      std::uint64_t usable = 0;
      for (std::uint64_t e = first_ + 1; e < edges_; ++e)
        if (partner_[e] < e && partner_[e] != first_) ++usable;
      const std::uint64_t needed = target_ ? target_ : best_ + 1;
      if (usable + 1 < needed) continue;
      use(first_, true);
      trail_.assign(1, first_);
      extend(first_ % vertices_);
      use(first_, false);
    }
  }

  std::uint64_t best() const { return best_; }
  const std::vector<std::vector<std::uint64_t>>& trails() const { return found_; }
  const std::vector<std::uint64_t>& best_trail() const { return best_trail_; }

 private:
  void use(std::uint64_t e, bool on) { used_[e] = used_[partner_[e]] = on; }

  void extend(std::uint64_t vertex) {
    if (done_) return;
    if (vertex == first_ / k_) record();
    if (!worth_extending(vertex)) return;
    for (std::uint32_t s = 0; s < k_ && !done_; ++s) {
      const std::uint64_t e = vertex * k_ + s;
      if (e <= first_ || used_[e] || partner_[e] == e) continue;
      use(e, true);
      trail_.push_back(e);
      extend(e % vertices_);
      trail_.pop_back();
      use(e, false);
    }
  }

  // Every further edge must be usable, reachable from `vertex` over usable
  // edges, and come from a distinct pair class; the trail must also be able to
  // get back to the start vertex.
  bool worth_extending(std::uint64_t vertex) {
    const std::uint64_t needed = target_ ? target_ : best_ + 1;
    const std::uint64_t start = first_ / k_;
    ++stamp_;
    seen_vertex_[vertex] = stamp_;
    frontier_.assign(1, vertex);
    bool closes = vertex == start;
    std::uint64_t classes = 0;
    for (std::size_t f = 0; f < frontier_.size(); ++f) {
      const std::uint64_t v = frontier_[f];
      for (std::uint32_t s = 0; s < k_; ++s) {
        const std::uint64_t e = v * k_ + s;
        if (e <= first_ || used_[e] || partner_[e] == e) continue;
        const std::uint64_t cls = std::min(e, partner_[e]);
        if (seen_class_[cls] != stamp_) {
          seen_class_[cls] = stamp_;
          ++classes;
        }
        const std::uint64_t w = e % vertices_;
        if (w == start) closes = true;
        if (seen_vertex_[w] != stamp_) {
          seen_vertex_[w] = stamp_;
          frontier_.push_back(w);
        }
      }
    }
    return closes && trail_.size() + classes >= needed;
  }

  void record() {
    const std::uint64_t len = trail_.size();
    if (target_) {
      if (len == target_) found_.push_back(trail_);
      return;
    }
    if (len > best_) {
      best_ = len;
      best_trail_ = trail_;
      if (best_ == pair_classes_) done_ = true;
    }
  }

  std::uint32_t k_;
  std::uint64_t edges_, vertices_;
  std::vector<std::uint64_t> partner_;
  std::vector<bool> used_;
  std::uint64_t pair_classes_ = 0;

  std::uint64_t target_ = 0, first_ = 0, best_ = 0;
  bool done_ = false;
  std::vector<std::uint64_t> trail_, best_trail_;
  std::vector<std::vector<std::uint64_t>> found_;

  std::uint64_t stamp_ = 0;
  std::vector<std::uint64_t> seen_vertex_, seen_class_, frontier_;
};

CyclicSequence trail_sequence(std::uint32_t k, std::size_t n, const std::vector<std::uint64_t>& trail) {
  const std::uint64_t lead = tuple_count(k, n - 1);
  std::vector<Symbol> symbols;
  symbols.reserve(trail.size());
  for (auto e : trail) symbols.push_back(static_cast<Symbol>(e / lead));
  return CyclicSequence(k, n, std::move(symbols));
}

}  // namespace

OracleResult oracle_max_period(std::uint32_t k, std::size_t n, Pairing pairing, OracleOptions options) {
  if (k < 2 || n < 2) throw Error(ErrorKind::InvalidParams, "oracle needs k >= 2 and n >= 2");
  if (pairing == Pairing::Complement && k != 2)
    throw Error(ErrorKind::InvalidParams, "complement pairing is defined for k = 2 only");
  if (tuple_count(k, n) > kMaxOracleTuples)
    throw Error(ErrorKind::SearchSpaceTooLarge, "oracle search space k^n exceeds 2^16");

  OracleResult result;
  TrailSearch search(k, n, pairing);
  search.run(0);
  result.max_period = search.best();
  if (result.max_period == 0) return result;
  result.witness = trail_sequence(k, n, search.best_trail());

  if (options.collect_all) {
    TrailSearch all(k, n, pairing);
    all.run(result.max_period);
    for (const auto& t : all.trails()) result.all_maximal.push_back(trail_sequence(k, n, t));
  }
  return result;
}

std::uint64_t count_self_negative(std::uint32_t k, std::size_t n) {
  const std::uint64_t total = tuple_count(k, n);
  if (total > (std::uint64_t{1} << 26))
    throw Error(ErrorKind::SearchSpaceTooLarge, "self-negative count needs k^n <= 2^26");
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code)
    if (is_self_negative(KTuple::from_code(k, n, code))) ++count;
  return count;
}

CyclicSequence binary_equivalence_class(const CyclicSequence& s) {
  if (s.k() != 2) throw Error(ErrorKind::InvalidParams, "equivalence under complement needs k = 2");
  std::vector<Symbol> flipped(s.symbols().begin(), s.symbols().end());
  for (auto& x : flipped) x ^= 1u;
  const CyclicSequence complement(2, s.span(), std::move(flipped));
  std::vector<CyclicSequence> forms{s.canonical(), complement.canonical(), s.reversed().canonical(),
                                    complement.reversed().canonical()};
  return *std::min_element(forms.begin(), forms.end(), [](const CyclicSequence& a, const CyclicSequence& b) {
    return std::lexicographical_compare(a.symbols().begin(), a.symbols().end(), b.symbols().begin(),
                                        b.symbols().end());
  });
}

}  // namespace nas
