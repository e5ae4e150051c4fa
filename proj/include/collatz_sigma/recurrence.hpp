#pragma once

// Iterative generation of z_n:
//
//   z_n = binomial(floor(5(n-2)/3), n-2)
//         - sum_{i=2}^{n-1} binomial(floor((3(n-i) + delta)/2), n-i) * z_i
//
// where delta is constant on windows of 5 or 6 consecutive i. The windows, their
// deltas and the point at which the sum is complete come from a fixed control
// flow (the "window scheduler") reproduced here statement for statement.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "core.hpp"
#include "diophantine.hpp"
#include "errors.hpp"

namespace collatz_sigma {

enum class Provenance { Initial, Iterative, Enumerated, BruteForce };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Initial: return "initial";
    case Provenance::Iterative: return "iterative";
    case Provenance::Enumerated: return "enumerated";
    case Provenance::BruteForce: return "brute-force";
  }
  return "?";
}

/// Where the window scheduler stopped for one n. `program_bound` is the
/// window-loop bound floor((limit-12)/6) of the original program; a run whose
/// accepting window lies beyond it needed the bound lifted.
struct ScheduleDiagnostic {
  std::uint32_t n = 0;
  std::uint64_t accepting_window = 0;
  std::uint64_t program_bound = 0;
  bool beyond_program_bound() const noexcept { return accepting_window > program_bound; }
};

/// n -> z_n, n >= 1.
class ZnSeries {
 public:
  struct Entry {
    BigInt value;
    Provenance provenance;
  };

  void set(std::uint32_t n, BigInt value, Provenance p) {
    entries_[n] = Entry{std::move(value), p};
  }
  bool has(std::uint32_t n) const { return entries_.count(n) != 0; }
  const BigInt& at(std::uint32_t n) const {
    auto it = entries_.find(n);
    if (it == entries_.end()) throw MissingHistory(n);
    return it->second.value;
  }
  Provenance provenance(std::uint32_t n) const {
    auto it = entries_.find(n);
    if (it == entries_.end()) throw MissingHistory(n);
    return it->second.provenance;
  }
  std::uint32_t max_index() const { return entries_.empty() ? 0 : entries_.rbegin()->first; }
  std::size_t size() const { return entries_.size(); }
  const std::map<std::uint32_t, Entry>& entries() const { return entries_; }

  std::vector<ScheduleDiagnostic> diagnostics;

 private:
  std::map<std::uint32_t, Entry> entries_;
};

inline constexpr std::uint64_t kInitialZn[12] = {1, 1, 2, 3, 7, 12, 30, 85, 173, 476, 961, 2652};

inline ZnSeries seeded_series() {
  ZnSeries s;
  for (std::uint32_t n = 1; n <= 12; ++n) s.set(n, from_u64(kInitialZn[n - 1]), Provenance::Initial);
  return s;
}

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline bool divisible_by_9(std::int64_t a) { return a % 9 == 0; }

inline std::int64_t coefficient_top(std::int64_t k, std::int64_t delta) {
  return floor_div(3 * k + delta, 2);
}

}  // namespace detail

/// binomial(floor((3k + delta)/2), k); zero when the top is below k.
inline BigInt coefficient(std::int64_t k, std::int64_t delta) {
  if (k < 0) throw InvalidArgument("coefficient: k must be non-negative");
  return binomial(detail::coefficient_top(k, delta), k);
}

/// The scheduler's accumulator: -1 + sum_{k=0}^{n-11} (-1)^floor(2(k-2)/3).
inline std::int64_t delta_base(std::uint32_t n) {
  if (n < 12) throw InvalidArgument("delta_base: n must be >= 12");
  std::int64_t a = -1;
  for (std::int64_t k = 0; k <= std::int64_t(n) - 11; ++k)
    a += (detail::floor_div(2 * (k - 2), 3) % 2 == 0) ? 1 : -1;
  return a;
}

struct ScheduleSegment {
  std::int64_t i_lo = 0;
  std::int64_t i_hi = 0;  // inclusive
  std::int64_t delta = 0;
  std::int64_t width() const noexcept { return i_hi - i_lo + 1; }
  friend bool operator==(const ScheduleSegment&, const ScheduleSegment&) = default;
};

struct DeltaSchedule {
  std::uint32_t n = 0;
  std::int64_t base = 0;
  std::vector<ScheduleSegment> segments;
  std::uint64_t accepting_window = 0;
};

namespace window_scheduler {

struct Window {
  std::int64_t first_i = 0;
  std::int64_t width_minus_one = 0;  // the program's w: the window spans w+1 indices
};

/// Start and extent of window h.
inline Window window(std::uint32_t n, std::int64_t h) {
  std::int64_t v = 12, w = 5;
  if (h < 58 && detail::divisible_by_9(h - 6)) w = 4;
  for (std::int64_t k = 0; k <= 5; ++k)
    if (h >= k * 9 + 7) --v;
  std::int64_t c2 = 58;
  for (std::int64_t k = 1; k <= std::int64_t(n) / 20; ++k) {
    std::int64_t d, e;
    if (k % 2 != 0) {
      d = 52;
      e = 5;
    } else {
      d = 61;
      e = 6;
    }
    std::int64_t c1 = c2;
    c2 = c1 + d;
    // c1 only grows, so no later k can touch v or w.
    if (c1 > h) break;
    if (h < c2 && detail::divisible_by_9(h - 6 + k * 2)) w = 4;
    for (std::int64_t f = 0; f <= e; ++f)
      if (h >= f * 9 + c1 + 1) --v;
  }
  return {v + h * 6, w};
}

/// The (r1, r2) pair computed for block t.
inline std::pair<std::int64_t, std::int64_t> block_shift(std::uint32_t n, std::int64_t t) {
  std::int64_t c1 = 5, c2 = 6, r1 = 0, r2 = 0;
  if (t > c1) r1 = 2;
  if (t > c2) r2 = 2;
  for (std::int64_t k = 2; k <= std::int64_t(n) / 50; ++k) {
    std::int64_t d = (k % 2 == 0) ? 6 : 7;
    c1 += d;
    c2 += d;
    if (t > c1) r1 = k * 2;
    if (t > c2) r2 = k * 2;
  }
  return {r1, r2};
}

/// Acceptance test after the p-th term of window h.
/// The program scans t = 0..floor(n/15) and k in [9t - r2, 9t + 8 - r1] for
/// n > 6k - t, h = k - 2, p = n - 6k + t. With k = h + 2 forced, at most one t
/// can satisfy p = n - 6k + t, so testing that single t is equivalent.
inline bool accepts(std::uint32_t n, std::int64_t h, std::int64_t p) {
  const std::int64_t k = h + 2;
  const std::int64_t t = p - std::int64_t(n) + 6 * k;
  if (t < 0 || t > std::int64_t(n) / 15) return false;
  auto [r1, r2] = block_shift(n, t);
  return k >= t * 9 - r2 && k <= t * 9 + 8 - r1 && std::int64_t(n) > k * 6 - t;
}

}  // namespace window_scheduler

/// Segmentation of i = 2..n-1 into constant-delta runs, as the scheduler realizes it.
inline DeltaSchedule delta_schedule(std::uint32_t n) {
  if (n < 13) throw InvalidArgument("delta_schedule: n must be >= 13");
  DeltaSchedule s;
  s.n = n;
  s.base = delta_base(n);
  s.segments.push_back({2, 6, s.base});
  s.segments.push_back({7, 11, s.base - 1});
  for (std::int64_t h = 0;; ++h) {
    auto win = window_scheduler::window(n, h);
    std::int64_t p = 0;
    for (std::int64_t i = win.first_i; i <= win.first_i + win.width_minus_one; ++i) {
      if (i >= std::int64_t(n))
        throw InternalError("window scheduler passed i = n - 1 without accepting for n=" +
                            std::to_string(n));
      ++p;
      if (window_scheduler::accepts(n, h, p)) {
        s.segments.push_back({win.first_i, i, s.base - 2 - h});
        s.accepting_window = static_cast<std::uint64_t>(h);
        return s;
      }
    }
    s.segments.push_back({win.first_i, win.first_i + win.width_minus_one, s.base - 2 - h});
  }
}

struct LedgerRow {
  std::int64_t i = 0;
  std::int64_t k = 0;  // n - i
  std::int64_t delta = 0;
  BigInt coefficient;
  BigInt z_i;
  BigInt product;
};

struct TermLedger {
  std::uint32_t n = 0;
  std::vector<LedgerRow> rows;  // ascending i = 2..n-1
  BigInt j_value;
  BigInt z_n;
};

inline TermLedger term_ledger(std::uint32_t n, const ZnSeries& history) {
  DeltaSchedule sched = delta_schedule(n);
  TermLedger ledger;
  ledger.n = n;
  ledger.j_value = j_of(n);
  BigInt sum = 0;
  for (const auto& seg : sched.segments)
    for (std::int64_t i = seg.i_lo; i <= seg.i_hi; ++i) {
      LedgerRow row;
      row.i = i;
      row.k = std::int64_t(n) - i;
      row.delta = seg.delta;
      row.coefficient = coefficient(row.k, seg.delta);
      row.z_i = history.at(static_cast<std::uint32_t>(i));
      row.product = row.coefficient * row.z_i;
      sum += row.product;
      ledger.rows.push_back(std::move(row));
    }
  ledger.z_n = ledger.j_value - sum;
  return ledger;
}

namespace detail {

/// binomial(top, k) carried along a path of nearby (top, k) pairs by exact
/// ratio updates; falls back to a direct evaluation when the path leaves the
/// region top >= k >= 0.
class BinomialWalker {
 public:
  const BigInt& move_to(std::int64_t top, std::int64_t k) {
    if (k < 0 || top < k) {
      valid_ = false;
      value_ = 0;
      return value_;
    }
    if (!valid_ || k > k_ || k_ - k > 4 || std::abs(top - top_) > 8) {
      value_ = binomial(top, k);
    } else {
      // Lower k first so every intermediate point keeps top >= k.
      for (; k_ > k; --k_) mul_div(k_, top_ - k_ + 1);               // C(a,k-1) = C(a,k) k/(a-k+1)
      for (; top_ > top; --top_) mul_div(top_ - k_, top_);          // C(a-1,k) = C(a,k)(a-k)/a
      for (; top_ < top; ++top_) mul_div(top_ + 1, top_ + 1 - k_);  // C(a+1,k) = C(a,k)(a+1)/(a+1-k)
    }
    top_ = top;
    k_ = k;
    valid_ = true;
    return value_;
  }

 private:
  void mul_div(std::int64_t num, std::int64_t den) {
    mpz_mul_ui(value_.get_mpz_t(), value_.get_mpz_t(), static_cast<unsigned long>(num));
    mpz_divexact_ui(value_.get_mpz_t(), value_.get_mpz_t(), static_cast<unsigned long>(den));
  }

  BigInt value_ = 0;
  std::int64_t top_ = 0, k_ = 0;
  bool valid_ = false;
};

}  // namespace detail

struct IterativeOptions {
  /// Called after each z_n is published.
  std::function<void(std::uint32_t, const BigInt&)> on_value;
};

/// z_1..z_limit: the twelve initial values, then the recurrence for n = 13..limit.
inline ZnSeries zn_iterative(std::uint32_t limit, const IterativeOptions& opts = {}) {
  if (limit < 12) throw InvalidArgument("zn_iterative: limit must be >= 12");
  ZnSeries series = seeded_series();
  const std::uint64_t program_bound = (limit - 12) / 6;
  std::vector<BigInt> z(limit + 1);
  for (std::uint32_t n = 1; n <= 12; ++n) z[n] = series.at(n);

  detail::BinomialWalker walker;
  for (std::uint32_t n = 13; n <= limit; ++n) {
    DeltaSchedule sched = delta_schedule(n);
    BigInt sum = 0;
    for (const auto& seg : sched.segments)
      for (std::int64_t i = seg.i_lo; i <= seg.i_hi; ++i) {
        const std::int64_t k = std::int64_t(n) - i;
        const BigInt& c = walker.move_to(detail::coefficient_top(k, seg.delta), k);
        if (sgn(c) != 0) mpz_addmul(sum.get_mpz_t(), c.get_mpz_t(), z[i].get_mpz_t());
      }
    z[n] = j_of(n) - sum;
    if (sgn(z[n]) <= 0)
      throw InternalError("recurrence produced non-positive z_" + std::to_string(n));
    series.set(n, z[n], Provenance::Iterative);
    series.diagnostics.push_back({n, sched.accepting_window, program_bound});
    if (opts.on_value) opts.on_value(n, z[n]);
  }
  return series;
}

/// Counts of solutions per stopping time implied by the recurrence:
/// sigma_i -> coefficient * z_i for i < n, sigma_n -> z_n.
inline DistributionRow predicted_distribution(std::uint32_t n, const ZnSeries& history) {
  TermLedger ledger = term_ledger(n, history);
  if (history.has(n) && history.at(n) != ledger.z_n)
    throw InternalError("history z_" + std::to_string(n) + " disagrees with its ledger");
  DistributionRow row = empty_distribution(n);
  for (const auto& r : ledger.rows) row.counts[sigma_n(static_cast<std::uint64_t>(r.i))] = r.product;
  row.counts[sigma_n(n)] = ledger.z_n;
  row.total = ledger.j_value;
  return row;
}

}  // namespace collatz_sigma
