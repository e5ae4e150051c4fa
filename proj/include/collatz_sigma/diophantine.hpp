#pragma once

// Unique solutions of y = (3^n x + S) / 2^sigma_n, S = sum 3^(n-i) 2^alpha_i,
// one per B(n) tuple, and everything derived from them: stopping-time
// distribution, residue classes, z_n.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "core.hpp"
#include "errors.hpp"
#include "parallel.hpp"
#include "tuples.hpp"

namespace collatz_sigma {

struct SolutionRecord {
  std::uint32_t n = 0;
  BTuple tuple;
  AlphaVector alphas;
  BigInt x;
  BigInt y;
  std::uint64_t sigma_x = 0;
};

/// Solution counts keyed by stopping time. Every sigma_k for k = 2..n is
/// present, zero counts included.
struct DistributionRow {
  std::uint32_t n = 0;
  std::map<std::uint64_t, BigInt> counts;
  BigInt total = 0;

  /// Count for a stopping time, zero when absent.
  BigInt at(std::uint64_t sigma) const {
    auto it = counts.find(sigma);
    return it == counts.end() ? BigInt(0) : it->second;
  }
};

struct ResidueClassSet {
  std::uint32_t n = 0;
  BigInt modulus;
  std::vector<BigInt> members;  // ascending smallest representatives
};

struct EnumerationOptions {
  std::size_t threads = 0;  // 0: resolve_threads()
  std::uint64_t tuple_budget = 100'000'000;
};

inline DistributionRow empty_distribution(std::uint32_t n) {
  DistributionRow row;
  row.n = n;
  for (std::uint32_t k = 2; k <= n; ++k) row.counts[sigma_n(k)] = 0;
  return row;
}

namespace detail {

/// Per-n constants of the congruence 3^n x + S = 0 (mod 2^sigma_n).
class DiophantineSystem {
 public:
  explicit DiophantineSystem(std::uint32_t n) : n_(n), sigma_(sigma_n(n)) {
    pow3_.reserve(n + 1);
    for (std::uint32_t e = 0; e <= n; ++e) pow3_.push_back(pow3(e));
    const BigInt modulus = pow2(sigma_);
    if (mpz_invert(inverse_.get_mpz_t(), pow3_[n].get_mpz_t(), modulus.get_mpz_t()) == 0)
      throw InternalError("3^n is not invertible modulo 2^sigma_n");
  }

  std::uint32_t n() const noexcept { return n_; }
  std::uint64_t sigma() const noexcept { return sigma_; }

  std::pair<BigInt, BigInt> solve(const AlphaVector& alphas) const {
    if (alphas.size() != n_)
      throw InvalidArgument("solve_unique: expected " + std::to_string(n_) + " exponents");
    BigInt sum = 0, term;
    for (std::uint32_t i = 0; i < n_; ++i) {
      if (i && alphas[i] <= alphas[i - 1])
        throw InvalidArgument("solve_unique: exponents must be strictly increasing");
      mpz_mul_2exp(term.get_mpz_t(), pow3_[n_ - 1 - i].get_mpz_t(), alphas[i]);
      sum += term;
    }
    // x = -S * 3^-n mod 2^sigma
    BigInt x = -sum * inverse_;
    mpz_fdiv_r_2exp(x.get_mpz_t(), x.get_mpz_t(), sigma_);
    BigInt num = pow3_[n_] * x + sum;
    if (!detail::is_odd(x) || mpz_scan1(num.get_mpz_t(), 0) < sigma_)
      throw InternalError("solve_unique: no odd integral solution for n=" + std::to_string(n_));
    BigInt y;
    mpz_tdiv_q_2exp(y.get_mpz_t(), num.get_mpz_t(), sigma_);
    return {std::move(x), std::move(y)};
  }

  /// sigma(x), which must lie in [4, sigma_n].
  std::uint64_t measured_stopping_time(const BigInt& x) const {
    std::optional<std::uint64_t> st;
    // Terms stay below x * (3/2)^sigma < 2^(1.6 sigma), which fits 64 bits up to sigma = 38.
    if (sigma_ <= 38)
      st = stopping_steps<std::uint64_t>(to_u64(x), sigma_);
    else
      st = stopping_steps<BigInt>(x, sigma_);
    if (!st || *st < 4)
      throw InternalError("stopping time of " + to_string(x) + " outside [4, " +
                          std::to_string(sigma_) + "]");
    return *st;
  }

  SolutionRecord record(BTuple tuple) const {
    SolutionRecord r;
    r.n = n_;
    r.alphas = alpha_vector(tuple);
    r.tuple = std::move(tuple);
    auto [x, y] = solve(r.alphas);
    r.sigma_x = measured_stopping_time(x);
    r.x = std::move(x);
    r.y = std::move(y);
    return r;
  }

 private:
  std::uint32_t n_;
  std::uint64_t sigma_;
  std::vector<BigInt> pow3_;
  BigInt inverse_;
};

inline void check_budget(std::uint32_t n, std::uint64_t count, const EnumerationOptions& opts) {
  if (count > opts.tuple_budget)
    throw BudgetExceeded("enumeration of " + std::to_string(count) + " tuples for n=" +
                         std::to_string(n) + " exceeds the budget of " +
                         std::to_string(opts.tuple_budget));
}

}  // namespace detail

/// The unique (x, y) with 0 < x < 2^sigma_n for the given exponents.
inline std::pair<BigInt, BigInt> solve_unique(std::uint32_t n, const AlphaVector& alphas) {
  require_tuple_n(n, "solve_unique");
  return detail::DiophantineSystem(n).solve(alphas);
}

/// Solution records in tuple order, one per B(n) tuple in the range.
class SolutionStream {
 public:
  explicit SolutionStream(std::uint32_t n, std::optional<IndexRange> range = std::nullopt)
      : tuples_(n, range), system_(n) {}

  std::optional<SolutionRecord> next() {
    auto b = tuples_.next();
    if (!b) return std::nullopt;
    return system_.record(std::move(*b));
  }

  template <class F>
  void for_each(F&& f) {
    while (auto r = next()) f(*r);
  }

  IndexRange range() const noexcept { return tuples_.range(); }

 private:
  TupleStream tuples_;
  detail::DiophantineSystem system_;
};

inline SolutionStream solution_stream(std::uint32_t n,
                                      std::optional<IndexRange> range = std::nullopt) {
  return SolutionStream(n, range);
}

/// Visits every solution of every part of the range; visit(part, record).
/// Parts are contiguous sub-ranges in tuple order and run concurrently.
template <class Visit>
std::size_t visit_solutions_parallel(std::uint32_t n, std::optional<IndexRange> range,
                                     const EnumerationOptions& opts, Visit&& visit) {
  require_tuple_n(n, "enumeration");
  IndexRange whole = range.value_or(IndexRange{0, j_of_u64(n)});
  detail::check_budget(n, whole.size(), opts);
  auto parts = partition_range(whole, resolve_threads(opts.threads));
  run_parts(parts.size(), [&](std::size_t p) {
    SolutionStream stream(n, parts[p]);
    while (auto r = stream.next()) visit(p, *r);
  });
  return parts.size();
}

/// All solutions in the range, in tuple order.
inline std::vector<SolutionRecord> solutions(std::uint32_t n,
                                             std::optional<IndexRange> range = std::nullopt,
                                             const EnumerationOptions& opts = {}) {
  std::vector<std::vector<SolutionRecord>> chunks(resolve_threads(opts.threads));
  std::size_t used = visit_solutions_parallel(
      n, range, opts, [&](std::size_t p, SolutionRecord& r) { chunks[p].push_back(std::move(r)); });
  std::vector<SolutionRecord> out;
  for (std::size_t p = 0; p < used; ++p)
    std::move(chunks[p].begin(), chunks[p].end(), std::back_inserter(out));
  return out;
}

inline DistributionRow classify(std::uint32_t n, const EnumerationOptions& opts = {}) {
  std::vector<std::map<std::uint64_t, std::uint64_t>> partial(resolve_threads(opts.threads));
  visit_solutions_parallel(n, std::nullopt, opts, [&](std::size_t p, const SolutionRecord& r) {
    ++partial[p][r.sigma_x];
  });
  DistributionRow row = empty_distribution(n);
  for (const auto& counts : partial)
    for (auto [sigma, c] : counts) {
      row.counts[sigma] += from_u64(c);
      row.total += from_u64(c);
    }
  return row;
}

inline ResidueClassSet residue_classes(std::uint32_t n, const EnumerationOptions& opts = {}) {
  const std::uint64_t target = sigma_n(n);
  std::vector<std::vector<BigInt>> partial(resolve_threads(opts.threads));
  visit_solutions_parallel(n, std::nullopt, opts, [&](std::size_t p, const SolutionRecord& r) {
    if (r.sigma_x == target) partial[p].push_back(r.x);
  });
  ResidueClassSet set;
  set.n = n;
  set.modulus = pow2(target);
  for (auto& part : partial) std::move(part.begin(), part.end(), std::back_inserter(set.members));
  std::sort(set.members.begin(), set.members.end());
  return set;
}

inline BigInt zn_by_enumeration(std::uint32_t n, const EnumerationOptions& opts = {}) {
  return from_u64(residue_classes(n, opts).members.size());
}

}  // namespace collatz_sigma
