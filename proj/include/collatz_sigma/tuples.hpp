#pragma once

// Binary A(n)/B(n) tuples: construction, lexicographic successor, unranking
// through the combinatorial number system, and range-partitioned streaming.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "bigint.hpp"
#include "core.hpp"
#include "errors.hpp"

namespace collatz_sigma {

/// m zeros and n-2 ones, m = floor(2(n-2)/3).
struct ATuple {
  std::uint32_t n = 0;
  ParityWord bits;
  friend bool operator==(const ATuple&, const ATuple&) = default;
};

/// (1, 1) followed by an ATuple: n ones and m zeros over m+n positions.
struct BTuple {
  std::uint32_t n = 0;
  ParityWord bits;
  friend bool operator==(const BTuple&, const BTuple&) = default;
};

/// Half-open index interval [lo, hi) into the lexicographic tuple order.
struct IndexRange {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::uint64_t size() const noexcept { return hi - lo; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

inline std::uint32_t m_of(std::uint32_t n) {
  if (n < 2) throw InvalidArgument("m_of: n must be >= 2");
  return 2 * (n - 2) / 3;
}

inline void require_tuple_n(std::uint32_t n, const char* who) {
  if (n < 4) throw InvalidArgument(std::string(who) + ": n must be >= 4");
}

/// Number of A(n) permutations: binomial(floor(5(n-2)/3), n-2).
inline BigInt j_of(std::uint32_t n) {
  require_tuple_n(n, "j_of");
  return binomial(5 * (std::int64_t(n) - 2) / 3, std::int64_t(n) - 2);
}

/// j_of(n) as a machine integer; throws BudgetExceeded when it does not fit.
inline std::uint64_t j_of_u64(std::uint32_t n) {
  BigInt j = j_of(n);
  if (!fits_u64(j)) throw BudgetExceeded("j_of(" + std::to_string(n) + ") exceeds 64 bits");
  return to_u64(j);
}

inline ATuple initial_a_tuple(std::uint32_t n) {
  require_tuple_n(n, "initial_a_tuple");
  const std::uint32_t m = m_of(n);
  ATuple a{n, {}};
  a.bits.bits().assign(m + n - 2, 1);
  std::fill_n(a.bits.bits().begin(), m, 0);
  return a;
}

inline bool is_valid_a_tuple(const ATuple& a) {
  if (a.n < 4) return false;
  const std::uint32_t m = m_of(a.n);
  return a.bits.size() == m + a.n - 2 && a.bits.count_ones() == a.n - 2;
}

/// Lexicographic successor among words with the same multiset of bits;
/// empty once the word is non-increasing (all ones before all zeros).
inline std::optional<ParityWord> next_permutation(ParityWord w) {
  auto& b = w.bits();
  if (!std::next_permutation(b.begin(), b.end())) return std::nullopt;
  return w;
}

inline std::optional<ATuple> next_permutation(const ATuple& a) {
  auto next = next_permutation(a.bits);
  if (!next) return std::nullopt;
  return ATuple{a.n, std::move(*next)};
}

inline BTuple b_from_a(const ATuple& a) {
  BTuple b{a.n, {1, 1}};
  auto& bits = b.bits.bits();
  bits.insert(bits.end(), a.bits.bits().begin(), a.bits.bits().end());
  return b;
}

inline AlphaVector alpha_vector(const BTuple& b) {
  AlphaVector alphas;
  alphas.entries.reserve(b.n);
  for (std::size_t k = 0; k < b.bits.size(); ++k)
    if (b.bits[k]) alphas.entries.push_back(static_cast<std::uint32_t>(k));
  if (alphas.size() != b.n)
    throw InvalidArgument("alpha_vector: tuple has " + std::to_string(alphas.size()) +
                          " ones, expected " + std::to_string(b.n));
  return alphas;
}

/// index-th A(n) tuple in lexicographic order (0 < 1), by the combinatorial
/// number system: at each position, words starting with 0 come first and
/// there are binomial(remaining - 1, ones) of them.
inline ATuple unrank_a_tuple(std::uint32_t n, const BigInt& index) {
  require_tuple_n(n, "unrank_a_tuple");
  const BigInt j = j_of(n);
  if (sgn(index) < 0 || index >= j)
    throw IndexOutOfRange("unrank_a_tuple: index " + to_string(index) + " outside [0, " +
                          to_string(j) + ")");
  std::int64_t zeros = m_of(n);
  std::int64_t ones = n - 2;
  ATuple a{n, {}};
  a.bits.bits().reserve(zeros + ones);
  BigInt rest = index;
  while (zeros + ones > 0) {
    if (zeros == 0) {
      a.bits.push_back(true);
      --ones;
      continue;
    }
    BigInt with_zero = binomial(zeros + ones - 1, ones);
    if (rest < with_zero) {
      a.bits.push_back(false);
      --zeros;
    } else {
      rest -= with_zero;
      a.bits.push_back(true);
      --ones;
    }
  }
  return a;
}

inline ATuple unrank_a_tuple(std::uint32_t n, std::uint64_t index) {
  return unrank_a_tuple(n, from_u64(index));
}

/// Streams B(n) tuples in lexicographic order of their A part, optionally
/// restricted to an index range. Not shareable across threads; independent
/// streams over disjoint ranges are.
class TupleStream {
 public:
  explicit TupleStream(std::uint32_t n, std::optional<IndexRange> range = std::nullopt)
      : n_(n) {
    require_tuple_n(n, "tuple_stream");
    const std::uint64_t j = j_of_u64(n);
    range_ = range.value_or(IndexRange{0, j});
    if (range_.lo > range_.hi || range_.hi > j)
      throw IndexOutOfRange("tuple_stream: range [" + std::to_string(range_.lo) + ", " +
                            std::to_string(range_.hi) + ") outside [0, " + std::to_string(j) +
                            ")");
    position_ = range_.lo;
    if (range_.lo < range_.hi) current_ = unrank_a_tuple(n, range_.lo);
  }

  std::uint32_t n() const noexcept { return n_; }
  IndexRange range() const noexcept { return range_; }
  /// Index of the tuple the next call to next() will return.
  std::uint64_t position() const noexcept { return position_; }

  std::optional<BTuple> next() {
    if (position_ >= range_.hi) return std::nullopt;
    BTuple b = b_from_a(current_);
    if (++position_ < range_.hi) {
      auto nxt = next_permutation(current_);
      if (!nxt) throw InternalError("tuple_stream: permutation sequence ended early");
      current_ = std::move(*nxt);
    }
    return b;
  }

  template <class F>
  void for_each(F&& f) {
    while (auto b = next()) f(*b);
  }

 private:
  std::uint32_t n_;
  IndexRange range_;
  std::uint64_t position_ = 0;
  ATuple current_;
};

inline TupleStream tuple_stream(std::uint32_t n, std::optional<IndexRange> range = std::nullopt) {
  return TupleStream(n, range);
}

/// Splits [0, total) into at most `parts` contiguous, nearly equal ranges.
inline std::vector<IndexRange> partition_range(IndexRange whole, std::size_t parts) {
  std::vector<IndexRange> out;
  const std::uint64_t total = whole.size();
  if (parts == 0) parts = 1;
  if (total == 0) return out;
  if (parts > total) parts = static_cast<std::size_t>(total);
  const std::uint64_t base = total / parts, extra = total % parts;
  std::uint64_t lo = whole.lo;
  for (std::size_t p = 0; p < parts; ++p) {
    std::uint64_t len = base + (p < extra ? 1 : 0);
    out.push_back({lo, lo + len});
    lo += len;
  }
  return out;
}

}  // namespace collatz_sigma
