#pragma once

// Exact Collatz dynamics for the shortcut map T(x) = x/2 (even), (3x+1)/2 (odd).

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace collatz_sigma {

/// Even (0) / odd (1) pattern of a trajectory prefix.
class ParityWord {
 public:
  ParityWord() = default;
  ParityWord(std::initializer_list<int> bits) {
    bits_.reserve(bits.size());
    for (int b : bits) push_back(b != 0);
  }
  explicit ParityWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto& b : bits_) b = b ? 1 : 0;
  }

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  std::uint8_t operator[](std::size_t k) const { return bits_[k]; }
  std::uint8_t& operator[](std::size_t k) { return bits_[k]; }
  void push_back(bool bit) { bits_.push_back(bit ? 1 : 0); }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
  std::vector<std::uint8_t>& bits() noexcept { return bits_; }

  std::size_t count_ones() const noexcept {
    std::size_t c = 0;
    for (auto b : bits_) c += b;
    return c;
  }

  /// "(1, 1, 0, 1, 1)"
  std::string to_string() const {
    std::string out = "(";
    for (std::size_t k = 0; k < bits_.size(); ++k) {
      if (k) out += ", ";
      out += bits_[k] ? '1' : '0';
    }
    return out + ")";
  }

  /// "11011"
  std::string compact() const {
    std::string out;
    out.reserve(bits_.size());
    for (auto b : bits_) out += b ? '1' : '0';
    return out;
  }

  // Lexicographic with 0 < 1.
  friend auto operator<=>(const ParityWord&, const ParityWord&) = default;
  friend bool operator==(const ParityWord&, const ParityWord&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Exponents of 2 in the closed-form term formula: zero-based positions of the
/// odd terms in a trajectory prefix, strictly increasing.
struct AlphaVector {
  std::vector<std::uint32_t> entries;

  std::size_t size() const noexcept { return entries.size(); }
  std::uint32_t operator[](std::size_t i) const { return entries[i]; }
  friend bool operator==(const AlphaVector&, const AlphaVector&) = default;
};

struct Trajectory {
  BigInt start;
  std::vector<BigInt> terms;  // T^0(start) .. T^count(start)
};

struct StoppingTimeResult {
  BigInt s;
  std::uint64_t cap = 0;
  std::optional<std::uint64_t> sigma;  // empty: not found within cap
  ParityWord parity_prefix;            // parities of T^0..T^{sigma-1} (or the capped prefix)

  bool found() const noexcept { return sigma.has_value(); }
};

struct SigmaExponent {
  std::uint64_t n = 0;
  std::uint64_t sigma_n = 0;
};

namespace detail {

inline bool is_odd(std::uint64_t x) noexcept { return x & 1u; }
inline bool is_odd(const BigInt& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

inline void apply_step(std::uint64_t& x) noexcept { x = (x & 1u) ? x + (x >> 1) + 1 : x >> 1; }
inline void apply_step(BigInt& x) {
  if (is_odd(x)) {
    mpz_mul_ui(x.get_mpz_t(), x.get_mpz_t(), 3);
    mpz_add_ui(x.get_mpz_t(), x.get_mpz_t(), 1);
  }
  mpz_tdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), 1);
}

/// Least k <= cap with T^k(s) < s. Callers guarantee s >= 2 and, for the
/// fixed-width instantiation, that no term overflows within cap steps.
template <class Int>
std::optional<std::uint64_t> stopping_steps(const Int& s, std::uint64_t cap,
                                            ParityWord* prefix = nullptr) {
  Int x = s;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (prefix) prefix->push_back(is_odd(x));
    apply_step(x);
    if (x < s) return k;
  }
  return std::nullopt;
}

}  // namespace detail

inline BigInt step(const BigInt& x) {
  if (x < 1) throw InvalidArgument("step: x must be positive");
  BigInt r = x;
  detail::apply_step(r);
  return r;
}

inline Trajectory trajectory(const BigInt& s, std::uint64_t count) {
  if (s < 1) throw InvalidArgument("trajectory: start must be positive");
  Trajectory t{s, {}};
  t.terms.reserve(count + 1);
  BigInt x = s;
  t.terms.push_back(x);
  for (std::uint64_t k = 0; k < count; ++k) {
    detail::apply_step(x);
    t.terms.push_back(x);
  }
  return t;
}

inline StoppingTimeResult stopping_time(const BigInt& s, std::uint64_t cap) {
  if (s < 2) throw InvalidStart("stopping time is undefined for s < 2 (got " + to_string(s) + ")");
  StoppingTimeResult r;
  r.s = s;
  r.cap = cap;
  r.sigma = detail::stopping_steps(s, cap, &r.parity_prefix);
  return r;
}

/// Smallest k with 2^k > 3^n, i.e. floor(1 + n log2 3), computed exactly.
inline SigmaExponent sigma_exponent(std::uint64_t n) {
  const BigInt p = pow3(n);
  // 3^n is never a power of two for n >= 1, so its bit length is the answer;
  // for n = 0 the bit length of 1 is 1 and 2^1 > 1.
  return {n, static_cast<std::uint64_t>(mpz_sizeinbase(p.get_mpz_t(), 2))};
}

inline std::uint64_t sigma_n(std::uint64_t n) { return sigma_exponent(n).sigma_n; }

inline ParityWord parity_word(const BigInt& s, std::size_t length) {
  if (s < 1) throw InvalidArgument("parity_word: start must be positive");
  ParityWord w;
  BigInt x = s;
  for (std::size_t k = 0; k < length; ++k) {
    w.push_back(detail::is_odd(x));
    detail::apply_step(x);
  }
  return w;
}

/// (3^n s + sum_i 3^(n-i) 2^alpha_i) / 2^sigma_n as an exact rational.
/// The result is an integer exactly when s realizes the parity pattern.
inline Rational term_formula_value(const BigInt& s, std::uint64_t n, const AlphaVector& alphas) {
  if (alphas.size() != n)
    throw InvalidArgument("term_formula_value: expected " + std::to_string(n) + " exponents");
  for (std::size_t i = 1; i < alphas.size(); ++i)
    if (alphas[i] <= alphas[i - 1])
      throw InvalidArgument("term_formula_value: exponents must be strictly increasing");

  BigInt num = pow3(n) * s;
  for (std::uint64_t i = 0; i < n; ++i) num += pow3(n - 1 - i) * pow2(alphas[i]);
  Rational r(num, pow2(sigma_n(n)));
  r.canonicalize();
  return r;
}

}  // namespace collatz_sigma
