#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace collatz_sigma {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt pow2(std::uint64_t e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

inline BigInt pow3(std::uint64_t e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, e);
  return r;
}

/// Exact binomial coefficient; zero when top < k or either argument is negative.
inline BigInt binomial(std::int64_t top, std::int64_t k) {
  BigInt r = 0;
  if (k < 0 || top < 0 || top < k) return r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top),
               static_cast<unsigned long>(k));
  return r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(10); }

inline std::size_t decimal_digits(const BigInt& v) {
  std::string s = v.get_str(10);
  return s.size() - (s.front() == '-' ? 1 : 0);
}

/// Parses an optionally signed decimal integer. Returns false on any stray character.
inline bool parse_bigint(std::string_view text, BigInt& out) {
  if (text.empty()) return false;
  std::size_t i = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (i == text.size()) return false;
  for (std::size_t k = i; k < text.size(); ++k)
    if (text[k] < '0' || text[k] > '9') return false;
  std::string digits(text.substr(text.front() == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

inline bool fits_u64(const BigInt& v) {
  return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const BigInt& v) {
  std::uint64_t r = 0;
  mpz_export(&r, nullptr, -1, sizeof(r), 0, 0, v.get_mpz_t());
  return r;
}

inline BigInt from_u64(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return r;
}

}  // namespace collatz_sigma
