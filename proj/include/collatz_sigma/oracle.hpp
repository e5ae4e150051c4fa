#pragma once

// Independent ground truth: direct scans of all residues below 2^sigma, OEIS
// b-file ingestion, and the cross-check that lines every method up per n.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bigint.hpp"
#include "core.hpp"
#include "diophantine.hpp"
#include "errors.hpp"
#include "parallel.hpp"
#include "recurrence.hpp"
#include "tuples.hpp"

namespace collatz_sigma {

struct ScanOptions {
  std::size_t threads = 0;
  std::uint64_t budget_bits = 26;  // largest sigma whose 2^sigma residues may be scanned
};

namespace detail {

/// Residue r mod 2^sigma is tested through its smallest member >= 2, so the
/// classes of 0 and 1 are represented by 2^sigma and 1 + 2^sigma.
template <class Visit>
void scan_residues(std::uint64_t sigma, const ScanOptions& opts, Visit&& visit) {
  if (sigma > opts.budget_bits)
    throw BudgetExceeded("residue scan of 2^" + std::to_string(sigma) +
                         " exceeds the budget of 2^" + std::to_string(opts.budget_bits));
  if (sigma > 62) throw BudgetExceeded("residue scan beyond 2^62 is not supported");
  const std::uint64_t modulus = std::uint64_t{1} << sigma;
  auto parts = partition_range({0, modulus}, resolve_threads(opts.threads));
  run_parts(parts.size(), [&](std::size_t p) {
    for (std::uint64_t r = parts[p].lo; r < parts[p].hi; ++r) {
      std::optional<std::uint64_t> st;
      if (sigma <= 37) {
        st = stopping_steps<std::uint64_t>(r < 2 ? r + modulus : r, sigma);
      } else {
        BigInt rep = from_u64(r < 2 ? r + modulus : r);
        st = stopping_steps<BigInt>(rep, sigma);
      }
      if (st && *st == sigma) visit(p, r);
    }
  });
}

}  // namespace detail

/// All residues x < 2^sigma whose class has stopping time exactly sigma, ascending.
inline std::vector<BigInt> brute_force_residues(std::uint64_t sigma, const ScanOptions& opts = {}) {
  std::vector<std::vector<std::uint64_t>> partial(resolve_threads(opts.threads));
  detail::scan_residues(sigma, opts, [&](std::size_t p, std::uint64_t r) { partial[p].push_back(r); });
  std::vector<BigInt> out;
  for (const auto& part : partial)
    for (auto r : part) out.push_back(from_u64(r));
  return out;  // parts are contiguous and visited in order
}

/// Number of residue classes mod 2^sigma_n with stopping time sigma_n.
inline BigInt brute_force_zn(std::uint32_t n, const ScanOptions& opts = {}) {
  std::vector<std::uint64_t> partial(resolve_threads(opts.threads), 0);
  detail::scan_residues(sigma_n(n), opts, [&](std::size_t p, std::uint64_t) { ++partial[p]; });
  std::uint64_t total = 0;
  for (auto c : partial) total += c;
  return from_u64(total);
}

struct BFileEntry {
  std::int64_t index = 0;
  BigInt value;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

}  // namespace detail

/// OEIS b-file: "index value" per line, '#' comments and blank lines ignored.
inline std::vector<BFileEntry> parse_bfile(std::string_view text) {
  std::vector<BFileEntry> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;
    std::string_view line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;

    std::istringstream fields{std::string(line)};
    std::string idx_tok, val_tok, extra;
    fields >> idx_tok >> val_tok;
    if (val_tok.empty() || (fields >> extra)) throw MalformedLine(line_no, std::string(raw));
    BigInt idx;
    BFileEntry e;
    if (!parse_bigint(idx_tok, idx) || !mpz_fits_slong_p(idx.get_mpz_t()) ||
        !parse_bigint(val_tok, e.value))
      throw MalformedLine(line_no, std::string(raw));
    e.index = idx.get_si();
    if (!out.empty() && e.index <= out.back().index)
      throw NonMonotonicIndex(line_no, std::string(raw));
    out.push_back(std::move(e));
  }
  return out;
}

struct CrossCheckOptions {
  std::size_t threads = 0;
  std::uint64_t scan_budget_bits = 26;
  std::uint64_t tuple_budget = 100'000'000;
};

struct Verdict {
  std::uint32_t n = 0;
  std::optional<BigInt> brute_force;
  std::optional<BigInt> enumerated;
  std::optional<BigInt> iterative;
  std::optional<BigInt> bfile;
  std::vector<std::string> excluded;  // methods skipped and why
  bool agree = true;
};

struct CrossCheckReport {
  std::uint32_t n_lo = 0;
  std::uint32_t n_hi = 0;
  std::vector<Verdict> verdicts;

  bool all_agree() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.agree; });
  }
};

inline bool values_agree(const Verdict& v) {
  const BigInt* first = nullptr;
  for (const auto* opt : {&v.brute_force, &v.enumerated, &v.iterative, &v.bfile}) {
    if (!opt->has_value()) continue;
    if (!first)
      first = &**opt;
    else if (**opt != *first)
      return false;
  }
  return true;
}

/// Runs every method that fits its budget for each n in [n_lo, n_hi].
/// Budget exclusions are recorded; disagreements are never dropped.
inline CrossCheckReport cross_check(std::uint32_t n_lo, std::uint32_t n_hi,
                                    const std::optional<std::vector<BFileEntry>>& bfile = std::nullopt,
                                    const CrossCheckOptions& opts = {}) {
  if (n_lo < 1) throw InvalidArgument("cross_check: n_lo must be >= 1");
  if (n_hi < n_lo) throw InvalidArgument("cross_check: empty range");
  CrossCheckReport report{n_lo, n_hi, {}};
  const ZnSeries series = zn_iterative(std::max<std::uint32_t>(12, n_hi));
  const ScanOptions scan{opts.threads, opts.scan_budget_bits};
  const EnumerationOptions enumeration{opts.threads, opts.tuple_budget};

  for (std::uint32_t n = n_lo; n <= n_hi; ++n) {
    Verdict v;
    v.n = n;
    if (sigma_n(n) <= opts.scan_budget_bits)
      v.brute_force = brute_force_zn(n, scan);
    else
      v.excluded.push_back("brute-force: 2^" + std::to_string(sigma_n(n)) + " over scan budget");

    if (n < 4)
      v.excluded.push_back("enumerated: no tuples for n < 4");
    else if (j_of(n) > from_u64(opts.tuple_budget))
      v.excluded.push_back("enumerated: j=" + to_string(j_of(n)) + " over tuple budget");
    else
      v.enumerated = zn_by_enumeration(n, enumeration);

    v.iterative = series.at(n);

    if (bfile) {
      auto it = std::find_if(bfile->begin(), bfile->end(),
                             [n](const BFileEntry& e) { return e.index == std::int64_t(n); });
      if (it != bfile->end()) v.bfile = it->value;
    }
    v.agree = values_agree(v);
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

}  // namespace collatz_sigma
