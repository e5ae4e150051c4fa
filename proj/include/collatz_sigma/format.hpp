#pragma once

// Text renderings used by the command-line tool. Plain output follows the
// listing shapes of the published tables, e.g. "(1, 1, 0, 1, 1)   (59, 38)";
// tsv and json-lines are for machines. Big integers are JSON strings.

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "diophantine.hpp"
#include "oracle.hpp"
#include "recurrence.hpp"

namespace collatz_sigma {

enum class OutputFormat { Plain, Tsv, JsonLines };

inline std::optional<OutputFormat> parse_output_format(std::string_view s) {
  if (s == "plain") return OutputFormat::Plain;
  if (s == "tsv") return OutputFormat::Tsv;
  if (s == "json-lines" || s == "jsonl") return OutputFormat::JsonLines;
  return std::nullopt;
}

namespace format {

using nlohmann::json;

inline json bits_json(const ParityWord& w) {
  json a = json::array();
  for (auto b : w.bits()) a.push_back(int(b));
  return a;
}

inline void solution_header(std::ostream& os, OutputFormat f) {
  if (f == OutputFormat::Tsv) os << "tuple\tx\ty\tsigma_x\n";
}

inline void solution(std::ostream& os, const SolutionRecord& r, OutputFormat f) {
  switch (f) {
    case OutputFormat::Plain:
      os << r.tuple.bits.to_string() << "   (" << r.x << ", " << r.y << ")\n";
      break;
    case OutputFormat::Tsv:
      os << r.tuple.bits.compact() << '\t' << r.x << '\t' << r.y << '\t' << r.sigma_x << '\n';
      break;
    case OutputFormat::JsonLines:
      os << json{{"tuple", bits_json(r.tuple.bits)},
                 {"x", to_string(r.x)},
                 {"y", to_string(r.y)},
                 {"sigma_x", r.sigma_x}}
                .dump()
         << '\n';
      break;
  }
}

inline void distribution(std::ostream& os, const DistributionRow& row, OutputFormat f) {
  switch (f) {
    case OutputFormat::Plain: {
      std::size_t width = std::max<std::size_t>(5, to_string(row.total).size());
      auto pad = [](std::string s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };
      os << pad("sigma", 5) << "  " << pad("count", width) << '\n';
      for (const auto& [sigma, count] : row.counts)
        os << pad(std::to_string(sigma), 5) << "  " << pad(to_string(count), width) << '\n';
      os << pad("Sum", 5) << "  " << pad(to_string(row.total), width) << '\n';
      break;
    }
    case OutputFormat::Tsv:
      os << "sigma\tcount\n";
      for (const auto& [sigma, count] : row.counts) os << sigma << '\t' << count << '\n';
      os << "sum\t" << row.total << '\n';
      break;
    case OutputFormat::JsonLines: {
      json counts = json::object();
      for (const auto& [sigma, count] : row.counts) counts[std::to_string(sigma)] = to_string(count);
      os << json{{"n", row.n}, {"counts", counts}, {"total", to_string(row.total)}}.dump() << '\n';
      break;
    }
  }
}

inline void residues(std::ostream& os, const ResidueClassSet& set, OutputFormat f) {
  if (f == OutputFormat::Tsv) os << "residue\tmodulus\n";
  for (const auto& x : set.members) {
    switch (f) {
      case OutputFormat::Plain: os << x << '\n'; break;
      case OutputFormat::Tsv: os << x << '\t' << set.modulus << '\n'; break;
      case OutputFormat::JsonLines:
        os << json{{"residue", to_string(x)}, {"modulus", to_string(set.modulus)}}.dump() << '\n';
        break;
    }
  }
}

inline void series_header(std::ostream& os, OutputFormat f) {
  if (f == OutputFormat::Tsv) os << "n\tz\n";
}

inline void series_value(std::ostream& os, std::uint32_t n, const BigInt& z, OutputFormat f) {
  switch (f) {
    case OutputFormat::Plain: os << n << ' ' << z << '\n'; break;
    case OutputFormat::Tsv: os << n << '\t' << z << '\n'; break;
    case OutputFormat::JsonLines: os << json{{"n", n}, {"z", to_string(z)}}.dump() << '\n'; break;
  }
}

inline void ledger_header(std::ostream& os, OutputFormat f) {
  if (f == OutputFormat::Tsv) os << "n\ti\tk\tdelta\tcoefficient\tz_i\tproduct\n";
}

/// Plain form prints "coefficient * z_i" per term and closes with "1 * z_n".
inline void ledger(std::ostream& os, const TermLedger& l, OutputFormat f) {
  switch (f) {
    case OutputFormat::Plain:
      os << "# n=" << l.n << " j=" << l.j_value << '\n';
      for (const auto& r : l.rows) os << r.coefficient << " * " << r.z_i << '\n';
      os << "1 * " << l.z_n << "\n\n";
      break;
    case OutputFormat::Tsv:
      for (const auto& r : l.rows)
        os << l.n << '\t' << r.i << '\t' << r.k << '\t' << r.delta << '\t' << r.coefficient << '\t'
           << r.z_i << '\t' << r.product << '\n';
      break;
    case OutputFormat::JsonLines: {
      json rows = json::array();
      for (const auto& r : l.rows)
        rows.push_back({{"i", r.i},
                        {"k", r.k},
                        {"delta", r.delta},
                        {"coefficient", to_string(r.coefficient)},
                        {"z_i", to_string(r.z_i)},
                        {"product", to_string(r.product)}});
      os << json{{"n", l.n}, {"j", to_string(l.j_value)}, {"z", to_string(l.z_n)}, {"rows", rows}}.dump()
         << '\n';
      break;
    }
  }
}

inline std::string opt_str(const std::optional<BigInt>& v) { return v ? to_string(*v) : "-"; }

inline void verdict(std::ostream& os, const Verdict& v, OutputFormat f) {
  switch (f) {
    case OutputFormat::Plain:
      os << "n=" << v.n << " brute-force=" << opt_str(v.brute_force)
         << " enumerated=" << opt_str(v.enumerated) << " iterative=" << opt_str(v.iterative)
         << " bfile=" << opt_str(v.bfile) << ' ' << (v.agree ? "OK" : "MISMATCH") << '\n';
      break;
    case OutputFormat::Tsv:
      os << v.n << '\t' << opt_str(v.brute_force) << '\t' << opt_str(v.enumerated) << '\t'
         << opt_str(v.iterative) << '\t' << opt_str(v.bfile) << '\t' << (v.agree ? "agree" : "disagree")
         << '\n';
      break;
    case OutputFormat::JsonLines: {
      json j{{"n", v.n}, {"agree", v.agree}, {"excluded", v.excluded}};
      auto put = [&](const char* key, const std::optional<BigInt>& x) {
        j[key] = x ? json(to_string(*x)) : json(nullptr);
      };
      put("brute_force", v.brute_force);
      put("enumerated", v.enumerated);
      put("iterative", v.iterative);
      put("bfile", v.bfile);
      os << j.dump() << '\n';
      break;
    }
  }
}

inline void verdict_header(std::ostream& os, OutputFormat f) {
  if (f == OutputFormat::Tsv) os << "n\tbrute_force\tenumerated\titerative\tbfile\tverdict\n";
}

}  // namespace format
}  // namespace collatz_sigma
