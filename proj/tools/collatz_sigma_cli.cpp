// collatz-sigma: command-line front end for the stopping-time library.
//
// Exit status: 0 success, 1 a verification disagreement or internal failure,
// 2 a usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <collatz_sigma/collatz_sigma.hpp>
#include <collatz_sigma/format.hpp>

namespace cs = collatz_sigma;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

cs::OutputFormat to_format(const std::string& name) {
  auto f = cs::parse_output_format(name);
  if (!f) throw UsageError("unknown format '" + name + "' (plain, tsv, json-lines)");
  return *f;
}

/// "LO..HI", half-open.
cs::IndexRange parse_range(const std::string& text) {
  auto sep = text.find("..");
  if (sep == std::string::npos) throw UsageError("range must look like LO..HI");
  try {
    std::size_t used_lo = 0, used_hi = 0;
    std::string lo = text.substr(0, sep), hi = text.substr(sep + 2);
    cs::IndexRange r{std::stoull(lo, &used_lo), std::stoull(hi, &used_hi)};
    if (used_lo != lo.size() || used_hi != hi.size()) throw UsageError("bad range");
    return r;
  } catch (const std::logic_error&) {
    throw UsageError("range must look like LO..HI with non-negative integers");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Collatz 3x+1 stopping times, residue classes and the z_n recurrence"};
  app.require_subcommand(1);

  std::size_t threads = 0;
  app.add_option("--threads", threads,
                 "Worker threads (default: $COLLATZ_SIGMA_THREADS, else all cores)");

  auto* sigma_cmd = app.add_subcommand("sigma", "Print sigma_n = floor(1 + n log2 3)");
  std::uint64_t sigma_arg = 0;
  sigma_cmd->add_option("n", sigma_arg)->required();

  auto* stop_cmd = app.add_subcommand("stoptime", "Stopping time of s, or NOT-FOUND within the cap");
  std::string stop_s;
  std::uint64_t stop_cap = 100000;
  stop_cmd->add_option("s", stop_s)->required();
  stop_cmd->add_option("--cap", stop_cap, "Maximum number of steps")->capture_default_str();

  std::string format_name = "plain";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "plain | tsv | json-lines")->capture_default_str();
  };

  auto* enum_cmd = app.add_subcommand("enumerate", "List B(n) tuples with their solutions (x, y)");
  std::uint32_t enum_n = 0;
  std::string enum_range;
  enum_cmd->add_option("n", enum_n)->required();
  enum_cmd->add_option("--range", enum_range, "Tuple index range LO..HI (half-open)");
  add_format(enum_cmd);

  auto* class_cmd = app.add_subcommand("classify", "Distribution of solutions by stopping time");
  std::uint32_t class_n = 0;
  class_cmd->add_option("n", class_n)->required();
  add_format(class_cmd);

  auto* res_cmd = app.add_subcommand("residues", "Residue classes mod 2^sigma_n with stopping time sigma_n");
  std::uint32_t res_n = 0;
  res_cmd->add_option("n", res_n)->required();
  add_format(res_cmd);

  auto* zn_cmd = app.add_subcommand("zn", "z_1..z_L from the iterative recurrence");
  std::uint32_t zn_limit = 0;
  bool zn_ledger = false, zn_diag = false;
  zn_cmd->add_option("--limit", zn_limit)->required();
  zn_cmd->add_flag("--ledger", zn_ledger, "Print each n's term ledger instead of the values");
  zn_cmd->add_flag("--diagnostics", zn_diag, "Report window-scheduler positions on stderr");
  add_format(zn_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check brute force, enumeration, recurrence and a b-file");
  std::uint32_t v_from = 0, v_to = 0;
  std::string v_bfile;
  std::uint64_t v_budget = 26, v_tuple_budget = 100'000'000;
  verify_cmd->add_option("--from", v_from)->required();
  verify_cmd->add_option("--to", v_to)->required();
  verify_cmd->add_option("--bfile", v_bfile, "OEIS b-file to compare against");
  verify_cmd->add_option("--budget", v_budget, "Largest sigma for the residue scan")->capture_default_str();
  verify_cmd->add_option("--tuple-budget", v_tuple_budget, "Largest j for enumeration")->capture_default_str();
  add_format(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::ostream& out = std::cout;
  try {
    const cs::OutputFormat fmt = to_format(format_name);
    const cs::EnumerationOptions enum_opts{threads, 100'000'000};

    if (*sigma_cmd) {
      out << cs::sigma_n(sigma_arg) << '\n';
    } else if (*stop_cmd) {
      cs::BigInt s;
      if (!cs::parse_bigint(stop_s, s)) throw UsageError("s must be an integer");
      auto r = cs::stopping_time(s, stop_cap);
      if (r.found())
        out << *r.sigma << '\n';
      else
        out << "NOT-FOUND\n";
    } else if (*enum_cmd) {
      std::optional<cs::IndexRange> range;
      if (!enum_range.empty()) range = parse_range(enum_range);
      cs::format::solution_header(out, fmt);
      if (cs::resolve_threads(threads) == 1) {
        cs::SolutionStream stream(enum_n, range);
        stream.for_each([&](const cs::SolutionRecord& r) { cs::format::solution(out, r, fmt); });
      } else {
        for (const auto& r : cs::solutions(enum_n, range, enum_opts)) cs::format::solution(out, r, fmt);
      }
    } else if (*class_cmd) {
      cs::format::distribution(out, cs::classify(class_n, enum_opts), fmt);
    } else if (*res_cmd) {
      cs::format::residues(out, cs::residue_classes(res_n, enum_opts), fmt);
    } else if (*zn_cmd) {
      if (zn_limit < 1) throw UsageError("--limit must be >= 1");
      cs::ZnSeries series = cs::zn_iterative(std::max<std::uint32_t>(12, zn_limit));
      if (zn_ledger) {
        cs::format::ledger_header(out, fmt);
        for (std::uint32_t n = 13; n <= zn_limit; ++n) cs::format::ledger(out, cs::term_ledger(n, series), fmt);
      } else {
        cs::format::series_header(out, fmt);
        for (std::uint32_t n = 1; n <= zn_limit; ++n) cs::format::series_value(out, n, series.at(n), fmt);
      }
      if (zn_diag)
        for (const auto& d : series.diagnostics)
          if (d.n <= zn_limit)
            std::cerr << "n=" << d.n << " accepting_window=" << d.accepting_window
                      << " program_bound=" << d.program_bound
                      << (d.beyond_program_bound() ? " beyond-bound" : "") << '\n';
    } else if (*verify_cmd) {
      std::optional<std::vector<cs::BFileEntry>> bfile;
      if (!v_bfile.empty()) bfile = cs::parse_bfile(read_file(v_bfile));
      auto report = cs::cross_check(v_from, v_to, bfile, {threads, v_budget, v_tuple_budget});
      cs::format::verdict_header(out, fmt);
      for (const auto& v : report.verdicts) cs::format::verdict(out, v, fmt);
      out.flush();
      return report.all_agree() ? kExitOk : kExitMismatch;
    }
    out.flush();
    return kExitOk;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cs::InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const cs::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
