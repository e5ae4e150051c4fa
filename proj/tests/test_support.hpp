#pragma once

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <collatz_sigma/bigint.hpp>

namespace collatz_sigma::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(COLLATZ_SIGMA_FIXTURES) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<std::string> fixture_lines(const std::string& name) {
  std::istringstream in(read_fixture(name));
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(line);
  return out;
}

/// Collapses runs of blanks to one space and trims line ends.
inline std::string normalize_spaces(const std::string& text) {
  std::string out;
  bool blank = false;
  for (char c : text) {
    if (c == ' ' || c == '\t') {
      blank = true;
      continue;
    }
    if (c == '\n') {
      blank = false;
      out += c;
      continue;
    }
    if (blank && !out.empty() && out.back() != '\n') out += ' ';
    blank = false;
    out += c;
  }
  return out;
}

struct ResidueBlock {
  std::uint64_t sigma = 0;
  BigInt modulus;
  std::vector<BigInt> residues;
};

/// "sigma modulus: r1 r2 ..." lines.
inline std::vector<ResidueBlock> residue_fixture() {
  std::vector<ResidueBlock> out;
  for (const auto& line : fixture_lines("residues_upto_15.txt")) {
    if (line[0] == '#') continue;
    std::istringstream in(line);
    ResidueBlock b;
    std::string mod;
    in >> b.sigma >> mod;
    mod.pop_back();  // ':'
    b.modulus = BigInt(mod);
    for (std::string r; in >> r;) b.residues.emplace_back(r);
    out.push_back(std::move(b));
  }
  return out;
}

struct CommandResult {
  int exit_code = -1;
  std::string out;
};

/// Runs the command-line tool through the shell; stderr is discarded.
inline CommandResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + "'" + std::string(COLLATZ_SIGMA_CLI) + "' " +
                    args + " 2>/dev/null";
  CommandResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace collatz_sigma::testing
