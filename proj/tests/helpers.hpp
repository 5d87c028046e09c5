#pragma once

// Shared test plumbing: fixture loading, inline chain systems, CLI capture.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cox/system.hpp"

#ifndef COX_FIXTURE_DIR
#error "COX_FIXTURE_DIR must name the fixture directory"
#endif

namespace testutil {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string fixture_path(const std::string& name) {
  return std::string(COX_FIXTURE_DIR) + "/" + name;
}

inline cox::CoxeterSystem load_fixture(const std::string& name) {
  return cox::parse_system(read_file(fixture_path(name)));
}

// Chain system: consecutive generators bonded by `bonds`, all other
// pairs commuting. chain({"a","b","c"}, {4,3}) is the rank-3 chain with
// m(a,b)=4, m(b,c)=3.
inline cox::CoxeterSystem chain(std::vector<std::string> names,
                                const std::vector<cox::Bond>& bonds) {
  cox::CoxeterMatrix m(static_cast<int>(names.size()));
  for (std::size_t i = 0; i < bonds.size(); ++i)
    m.set_bond(static_cast<int>(i), static_cast<int>(i) + 1, bonds[i]);
  return cox::CoxeterSystem::create(std::move(names), std::move(m));
}

#ifdef COX_CLI_PATH

struct CliResult {
  int exit_code;
  std::string output;  // stdout and stderr interleaved
};

// Runs a raw shell line and captures interleaved stdout/stderr.
inline CliResult run_shell(const std::string& line) {
  const std::string command = line + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed: " + command);
  std::string output;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, n);
  const int status = pclose(pipe);
  const int exit_code = (status >= 0 && (status & 0x7f) == 0)
                            ? (status >> 8) & 0xff
                            : -1;
  return {exit_code, std::move(output)};
}

// Runs the CLI through the shell; `args` is appended verbatim after the
// binary path, so quote anything unusual yourself.
inline CliResult run_cli(const std::string& args) {
  return run_shell(std::string(COX_CLI_PATH) + " " + args);
}

#endif  // COX_CLI_PATH

}  // namespace testutil
