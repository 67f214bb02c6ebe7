#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

struct RunResult {
  int code = -1;
  std::string out;
};

// Runs the command line through the shell; stdout is captured, stderr is merged when asked.
inline RunResult run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(HILFERBVP_EXE) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string data_file(const std::string& name) { return std::string(HILFER_DATA_DIR) + "/" + name; }
