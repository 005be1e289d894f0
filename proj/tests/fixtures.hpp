#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <string>
#include <vector>

#include "ecg/graph.hpp"

namespace fixtures {

using ecg::ColoredMultigraph;
using ecg::Edge;

// a=0, b=1, c=2; ab:1, bc:2, ca:3, unit weights
inline ColoredMultigraph triangle() {
  return ColoredMultigraph(3, 3, {{0, 1, 1, 1}, {1, 2, 2, 1}, {2, 0, 3, 1}});
}

// a=0, b=1, c=2, d=3; ab:1/1, bc:2/5, ca:3/1, bd:3/1, dc:1/1
inline ColoredMultigraph house() {
  return ColoredMultigraph(4, 3, {{0, 1, 1, 1}, {1, 2, 2, 5}, {2, 0, 3, 1}, {1, 3, 3, 1}, {3, 2, 1, 1}});
}

// u-v, v-w, both color 1
inline ColoredMultigraph mono_path() { return ColoredMultigraph(3, 1, {{0, 1, 1, 1}, {1, 2, 1, 1}}); }

// v=0 with triangles (v, a1, a2) and (v, b1, b2): spokes 1 and 3, rims 2
inline ColoredMultigraph bowtie() {
  return ColoredMultigraph(5, 3, {{0, 1, 1, 1}, {1, 2, 2, 1}, {2, 0, 3, 1},
                                  {0, 3, 1, 1}, {3, 4, 2, 1}, {4, 0, 3, 1}});
}

inline ColoredMultigraph two_triangles() {
  return ColoredMultigraph(6, 3, {{0, 1, 1, 1}, {1, 2, 2, 1}, {2, 0, 3, 1},
                                  {3, 4, 1, 1}, {4, 5, 2, 1}, {5, 3, 3, 1}});
}

struct Captured {
  int exit_code = -1;
  std::string out;
};

// Runs a shell command, capturing stdout.
inline Captured run(const std::string& command) {
  Captured c;
  FILE* p = popen(command.c_str(), "r");
  if (!p) return c;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) c.out.append(buf, n);
  const int status = pclose(p);
  c.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

}  // namespace fixtures
