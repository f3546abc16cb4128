// Acceptance suite: runs every battery criterion at full scale and prints
// one pass/fail line per criterion. Exit code 0 only when all pass.

#include <cstdio>
#include <cstring>

#include "conecosine/acceptance.hpp"

int main(int argc, char** argv) {
  conecosine::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) options.full = false;
  }
  const auto results = conecosine::run_acceptance(options);
  bool all_pass = true;
  for (const auto& r : results) {
    std::printf("criterion %d [%s]: %s (%s, %lld ms)\n", r.id,
                r.name.c_str(), r.pass ? "PASS" : "FAIL", r.detail.c_str(),
                static_cast<long long>(r.wall_ms));
    all_pass = all_pass && r.pass;
  }
  std::printf("acceptance: %s\n", all_pass ? "PASS" : "FAIL");
  return all_pass ? 0 : 1;
}
