// Copyright 2026 The xyznet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one PASS/FAIL line per criterion, exit 0 iff all pass.
// argv[1], when given, is the xyznet CLI; its outputs are checked for
// byte-identical reruns as part of criterion 10.

#include <array>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "xyznet/verify.hpp"

namespace {

struct Captured {
  std::string output;
  int status = -1;
};

Captured run(const std::string& command) {
  Captured c;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen((command + " 2>/dev/null").c_str(), "r"),
                                             pclose);
  if (!pipe) return c;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) c.output.append(buf.data(), got);
  c.status = pclose(pipe.release());
  return c;
}

xyznet::CheckResult cli_determinism(const std::string& cli) {
  const std::vector<std::string> commands = {
      "hamiltonian complete-minus:8:1-8 --format json",
      "hamiltonian complete:5 --format csv",
      "curve complete-minus:8:1-8 --pair 1,8 --tmax 3.141592653589793 --steps 1001",
      "pst complete-minus:8:1-8 --pair 1,8",
      "grover 7",
      "oracle complete:4 --t 0.3",
  };
  xyznet::CheckResult r{10, "CLI reruns are byte-identical", true, false, ""};
  for (const auto& args : commands) {
    const auto a = run(cli + " " + args);
    const auto b = run(cli + " " + args);
    if (a.status != 0 || b.status != 0 || a.output.empty() || a.output != b.output) {
      r.passed = false;
      r.detail = "differs or fails: " + args;
      return r;
    }
  }
  r.detail = std::to_string(commands.size()) + " commands run twice";
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  auto results = xyznet::run_verification(16);
  if (argc > 1) {
    auto cli = cli_determinism(argv[1]);
    auto& c10 = results.back();
    c10.passed = c10.passed && cli.passed;
    c10.detail += "; " + cli.detail;
  } else {
    results.back().detail += "; CLI determinism not run (no CLI path given)";
  }

  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed && !r.skipped;
    std::cout << (r.passed && !r.skipped ? "PASS" : "FAIL") << "  criterion " << r.id << ": "
              << r.name << "  (" << r.detail << ")\n";
  }
  std::cout << (all ? "all acceptance criteria passed\n" : "acceptance FAILED\n");
  return all ? 0 : 1;
}
