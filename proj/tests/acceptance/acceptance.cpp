#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "uobs/verify.hpp"

namespace {

void print_details(const uobs::CheckResult& r, const std::string& indent) {
  for (const auto& d : r.details) std::cout << indent << d << "\n";
  for (const auto& p : r.parts) {
    std::cout << indent << (p.passed ? "ok   " : "FAIL ") << p.id << ": " << p.title << "\n";
    print_details(p, indent + "     ");
  }
}

}  // namespace

int main(int argc, char** argv) {
  uobs::VerifyOptions options;
  options.fixture_dir = UOBS_FIXTURE_DIR;
  int only = argc > 1 ? std::stoi(argv[1]) : 0;
  int failed = 0;
  for (int c = 1; c <= 12; ++c) {
    if (only && c != only) continue;
    auto start = std::chrono::steady_clock::now();
    auto r = uobs::run_criterion(c, options);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char time[32];
    std::snprintf(time, sizeof time, "%.1fs", secs);
    std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << c << ": " << r.title << " (" << time << ")\n";
    print_details(r, "    ");
    std::cout.flush();
    failed += !r.passed;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << failed << " criteria failing\n";
  return failed ? 1 : 0;
}
