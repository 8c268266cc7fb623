#pragma once

#include <string>
#include <vector>

#include "uobs/graph.hpp"

namespace uobs {

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = true;
  std::vector<std::string> details;
  std::vector<CheckResult> parts;
};

struct VerifyOptions {
  bool parallel = true;
  // When set, graphs persisted as fixtures (s3.txt) are compared as well.
  std::string fixture_dir;
};

// A short name for small graphs that have one (K3, K_{2,3}, 2·P3, θ2, ...),
// otherwise the generic description.
std::string graph_name(const MultiGraph& g);

// Acceptance criteria 1..12, each with its details and sub-checks.
CheckResult run_criterion(int number, const VerifyOptions& options = {});
std::vector<CheckResult> run_acceptance(const VerifyOptions& options = {});

// section6 (criteria 1-4), invariants (6, 7, 8, 9, 11), rado (10), gaps (5, 12).
const std::vector<std::string>& suite_names();
std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& options = {});

}  // namespace uobs
