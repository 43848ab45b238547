#pragma once

// Property suite on pq_group(3,7) for every u and on S3.

#include <string>
#include <vector>

namespace borromean {

struct PropertyResult {
  std::string name;
  bool ok = false;
  std::string detail;
  double seconds = 0;
};

struct SelftestOptions {
  /// Evaluate B with a corrupted Omega (one term dropped).
  bool fault_omega = false;
  int jobs = 1;
};

std::vector<PropertyResult> run_selftest(const SelftestOptions& options);

/// S3 as permutations of {0,1,2} in lexicographic order, composed right to left.
std::vector<std::vector<int>> symmetric_group_3_table();

}  // namespace borromean
