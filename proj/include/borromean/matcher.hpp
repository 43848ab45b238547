#pragma once

// Equality of invariant bundles up to a simultaneous relabeling of simples:
// fingerprint blocks, then backtracking over block-compatible assignments.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "borromean/center.hpp"

namespace borromean {

struct InvariantSet {
  bool t = false;
  bool s = false;
  bool b = false;

  /// Comma-separated subset of T, S, B, e.g. "T,B".
  static InvariantSet parse(std::string_view text);
  std::string render() const;
  bool operator==(const InvariantSet&) const = default;
};

struct BlockPartition {
  /// Canonical fingerprint text per index.
  std::vector<std::string> labels;
  /// Indices sharing a fingerprint, blocks ordered by fingerprint.
  std::vector<std::vector<std::size_t>> blocks;
};

/// Per index: T_i, dim_i, then S_ii and the sorted row S_i. when S is
/// requested, or the sorted fiber {B_iij} u {B_iji} u {B_jii} when only B is
/// requested and the tensor is complete. Throws ValidationError when a
/// requested invariant is missing.
BlockPartition fingerprint(const InvariantBundle& bundle, InvariantSet which);

enum class MatchCertificate { kNone, kFingerprintMismatch, kBlockStructureMismatch, kExhausted, kBudgetExceeded };
std::string render(MatchCertificate c);

struct MatchResult {
  bool found = false;
  /// permutation[i] is the index in the second bundle assigned to index i.
  std::vector<std::size_t> permutation;
  MatchCertificate certificate = MatchCertificate::kNone;
  std::size_t nodes = 0;
};

struct MatchOptions {
  /// Search nodes before giving up with kBudgetExceeded; 0 is unlimited.
  std::size_t max_nodes = 0;
};

/// Absent B entries (BTensor::present) act as wildcards. Throws
/// ValidationError on a size mismatch or when a requested invariant is
/// missing from either bundle, and InternalConsistencyError if a found
/// permutation fails verify_permutation.
MatchResult match(const InvariantBundle& a, const InvariantBundle& b, InvariantSet which,
                  const MatchOptions& options = {});

struct PermutationViolation {
  char invariant = 'T';  // T, D (dimension), S or B
  std::vector<std::size_t> coordinates;
  std::string describe() const;
};

/// First coordinate where bundle b relabeled by perm differs from a.
std::optional<PermutationViolation> verify_permutation(const InvariantBundle& a, const InvariantBundle& b,
                                                       const std::vector<std::size_t>& perm, InvariantSet which);

/// Both bundles lifted to the lcm of their conductors.
std::pair<InvariantBundle, InvariantBundle> common_conductor(const InvariantBundle& a, const InvariantBundle& b);

}  // namespace borromean
