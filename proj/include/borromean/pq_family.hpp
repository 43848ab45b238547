#pragma once

// Closed forms for the twisted doubles of Z/q x| Z/p with cocycle w^u and
// the end-to-end comparison of the p categories.

#include <functional>
#include <string>
#include <vector>

#include "borromean/center.hpp"
#include "borromean/matcher.hpp"

namespace borromean {

struct PqCategorySpec {
  int p = 0;
  int q = 0;
  int u = 0;
  int n = 0;
  GroupPtr group;

  /// Validates p, q, u and builds the group.
  static PqCategorySpec make(int p, int q, int u);
  static PqCategorySpec make(GroupPtr pq, int u);
  ThreeCocycle cocycle() const { return pq_cocycle(group, u); }
};

enum class PqFamily { kIdentity = 1, kRotation = 2, kReflection = 3 };

/// One simple in the closed-form parametrization: family 1 (1, chi) with chi the
/// row of the built-in Irr(G); family 2 (a^l, chi_q^s); family 3
/// (b^k, chi_p^r * mu) with mu(b^m) = E(p^2)^(u k m).
struct PqSimple {
  PqFamily family = PqFamily::kIdentity;
  int row = 0;  // family 1
  int l = 0;    // family 2
  int s = 0;    // family 2
  int k = 0;    // family 3
  int r = 0;    // family 3
  SimpleObject object;
};

/// The complete list: family 1 by table row, family 2 by (l, s) with l the
/// least member of its <n>-orbit, family 3 by (k, r). Labels are those of
/// the enumerate_simples entry with the same base point and values; throws
/// InternalConsistencyError when that correspondence is not a bijection.
std::vector<PqSimple> pq_simples(const PqCategorySpec& spec);

Cyclotomic pq_t_closed_form(const PqCategorySpec& spec, const PqSimple& simple);
/// B at ((a^l, chi_q^s), (a^l, chi_q^s), (b^k, chi_p^r)); independent of r.
Cyclotomic pq_b_closed_form(const PqCategorySpec& spec, int l, int s, int k, int r);

struct TheoremOptions {
  bool use_s = false;  // {S,T} instead of {T,B}
  bool fast = false;   // B restricted to the sub-tensor the proof consumes
  BMode b_mode = BMode::kAuto;
  int jobs = 1;
};

struct TheoremResult {
  int p = 0;
  int q = 0;
  std::vector<std::string> invariants;
  bool fast = false;
  /// matches[u][u'] is true when the bundles agree up to relabeling.
  std::vector<std::vector<bool>> matches;
  /// Equivalence classes of u under matching, each sorted, ordered by least member.
  std::vector<std::vector<int>> classes;
  std::vector<MatchResult> pair_results;  // u < u', row-major
  double seconds = 0;
};

/// Entries (i, j, k) the fast mode keeps: any unit index, or families
/// (2, 2, 3) up to cyclic rotation.
std::function<bool(std::size_t, std::size_t, std::size_t)> theorem_fast_mask(const std::vector<PqSimple>& simples,
                                                                             std::size_t unit);

TheoremResult verify_theorem(int p, int q, const TheoremOptions& options);

struct ProofSupportReport {
  bool ok = true;
  std::vector<std::string> lines;
};
/// The p values n^m - n^-m are distinct mod q, and for every
/// t in [1, (p-1)/2] the squares over M_t sum to -2p (n^t - n^-t)^2.
ProofSupportReport proof_support_checks(int p, int q);

}  // namespace borromean
