#pragma once

// Simple objects of the twisted Drinfeld center Z(Vect_G^w) and the
// formula-based evaluation of T, S and the Borromean tensor B.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "borromean/cocycles.hpp"
#include "borromean/cyclotomic.hpp"
#include "borromean/reps.hpp"

namespace borromean {

/// (class index, character row index).
struct SimpleLabel {
  int class_index = 0;
  int char_index = 0;
  friend auto operator<=>(const SimpleLabel&, const SimpleLabel&) = default;
};

struct SimpleObject {
  SimpleLabel label;
  Element g = kIdentity;  // class representative
  ProjectiveCharacter chi;
  long dimension = 1;
};

/// Simples ordered by class index, then character row. Supplied tables take
/// priority; abelian centralizers are handled by solving alpha_g = d(mu);
/// the identity class of a pq group uses the built-in table. Anything else
/// raises UnsupportedCentralizer.
std::vector<SimpleObject> enumerate_simples(const ThreeCocycle& omega,
                                            std::span<const CharacterTable> supplied = {});

/// [[y^-1,x],z] = [[z,y],x] = [[z^-1,x^-1],y] = e.
bool borromean_condition(const FiniteGroup& g, Element x, Element y, Element z);
/// P^3(x,y,z) = (x,y,z) for P(x,y,z) = (x|>y, z, z^-1|>x).
bool p_cube_fixed(const FiniteGroup& g, Element x, Element y, Element z);

enum class OmegaVariant {
  kCode,     // twelve-term list, normative
  kDisplay,  // nine-term composition
  kFaulty,   // code variant with one term dropped; for fault injection only
};

/// Exponent of Omega(x, y, z) at the cocycle modulus.
long omega_exponent(const ThreeCocycle& omega, Element x, Element y, Element z,
                    OmegaVariant variant = OmegaVariant::kCode);

using CyclotomicMatrix = std::vector<std::vector<Cyclotomic>>;

/// Rank-3 tensor, row-major in (i, j, k). `present` is empty when every
/// entry is known; otherwise absent entries hold zero and are wildcards.
struct BTensor {
  std::size_t n = 0;
  std::vector<Cyclotomic> values;
  std::vector<char> present;

  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const { return (i * n + j) * n + k; }
  const Cyclotomic& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return values[index(i, j, k)];
  }
  bool has(std::size_t i, std::size_t j, std::size_t k) const {
    return present.empty() || present[index(i, j, k)] != 0;
  }
};

enum class BMode { kGeneral, kAuto };

struct BTensorOptions {
  BMode mode = BMode::kGeneral;
  /// Compute every entry independently instead of one per cyclic orbit.
  bool full_fill = false;
  int jobs = 1;
  /// Entries to compute; all when unset. Cyclic rotations of a requested
  /// entry are filled as well.
  std::function<bool(std::size_t, std::size_t, std::size_t)> mask;
};

/// Precomputed data for formula evaluation on one category.
class TwistedDouble {
 public:
  TwistedDouble(ThreeCocycle omega, std::vector<SimpleObject> simples,
                OmegaVariant variant = OmegaVariant::kCode);

  const ThreeCocycle& omega() const { return omega_; }
  const FiniteGroup& group() const { return omega_.g(); }
  const std::vector<SimpleObject>& simples() const { return simples_; }
  std::size_t size() const { return simples_.size(); }
  /// Common conductor of every character value and cocycle scalar.
  long conductor() const { return conductor_; }
  std::size_t unit_index() const { return unit_; }
  std::vector<long> dimensions() const;

  /// chi_i^(x)(c); throws InternalConsistencyError when c is outside C_G(x).
  Cyclotomic conjugated(std::size_t i, Element x, Element c) const;
  long omega_exponent(Element x, Element y, Element z) const {
    return borromean::omega_exponent(omega_, x, y, z, variant_);
  }

  std::vector<Cyclotomic> t_matrix() const;
  CyclotomicMatrix s_matrix(int jobs = 1) const;
  CyclotomicMatrix s_matrix_oracle(int jobs = 1) const;

  Cyclotomic b_entry_general(std::size_t i, std::size_t j, std::size_t k) const;
  Cyclotomic b_entry_oracle_formula(std::size_t i, std::size_t j, std::size_t k) const;
  /// Throws PreconditionError unless A is abelian and normal, w is constant
  /// on A-cosets, and both base points lie in A.
  Cyclotomic b_entry_simplified(std::size_t i, std::size_t j, std::size_t k, std::span<const Element> a) const;
  /// Additionally needs Q inside C_G(k) with Q-orbits of both base points
  /// equal to their classes.
  Cyclotomic b_entry_fast(std::size_t i, std::size_t j, std::size_t k, std::span<const Element> a,
                          std::span<const Element> q) const;
  /// Fast path where its preconditions verify, general formula otherwise.
  Cyclotomic b_entry_auto(std::size_t i, std::size_t j, std::size_t k) const;
  BTensor b_tensor(const BTensorOptions& options = {}) const;

  /// True when A is abelian, normal and w is constant on A-cosets.
  bool fast_path_subgroup_ok(std::span<const Element> a) const;

 private:
  struct CharEntry {
    bool valid = false;
    IntegralTerms terms;
  };
  // conj_[i][member position][c]
  const CharEntry& entry(std::size_t i, Element x, Element c) const;
  const IntegralTerms& checked(std::size_t i, Element x, Element c, const char* what) const;

  ThreeCocycle omega_;
  std::vector<SimpleObject> simples_;
  OmegaVariant variant_;
  long conductor_ = 1;
  std::size_t unit_ = 0;
  std::vector<std::vector<std::vector<CharEntry>>> conj_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::vector<Element>, bool> subgroup_cache_;
};

/// Permutation i -> i* read off C = S^2 / D^2. The candidate comes from
/// floating-point evaluation; it is accepted only if S_{i*,k} equals
/// conjugate(S_{i,k}) exactly for all k, the map is an involution and it
/// fixes the unit. Together with exact unitarity (check_unitarity) this
/// makes C exactly the permutation matrix.
std::vector<std::size_t> duality_permutation(const CyclotomicMatrix& s, std::span<const long> dims);

/// First (i, j) where S * conjugate(S)^T differs from D^2 * Id, if any.
std::optional<std::pair<std::size_t, std::size_t>> check_unitarity(const CyclotomicMatrix& s,
                                                                   std::span<const long> dims);

/// Fusion coefficients N_ij^k from the Verlinde formula, confirmed exactly
/// via S_im S_jm = dim_m * sum_k N_ij^k S_km for all i, j, m. Throws
/// ValidationError when a coefficient is not a nonnegative integer.
std::vector<long> verlinde_fusion(const CyclotomicMatrix& s, std::span<const long> dims);

struct InvariantBundle {
  std::vector<SimpleLabel> simples;
  std::vector<long> dims;
  std::vector<Cyclotomic> t;
  std::optional<CyclotomicMatrix> s;
  std::optional<BTensor> b;

  std::size_t size() const { return simples.size(); }
  /// Lifts every value to the lcm of all conductors.
  void normalize();
};

struct BundleRequest {
  bool s = false;
  bool b = false;
  BTensorOptions b_options;
  int jobs = 1;
};

InvariantBundle compute_bundle(const TwistedDouble& category, const BundleRequest& request);

}  // namespace borromean
