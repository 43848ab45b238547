#pragma once

// 3-cocycles on a finite group as exponent tables, the derived 2-cocycles
// alpha_g on centralizers, and coboundary solving on abelian subgroups.
//
// All values are additive exponents: an entry v at modulus e stands for
// exp(2*pi*i*v/e).

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "borromean/groups.hpp"

namespace borromean {

/// First failure found by ThreeCocycle::validate.
struct CocycleViolation {
  enum class Kind { kNotNormalized, kCocycleIdentity };
  Kind kind = Kind::kCocycleIdentity;
  /// (x, y, z) for kNotNormalized, (x, y, z, w) for kCocycleIdentity.
  std::vector<Element> elements;
  std::string describe() const;
};

class ThreeCocycle {
 public:
  /// Stores the table reduced modulo `modulus`; does not validate.
  ThreeCocycle(GroupPtr group, long modulus, std::vector<long> values);
  static ThreeCocycle trivial(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  const FiniteGroup& g() const { return *group_; }
  long modulus() const { return modulus_; }
  long operator()(Element x, Element y, Element z) const {
    const std::size_t n = static_cast<std::size_t>(order_);
    return values_[(static_cast<std::size_t>(x) * n + y) * n + z];
  }
  const std::vector<long>& values() const { return values_; }

  /// Checks normalization and the cocycle identity on all quadruples.
  std::optional<CocycleViolation> validate() const;
  /// Throws ValidationError when validate() reports a violation.
  const ThreeCocycle& require_valid() const;

  /// alpha_g(x, y) = w(x,y,g) - w(x, y|>g, y) + w(xy|>g, x, y), defined for
  /// all x, y in G (a 2-cocycle only on C_G(g)).
  long alpha(Element g, Element x, Element y) const {
    const FiniteGroup& G = *group_;
    const long v = (*this)(x, y, g) - (*this)(x, G.conjugate(y, g), y) +
                   (*this)(G.conjugate(G.mul(x, y), g), x, y);
    return mod_floor_(v);
  }

  friend bool operator==(const ThreeCocycle& a, const ThreeCocycle& b) {
    return a.modulus_ == b.modulus_ && a.values_ == b.values_;
  }

 private:
  long mod_floor_(long v) const {
    long r = v % modulus_;
    return r < 0 ? r + modulus_ : r;
  }

  GroupPtr group_;
  int order_;
  long modulus_;
  std::vector<long> values_;
};

/// A 2-cocycle on a subgroup `domain` (sorted), values in Z/modulus.
struct TwoCocycle {
  GroupPtr group;
  std::vector<Element> domain;
  long modulus = 1;
  std::vector<long> values;  // domain.size()^2, row-major by domain position
  std::optional<Element> base_point;

  long operator()(std::size_t i, std::size_t j) const { return values[i * domain.size() + j]; }
  /// Position of x in domain, or -1.
  int position(Element x) const;
  long at(Element x, Element y) const { return (*this)(position(x), position(y)); }
  bool is_symmetric() const;
  /// First (x, y, z) violating the 2-cocycle identity, if any.
  std::optional<std::vector<Element>> cocycle_violation() const;
};

/// Normalized 1-cochain mu on a subgroup.
struct OneCochain {
  std::vector<Element> domain;
  long modulus = 1;
  std::vector<long> values;  // aligned with domain

  int position(Element x) const;
  long at(Element x) const { return values[position(x)]; }
};

/// alpha_g restricted to C_G(g). Throws InternalConsistencyError if the
/// result is not a 2-cocycle (only possible for an invalid 3-cocycle).
TwoCocycle alpha(const ThreeCocycle& omega, Element g);
/// alpha_g restricted to a subgroup of C_G(g).
TwoCocycle alpha_on(const ThreeCocycle& omega, Element g, std::span<const Element> subgroup);

/// mu with mu(x) + mu(y) - mu(xy) = alpha(x, y). Tries the modulus of alpha
/// first, then modulus * |H|. Throws UnsolvableCoboundary otherwise.
OneCochain solve_coboundary(const TwoCocycle& alpha);

/// Pull back a cocycle on Q along `projection` (projection[g] in Q).
ThreeCocycle inflate(const ThreeCocycle& quotient_cocycle, GroupPtr group,
                     std::span<const Element> projection);

/// w^u on <b> for Z/q x| Z/p, inflated along a^l b^k -> b^k; modulus p^2.
ThreeCocycle pq_cocycle(GroupPtr pq, int u);
/// The generating cocycle of H^3(Z/p) raised to u, on cyclic_group(p).
ThreeCocycle cyclic_cocycle(GroupPtr cyclic, int u);

}  // namespace borromean
