#pragma once

// Finite groups stored as full multiplication tables.
//
// Elements are indices in [0, order); index 0 is the identity. Class
// representatives are the least-index member of each class and classes are
// ordered by representative, so every derived enumeration is deterministic.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "borromean/error.hpp"

namespace borromean {

using Element = std::int32_t;
inline constexpr Element kIdentity = 0;

struct ConjugacyClassInfo {
  Element representative = kIdentity;
  std::vector<Element> members;  // sorted
};

/// Presentation data of <a, b | a^q = b^p = 1, b a b^-1 = a^n>.
struct PqParameters {
  int p = 0;
  int q = 0;
  int n = 0;
};

class FiniteGroup {
 public:
  /// Validates the table. Throws GroupValidationError naming the offending
  /// entry or triple.
  static FiniteGroup from_multiplication_table(const std::vector<std::vector<int>>& table,
                                               std::string name);

  int order() const { return order_; }
  const std::string& name() const { return name_; }
  const std::optional<PqParameters>& pq_parameters() const { return pq_; }

  Element mul(Element a, Element b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  /// g |> h = g h g^-1.
  Element conjugate(Element g, Element h) const { return conj_[static_cast<std::size_t>(g) * order_ + h]; }
  /// [g, h] = g h g^-1 h^-1.
  Element commutator(Element g, Element h) const { return mul(conjugate(g, h), inv(h)); }
  bool commute(Element g, Element h) const { return mul(g, h) == mul(h, g); }
  Element power(Element g, long k) const;
  int element_order(Element g) const;

  const std::vector<ConjugacyClassInfo>& conjugacy_classes() const { return classes_; }
  int class_of(Element g) const { return class_of_[g]; }
  int class_size(Element g) const { return static_cast<int>(classes_[class_of_[g]].members.size()); }
  /// Sorted centralizer C_G(g).
  const std::vector<Element>& centralizer(Element g) const { return centralizers_[g]; }
  /// Least-index f with f |> representative(class_of(x)) = x.
  Element transporter_from_representative(Element x) const { return transporter_[x]; }
  /// Least-index f with f |> g = x, or nullopt when x is not conjugate to g.
  std::optional<Element> transporter(Element g, Element x) const;

  /// Subgroup generated by `generators`, sorted.
  std::vector<Element> generated_subgroup(std::span<const Element> generators) const;
  /// Smallest normal subgroup containing `elements`, sorted.
  std::vector<Element> normal_closure(std::span<const Element> elements) const;
  bool is_subgroup(std::span<const Element> elements) const;
  bool is_abelian(std::span<const Element> subgroup) const;
  bool is_normal(std::span<const Element> subgroup) const;
  std::vector<std::vector<int>> multiplication_table() const;

  void set_pq_parameters(PqParameters params) { pq_ = params; }

 private:
  FiniteGroup() = default;
  void derive_structure();

  int order_ = 0;
  std::string name_;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::vector<Element> conj_;
  std::vector<ConjugacyClassInfo> classes_;
  std::vector<int> class_of_;
  std::vector<std::vector<Element>> centralizers_;
  std::vector<Element> transporter_;
  std::optional<PqParameters> pq_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Raised for invalid multiplication tables; `witness` holds the offending
/// indices (a row, a pair, or a non-associative triple).
class GroupValidationError : public ValidationError {
 public:
  GroupValidationError(const std::string& what, std::vector<int> witness)
      : ValidationError(what), witness_(std::move(witness)) {}
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  std::vector<int> witness_;
};

/// Z/q x| Z/p with elements a^l b^k enumerated at index l*p + k.
/// n is the least integer > 1 with n^p = 1 (mod q).
FiniteGroup pq_group(int p, int q);
/// Z/n with element k at index k.
FiniteGroup cyclic_group(int n);
bool is_prime(int n);

}  // namespace borromean
