#pragma once

// Character tables of subgroups, projective characters chi * zeta^mu, and
// the conjugated projective character chi^(x) carried to another member of
// the class of the base point.

#include <optional>
#include <vector>

#include "borromean/cocycles.hpp"
#include "borromean/cyclotomic.hpp"
#include "borromean/groups.hpp"

namespace borromean {

/// A one-dimensional representation lambda of a subgroup K whose induced
/// representation affords a character row. Exponents are aligned with the
/// sorted `subgroup`.
struct MonomialInducing {
  std::vector<Element> subgroup;
  long modulus = 1;
  std::vector<long> exponents;

  int position(Element x) const;
  long at(Element x) const { return exponents[position(x)]; }
};

/// Rows are functions on the sorted `subgroup`, stored per element.
struct CharacterTable {
  GroupPtr group;
  std::vector<Element> subgroup;
  std::vector<std::vector<Cyclotomic>> rows;
  /// Optional monomial data per row; used by the categorical oracle.
  std::vector<std::optional<MonomialInducing>> inducing;
  /// Base point the rows belong to; when unset the table applies to every
  /// class whose centralizer equals `subgroup`.
  std::optional<Element> base;

  int position(Element x) const;
  const Cyclotomic& value(std::size_t row, Element x) const { return rows[row][position(x)]; }
  long degree(std::size_t row) const;
  std::size_t size() const { return rows.size(); }
};

/// First failing check of a character table.
struct TableViolation {
  std::string message;
  std::vector<std::size_t> rows;
};

/// Checks degrees, sum of squared degrees, orthonormality and, when
/// `ordinary`, that every row is a class function and rows = classes of H.
std::optional<TableViolation> check_character_table(const CharacterTable& table, bool ordinary);
/// Conjugacy classes of `subgroup` under its own conjugation.
std::vector<std::vector<Element>> subgroup_classes(const FiniteGroup& g, std::span<const Element> subgroup);

/// All linear characters of an abelian subgroup. Rows are ordered
/// lexicographically by the character value exponents on successive
/// generators (least-index elements not yet generated).
CharacterTable abelian_character_table(GroupPtr group, std::span<const Element> subgroup);
/// Irr(Z/q x| Z/p): p linear rows (value E(p)^(r k) on a^l b^k), then one
/// degree-p row per <n>-orbit on (Z/q)^x, keyed by its least member s.
CharacterTable pq_character_table(GroupPtr group);
/// Least representatives of the orbits of multiplication by n on (Z/q)^x.
std::vector<int> pq_orbit_representatives(const PqParameters& params);

/// An alpha_g-projective character of C_G(g): chi(c) * zeta^mu(c).
struct ProjectiveCharacter {
  Element base = kIdentity;
  std::vector<Element> domain;     // sorted C_G(base)
  std::vector<Cyclotomic> values;  // aligned with domain
  long degree = 1;
  /// lambda with d(lambda) = alpha_base on a subgroup, when available.
  std::optional<MonomialInducing> inducing;

  int position(Element x) const;
  const Cyclotomic& operator()(Element c) const { return values[position(c)]; }
};

/// chi_row * zeta^mu on the table's subgroup, which must equal C_G(base).
ProjectiveCharacter twisted_character(const CharacterTable& table, std::size_t row, Element base,
                                      const OneCochain& mu);
/// A row taken as given (file-supplied projective or ordinary character).
ProjectiveCharacter plain_character(const CharacterTable& table, std::size_t row, Element base);

/// chi^(x)(c) = zeta^(alpha_g(c,f) - alpha_g(f, f^-1|>c)) chi(f^-1|>c) with
/// f the least-index element satisfying f |> g = x.
Cyclotomic conjugated_character(const ThreeCocycle& omega, const ProjectiveCharacter& chi, Element x,
                                Element c);
/// Same with a caller-chosen f (f |> base must equal x).
Cyclotomic conjugated_character_via(const ThreeCocycle& omega, const ProjectiveCharacter& chi, Element f,
                                    Element c);

}  // namespace borromean
