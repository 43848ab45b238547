#include <algorithm>
#include <array>
#include <map>

#include "borromean/groups.hpp"
#include "doctest.h"

using namespace borromean;

namespace {

using Perm = std::array<int, 3>;

// S3 as permutations of {0,1,2}, composed right to left.
FiniteGroup symmetric3() {
  std::vector<Perm> perms;
  Perm p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto compose = [](const Perm& a, const Perm& b) { return Perm{a[b[0]], a[b[1]], a[b[2]]}; };
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      table[i][j] = static_cast<int>(std::find(perms.begin(), perms.end(), compose(perms[i], perms[j])) - perms.begin());
    }
  }
  return FiniteGroup::from_multiplication_table(table, "S3");
}

}  // namespace

TEST_CASE("S3 structure") {
  const FiniteGroup g = symmetric3();
  CHECK(g.order() == 6);
  std::vector<std::size_t> sizes;
  for (const auto& c : g.conjugacy_classes()) sizes.push_back(c.members.size());
  CHECK(sizes == std::vector<std::size_t>{1, 3, 2});
  CHECK(!g.is_abelian(std::vector<Element>{0, 1, 2, 3, 4, 5}));
  for (Element x = 0; x < 6; ++x) {
    const Element f = g.transporter_from_representative(x);
    CHECK(g.conjugate(f, g.conjugacy_classes()[g.class_of(x)].representative) == x);
    CHECK(static_cast<int>(g.centralizer(x).size()) * g.class_size(x) == 6);
    CHECK(g.mul(x, g.inv(x)) == kIdentity);
  }
}

TEST_CASE("table validation") {
  CHECK_THROWS_AS(FiniteGroup::from_multiplication_table({{0, 1}, {1, 1}}, "bad"), GroupValidationError);
  CHECK_THROWS_AS(FiniteGroup::from_multiplication_table({{0, 1}, {1}}, "bad"), GroupValidationError);
  CHECK_THROWS_AS(FiniteGroup::from_multiplication_table({{1, 0}, {0, 1}}, "bad"), GroupValidationError);
  // a Latin square with identity 0 that is not associative (order 5 loop)
  const std::vector<std::vector<int>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    FiniteGroup::from_multiplication_table(loop, "loop");
    FAIL("expected non-associativity");
  } catch (const GroupValidationError& e) {
    REQUIRE(e.witness().size() == 3);
    const auto& w = e.witness();
    CHECK(loop[loop[w[0]][w[1]]][w[2]] != loop[w[0]][loop[w[1]][w[2]]]);
  }
}

TEST_CASE("pq groups") {
  const FiniteGroup g = pq_group(3, 7);
  REQUIRE(g.pq_parameters());
  CHECK(g.pq_parameters()->n == 2);
  CHECK(g.conjugacy_classes().size() == 5);
  const FiniteGroup h = pq_group(5, 11);
  CHECK(h.pq_parameters()->n == 3);
  CHECK(h.conjugacy_classes().size() == 7);
  CHECK_THROWS_AS(pq_group(3, 5), ParameterError);
  CHECK_THROWS_AS(pq_group(4, 7), ParameterError);
  // a = index p, b = index 1: b a b^-1 = a^n and [a, b] = a^(1 - n) = a^-1
  const Element a = 3, b = 1;
  CHECK(g.conjugate(b, a) == g.power(a, 2));
  CHECK(g.commutator(a, b) == g.power(a, 6));
  CHECK(g.element_order(a) == 7);
  CHECK(g.element_order(b) == 3);
  // class order: identity, b, b^2, then a-classes
  CHECK(g.conjugacy_classes()[1].representative == 1);
  CHECK(g.conjugacy_classes()[2].representative == 2);
  CHECK(g.conjugacy_classes()[3].representative == 3);
  CHECK(g.is_normal(g.generated_subgroup(std::vector<Element>{a})));
  CHECK(g.normal_closure(std::vector<Element>{b}).size() == 21);
}
