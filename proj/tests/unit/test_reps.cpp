#include <memory>

#include "borromean/io.hpp"
#include "borromean/reps.hpp"
#include "doctest.h"

using namespace borromean;

namespace {

GroupPtr make(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

Cyclotomic z(long n, long k) { return Cyclotomic::root_of_unity(n, k); }

// Z/2 x Z/2 with bitwise xor.
FiniteGroup klein() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
  }
  return FiniteGroup::from_multiplication_table(t, "V4");
}

CharacterTable s3_table(GroupPtr g) {
  return table_from_json(read_json_file(std::string(BORROMEAN_TEST_DATA) + "/s3_chars.json"), std::move(g));
}

GroupPtr s3_group() {
  return make(group_from_json(read_json_file(std::string(BORROMEAN_TEST_DATA) + "/s3_group.json")));
}

}  // namespace

TEST_CASE("abelian tables of small groups") {
  const GroupPtr z1 = make(cyclic_group(1));
  const auto t1 = abelian_character_table(z1, std::vector<Element>{0});
  REQUIRE(t1.size() == 1);
  CHECK(t1.value(0, 0) == Cyclotomic(1));

  const GroupPtr z3 = make(cyclic_group(3));
  const auto t3 = abelian_character_table(z3, std::vector<Element>{0, 1, 2});
  REQUIRE(t3.size() == 3);
  for (int s = 0; s < 3; ++s) {
    for (Element l = 0; l < 3; ++l) CHECK(t3.value(s, l) == z(3, s * l));
  }
  CHECK_FALSE(check_character_table(t3, true));

  const GroupPtr v4 = make(klein());
  const auto tv = abelian_character_table(v4, std::vector<Element>{0, 1, 2, 3});
  REQUIRE(tv.size() == 4);
  for (std::size_t r = 0; r < 4; ++r) {
    for (Element x = 0; x < 4; ++x) {
      CHECK((tv.value(r, x) == Cyclotomic(1) || tv.value(r, x) == Cyclotomic(-1)));
      for (Element y = 0; y < 4; ++y) CHECK(tv.value(r, x) * tv.value(r, y) == tv.value(r, x ^ y));
    }
    for (std::size_t s = 0; s < r; ++s) CHECK(tv.rows[r] != tv.rows[s]);
  }
  CHECK_FALSE(check_character_table(tv, true));
}

TEST_CASE("pq character table") {
  const GroupPtr g = make(pq_group(3, 7));
  const auto t = pq_character_table(g);
  REQUIRE(t.size() == 5);
  std::vector<long> degrees;
  long sum = 0;
  for (std::size_t r = 0; r < t.size(); ++r) {
    degrees.push_back(t.degree(r));
    sum += t.degree(r) * t.degree(r);
  }
  CHECK(degrees == std::vector<long>{1, 1, 1, 3, 3});
  CHECK(sum == 21);
  const Element a = 3, b = 1;
  CHECK(t.value(3, a) == z(7, 1) + z(7, 2) + z(7, 4));
  CHECK(t.value(3, b).is_zero());
  CHECK(t.value(1, b) == z(3, 1));
  CHECK(t.value(1, a) == Cyclotomic(1));
  CHECK_FALSE(check_character_table(t, true));
  CHECK(pq_orbit_representatives(*g->pq_parameters()) == std::vector<int>{1, 3});
}

TEST_CASE("table loading and rejection") {
  const GroupPtr g = s3_group();
  const auto t = s3_table(g);
  CHECK(t.size() == 3);
  CHECK(t.degree(2) == 2);

  Json j = read_json_file(std::string(BORROMEAN_TEST_DATA) + "/s3_chars.json");
  j["rows"][1] = j["rows"][0];
  CHECK_THROWS_AS(table_from_json(j, g), ValidationError);

  const GroupPtr z3 = make(cyclic_group(3));
  const auto t3 = abelian_character_table(z3, std::vector<Element>{0, 1, 2});
  const auto back = table_from_json(table_to_json(t3), z3);
  CHECK(back.rows == t3.rows);
  CHECK(back.subgroup == t3.subgroup);
}

TEST_CASE("conjugated character examples") {
  const GroupPtr g = make(pq_group(3, 7));
  const ThreeCocycle trivial = ThreeCocycle::trivial(g);
  const Element a = 3, a2 = 6, a4 = 12;
  const auto& cent = g->centralizer(a);
  const auto table = abelian_character_table(g, cent);
  // the row with value E(7) at a
  std::size_t row = 0;
  while (!(table.value(row, a) == z(7, 1))) ++row;
  const OneCochain zero{cent, 1, std::vector<long>(cent.size(), 0)};
  const ProjectiveCharacter chi = twisted_character(table, row, a, zero);
  CHECK(conjugated_character(trivial, chi, a2, a) == z(7, 4));
  CHECK(conjugated_character(trivial, chi, a, a) == z(7, 1));
  CHECK(conjugated_character(trivial, chi, a4, a) == z(7, 2));
  CHECK_THROWS(conjugated_character(trivial, chi, a2, 1));
}

TEST_CASE("conjugated character does not depend on the transporter") {
  const GroupPtr g = make(pq_group(3, 7));
  const FiniteGroup& G = *g;
  for (int u = 0; u < 3; ++u) {
    const ThreeCocycle w = pq_cocycle(g, u);
    for (const auto& cls : G.conjugacy_classes()) {
      const Element base = cls.representative;
      if (!G.is_abelian(G.centralizer(base))) continue;
      const auto table = abelian_character_table(g, G.centralizer(base));
      const OneCochain mu = solve_coboundary(alpha(w, base));
      for (std::size_t r = 0; r < table.size(); ++r) {
        const ProjectiveCharacter chi = twisted_character(table, r, base, mu);
        for (Element f = 0; f < G.order(); ++f) {
          const Element x = G.conjugate(f, base);
          for (Element c : G.centralizer(x)) {
            CHECK(conjugated_character_via(w, chi, f, c) == conjugated_character(w, chi, x, c));
          }
        }
      }
    }
  }
}

TEST_CASE("twisted characters are alpha-projective") {
  const GroupPtr g = make(pq_group(5, 11));
  const ThreeCocycle w = pq_cocycle(g, 2);
  const Element b2 = 2;
  const auto& cent = g->centralizer(b2);
  const TwoCocycle al = alpha(w, b2);
  const OneCochain mu = solve_coboundary(al);
  const auto table = abelian_character_table(g, cent);
  for (std::size_t r = 0; r < table.size(); ++r) {
    const ProjectiveCharacter chi = twisted_character(table, r, b2, mu);
    CHECK(chi(kIdentity) == Cyclotomic(1));
    for (Element c : cent) {
      for (Element d : cent) {
        const Cyclotomic lhs = chi(c) * chi(d);
        const Cyclotomic rhs = Cyclotomic::root_of_unity(al.modulus, al.at(c, d)) * chi(g->mul(c, d));
        CHECK(lhs == rhs);
      }
    }
  }
}
