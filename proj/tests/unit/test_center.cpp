#include <memory>

#include "borromean/center.hpp"
#include "borromean/io.hpp"
#include "doctest.h"

using namespace borromean;

namespace {

GroupPtr make(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

Cyclotomic z(long n, long k) { return Cyclotomic::root_of_unity(n, k); }

std::size_t find_simple(const TwistedDouble& cat, Element g, Element at, const Cyclotomic& value) {
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const auto& s = cat.simples()[i];
    if (s.g == g && s.chi(at) == value) return i;
  }
  FAIL("simple not found");
  return 0;
}

}  // namespace

TEST_CASE("trivial group") {
  const GroupPtr g = make(cyclic_group(1));
  const ThreeCocycle w = ThreeCocycle::trivial(g);
  const TwistedDouble cat(w, enumerate_simples(w));
  REQUIRE(cat.size() == 1);
  CHECK(cat.dimensions() == std::vector<long>{1});
  CHECK(cat.s_matrix()[0][0] == Cyclotomic(1));
  CHECK(cat.t_matrix()[0] == Cyclotomic(1));
  CHECK(cat.b_entry_general(0, 0, 0) == Cyclotomic(1));
  const std::vector<long> dims{1};
  CHECK(duality_permutation(cat.s_matrix(), dims) == std::vector<std::size_t>{0});
}

TEST_CASE("simple counts") {
  for (auto [p, q, expected] : {std::tuple{3, 7, 25}, {5, 11, 49}}) {
    const GroupPtr g = make(pq_group(p, q));
    for (int u = 0; u < p; ++u) {
      const auto simples = enumerate_simples(pq_cocycle(g, u));
      CHECK(simples.size() == static_cast<std::size_t>(expected));
      long total = 0;
      for (const auto& s : simples) total += s.dimension * s.dimension;
      CHECK(total == static_cast<long>(p * q) * p * q);
    }
  }
}

TEST_CASE("S entry of two rotation simples with trivial cocycle") {
  const GroupPtr g = make(pq_group(3, 7));
  const FiniteGroup& G = *g;
  const ThreeCocycle w = ThreeCocycle::trivial(g);
  const TwistedDouble cat(w, enumerate_simples(w));
  const Element a = 3;
  const std::size_t i = find_simple(cat, a, a, z(7, 1));
  // direct sum: |class of a| * sum over x in class(a) of chi(f^-1 |> a) chi(x), f |> a = x
  Cyclotomic direct;
  for (Element x : G.conjugacy_classes()[G.class_of(a)].members) {
    Element f = 0;
    while (G.conjugate(f, a) != x) ++f;
    const Element pulled = G.conjugate(G.inv(f), a);
    direct += z(7, pulled / 3) * z(7, x / 3);
  }
  direct = direct * Rational(3);
  const auto s = cat.s_matrix();
  CHECK(s[i][i] == direct);
  CHECK(s[i][i] == z(7, 2) * Rational(3) + z(7, 6) * Rational(6));
  CHECK(cat.s_matrix_oracle()[i][i] == s[i][i]);
}

TEST_CASE("Borromean condition and P^3 fixed points") {
  const FiniteGroup g = pq_group(3, 7);
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) {
      CHECK(borromean_condition(g, x, y, kIdentity));
      for (Element zz = 0; zz < g.order(); ++zz) {
        if (borromean_condition(g, x, y, zz) != p_cube_fixed(g, x, y, zz)) {
          FAIL("condition and P^3 disagree at " << x << "," << y << "," << zz);
        }
      }
    }
  }
}

TEST_CASE("Omega exponent degenerate cases") {
  const GroupPtr g = make(pq_group(3, 7));
  const ThreeCocycle trivial = ThreeCocycle::trivial(g);
  const ThreeCocycle w = pq_cocycle(g, 1);
  for (Element x = 0; x < g->order(); ++x) {
    for (Element y = 0; y < g->order(); ++y) {
      CHECK(omega_exponent(trivial, x, y, 5) == 0);
      CHECK(omega_exponent(w, x, y, kIdentity) == 0);
    }
  }
}

TEST_CASE("fast paths agree with the general formula") {
  const GroupPtr g = make(pq_group(5, 11));
  const ThreeCocycle w = pq_cocycle(g, 2);
  const TwistedDouble cat(w, enumerate_simples(w));
  const Element a = 5, b2 = 2;
  const std::size_t i = find_simple(cat, a, a, z(11, 1));
  std::size_t k = 0;
  while (cat.simples()[k].g != b2) ++k;
  ++k;
  std::vector<Element> a_group, b_group;
  for (int m = 0; m < 11; ++m) a_group.push_back(m * 5);
  for (int m = 0; m < 5; ++m) b_group.push_back(m);
  const Cyclotomic general = cat.b_entry_general(i, i, k);
  CHECK(cat.b_entry_fast(i, i, k, a_group, b_group) == general);
  CHECK(cat.b_entry_simplified(i, i, k, a_group) == general);
  CHECK(cat.b_entry_auto(i, i, k) == general);
  CHECK(cat.fast_path_subgroup_ok(a_group));
  CHECK_THROWS_AS(cat.b_entry_simplified(k, i, i, a_group), PreconditionError);
}

TEST_CASE("auto mode equals the general formula on pq(3,7)") {
  const GroupPtr g = make(pq_group(3, 7));
  const ThreeCocycle w = pq_cocycle(g, 1);
  const TwistedDouble cat(w, enumerate_simples(w));
  BTensorOptions general, automatic;
  automatic.mode = BMode::kAuto;
  BTensorOptions full = general;
  full.full_fill = true;
  full.jobs = 2;
  const BTensor a = cat.b_tensor(general), b = cat.b_tensor(automatic), c = cat.b_tensor(full);
  for (std::size_t idx = 0; idx < a.values.size(); ++idx) {
    CHECK(a.values[idx] == b.values[idx]);
    CHECK(a.values[idx] == c.values[idx]);
  }
  for (std::size_t i = 0; i < cat.size(); i += 3) {
    for (std::size_t j = 0; j < cat.size(); j += 2) {
      for (std::size_t k = 0; k < cat.size(); ++k) CHECK(cat.b_entry_oracle_formula(i, j, k) == a(i, j, k));
    }
  }
}

TEST_CASE("duality permutation") {
  const GroupPtr z2 = make(cyclic_group(2));
  const ThreeCocycle w2 = ThreeCocycle::trivial(z2);
  const TwistedDouble toric(w2, enumerate_simples(w2));
  const auto d2 = toric.dimensions();
  CHECK(duality_permutation(toric.s_matrix(), d2) == std::vector<std::size_t>{0, 1, 2, 3});

  const GroupPtr g = make(pq_group(3, 7));
  const ThreeCocycle w = ThreeCocycle::trivial(g);
  const TwistedDouble cat(w, enumerate_simples(w));
  const auto dims = cat.dimensions();
  const auto s = cat.s_matrix();
  const auto dual = duality_permutation(s, dims);
  const auto t = cat.t_matrix();
  for (std::size_t i = 0; i < cat.size(); ++i) {
    CHECK(dual[dual[i]] == i);
    CHECK(t[dual[i]] == t[i]);
    const auto& si = cat.simples()[i];
    const auto& sd = cat.simples()[dual[i]];
    if (si.g != kIdentity && si.g % 3 == 0) {
      // (a^l, chi) is dual to the class of a^-l
      CHECK(g->class_of(sd.g) == g->class_of(g->inv(si.g)));
    }
  }
  CHECK_FALSE(check_unitarity(s, dims));
}

TEST_CASE("S3 with a supplied character table") {
  const std::string dir = BORROMEAN_TEST_DATA;
  const GroupPtr g = make(group_from_json(read_json_file(dir + "/s3_group.json")));
  const ThreeCocycle w = ThreeCocycle::trivial(g);
  CHECK_THROWS_AS(enumerate_simples(w), UnsupportedCentralizer);
  const std::vector<CharacterTable> tables{table_from_json(read_json_file(dir + "/s3_chars.json"), g)};
  const TwistedDouble cat(w, enumerate_simples(w, tables));
  CHECK(cat.size() == 8);
  const auto dims = cat.dimensions();
  const auto s = cat.s_matrix();
  CHECK_FALSE(check_unitarity(s, dims));
  const auto fusion = verlinde_fusion(s, dims);
  CHECK(fusion.size() == 512);
  const auto s2 = cat.s_matrix_oracle();
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) CHECK(s[i][j] == s2[i][j]);
  }
}
