#include <memory>

#include "borromean/cocycles.hpp"
#include "borromean/cyclotomic.hpp"
#include "doctest.h"

using namespace borromean;

namespace {

GroupPtr shared(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

}  // namespace

TEST_CASE("pq cocycles satisfy the cocycle identity") {
  const GroupPtr g = shared(pq_group(3, 7));
  for (int u = 0; u < 3; ++u) {
    const ThreeCocycle w = pq_cocycle(g, u);
    CHECK(w.modulus() == 9);
    CHECK(!w.validate());
  }
  CHECK_THROWS_AS(pq_cocycle(g, 3), ParameterError);
}

TEST_CASE("inflation from Z/p matches the pq cocycle") {
  const GroupPtr g = shared(pq_group(3, 7));
  const GroupPtr c = shared(cyclic_group(3));
  std::vector<Element> proj(21);
  for (int x = 0; x < 21; ++x) proj[x] = x % 3;
  for (int u = 0; u < 3; ++u) CHECK(inflate(cyclic_cocycle(c, u), g, proj) == pq_cocycle(g, u));
  std::vector<Element> bad(21, 1);
  CHECK_THROWS_AS(inflate(cyclic_cocycle(c, 1), g, bad), ValidationError);
}

TEST_CASE("validation pinpoints a perturbed entry") {
  const GroupPtr g = shared(pq_group(3, 7));
  auto values = pq_cocycle(g, 1).values();
  values[(1 * 21 + 2) * 21 + 4] += 1;
  const ThreeCocycle w(g, 9, values);
  auto bad = w.validate();
  REQUIRE(bad);
  CHECK(bad->kind == CocycleViolation::Kind::kCocycleIdentity);
  CHECK_THROWS_AS(w.require_valid(), ValidationError);
  auto unnormalized = pq_cocycle(g, 1).values();
  unnormalized[5] = 1;
  CHECK(ThreeCocycle(g, 9, unnormalized).validate()->kind == CocycleViolation::Kind::kNotNormalized);
}

TEST_CASE("alpha on centralizers is a coboundary") {
  const GroupPtr g = shared(pq_group(5, 11));
  for (int u = 0; u < 5; ++u) {
    const ThreeCocycle w = pq_cocycle(g, u);
    for (const auto& cls : g->conjugacy_classes()) {
      const TwoCocycle a = alpha(w, cls.representative);
      CHECK(!a.cocycle_violation());
      if (!g->is_abelian(a.domain)) {
        CHECK_THROWS_AS(solve_coboundary(a), UnsolvableCoboundary);
        continue;
      }
      const OneCochain mu = solve_coboundary(a);
      // independent check of d mu = alpha over the centralizer
      for (Element x : a.domain) {
        for (Element y : a.domain) {
          const long lhs = mu.at(x) + mu.at(y) - mu.at(g->mul(x, y));
          const long rhs = w.alpha(cls.representative, x, y) * (mu.modulus / w.modulus());
          CHECK(mod_floor(lhs - rhs, mu.modulus) == 0);
        }
      }
    }
  }
}

TEST_CASE("alpha on the b-line has the closed form") {
  const GroupPtr g = shared(pq_group(3, 7));
  const int p = 3;
  for (int u = 0; u < p; ++u) {
    const ThreeCocycle w = pq_cocycle(g, u);
    for (int k = 0; k < p; ++k) {
      for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
          const long expected = mod_floor(static_cast<long>(u) * k * (i + j - (i + j) % p), 9);
          CHECK(w.alpha(k, i, j) == expected);
        }
      }
    }
  }
}

TEST_CASE("coboundary on Z/2 needs the extended modulus") {
  const GroupPtr z2 = std::make_shared<const FiniteGroup>(cyclic_group(2));
  TwoCocycle a;
  a.group = z2;
  a.domain = {0, 1};
  a.modulus = 2;
  a.values = {0, 0, 0, 1};
  REQUIRE_FALSE(a.cocycle_violation());
  const OneCochain mu = solve_coboundary(a);
  CHECK(mu.modulus == 4);
  CHECK(mu.at(0) == 0);
  CHECK(mu.at(1) % 2 == 1);
  // every mu at modulus 4 with 2 mu(x) = 2
  int solutions = 0;
  for (long m = 0; m < 4; ++m) solutions += (2 * m) % 4 == 2;
  CHECK(solutions == 2);
}

TEST_CASE("pq cocycles add in u") {
  const GroupPtr g = std::make_shared<const FiniteGroup>(pq_group(3, 7));
  for (int u = 0; u < 3; ++u) {
    for (int v = 0; v < 3; ++v) {
      const auto a = pq_cocycle(g, u).values();
      const auto b = pq_cocycle(g, v).values();
      const auto c = pq_cocycle(g, (u + v) % 3).values();
      for (std::size_t i = 0; i < a.size(); ++i) CHECK((a[i] + b[i]) % 9 == c[i]);
    }
  }
}
