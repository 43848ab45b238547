#include <memory>

#include "borromean/oracle.hpp"
#include "doctest.h"

using namespace borromean;

namespace {

GroupPtr make(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

bool is_identity(const MonomialMap& m) {
  for (std::size_t v = 0; v < m.target.size(); ++v) {
    if (m.target[v] != static_cast<int>(v) || m.exponent[v] != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("braid word syntax") {
  const auto w = parse_braid_word("s2' s1  s2 s1'");
  REQUIRE(w.size() == 4);
  CHECK(w[0] == BraidGenerator::kS2Inv);
  CHECK(w[3] == BraidGenerator::kS1Inv);
  CHECK(render_braid_word(w) == "s2' s1 s2 s1'");
  CHECK(render_braid_word(borromean_word()) == "s2' s1 s2' s1 s2' s1");
  CHECK_THROWS_AS(parse_braid_word("s1 s3"), ValidationError);
  CHECK(parse_braid_word("").empty());
}

TEST_CASE("explicit simples satisfy the quasi-action axioms") {
  const GroupPtr g = make(pq_group(3, 7));
  for (int u = 0; u < 3; ++u) {
    const ThreeCocycle w = pq_cocycle(g, u);
    const auto simples = enumerate_simples(w);
    const BraidOracle oracle(w, simples);
    for (std::size_t i = 0; i < oracle.size(); ++i) {
      CHECK(oracle.simple(i).dim == simples[i].dimension);
      CHECK_FALSE(verify_quasi_action(oracle.simple(i), w));
    }
  }
}

TEST_CASE("braid group relations as monomial maps") {
  const GroupPtr g = make(pq_group(3, 7));
  const ThreeCocycle w = pq_cocycle(g, 2);
  const auto simples = enumerate_simples(w);
  const BraidOracle first(w, simples, InverseForm::kFirst);
  const BraidOracle second(w, simples, InverseForm::kSecond);
  const std::vector<std::array<std::size_t, 3>> triples = {{5, 5, 5}, {3, 8, 20}, {22, 6, 11}, {0, 17, 24}, {12, 12, 21}};
  for (const auto& c : triples) {
    CHECK(is_identity(first.word_map(parse_braid_word("s1' s1"), c)));
    CHECK(is_identity(first.word_map(parse_braid_word("s1 s1'"), c)));
    CHECK(is_identity(first.word_map(parse_braid_word("s2' s2"), c)));
    CHECK(is_identity(first.word_map(parse_braid_word("s2 s2'"), c)));
    std::array<std::size_t, 3> ca{}, cb{};
    const auto lhs = first.word_map(parse_braid_word("s1 s2 s1"), c, &ca);
    const auto rhs = first.word_map(parse_braid_word("s2 s1 s2"), c, &cb);
    CHECK(ca == cb);
    CHECK(lhs == rhs);
    for (const char* word : {"s1'", "s2'", "s2' s1 s2' s1 s2' s1"}) {
      CHECK(first.word_map(parse_braid_word(word), c) == second.word_map(parse_braid_word(word), c));
    }
  }
}

TEST_CASE("trace rejects color-permuting closures") {
  const GroupPtr g = make(pq_group(3, 7));
  const ThreeCocycle w = pq_cocycle(g, 1);
  const BraidOracle oracle(w, enumerate_simples(w));
  CHECK_THROWS_AS(oracle.trace(parse_braid_word("s1"), {1, 2, 0}), ValidationError);
  CHECK_NOTHROW(oracle.trace(parse_braid_word("s1"), {2, 2, 0}));
}

TEST_CASE("unit strands and the Borromean closure") {
  const GroupPtr g = make(pq_group(3, 7));
  const ThreeCocycle w = pq_cocycle(g, 1);
  const auto simples = enumerate_simples(w);
  const BraidOracle oracle(w, simples);
  for (std::size_t i = 0; i < simples.size(); ++i) {
    for (std::size_t j = 0; j < simples.size(); ++j) {
      const Cyclotomic expected(simples[i].dimension * simples[j].dimension);
      CHECK(oracle.trace(borromean_word(), {i, j, 0}) == expected);
      CHECK(oracle.trace({}, {i, j, 0}) == expected);
    }
  }
}

TEST_CASE("oracle agrees with the general B formula on sampled entries") {
  const GroupPtr g = make(pq_group(3, 7));
  for (int u = 0; u < 3; ++u) {
    const ThreeCocycle w = pq_cocycle(g, u);
    const auto simples = enumerate_simples(w);
    const BraidOracle oracle(w, simples);
    const TwistedDouble cat(w, simples);
    for (std::size_t i = 1; i < simples.size(); i += 4) {
      for (std::size_t j = 2; j < simples.size(); j += 5) {
        for (std::size_t k = 3; k < simples.size(); k += 3) {
          CHECK(cat.b_entry_general(i, j, k) == oracle.trace(borromean_word(), {i, j, k}));
        }
      }
    }
  }
}
