#include <algorithm>
#include <numeric>
#include <random>

#include "borromean/matcher.hpp"
#include "borromean/pq_family.hpp"
#include "doctest.h"

using namespace borromean;

namespace {

InvariantBundle random_bundle(std::size_t n, std::mt19937& rng, int alphabet, bool with_s, bool with_b) {
  std::uniform_int_distribution<int> pick(0, alphabet - 1);
  InvariantBundle b;
  for (std::size_t i = 0; i < n; ++i) {
    b.simples.push_back({static_cast<int>(i), 0});
    b.dims.push_back(1 + pick(rng) % 2);
    b.t.push_back(Cyclotomic::root_of_unity(4, pick(rng)));
  }
  if (with_s) {
    CyclotomicMatrix s(n, std::vector<Cyclotomic>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j <= i; ++j) s[i][j] = s[j][i] = Cyclotomic(pick(rng));
    }
    b.s = s;
  }
  if (with_b) {
    BTensor t;
    t.n = n;
    for (std::size_t k = 0; k < n * n * n; ++k) t.values.push_back(Cyclotomic::root_of_unity(3, pick(rng)));
    b.b = t;
  }
  b.normalize();
  return b;
}

// result[perm[i]] = source[i]
InvariantBundle relabel(const InvariantBundle& a, const std::vector<std::size_t>& perm) {
  const std::size_t n = a.size();
  InvariantBundle b = a;
  for (std::size_t i = 0; i < n; ++i) {
    b.simples[perm[i]] = a.simples[i];
    b.dims[perm[i]] = a.dims[i];
    b.t[perm[i]] = a.t[i];
  }
  if (a.s) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) (*b.s)[perm[i]][perm[j]] = (*a.s)[i][j];
    }
  }
  if (a.b) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          b.b->values[b.b->index(perm[i], perm[j], perm[k])] = (*a.b)(i, j, k);
        }
      }
    }
  }
  return b;
}

bool brute_force(const InvariantBundle& a, const InvariantBundle& b, InvariantSet which) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      ok = a.dims[i] == b.dims[perm[i]] && (!which.t || a.t[i] == b.t[perm[i]]);
    }
    for (std::size_t i = 0; i < n && ok && which.s; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) ok = (*a.s)[i][j] == (*b.s)[perm[i]][perm[j]];
    }
    for (std::size_t i = 0; i < n && ok && which.b; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) {
        for (std::size_t k = 0; k < n && ok; ++k) ok = (*a.b)(i, j, k) == (*b.b)(perm[i], perm[j], perm[k]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("invariant set parsing") {
  const auto w = InvariantSet::parse("T, B");
  CHECK(w.t);
  CHECK(w.b);
  CHECK_FALSE(w.s);
  CHECK(w.render() == "T,B");
  CHECK(InvariantSet::parse("S,T").render() == "T,S");
  CHECK_THROWS_AS(InvariantSet::parse("T,X"), ValidationError);
  CHECK_THROWS_AS(InvariantSet::parse(""), ValidationError);
}

TEST_CASE("planted permutations at 25 indices") {
  std::mt19937 rng(20261019);
  const InvariantSet st{true, true, false}, tb{true, false, true};
  for (int trial = 0; trial < 100; ++trial) {
    const bool use_s = trial % 2 == 0;
    const InvariantBundle a = random_bundle(25, rng, 3, use_s, !use_s);
    std::vector<std::size_t> perm(25);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const InvariantBundle b = relabel(a, perm);
    const auto which = use_s ? st : tb;
    const MatchResult r = match(a, b, which);
    REQUIRE(r.found);
    CHECK_FALSE(verify_permutation(a, b, r.permutation, which));
  }
}

TEST_CASE("agreement with brute force on small bundles") {
  std::mt19937 rng(7);
  const std::vector<InvariantSet> sets = {{true, false, false}, {true, true, false}, {true, false, true}, {true, true, true}};
  int found = 0, missing = 0;
  for (int trial = 0; trial < 160; ++trial) {
    const std::size_t n = 3 + trial % 6;
    const InvariantSet which = sets[trial % 4];
    const InvariantBundle a = random_bundle(n, rng, 2, which.s, which.b);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    InvariantBundle b = relabel(a, perm);
    if (trial % 3 != 0) {
      // perturb one coordinate
      std::uniform_int_distribution<std::size_t> idx(0, n - 1);
      const std::size_t i = idx(rng), j = idx(rng), k = idx(rng);
      if (which.b && trial % 3 == 1) {
        b.b->values[b.b->index(i, j, k)] = b.b->values[b.b->index(i, j, k)] + Cyclotomic(1);
      } else if (which.s) {
        (*b.s)[i][j] = (*b.s)[i][j] + Cyclotomic(1);
        if (i != j) (*b.s)[j][i] = (*b.s)[i][j];
      } else {
        b.t[i] = b.t[i] * Cyclotomic::root_of_unity(4, 1);
      }
      b.normalize();
    }
    const MatchResult r = match(a, b, which);
    CHECK(r.found == brute_force(a, b, which));
    if (r.found) {
      ++found;
      CHECK_FALSE(verify_permutation(a, b, r.permutation, which));
    } else {
      ++missing;
      CHECK(r.certificate != MatchCertificate::kNone);
    }
  }
  CHECK(found > 0);
  CHECK(missing > 0);
}

TEST_CASE("certificates and errors") {
  std::mt19937 rng(3);
  const InvariantSet t{true, false, false};
  InvariantBundle a = random_bundle(5, rng, 2, false, false);
  InvariantBundle b = a;
  b.t[0] = b.t[0] * Cyclotomic(-1);
  if (a.t[0] == b.t[0]) b.t[0] = Cyclotomic::root_of_unity(8, 1);
  CHECK(match(a, b, t).certificate == MatchCertificate::kFingerprintMismatch);
  CHECK_THROWS_AS(match(a, random_bundle(6, rng, 2, false, false), t), ValidationError);
  CHECK_THROWS_AS(match(a, a, InvariantSet{true, true, false}), ValidationError);

  std::vector<std::size_t> identity(5);
  std::iota(identity.begin(), identity.end(), 0);
  CHECK_FALSE(verify_permutation(a, a, identity, t));
  const auto bad = verify_permutation(a, b, identity, t);
  REQUIRE(bad);
  CHECK(bad->invariant == 'T');
  CHECK(bad->coordinates == std::vector<std::size_t>{0});

  // all-distinct T: singleton blocks
  InvariantBundle d;
  for (int i = 0; i < 6; ++i) {
    d.simples.push_back({i, 0});
    d.dims.push_back(1);
    d.t.push_back(Cyclotomic::root_of_unity(6, i));
  }
  d.normalize();
  const auto part = fingerprint(d, t);
  CHECK(part.blocks.size() == 6);
}

TEST_CASE("block structure mismatch with equal T multisets") {
  // same T and dims, different S row multisets
  InvariantBundle a;
  for (int i = 0; i < 3; ++i) {
    a.simples.push_back({i, 0});
    a.dims.push_back(1);
    a.t.push_back(Cyclotomic(1));
  }
  InvariantBundle b = a;
  a.s = CyclotomicMatrix(3, std::vector<Cyclotomic>(3, Cyclotomic(1)));
  b.s = a.s;
  (*b.s)[0][1] = (*b.s)[1][0] = Cyclotomic(2);
  const MatchResult r = match(a, b, InvariantSet{true, true, false});
  CHECK_FALSE(r.found);
  CHECK(r.certificate == MatchCertificate::kBlockStructureMismatch);
}

TEST_CASE("wildcard B entries") {
  std::mt19937 rng(11);
  InvariantBundle a = random_bundle(5, rng, 2, false, true);
  InvariantBundle b = a;
  a.b->present.assign(125, 1);
  b.b->present.assign(125, 1);
  a.b->present[a.b->index(1, 2, 3)] = 0;
  b.b->values[b.b->index(1, 2, 3)] = Cyclotomic(99);
  std::vector<std::size_t> identity{0, 1, 2, 3, 4};
  CHECK_FALSE(verify_permutation(a, b, identity, InvariantSet{true, false, true}));
  CHECK(match(a, b, InvariantSet{true, false, true}).found);
}

TEST_CASE("pq(5,11) modular data pairs u with u times a square") {
  const GroupPtr g = std::make_shared<const FiniteGroup>(pq_group(5, 11));
  std::vector<InvariantBundle> bundles;
  for (int u = 0; u < 5; ++u) {
    const ThreeCocycle w = pq_cocycle(g, u);
    BundleRequest request;
    request.s = true;
    bundles.push_back(compute_bundle(TwistedDouble(w, enumerate_simples(w)), request));
  }
  const InvariantSet st{true, true, false};
  const MatchResult r14 = match(bundles[1], bundles[4], st);
  REQUIRE(r14.found);
  CHECK_FALSE(verify_permutation(bundles[1], bundles[4], r14.permutation, st));
  CHECK_FALSE(match(bundles[1], bundles[2], st).found);
  std::vector<std::size_t> identity(49);
  std::iota(identity.begin(), identity.end(), 0);
  const auto bad = verify_permutation(bundles[1], bundles[2], identity, st);
  REQUIRE(bad);
  CHECK(bad->invariant == 'T');
  const auto part = fingerprint(bundles[1], st);
  std::size_t covered = 0;
  for (const auto& block : part.blocks) covered += block.size();
  CHECK(covered == 49);
  CHECK(part.blocks.size() < 49);
}
