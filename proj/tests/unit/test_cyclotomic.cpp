#include <cmath>
#include <complex>
#include <random>

#include "borromean/cyclotomic.hpp"
#include "borromean/error.hpp"
#include "doctest.h"

using namespace borromean;

namespace {

std::complex<double> zeta(long n, long k) {
  const double t = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n);
  return {std::cos(t), std::sin(t)};
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(9) == std::vector<long>{1, 0, 0, 1, 0, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  for (int n = 1; n <= 60; ++n) {
    const auto& phi = cyclotomic_polynomial(n);
    CHECK(static_cast<int>(phi.size()) - 1 == euler_phi(n));
    // every primitive n-th root is a zero
    for (int k = 1; k <= n; ++k) {
      if (gcd_long(k, n) != 1) continue;
      std::complex<double> v = 0;
      for (std::size_t i = 0; i < phi.size(); ++i) v += static_cast<double>(phi[i]) * zeta(n, k * static_cast<long>(i));
      CHECK(std::abs(v) < 1e-7);
    }
  }
}

TEST_CASE("roots of unity cancel") {
  CHECK((Cyclotomic::root_of_unity(4, 1) + Cyclotomic::root_of_unity(4, 3)).is_zero());
  Cyclotomic s;
  for (int k = 0; k < 15; ++k) s += Cyclotomic::root_of_unity(15, k);
  CHECK(s.is_zero());
  CHECK(Cyclotomic::root_of_unity(6, 3) == Cyclotomic(-1));
  CHECK(Cyclotomic::root_of_unity(3, 1) * Cyclotomic::root_of_unity(5, 2) == Cyclotomic::root_of_unity(15, 11));
}

TEST_CASE("arithmetic agrees with complex evaluation") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-5, 5);
  const long conductors[] = {1, 3, 4, 7, 9, 12, 21, 25, 35};
  for (int trial = 0; trial < 200; ++trial) {
    const long n1 = conductors[rng() % 9], n2 = conductors[rng() % 9];
    std::vector<Rational> c1(n1), c2(n2);
    std::complex<double> z1 = 0, z2 = 0;
    for (long k = 0; k < n1; ++k) {
      c1[k] = Rational(coeff(rng), 1 + rng() % 3);
      z1 += c1[k].get_d() * zeta(n1, k);
    }
    for (long k = 0; k < n2; ++k) {
      c2[k] = coeff(rng);
      z2 += c2[k].get_d() * zeta(n2, k);
    }
    const Cyclotomic a = Cyclotomic::from_dense(n1, c1), b = Cyclotomic::from_dense(n2, c2);
    CHECK(close(a.to_complex(), z1));
    CHECK(close((a + b).to_complex(), z1 + z2));
    CHECK(close((a - b).to_complex(), z1 - z2));
    CHECK(close((a * b).to_complex(), z1 * z2));
    CHECK(close(a.conjugate().to_complex(), std::conj(z1)));
    CHECK((a - a).is_zero());
    CHECK(a.lifted(a.conductor() * 4) == a);
    CHECK(parse_cyclotomic(render(a)) == a);
  }
}

TEST_CASE("root of unity detection") {
  auto r = Cyclotomic::root_of_unity(12, 8).as_root_of_unity();
  REQUIRE(r);
  CHECK(r->first == 3);
  CHECK(r->second == 2);
  CHECK(!(Cyclotomic(2)).as_root_of_unity());
  CHECK(render(Cyclotomic::root_of_unity(12, 8)) == "E(3)^2");
  CHECK(render(Cyclotomic(-1)) == "-1");
  CHECK(render(Cyclotomic()) == "0");
  auto sr = (-Cyclotomic::root_of_unity(7, 3)).as_signed_root();
  REQUIRE(sr);
  CHECK(sr->first == -1);
  CHECK(sr->second == 3);
  CHECK(Cyclotomic::root_of_unity(9, 4).monomial_inverse() == Cyclotomic::root_of_unity(9, 5));
}

TEST_CASE("parser") {
  CHECK(parse_cyclotomic("E(4) + E(4)^3").is_zero());
  CHECK(parse_cyclotomic("-1/2 + 3*E(5)^-1") == Cyclotomic(Rational(-1, 2)) + Cyclotomic(3) * Cyclotomic::root_of_unity(5, 4));
  CHECK_THROWS_AS(parse_cyclotomic("E(4"), ParseError);
  CHECK_THROWS_AS(parse_cyclotomic("1 +"), ParseError);
  try {
    parse_cyclotomic("2 * x");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() >= 2);
  }
}

TEST_CASE("accumulator and integral terms") {
  CyclotomicAccumulator acc(12);
  const Cyclotomic x = Cyclotomic::root_of_unity(3, 1) + Cyclotomic(2) * Cyclotomic::root_of_unity(4, 1);
  for (const auto& [e, c] : integral_terms(x, 12).terms) acc.add_root(e, c);
  acc.add_root(6, 3);
  CHECK(acc.to_cyclotomic() == x + Cyclotomic(-3));
  CHECK_THROWS_AS(integral_terms(Cyclotomic(Rational(1, 2)), 12), ValidationError);
}
