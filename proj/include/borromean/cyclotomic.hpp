#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A value is stored at a conductor N as its residue modulo the N-th
// cyclotomic polynomial: a sparse list of (exponent, rational) terms with
// exponents in [0, phi(N)). Binary operations lift both operands to the lcm
// of their conductors. No attempt is made to find a minimal conductor.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace borromean {

using Rational = mpq_class;

/// Coefficients of Phi_n, lowest degree first. Degree is phi(n).
const std::vector<long>& cyclotomic_polynomial(int n);

int euler_phi(int n);
long gcd_long(long a, long b);
long lcm_long(long a, long b);
/// Non-negative residue of `a` modulo `m`.
inline long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

/// A root of unity exp(2*pi*i*value/modulus) held as an integer exponent.
struct RootOfUnityExponent {
  long modulus = 1;
  long value = 0;

  RootOfUnityExponent() = default;
  RootOfUnityExponent(long m, long v) : modulus(m), value(mod_floor(v, m)) {}

  RootOfUnityExponent operator*(const RootOfUnityExponent& o) const;
  RootOfUnityExponent inverse() const { return {modulus, -value}; }
  /// Exponent of the same root at a modulus that is a multiple of `modulus`.
  long at(long m) const { return value * (m / modulus); }
  bool is_one() const { return value == 0; }
  friend bool operator==(const RootOfUnityExponent& a, const RootOfUnityExponent& b) {
    return a.value * b.modulus == b.value * a.modulus;
  }
};

class Cyclotomic {
 public:
  using Term = std::pair<int, Rational>;

  /// Zero.
  Cyclotomic() = default;
  Cyclotomic(long integer);  // NOLINT(google-explicit-constructor)
  explicit Cyclotomic(const Rational& r);

  static Cyclotomic root_of_unity(long n, long k);
  /// Value sum_k coeffs[k] * zeta_n^k with exponents taken modulo n.
  static Cyclotomic from_dense(long n, std::span<const Rational> coeffs);
  static Cyclotomic from_dense_integers(long n, std::span<const std::int64_t> coeffs);
  /// Arbitrary (exponent, coefficient) pairs; exponents are taken modulo n.
  static Cyclotomic from_terms(long n, std::span<const Term> terms);

  long conductor() const { return conductor_; }
  /// Canonical nonzero terms in ascending exponent order.
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// The same value at a conductor that is a multiple of conductor().
  Cyclotomic lifted(long m) const;
  Cyclotomic conjugate() const;
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  /// Multiplicative inverse of a nonzero root of unity times a rational.
  /// Throws for values that are not of that shape.
  Cyclotomic monomial_inverse() const;

  std::complex<double> to_complex() const;
  std::optional<Rational> as_rational() const;
  /// If the value is sign * zeta_N^j with N = conductor(), returns (sign, j).
  std::optional<std::pair<int, long>> as_signed_root() const;
  /// If the value is a root of unity, its order and exponent in lowest terms.
  std::optional<std::pair<long, long>> as_root_of_unity() const;
  /// True when every canonical coefficient is an integer.
  bool is_integral() const;

  /// Strict weak order on values that share a conductor. Callers must lift
  /// to a common conductor first.
  static bool same_conductor_less(const Cyclotomic& a, const Cyclotomic& b);

 private:
  static Cyclotomic reduce_dense(long n, std::vector<Rational> coeffs);

  long conductor_ = 1;
  std::vector<Term> terms_;
};

/// Deterministic text form; ascending exponent order.
std::string render(const Cyclotomic& x);
/// Grammar: optional sign, then terms joined by + or -; each term is a
/// rational `p` or `p/q`, `E(N)`, `E(N)^k`, or `c*E(N)^k`.
Cyclotomic parse_cyclotomic(std::string_view text);

/// Dense integer accumulator over Z[x]/(x^N - 1) used by hot loops. All
/// arithmetic is exact; reduction modulo Phi_N happens in to_cyclotomic().
class CyclotomicAccumulator {
 public:
  explicit CyclotomicAccumulator(long conductor);

  long conductor() const { return conductor_; }
  void clear();
  void add_root(long exponent, std::int64_t coeff = 1);
  Cyclotomic to_cyclotomic() const;

 private:
  long conductor_;
  std::vector<std::int64_t> coeffs_;
};

/// Sparse integer terms of a value at a fixed conductor, without reduction.
/// Roots of unity become a single term; other values use their canonical
/// terms rescaled to the target conductor.
struct IntegralTerms {
  std::vector<std::pair<long, std::int64_t>> terms;
};

/// Throws ValidationError if `x` has non-integer coefficients or its
/// conductor does not divide `conductor`.
IntegralTerms integral_terms(const Cyclotomic& x, long conductor);

}  // namespace borromean
