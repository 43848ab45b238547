#include "borromean/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "borromean/error.hpp"

namespace borromean {

namespace {

struct PolynomialCache {
  std::mutex mutex;
  std::map<int, std::vector<long>> polys;
};

PolynomialCache& polynomial_cache() {
  static PolynomialCache cache;
  return cache;
}

std::vector<long> compute_cyclotomic(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<long> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<long>& divisor = cyclotomic_polynomial(d);
    const int dd = static_cast<int>(divisor.size()) - 1;
    const int dp = static_cast<int>(poly.size()) - 1;
    std::vector<long> quotient(dp - dd + 1, 0);
    for (int i = dp; i >= dd; --i) {
      const long c = poly[i];
      if (c == 0) continue;
      quotient[i - dd] = c;
      for (int j = 0; j <= dd; ++j) poly[i - dd + j] -= c * divisor[j];
    }
    for (int i = 0; i < dd; ++i) {
      if (poly[i] != 0) throw InternalConsistencyError("cyclotomic division left a remainder");
    }
    poly = std::move(quotient);
  }
  return poly;
}

/// Nonzero coefficients of Phi_n below the leading term.
struct ReductionRule {
  int phi = 0;
  std::vector<std::pair<int, long>> tail;
};

ReductionRule reduction_rule(long n) {
  const std::vector<long>& poly = cyclotomic_polynomial(static_cast<int>(n));
  ReductionRule rule;
  rule.phi = static_cast<int>(poly.size()) - 1;
  for (int i = 0; i < rule.phi; ++i) {
    if (poly[i] != 0) rule.tail.emplace_back(i, poly[i]);
  }
  return rule;
}

template <typename Coeff>
void reduce_in_place(long n, std::vector<Coeff>& coeffs) {
  const ReductionRule rule = reduction_rule(n);
  for (long deg = n - 1; deg >= rule.phi; --deg) {
    if (coeffs[deg] == 0) continue;
    const Coeff c = coeffs[deg];
    coeffs[deg] = 0;
    const long shift = deg - rule.phi;
    for (const auto& [i, pc] : rule.tail) coeffs[shift + i] -= c * pc;
  }
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int n) {
  if (n < 1) throw ParameterError("cyclotomic polynomial needs n >= 1");
  PolynomialCache& cache = polynomial_cache();
  {
    std::lock_guard lock(cache.mutex);
    auto it = cache.polys.find(n);
    if (it != cache.polys.end()) return it->second;
  }
  std::vector<long> poly;
  if (n == 1) {
    poly = {-1, 1};
  } else {
    poly = compute_cyclotomic(n);
  }
  std::lock_guard lock(cache.mutex);
  auto [it, inserted] = cache.polys.emplace(n, std::move(poly));
  return it->second;
}

int euler_phi(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

long gcd_long(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long lcm_long(long a, long b) { return a / gcd_long(a, b) * b; }

RootOfUnityExponent RootOfUnityExponent::operator*(const RootOfUnityExponent& o) const {
  const long m = lcm_long(modulus, o.modulus);
  return {m, at(m) + o.at(m)};
}

Cyclotomic::Cyclotomic(long integer) : Cyclotomic(Rational(integer)) {}

Cyclotomic::Cyclotomic(const Rational& r) {
  if (r != 0) {
    terms_.emplace_back(0, r);
    terms_.back().second.canonicalize();
  }
}

Cyclotomic Cyclotomic::reduce_dense(long n, std::vector<Rational> coeffs) {
  reduce_in_place(n, coeffs);
  Cyclotomic out;
  out.conductor_ = n;
  const int phi = euler_phi(static_cast<int>(n));
  for (int k = 0; k < phi; ++k) {
    if (coeffs[k] != 0) {
      coeffs[k].canonicalize();
      out.terms_.emplace_back(k, std::move(coeffs[k]));
    }
  }
  return out;
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
  if (n < 1) throw ParameterError("root of unity needs N >= 1");
  std::vector<Rational> dense(n);
  dense[mod_floor(k, n)] = 1;
  return reduce_dense(n, std::move(dense));
}

Cyclotomic Cyclotomic::from_dense(long n, std::span<const Rational> coeffs) {
  if (n < 1) throw ParameterError("conductor must be positive");
  std::vector<Rational> dense(n);
  for (std::size_t k = 0; k < coeffs.size(); ++k) dense[k % n] += coeffs[k];
  return reduce_dense(n, std::move(dense));
}

Cyclotomic Cyclotomic::from_dense_integers(long n, std::span<const std::int64_t> coeffs) {
  if (n < 1) throw ParameterError("conductor must be positive");
  std::vector<std::int64_t> dense(n, 0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) dense[k % n] += coeffs[k];
  reduce_in_place(n, dense);
  Cyclotomic out;
  out.conductor_ = n;
  const int phi = euler_phi(static_cast<int>(n));
  for (int k = 0; k < phi; ++k) {
    if (dense[k] != 0) out.terms_.emplace_back(k, Rational(static_cast<long>(dense[k])));
  }
  return out;
}

Cyclotomic Cyclotomic::from_terms(long n, std::span<const Term> terms) {
  if (n < 1) throw ParameterError("conductor must be positive");
  std::vector<Rational> dense(n);
  for (const auto& [k, c] : terms) dense[mod_floor(k, n)] += c;
  return reduce_dense(n, std::move(dense));
}

Cyclotomic Cyclotomic::lifted(long m) const {
  if (m == conductor_) return *this;
  if (m % conductor_ != 0) throw InternalConsistencyError("lift target is not a multiple of the conductor");
  const long scale = m / conductor_;
  std::vector<Rational> dense(m);
  for (const auto& [k, c] : terms_) dense[k * scale] = c;
  return reduce_dense(m, std::move(dense));
}

Cyclotomic Cyclotomic::conjugate() const {
  std::vector<Rational> dense(conductor_);
  for (const auto& [k, c] : terms_) dense[mod_floor(-k, conductor_)] += c;
  return reduce_dense(conductor_, std::move(dense));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& term : out.terms_) term.second = -term.second;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  const long m = lcm_long(conductor_, o.conductor_);
  const Cyclotomic a = lifted(m);
  const Cyclotomic b = o.lifted(m);
  std::vector<Term> merged;
  merged.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
      merged.push_back(*ia++);
    } else if (ia == a.terms_.end() || ib->first < ia->first) {
      merged.push_back(*ib++);
    } else {
      Rational c = ia->second + ib->second;
      if (c != 0) merged.emplace_back(ia->first, std::move(c));
      ++ia;
      ++ib;
    }
  }
  conductor_ = m;
  terms_ = std::move(merged);
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  const long m = lcm_long(a.conductor_, b.conductor_);
  if (a.is_zero() || b.is_zero()) {
    Cyclotomic zero;
    zero.conductor_ = m;
    return zero;
  }
  const long sa = m / a.conductor_;
  const long sb = m / b.conductor_;
  std::vector<Rational> dense(m);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) dense[(ka * sa + kb * sb) % m] += ca * cb;
  }
  return Cyclotomic::reduce_dense(m, std::move(dense));
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) { return *this = *this * o; }

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  if (r == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& term : terms_) {
    term.second *= r;
    term.second.canonicalize();
  }
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.terms_ == b.terms_;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const long m = lcm_long(a.conductor_, b.conductor_);
  return a.lifted(m).terms_ == b.lifted(m).terms_;
}

Cyclotomic Cyclotomic::monomial_inverse() const {
  if (auto r = as_rational()) {
    if (*r == 0) throw ValidationError("inverse of zero");
    return Cyclotomic(Rational(1) / *r);
  }
  if (auto root = as_signed_root()) {
    return root_of_unity(conductor_, -root->second) * Rational(root->first);
  }
  throw ValidationError("monomial_inverse needs a signed root of unity or a rational");
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z = 0;
  for (const auto& [k, c] : terms_) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(conductor_);
    z += c.get_d() * std::polar(1.0, angle);
  }
  return z;
}

std::optional<Rational> Cyclotomic::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.front().first == 0) return terms_.front().second;
  return std::nullopt;
}

std::optional<std::pair<int, long>> Cyclotomic::as_signed_root() const {
  const std::complex<double> z = to_complex();
  if (std::abs(std::abs(z) - 1.0) > 1e-6) return std::nullopt;
  const double turns = std::arg(z) / (2.0 * std::numbers::pi);
  for (int sign : {1, -1}) {
    const double t = sign == 1 ? turns : turns - 0.5;
    const long j = mod_floor(std::lround(t * static_cast<double>(conductor_)), conductor_);
    Cyclotomic candidate = root_of_unity(conductor_, j);
    if (sign == -1) candidate = -candidate;
    if (candidate == *this) return std::make_pair(sign, j);
  }
  return std::nullopt;
}

std::optional<std::pair<long, long>> Cyclotomic::as_root_of_unity() const {
  const auto root = as_signed_root();
  if (!root) return std::nullopt;
  long modulus = conductor_;
  long exponent = root->second;
  if (root->first == -1) {
    modulus = 2 * conductor_;
    exponent = 2 * exponent + conductor_;
  }
  exponent = mod_floor(exponent, modulus);
  const long g = gcd_long(exponent, modulus);
  if (exponent == 0) return std::make_pair(1L, 0L);
  return std::make_pair(modulus / g, exponent / g);
}

bool Cyclotomic::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.second.get_den() == 1; });
}

bool Cyclotomic::same_conductor_less(const Cyclotomic& a, const Cyclotomic& b) {
  return a.terms_ < b.terms_;
}

namespace {

std::string rational_text(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace

std::string render(const Cyclotomic& x) {
  if (x.is_zero()) return "0";
  if (auto root = x.as_root_of_unity()) {
    const auto [order, exponent] = *root;
    if (order == 1) return "1";
    if (order == 2) return "-1";
    return "E(" + std::to_string(order) + ")^" + std::to_string(exponent);
  }
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x.terms()) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += rational_text(magnitude);
      continue;
    }
    if (magnitude != 1) out += rational_text(magnitude) + "*";
    out += "E(" + std::to_string(x.conductor()) + ")^" + std::to_string(k);
  }
  return out;
}

namespace {

class CyclotomicParser {
 public:
  explicit CyclotomicParser(std::string_view text) : text_(text) {}

  Cyclotomic parse() {
    skip_ws();
    if (at_end()) fail("empty expression");
    Cyclotomic total;
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Cyclotomic term = parse_term();
      if (sign < 0) term = -term;
      total += term;
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return total;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  mpz_class parse_unsigned() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  long parse_small_signed() {
    bool negative = false;
    if (!at_end() && peek() == '-') {
      negative = true;
      ++pos_;
    }
    const std::size_t start = pos_;
    mpz_class v = parse_unsigned();
    if (!v.fits_slong_p()) throw ParseError("integer out of range", start);
    return negative ? -v.get_si() : v.get_si();
  }

  Cyclotomic parse_root() {
    // at 'E'
    ++pos_;
    skip_ws();
    if (at_end() || peek() != '(') fail("expected '('");
    ++pos_;
    skip_ws();
    const std::size_t n_pos = pos_;
    const long n = parse_small_signed();
    if (n < 1) throw ParseError("E(N) needs N >= 1", n_pos);
    skip_ws();
    if (at_end() || peek() != ')') fail("expected ')'");
    ++pos_;
    long k = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      k = parse_small_signed();
    }
    return Cyclotomic::root_of_unity(n, k);
  }

  Cyclotomic parse_term() {
    if (at_end()) fail("expected term");
    if (peek() == 'E') return parse_root();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected number or E(N)");
    mpz_class num = parse_unsigned();
    mpz_class den = 1;
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t den_pos = pos_;
      den = parse_unsigned();
      if (den == 0) throw ParseError("zero denominator", den_pos);
    }
    Rational coeff(num, den);
    coeff.canonicalize();
    skip_ws();
    if (!at_end() && peek() == '*') {
      ++pos_;
      skip_ws();
      if (at_end() || peek() != 'E') fail("expected E(N) after '*'");
      return parse_root() * coeff;
    }
    return Cyclotomic(coeff);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Cyclotomic parse_cyclotomic(std::string_view text) { return CyclotomicParser(text).parse(); }

CyclotomicAccumulator::CyclotomicAccumulator(long conductor)
    : conductor_(conductor), coeffs_(conductor, 0) {
  if (conductor < 1) throw ParameterError("accumulator conductor must be positive");
}

void CyclotomicAccumulator::clear() { std::fill(coeffs_.begin(), coeffs_.end(), 0); }

void CyclotomicAccumulator::add_root(long exponent, std::int64_t coeff) {
  coeffs_[mod_floor(exponent, conductor_)] += coeff;
}

Cyclotomic CyclotomicAccumulator::to_cyclotomic() const {
  return Cyclotomic::from_dense_integers(conductor_, coeffs_);
}

IntegralTerms integral_terms(const Cyclotomic& x, long conductor) {
  if (conductor % x.conductor() != 0) {
    throw ValidationError("value conductor " + std::to_string(x.conductor()) +
                          " does not divide " + std::to_string(conductor));
  }
  const long scale = conductor / x.conductor();
  IntegralTerms out;
  if (x.is_zero()) return out;
  if (auto root = x.as_signed_root()) {
    out.terms.emplace_back(root->second * scale, root->first);
    return out;
  }
  for (const auto& [k, c] : x.terms()) {
    if (c.get_den() != 1 || !c.get_num().fits_slong_p()) {
      throw ValidationError("value " + render(x) + " is not an algebraic integer in the power basis");
    }
    out.terms.emplace_back(k * scale, c.get_num().get_si());
  }
  return out;
}

}  // namespace borromean
