#include "borromean/cocycles.hpp"

#include <algorithm>
#include <numeric>

#include "borromean/cyclotomic.hpp"
#include "borromean/error.hpp"

namespace borromean {

namespace {

std::string elements_text(const std::vector<Element>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(xs[i]);
  }
  return out + ")";
}

int position_in(const std::vector<Element>& sorted, Element x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  if (it == sorted.end() || *it != x) return -1;
  return static_cast<int>(it - sorted.begin());
}

/// Least c in [0, m) with a*c = b (mod m), if any.
std::optional<long> solve_linear(long a, long b, long m) {
  a = mod_floor(a, m);
  b = mod_floor(b, m);
  const long g = gcd_long(a, m);
  if (b % g != 0) return std::nullopt;
  const long mg = m / g;
  if (mg == 1) return 0;
  // inverse of a/g modulo m/g
  long old_r = (a / g) % mg, r = mg, old_s = 1, s = 0;
  while (r != 0) {
    const long qt = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - qt * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - qt * s);
  }
  return mod_floor((b / g) % mg * mod_floor(old_s, mg), mg);
}

std::optional<OneCochain> solve_at(const TwoCocycle& alpha, long modulus) {
  const FiniteGroup& G = *alpha.group;
  const long scale = modulus / alpha.modulus;
  const std::size_t h = alpha.domain.size();
  std::vector<long> mu(h, 0);
  std::vector<char> known(h, 0);
  std::vector<Element> span{kIdentity};
  known[alpha.position(kIdentity)] = 1;
  auto a = [&](Element x, Element y) { return alpha.at(x, y) * scale; };
  for (Element gen : alpha.domain) {
    if (known[alpha.position(gen)]) continue;
    // m = least positive with gen^m in the current span
    int m = 1;
    Element power = gen;
    std::vector<Element> powers{kIdentity, gen};
    while (!known[alpha.position(power)]) {
      power = G.mul(power, gen);
      powers.push_back(power);
      ++m;
    }
    // mu(gen^j) = j*c - sum_{i<j} alpha(gen^i, gen); gen^m lands on a known element.
    long offset = 0;  // -sum alpha(gen^i, gen) for i < m
    for (int i = 1; i < m; ++i) offset -= a(powers[i], gen);
    const long target = mu[alpha.position(power)];
    auto c = solve_linear(m, target - offset, modulus);
    if (!c) return std::nullopt;
    std::vector<long> gen_mu(m, 0);
    long acc = 0;
    for (int j = 1; j < m; ++j) {
      if (j > 1) acc -= a(powers[j - 1], gen);
      gen_mu[j] = mod_floor(j * *c + acc, modulus);
    }
    // extend over span * <gen>: mu(s g^j) = mu(s) + mu(g^j) - alpha(s, g^j)
    std::vector<Element> next = span;
    for (Element s : span) {
      for (int j = 1; j < m; ++j) {
        const Element x = G.mul(s, powers[j]);
        const int pos = alpha.position(x);
        if (known[pos]) continue;
        mu[pos] = mod_floor(mu[alpha.position(s)] + gen_mu[j] - a(s, powers[j]), modulus);
        known[pos] = 1;
        next.push_back(x);
      }
    }
    span = std::move(next);
  }
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < h; ++j) {
      const Element xy = G.mul(alpha.domain[i], alpha.domain[j]);
      const long lhs = mu[i] + mu[j] - mu[alpha.position(xy)];
      if (mod_floor(lhs - alpha(i, j) * scale, modulus) != 0) return std::nullopt;
    }
  }
  return OneCochain{alpha.domain, modulus, std::move(mu)};
}

}  // namespace

std::string CocycleViolation::describe() const {
  if (kind == Kind::kNotNormalized) return "cocycle is not normalized at " + elements_text(elements);
  return "cocycle identity fails at " + elements_text(elements);
}

ThreeCocycle::ThreeCocycle(GroupPtr group, long modulus, std::vector<long> values)
    : group_(std::move(group)), order_(group_->order()), modulus_(modulus), values_(std::move(values)) {
  if (modulus_ < 1) throw ValidationError("cocycle modulus must be positive");
  const std::size_t n = static_cast<std::size_t>(order_);
  if (values_.size() != n * n * n) {
    throw ValidationError("cocycle table has " + std::to_string(values_.size()) + " entries, expected " +
                          std::to_string(n * n * n));
  }
  for (long& v : values_) v = mod_floor_(v);
}

ThreeCocycle ThreeCocycle::trivial(GroupPtr group) {
  const std::size_t n = static_cast<std::size_t>(group->order());
  return ThreeCocycle(std::move(group), 1, std::vector<long>(n * n * n, 0));
}

std::optional<CocycleViolation> ThreeCocycle::validate() const {
  const FiniteGroup& G = *group_;
  const int n = order_;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if ((x == 0 || y == 0 || z == 0) && (*this)(x, y, z) != 0) {
          return CocycleViolation{CocycleViolation::Kind::kNotNormalized, {x, y, z}};
        }
      }
    }
  }
  for (int x = 1; x < n; ++x) {
    for (int y = 1; y < n; ++y) {
      const Element xy = G.mul(x, y);
      for (int z = 1; z < n; ++z) {
        const Element yz = G.mul(y, z);
        const long wxyz = (*this)(x, y, z);
        for (int w = 1; w < n; ++w) {
          const long lhs = (*this)(y, z, w) + (*this)(x, yz, w) + wxyz;
          const long rhs = (*this)(xy, z, w) + (*this)(x, y, G.mul(z, w));
          if ((lhs - rhs) % modulus_ != 0) {
            return CocycleViolation{CocycleViolation::Kind::kCocycleIdentity, {x, y, z, w}};
          }
        }
      }
    }
  }
  return std::nullopt;
}

const ThreeCocycle& ThreeCocycle::require_valid() const {
  if (auto violation = validate()) throw ValidationError(violation->describe());
  return *this;
}

int TwoCocycle::position(Element x) const { return position_in(domain, x); }

bool TwoCocycle::is_symmetric() const {
  const std::size_t h = domain.size();
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = i + 1; j < h; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

std::optional<std::vector<Element>> TwoCocycle::cocycle_violation() const {
  const FiniteGroup& G = *group;
  for (Element x : domain) {
    for (Element y : domain) {
      const Element xy = G.mul(x, y);
      for (Element z : domain) {
        const long lhs = at(x, y) + at(xy, z);
        const long rhs = at(y, z) + at(x, G.mul(y, z));
        if ((lhs - rhs) % modulus != 0) return std::vector<Element>{x, y, z};
      }
    }
  }
  return std::nullopt;
}

int OneCochain::position(Element x) const { return position_in(domain, x); }

TwoCocycle alpha_on(const ThreeCocycle& omega, Element g, std::span<const Element> subgroup) {
  TwoCocycle out;
  out.group = omega.group();
  out.domain.assign(subgroup.begin(), subgroup.end());
  std::sort(out.domain.begin(), out.domain.end());
  out.modulus = omega.modulus();
  out.base_point = g;
  const std::size_t h = out.domain.size();
  out.values.resize(h * h);
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < h; ++j) out.values[i * h + j] = omega.alpha(g, out.domain[i], out.domain[j]);
  }
  if (auto bad = out.cocycle_violation()) {
    throw InternalConsistencyError("alpha_" + std::to_string(g) + " violates the 2-cocycle identity at " +
                                   elements_text(*bad));
  }
  return out;
}

TwoCocycle alpha(const ThreeCocycle& omega, Element g) {
  return alpha_on(omega, g, omega.g().centralizer(g));
}

OneCochain solve_coboundary(const TwoCocycle& alpha) {
  const FiniteGroup& G = *alpha.group;
  if (!G.is_abelian(alpha.domain)) throw UnsolvableCoboundary("solve_coboundary needs an abelian subgroup");
  if (auto mu = solve_at(alpha, alpha.modulus)) return *mu;
  const long extended = alpha.modulus * static_cast<long>(alpha.domain.size());
  if (auto mu = solve_at(alpha, extended)) return *mu;
  throw UnsolvableCoboundary("2-cocycle is not a coboundary at modulus " + std::to_string(extended) +
                             (alpha.is_symmetric() ? "" : " (alpha is not symmetric)"));
}

ThreeCocycle inflate(const ThreeCocycle& quotient_cocycle, GroupPtr group,
                     std::span<const Element> projection) {
  const FiniteGroup& G = *group;
  const FiniteGroup& Q = quotient_cocycle.g();
  const int n = G.order();
  if (static_cast<int>(projection.size()) != n) throw ValidationError("projection has the wrong length");
  for (int x = 0; x < n; ++x) {
    if (projection[x] < 0 || projection[x] >= Q.order()) throw ValidationError("projection value out of range");
    for (int y = 0; y < n; ++y) {
      if (projection[G.mul(x, y)] != Q.mul(projection[x], projection[y])) {
        throw ValidationError("projection is not a homomorphism at (" + std::to_string(x) + ", " +
                              std::to_string(y) + ")");
      }
    }
  }
  std::vector<char> hit(Q.order(), 0);
  for (Element x : projection) hit[x] = 1;
  if (std::find(hit.begin(), hit.end(), 0) != hit.end()) throw ValidationError("projection is not surjective");
  const std::size_t nn = static_cast<std::size_t>(n);
  std::vector<long> values(nn * nn * nn);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        values[(x * nn + y) * nn + z] = quotient_cocycle(projection[x], projection[y], projection[z]);
      }
    }
  }
  return ThreeCocycle(std::move(group), quotient_cocycle.modulus(), std::move(values));
}

ThreeCocycle cyclic_cocycle(GroupPtr cyclic, int u) {
  const int p = cyclic->order();
  if (u < 0 || u >= p) throw ParameterError("cocycle power u must lie in [0, p)");
  const std::size_t n = static_cast<std::size_t>(p);
  std::vector<long> values(n * n * n);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      for (int k = 0; k < p; ++k) {
        // u [i] ([j] + [k] - [j+k]) at modulus p^2
        values[(i * n + j) * n + k] = static_cast<long>(u) * i * (j + k - (j + k) % p);
      }
    }
  }
  return ThreeCocycle(std::move(cyclic), static_cast<long>(p) * p, std::move(values));
}

ThreeCocycle pq_cocycle(GroupPtr pq, int u) {
  const auto& params = pq->pq_parameters();
  if (!params) throw ParameterError("pq_cocycle needs a group built by pq_group");
  const int p = params->p;
  if (u < 0 || u >= p) throw ParameterError("cocycle power u must lie in [0, p), got " + std::to_string(u));
  const std::size_t n = static_cast<std::size_t>(pq->order());
  std::vector<long> values(n * n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const long i = static_cast<long>(x % p);
    for (std::size_t y = 0; y < n; ++y) {
      const long j = static_cast<long>(y % p);
      for (std::size_t z = 0; z < n; ++z) {
        const long k = static_cast<long>(z % p);
        values[(x * n + y) * n + z] = u * i * (j + k - (j + k) % p);
      }
    }
  }
  return ThreeCocycle(std::move(pq), static_cast<long>(p) * p, std::move(values));
}

}  // namespace borromean
