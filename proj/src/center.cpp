#include "borromean/center.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "borromean/error.hpp"
#include "borromean/parallel.hpp"

namespace borromean {

namespace {

IntegralTerms shifted(const IntegralTerms& t, long shift) {
  if (shift == 0) return t;
  IntegralTerms out = t;
  for (auto& term : out.terms) term.first += shift;
  return out;
}

void add_product(CyclotomicAccumulator& acc, long shift, const IntegralTerms& a, const IntegralTerms& b) {
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) acc.add_root(shift + ea + eb, ca * cb);
  }
}

void add_product(CyclotomicAccumulator& acc, long shift, const IntegralTerms& a, const IntegralTerms& b,
                 const IntegralTerms& c) {
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      for (const auto& [ec, cc] : c.terms) acc.add_root(shift + ea + eb + ec, ca * cb * cc);
    }
  }
}

IntegralTerms conjugate_terms(const IntegralTerms& t) {
  IntegralTerms out = t;
  for (auto& term : out.terms) term.first = -term.first;
  return out;
}

long matrix_conductor(const CyclotomicMatrix& s) {
  long n = 1;
  for (const auto& row : s) {
    for (const auto& v : row) n = lcm_long(n, v.conductor());
  }
  return n;
}

std::vector<std::vector<IntegralTerms>> integral_matrix(const CyclotomicMatrix& s, long n) {
  std::vector<std::vector<IntegralTerms>> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (const auto& v : s[i]) out[i].push_back(integral_terms(v, n));
  }
  return out;
}

long global_dimension(std::span<const long> dims) {
  long d2 = 0;
  for (long d : dims) d2 += d * d;
  return d2;
}

}  // namespace

std::vector<SimpleObject> enumerate_simples(const ThreeCocycle& omega, std::span<const CharacterTable> supplied) {
  const GroupPtr& group = omega.group();
  const FiniteGroup& G = *group;
  std::vector<SimpleObject> simples;
  const auto& classes = G.conjugacy_classes();
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    const Element g = classes[ci].representative;
    const auto& centralizer = G.centralizer(g);
    const long class_size = static_cast<long>(classes[ci].members.size());
    std::vector<ProjectiveCharacter> characters;
    const CharacterTable* table = nullptr;
    for (const auto& t : supplied) {
      if (t.base) {
        if (G.class_of(*t.base) != static_cast<int>(ci)) continue;
        if (*t.base != g) {
          throw ValidationError("supplied table base " + std::to_string(*t.base) +
                                " is not the class representative " + std::to_string(g));
        }
        table = &t;
        break;
      }
      if (t.subgroup == centralizer && !table) table = &t;
    }
    if (table) {
      for (std::size_t r = 0; r < table->size(); ++r) characters.push_back(plain_character(*table, r, g));
    } else if (G.is_abelian(centralizer)) {
      const OneCochain mu = solve_coboundary(alpha(omega, g));
      const CharacterTable abelian = abelian_character_table(group, centralizer);
      for (std::size_t r = 0; r < abelian.size(); ++r) characters.push_back(twisted_character(abelian, r, g, mu));
    } else if (g == kIdentity && G.pq_parameters()) {
      const CharacterTable pq = pq_character_table(group);
      for (std::size_t r = 0; r < pq.size(); ++r) characters.push_back(plain_character(pq, r, g));
    } else {
      throw UnsupportedCentralizer("centralizer of element " + std::to_string(g) + " (order " +
                                   std::to_string(centralizer.size()) +
                                   ") is not abelian and no character table was supplied for it");
    }
    for (std::size_t r = 0; r < characters.size(); ++r) {
      SimpleObject s;
      s.label = {static_cast<int>(ci), static_cast<int>(r)};
      s.g = g;
      s.dimension = class_size * characters[r].degree;
      s.chi = std::move(characters[r]);
      simples.push_back(std::move(s));
    }
  }
  long total = 0;
  for (const auto& s : simples) total += s.dimension * s.dimension;
  const long expected = static_cast<long>(G.order()) * G.order();
  if (total != expected) {
    throw ValidationError("sum of squared dimensions is " + std::to_string(total) + ", expected " +
                          std::to_string(expected));
  }
  return simples;
}

bool borromean_condition(const FiniteGroup& g, Element x, Element y, Element z) {
  return g.commutator(g.commutator(g.inv(y), x), z) == kIdentity &&
         g.commutator(g.commutator(z, y), x) == kIdentity &&
         g.commutator(g.commutator(g.inv(z), g.inv(x)), y) == kIdentity;
}

bool p_cube_fixed(const FiniteGroup& g, Element x, Element y, Element z) {
  Element a = x, b = y, c = z;
  for (int step = 0; step < 3; ++step) {
    const Element na = g.conjugate(a, b);
    const Element nb = c;
    const Element nc = g.conjugate(g.inv(c), a);
    a = na;
    b = nb;
    c = nc;
  }
  return a == x && b == y && c == z;
}

long omega_exponent(const ThreeCocycle& w, Element x, Element y, Element z, OmegaVariant variant) {
  const FiniteGroup& G = w.g();
  const Element xy = G.conjugate(x, y);
  const Element yz = G.conjugate(y, z);
  const Element zi = G.inv(z);
  const Element yi = G.inv(y);
  const Element zix = G.conjugate(zi, x);
  const Element zixi = G.conjugate(zi, G.inv(x));
  long e = 0;
  if (variant == OmegaVariant::kDisplay) {
    e = w(xy, z, zix) - w(xy, x, z) - w.alpha(x, z, zi) + w(yz, zix, y) - w(yz, xy, zix) -
        w.alpha(y, zixi, zix) + w(x, y, z) - w(x, yz, y) + w.alpha(z, yi, y);
  } else {
    e = w(xy, x, z) - w(xy, z, zix) + w(yz, xy, zix) - w(yz, zix, y) + w(x, yz, y) - w(x, y, z) -
        w.alpha(x, z, zi) + w.alpha(x, yz, zi) - w.alpha(xy, zix, zixi) + w.alpha(y, zixi, x) -
        w.alpha(yz, y, yi);
    if (variant == OmegaVariant::kCode) e += w.alpha(z, yi, xy);
  }
  return mod_floor(e, w.modulus());
}

TwistedDouble::TwistedDouble(ThreeCocycle omega, std::vector<SimpleObject> simples, OmegaVariant variant)
    : omega_(std::move(omega)), simples_(std::move(simples)), variant_(variant) {
  const FiniteGroup& G = omega_.g();
  const long e = omega_.modulus();
  conductor_ = e;
  for (const auto& s : simples_) {
    for (const auto& v : s.chi.values) conductor_ = lcm_long(conductor_, v.conductor());
  }
  bool found_unit = false;
  for (std::size_t i = 0; i < simples_.size() && !found_unit; ++i) {
    const auto& s = simples_[i];
    if (s.g != kIdentity || s.chi.degree != 1) continue;
    bool trivial = true;
    for (const auto& v : s.chi.values) trivial = trivial && v == Cyclotomic(1);
    if (trivial) {
      unit_ = i;
      found_unit = true;
    }
  }
  if (!found_unit) throw ValidationError("no unit simple (identity with trivial character)");

  const long scale = conductor_ / e;
  conj_.resize(simples_.size());
  for (std::size_t i = 0; i < simples_.size(); ++i) {
    const auto& s = simples_[i];
    std::vector<IntegralTerms> base_terms(G.order());
    for (std::size_t d = 0; d < s.chi.domain.size(); ++d) {
      base_terms[s.chi.domain[d]] = integral_terms(s.chi.values[d], conductor_);
    }
    const auto& members = G.conjugacy_classes()[G.class_of(s.g)].members;
    conj_[i].resize(members.size());
    for (std::size_t mpos = 0; mpos < members.size(); ++mpos) {
      const Element x = members[mpos];
      const Element f = G.transporter_from_representative(x);
      const Element fi = G.inv(f);
      auto& row = conj_[i][mpos];
      row.resize(G.order());
      for (Element c : G.centralizer(x)) {
        const Element back = G.conjugate(fi, c);
        const long exponent = mod_floor(omega_.alpha(s.g, c, f) - omega_.alpha(s.g, f, back), e);
        row[c].valid = true;
        row[c].terms = shifted(base_terms[back], exponent * scale);
      }
    }
  }
}

std::vector<long> TwistedDouble::dimensions() const {
  std::vector<long> dims;
  for (const auto& s : simples_) dims.push_back(s.dimension);
  return dims;
}

const TwistedDouble::CharEntry& TwistedDouble::entry(std::size_t i, Element x, Element c) const {
  const FiniteGroup& G = group();
  const auto& members = G.conjugacy_classes()[G.class_of(simples_[i].g)].members;
  auto it = std::lower_bound(members.begin(), members.end(), x);
  if (it == members.end() || *it != x) {
    throw InternalConsistencyError("element " + std::to_string(x) + " is not in the class of simple " +
                                   std::to_string(i));
  }
  return conj_[i][it - members.begin()][c];
}

const IntegralTerms& TwistedDouble::checked(std::size_t i, Element x, Element c, const char* what) const {
  const CharEntry& e = entry(i, x, c);
  if (!e.valid) {
    throw InternalConsistencyError(std::string(what) + ": element " + std::to_string(c) +
                                   " is not in the centralizer of " + std::to_string(x));
  }
  return e.terms;
}

Cyclotomic TwistedDouble::conjugated(std::size_t i, Element x, Element c) const {
  CyclotomicAccumulator acc(conductor_);
  for (const auto& [e, coeff] : checked(i, x, c, "conjugated character").terms) acc.add_root(e, coeff);
  return acc.to_cyclotomic();
}

std::vector<Cyclotomic> TwistedDouble::t_matrix() const {
  std::vector<Cyclotomic> t;
  for (const auto& s : simples_) t.push_back(s.chi(s.g) * Rational(1, s.chi.degree));
  return t;
}

CyclotomicMatrix TwistedDouble::s_matrix(int jobs) const {
  const FiniteGroup& G = group();
  const std::size_t n = size();
  CyclotomicMatrix s(n, std::vector<Cyclotomic>(n));
  parallel_for(n, jobs, [&](std::size_t i, int) {
    CyclotomicAccumulator acc(conductor_);
    const Element g = simples_[i].g;
    for (std::size_t j = 0; j < n; ++j) {
      acc.clear();
      const Element h = simples_[j].g;
      for (Element x : G.conjugacy_classes()[G.class_of(g)].members) {
        if (!G.commute(x, h)) continue;
        add_product(acc, 0, checked(i, x, h, "S"), checked(j, h, x, "S"));
      }
      s[i][j] = acc.to_cyclotomic() * Rational(G.class_size(h));
    }
  });
  return s;
}

CyclotomicMatrix TwistedDouble::s_matrix_oracle(int jobs) const {
  const FiniteGroup& G = group();
  const std::size_t n = size();
  CyclotomicMatrix s(n, std::vector<Cyclotomic>(n));
  parallel_for(n, jobs, [&](std::size_t i, int) {
    CyclotomicAccumulator acc(conductor_);
    const Element g = simples_[i].g;
    for (std::size_t j = 0; j < n; ++j) {
      acc.clear();
      const Element h = simples_[j].g;
      for (Element x : G.conjugacy_classes()[G.class_of(g)].members) {
        for (Element y : G.conjugacy_classes()[G.class_of(h)].members) {
          if (!G.commute(x, y)) continue;
          add_product(acc, 0, checked(i, x, y, "S double sum"), checked(j, y, x, "S double sum"));
        }
      }
      s[i][j] = acc.to_cyclotomic();
    }
  });
  return s;
}

Cyclotomic TwistedDouble::b_entry_general(std::size_t i, std::size_t j, std::size_t k) const {
  const FiniteGroup& G = group();
  const Element g = simples_[i].g, h = simples_[j].g, kk = simples_[k].g;
  const Element ki = G.inv(kk);
  const long scale = conductor_ / omega_.modulus();
  CyclotomicAccumulator acc(conductor_);
  for (Element x : G.conjugacy_classes()[G.class_of(g)].members) {
    const Element xi = G.inv(x);
    const Element a2 = G.commutator(ki, xi);
    for (Element y : G.conjugacy_classes()[G.class_of(h)].members) {
      const Element a1 = G.commutator(y, kk);
      const Element a3 = G.commutator(G.inv(y), x);
      if (G.commutator(G.commutator(kk, y), x) != kIdentity) continue;
      if (G.commutator(a3, kk) != kIdentity) continue;
      add_product(acc, omega_exponent(x, y, kk) * scale, checked(i, x, a1, "B slot 1"),
                  checked(j, y, a2, "B slot 2"), checked(k, kk, a3, "B slot 3"));
    }
  }
  return acc.to_cyclotomic() * Rational(G.class_size(kk));
}

Cyclotomic TwistedDouble::b_entry_oracle_formula(std::size_t i, std::size_t j, std::size_t k) const {
  const FiniteGroup& G = group();
  const auto& classes = G.conjugacy_classes();
  const long scale = conductor_ / omega_.modulus();
  CyclotomicAccumulator acc(conductor_);
  for (Element x : classes[G.class_of(simples_[i].g)].members) {
    for (Element y : classes[G.class_of(simples_[j].g)].members) {
      for (Element z : classes[G.class_of(simples_[k].g)].members) {
        if (!borromean_condition(G, x, y, z)) continue;
        const Element a1 = G.commutator(y, z);
        const Element a2 = G.commutator(G.inv(z), G.inv(x));
        const Element a3 = G.commutator(G.inv(y), x);
        add_product(acc, omega_exponent(x, y, z) * scale, checked(i, x, a1, "B triple slot 1"),
                    checked(j, y, a2, "B triple slot 2"), checked(k, z, a3, "B triple slot 3"));
      }
    }
  }
  return acc.to_cyclotomic();
}

bool TwistedDouble::fast_path_subgroup_ok(std::span<const Element> a_span) const {
  std::vector<Element> a(a_span.begin(), a_span.end());
  std::sort(a.begin(), a.end());
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = subgroup_cache_.find(a);
    if (it != subgroup_cache_.end()) return it->second;
  }
  const FiniteGroup& G = group();
  bool ok = G.is_subgroup(a) && G.is_abelian(a) && G.is_normal(a);
  const int n = G.order();
  for (int x = 0; ok && x < n; ++x) {
    for (int y = 0; ok && y < n; ++y) {
      for (int z = 0; ok && z < n; ++z) {
        const long v = omega_(x, y, z);
        for (Element t : a) {
          if (omega_(G.mul(x, t), y, z) != v || omega_(x, G.mul(y, t), z) != v || omega_(x, y, G.mul(z, t)) != v) {
            ok = false;
            break;
          }
        }
      }
    }
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  subgroup_cache_[a] = ok;
  return ok;
}

Cyclotomic TwistedDouble::b_entry_simplified(std::size_t i, std::size_t j, std::size_t k,
                                             std::span<const Element> a) const {
  const FiniteGroup& G = group();
  const Element g = simples_[i].g, h = simples_[j].g, kk = simples_[k].g;
  if (!fast_path_subgroup_ok(a)) {
    throw PreconditionError("subgroup is not abelian normal with the cocycle constant on its cosets");
  }
  if (std::find(a.begin(), a.end(), g) == a.end() || std::find(a.begin(), a.end(), h) == a.end()) {
    throw PreconditionError("base points must lie in the abelian normal subgroup");
  }
  const Element ki = G.inv(kk);
  CyclotomicAccumulator acc(conductor_);
  for (Element x : G.conjugacy_classes()[G.class_of(g)].members) {
    const Element pi = G.inv(G.transporter_from_representative(x));
    const Element a2 = G.commutator(ki, G.inv(x));
    for (Element y : G.conjugacy_classes()[G.class_of(h)].members) {
      const Element qi = G.inv(G.transporter_from_representative(y));
      add_product(acc, 0, checked(i, g, G.conjugate(pi, G.commutator(y, kk)), "simplified slot 1"),
                  checked(j, h, G.conjugate(qi, a2), "simplified slot 2"));
    }
  }
  return acc.to_cyclotomic() * Rational(G.class_size(kk) * simples_[k].chi.degree);
}

Cyclotomic TwistedDouble::b_entry_fast(std::size_t i, std::size_t j, std::size_t k, std::span<const Element> a,
                                       std::span<const Element> q) const {
  const FiniteGroup& G = group();
  const Element g = simples_[i].g, h = simples_[j].g, kk = simples_[k].g;
  if (!fast_path_subgroup_ok(a)) {
    throw PreconditionError("subgroup is not abelian normal with the cocycle constant on its cosets");
  }
  if (std::find(a.begin(), a.end(), g) == a.end() || std::find(a.begin(), a.end(), h) == a.end()) {
    throw PreconditionError("base points must lie in the abelian normal subgroup");
  }
  if (!G.is_subgroup(q)) throw PreconditionError("Q is not a subgroup");
  long cq_g = 0, cq_h = 0;
  for (Element t : q) {
    if (!G.commute(t, kk)) throw PreconditionError("Q is not contained in the centralizer of k");
    cq_g += G.commute(t, g);
    cq_h += G.commute(t, h);
  }
  const long qn = static_cast<long>(q.size());
  if (cq_g * G.class_size(g) != qn || cq_h * G.class_size(h) != qn) {
    throw PreconditionError("Q-orbits of the base points are not their full classes");
  }
  const Element c1 = G.commutator(h, kk);
  const Element c2 = G.commutator(G.inv(kk), G.inv(g));
  CyclotomicAccumulator acc(conductor_);
  for (Element t : q) {
    add_product(acc, 0, checked(i, g, G.conjugate(t, c1), "fast slot 1"),
                checked(j, h, G.conjugate(G.inv(t), c2), "fast slot 2"));
  }
  return acc.to_cyclotomic() * Rational(G.class_size(kk) * qn * simples_[k].chi.degree, cq_g * cq_h);
}

Cyclotomic TwistedDouble::b_entry_auto(std::size_t i, std::size_t j, std::size_t k) const {
  const FiniteGroup& G = group();
  const Element g = simples_[i].g, h = simples_[j].g, kk = simples_[k].g;
  const Element gh[] = {g, h};
  const std::vector<Element> a = G.normal_closure(gh);
  if (!fast_path_subgroup_ok(a)) return b_entry_general(i, j, k);
  const auto& q = G.centralizer(kk);
  long cq_g = 0, cq_h = 0;
  for (Element t : q) {
    cq_g += G.commute(t, g);
    cq_h += G.commute(t, h);
  }
  const long qn = static_cast<long>(q.size());
  if (cq_g * G.class_size(g) == qn && cq_h * G.class_size(h) == qn) return b_entry_fast(i, j, k, a, q);
  return b_entry_simplified(i, j, k, a);
}

BTensor TwistedDouble::b_tensor(const BTensorOptions& options) const {
  const std::size_t n = size();
  BTensor t;
  t.n = n;
  t.values.assign(n * n * n, Cyclotomic());
  if (options.mask) t.present.assign(n * n * n, 0);
  auto evaluate = [&](std::size_t i, std::size_t j, std::size_t k) {
    return options.mode == BMode::kAuto ? b_entry_auto(i, j, k) : b_entry_general(i, j, k);
  };
  auto wanted = [&](std::size_t i, std::size_t j, std::size_t k) { return !options.mask || options.mask(i, j, k); };
  std::vector<std::array<std::size_t, 3>> work;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (options.full_fill) {
          if (wanted(i, j, k)) work.push_back({i, j, k});
          continue;
        }
        const std::array<std::size_t, 3> rot1{j, k, i}, rot2{k, i, j}, self{i, j, k};
        if (rot1 < self || rot2 < self) continue;
        if (wanted(i, j, k) || wanted(j, k, i) || wanted(k, i, j)) work.push_back(self);
      }
    }
  }
  parallel_for(work.size(), options.jobs, [&](std::size_t w, int) {
    const auto [i, j, k] = work[w];
    const Cyclotomic v = evaluate(i, j, k);
    if (options.full_fill) {
      t.values[t.index(i, j, k)] = v;
      if (!t.present.empty()) t.present[t.index(i, j, k)] = 1;
      return;
    }
    for (const auto& [a, b, c] : {std::array<std::size_t, 3>{i, j, k}, {j, k, i}, {k, i, j}}) {
      t.values[t.index(a, b, c)] = v;
      if (!t.present.empty()) t.present[t.index(a, b, c)] = 1;
    }
  });
  return t;
}

std::vector<std::size_t> duality_permutation(const CyclotomicMatrix& s, std::span<const long> dims) {
  const std::size_t n = s.size();
  const double d2 = static_cast<double>(global_dimension(dims));
  std::vector<std::vector<std::complex<double>>> z(n, std::vector<std::complex<double>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) z[i][j] = s[i][j].to_complex();
  }
  std::optional<std::size_t> unit;
  for (std::size_t i = 0; i < n && !unit; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = s[i][j] == Cyclotomic(dims[j]);
    if (ok) unit = i;
  }
  if (!unit) throw ValidationError("no row of S equals the dimension vector");
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t best = 0;
    double best_err = 1e300;
    for (std::size_t j = 0; j < n; ++j) {
      std::complex<double> c = 0;
      for (std::size_t k = 0; k < n; ++k) c += z[i][k] * z[k][j];
      const double err = std::abs(c / d2 - 1.0);
      if (err < best_err) {
        best_err = err;
        best = j;
      }
    }
    if (best_err > 1e-6) throw ValidationError("S^2 / D^2 is not a permutation matrix at row " + std::to_string(i));
    for (std::size_t k = 0; k < n; ++k) {
      if (!(s[best][k] == s[i][k].conjugate())) {
        throw ValidationError("dual candidate " + std::to_string(best) + " of " + std::to_string(i) +
                              " fails S_{i*,k} = conj(S_{i,k}) at k = " + std::to_string(k));
      }
    }
    perm[i] = best;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[perm[i]] != i) throw ValidationError("duality is not an involution at " + std::to_string(i));
  }
  if (perm[*unit] != *unit) throw ValidationError("duality does not fix the unit");
  return perm;
}

std::optional<std::pair<std::size_t, std::size_t>> check_unitarity(const CyclotomicMatrix& s,
                                                                   std::span<const long> dims) {
  const std::size_t n = s.size();
  const long cond = matrix_conductor(s);
  const auto terms = integral_matrix(s, cond);
  std::vector<std::vector<IntegralTerms>> conj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& t : terms[i]) conj[i].push_back(conjugate_terms(t));
  }
  const Cyclotomic d2(global_dimension(dims));
  CyclotomicAccumulator acc(cond);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      acc.clear();
      for (std::size_t k = 0; k < n; ++k) add_product(acc, 0, terms[i][k], conj[j][k]);
      if (!(acc.to_cyclotomic() == (i == j ? d2 : Cyclotomic()))) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

std::vector<long> verlinde_fusion(const CyclotomicMatrix& s, std::span<const long> dims) {
  const std::size_t n = s.size();
  const double d2 = static_cast<double>(global_dimension(dims));
  std::vector<std::vector<std::complex<double>>> z(n, std::vector<std::complex<double>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) z[i][j] = s[i][j].to_complex();
  }
  std::vector<long> fusion(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> v = 0;
        for (std::size_t m = 0; m < n; ++m) {
          v += z[i][m] * z[j][m] * std::conj(z[k][m]) / static_cast<double>(dims[m]);
        }
        v /= d2;
        const double r = std::round(v.real());
        if (std::abs(v - r) > 1e-6 || r < 0) {
          throw ValidationError("fusion coefficient N_{" + std::to_string(i) + "," + std::to_string(j) + "}^" +
                                std::to_string(k) + " is not a nonnegative integer");
        }
        fusion[(i * n + j) * n + k] = static_cast<long>(r);
      }
    }
  }
  const long cond = matrix_conductor(s);
  const auto terms = integral_matrix(s, cond);
  CyclotomicAccumulator acc(cond);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t m = 0; m < n; ++m) {
        acc.clear();
        add_product(acc, 0, terms[i][m], terms[j][m]);
        for (std::size_t k = 0; k < n; ++k) {
          const long c = fusion[(i * n + j) * n + k];
          if (c == 0) continue;
          for (const auto& [e, coeff] : terms[k][m].terms) acc.add_root(e, -coeff * c * dims[m]);
        }
        if (!acc.to_cyclotomic().is_zero()) {
          throw ValidationError("Verlinde identity fails exactly at (" + std::to_string(i) + ", " +
                                std::to_string(j) + ", " + std::to_string(m) + ")");
        }
      }
    }
  }
  return fusion;
}

void InvariantBundle::normalize() {
  long n = 1;
  for (const auto& v : t) n = lcm_long(n, v.conductor());
  if (s) n = lcm_long(n, matrix_conductor(*s));
  if (b) {
    for (const auto& v : b->values) n = lcm_long(n, v.conductor());
  }
  for (auto& v : t) v = v.lifted(n);
  if (s) {
    for (auto& row : *s) {
      for (auto& v : row) v = v.lifted(n);
    }
  }
  if (b) {
    for (auto& v : b->values) v = v.lifted(n);
  }
}

InvariantBundle compute_bundle(const TwistedDouble& category, const BundleRequest& request) {
  InvariantBundle bundle;
  for (const auto& s : category.simples()) bundle.simples.push_back(s.label);
  bundle.dims = category.dimensions();
  bundle.t = category.t_matrix();
  if (request.s) bundle.s = category.s_matrix(request.jobs);
  if (request.b) {
    BTensorOptions options = request.b_options;
    options.jobs = request.jobs;
    bundle.b = category.b_tensor(options);
  }
  bundle.normalize();
  return bundle;
}

}  // namespace borromean
