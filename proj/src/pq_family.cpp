#include "borromean/pq_family.hpp"

#include <chrono>
#include <map>
#include <numeric>

#include "borromean/error.hpp"
#include "borromean/parallel.hpp"

namespace borromean {

namespace {

long pow_mod(long base, long exp, long m) {
  long result = 1 % m;
  base = mod_floor(base, m);
  while (exp > 0) {
    if (exp & 1) result = result * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return result;
}

// n^e mod q for any integer e, using n^p = 1.
long n_power(const PqParameters& params, long e) { return pow_mod(params.n, mod_floor(e, params.p), params.q); }

MonomialInducing linear_inducing(std::vector<Element> domain, long modulus, std::vector<long> exponents) {
  MonomialInducing out;
  out.subgroup = std::move(domain);
  out.modulus = modulus;
  out.exponents = std::move(exponents);
  return out;
}

ProjectiveCharacter linear_character(Element base, const MonomialInducing& ind) {
  ProjectiveCharacter chi;
  chi.base = base;
  chi.domain = ind.subgroup;
  chi.degree = 1;
  for (long e : ind.exponents) chi.values.push_back(Cyclotomic::root_of_unity(ind.modulus, e));
  chi.inducing = ind;
  return chi;
}

bool same_values(const ProjectiveCharacter& a, const ProjectiveCharacter& b) {
  if (a.base != b.base || a.domain != b.domain || a.values.size() != b.values.size()) return false;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (!(a.values[i] == b.values[i])) return false;
  }
  return true;
}

}  // namespace

PqCategorySpec PqCategorySpec::make(int p, int q, int u) {
  return make(std::make_shared<const FiniteGroup>(pq_group(p, q)), u);
}

PqCategorySpec PqCategorySpec::make(GroupPtr pq, int u) {
  if (!pq || !pq->pq_parameters()) throw ParameterError("group carries no Z/q x| Z/p presentation");
  const PqParameters& params = *pq->pq_parameters();
  if (u < 0 || u >= params.p) {
    throw ParameterError("u must lie in [0, " + std::to_string(params.p) + "), got " + std::to_string(u));
  }
  PqCategorySpec spec;
  spec.p = params.p;
  spec.q = params.q;
  spec.n = params.n;
  spec.u = u;
  spec.group = std::move(pq);
  return spec;
}

std::vector<PqSimple> pq_simples(const PqCategorySpec& spec) {
  const FiniteGroup& G = *spec.group;
  const PqParameters params{spec.p, spec.q, spec.n};
  const int p = spec.p, q = spec.q;
  std::vector<PqSimple> out;

  const CharacterTable table = pq_character_table(spec.group);
  for (std::size_t row = 0; row < table.size(); ++row) {
    PqSimple s;
    s.family = PqFamily::kIdentity;
    s.row = static_cast<int>(row);
    s.object.g = kIdentity;
    s.object.chi = plain_character(table, row, kIdentity);
    out.push_back(std::move(s));
  }

  std::vector<Element> a_group, b_group;
  for (int m = 0; m < q; ++m) a_group.push_back(m * p);
  for (int m = 0; m < p; ++m) b_group.push_back(m);
  for (int l : pq_orbit_representatives(params)) {
    for (int s_index = 0; s_index < q; ++s_index) {
      std::vector<long> exps;
      for (int m = 0; m < q; ++m) exps.push_back(mod_floor(static_cast<long>(s_index) * m, q));
      PqSimple s;
      s.family = PqFamily::kRotation;
      s.l = l;
      s.s = s_index;
      s.object.g = l * p;
      s.object.chi = linear_character(s.object.g, linear_inducing(a_group, q, std::move(exps)));
      out.push_back(std::move(s));
    }
  }

  const long p2 = static_cast<long>(p) * p;
  for (int k = 1; k < p; ++k) {
    for (int r = 0; r < p; ++r) {
      std::vector<long> exps;
      for (int m = 0; m < p; ++m) exps.push_back(mod_floor(static_cast<long>(p) * r * m + static_cast<long>(spec.u) * k * m, p2));
      PqSimple s;
      s.family = PqFamily::kReflection;
      s.k = k;
      s.r = r;
      s.object.g = k;
      s.object.chi = linear_character(k, linear_inducing(b_group, p2, std::move(exps)));
      out.push_back(std::move(s));
    }
  }

  const std::vector<SimpleObject> reference = enumerate_simples(spec.cocycle());
  if (reference.size() != out.size()) {
    throw InternalConsistencyError("closed-form list has " + std::to_string(out.size()) + " simples, expected " +
                                   std::to_string(reference.size()));
  }
  std::vector<char> used(reference.size(), 0);
  for (auto& s : out) {
    bool found = false;
    for (std::size_t i = 0; i < reference.size() && !found; ++i) {
      if (used[i] || !same_values(reference[i].chi, s.object.chi)) continue;
      used[i] = 1;
      found = true;
      s.object.label = reference[i].label;
    }
    if (!found) {
      throw InternalConsistencyError("closed-form simple at base " + std::to_string(s.object.g) +
                                     " matches no enumerated simple");
    }
    s.object.dimension = static_cast<long>(G.class_size(s.object.g)) * s.object.chi.degree;
  }
  std::sort(out.begin(), out.end(),
            [](const PqSimple& a, const PqSimple& b) { return a.object.label < b.object.label; });
  return out;
}

Cyclotomic pq_t_closed_form(const PqCategorySpec& spec, const PqSimple& simple) {
  switch (simple.family) {
    case PqFamily::kIdentity: return Cyclotomic(1);
    case PqFamily::kRotation:
      return Cyclotomic::root_of_unity(spec.q, static_cast<long>(simple.s) * simple.l);
    case PqFamily::kReflection: {
      const long p = spec.p;
      return Cyclotomic::root_of_unity(p * p, p * simple.k * simple.r + static_cast<long>(simple.k) * simple.k * spec.u);
    }
  }
  throw InternalConsistencyError("unknown pq family");
}

Cyclotomic pq_b_closed_form(const PqCategorySpec& spec, int l, int s, int k, int r) {
  static_cast<void>(r);
  const int p = spec.p, q = spec.q;
  if (mod_floor(k, p) == 0) throw ParameterError("k must be nonzero modulo p");
  const PqParameters params{p, q, spec.n};
  const long t = mod_floor(static_cast<long>(k) * ((p + 1) / 2), p);
  const long outer = mod_floor(n_power(params, -t) - n_power(params, t), q);
  const long sl = mod_floor(static_cast<long>(s) * l, q);
  CyclotomicAccumulator acc(q);
  for (long m = 0; m < p; ++m) {
    const long inner = mod_floor(n_power(params, m) - n_power(params, -m), q);
    acc.add_root(sl * outer % q * inner % q);
  }
  return acc.to_cyclotomic() * Rational(static_cast<long>(p) * q);
}

std::function<bool(std::size_t, std::size_t, std::size_t)> theorem_fast_mask(const std::vector<PqSimple>& simples,
                                                                             std::size_t unit) {
  std::vector<PqFamily> family;
  for (const auto& s : simples) family.push_back(s.family);
  return [family, unit](std::size_t i, std::size_t j, std::size_t k) {
    if (i == unit || j == unit || k == unit) return true;
    const PqFamily fi = family[i], fj = family[j], fk = family[k];
    auto pattern = [](PqFamily x, PqFamily y, PqFamily z) {
      return x == PqFamily::kRotation && y == PqFamily::kRotation && z == PqFamily::kReflection;
    };
    return pattern(fi, fj, fk) || pattern(fj, fk, fi) || pattern(fk, fi, fj);
  };
}

TheoremResult verify_theorem(int p, int q, const TheoremOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const GroupPtr group = std::make_shared<const FiniteGroup>(pq_group(p, q));
  TheoremResult result;
  result.p = p;
  result.q = q;
  result.fast = options.fast && !options.use_s;
  InvariantSet which;
  which.t = true;
  which.s = options.use_s;
  which.b = !options.use_s;
  result.invariants = options.use_s ? std::vector<std::string>{"S", "T"} : std::vector<std::string>{"T", "B"};

  std::vector<InvariantBundle> bundles;
  for (int u = 0; u < p; ++u) {
    const PqCategorySpec spec = PqCategorySpec::make(group, u);
    const ThreeCocycle omega = spec.cocycle();
    TwistedDouble category(omega, enumerate_simples(omega));
    BundleRequest request;
    request.s = options.use_s;
    request.b = !options.use_s;
    request.jobs = options.jobs;
    request.b_options.mode = options.b_mode;
    if (result.fast) request.b_options.mask = theorem_fast_mask(pq_simples(spec), category.unit_index());
    bundles.push_back(compute_bundle(category, request));
  }

  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < p; ++a) {
    for (int b = a + 1; b < p; ++b) pairs.emplace_back(a, b);
  }
  result.pair_results.resize(pairs.size());
  parallel_for(pairs.size(), options.jobs, [&](std::size_t idx, int) {
    result.pair_results[idx] = match(bundles[pairs[idx].first], bundles[pairs[idx].second], which);
  });

  result.matches.assign(p, std::vector<bool>(p, false));
  std::vector<int> parent(p);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int u = 0; u < p; ++u) result.matches[u][u] = true;
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    if (!result.pair_results[idx].found) continue;
    const auto [a, b] = pairs[idx];
    result.matches[a][b] = result.matches[b][a] = true;
    const int ra = find(a), rb = find(b);
    parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::map<int, std::vector<int>> classes;
  for (int u = 0; u < p; ++u) classes[find(u)].push_back(u);
  for (auto& [root, members] : classes) result.classes.push_back(std::move(members));
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

ProofSupportReport proof_support_checks(int p, int q) {
  const FiniteGroup g = pq_group(p, q);
  const PqParameters params = *g.pq_parameters();
  ProofSupportReport report;
  std::vector<long> diffs;
  for (long m = 0; m < p; ++m) diffs.push_back(mod_floor(n_power(params, m) - n_power(params, -m), q));
  std::vector<long> sorted = diffs;
  std::sort(sorted.begin(), sorted.end());
  const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  std::string line = "n^m - n^-m mod " + std::to_string(q) + " for m = 0.." + std::to_string(p - 1) + ":";
  for (long d : diffs) line += " " + std::to_string(d);
  line += distinct ? " (distinct)" : " (NOT distinct)";
  report.lines.push_back(line);
  report.ok = distinct;
  for (long t = 1; t <= (p - 1) / 2; ++t) {
    const long c = mod_floor(n_power(params, t) - n_power(params, -t), q);
    long lhs = 0;
    for (long d : diffs) lhs = (lhs + c * d % q * (c * d % q)) % q;
    const long rhs = mod_floor(-2L * p * (c * c % q), q);
    const bool ok = lhs == rhs;
    report.lines.push_back("t = " + std::to_string(t) + ": sum of squares over M_t = " + std::to_string(lhs) +
                           ", -2p(n^t - n^-t)^2 = " + std::to_string(rhs) + (ok ? " (equal)" : " (DIFFERENT)"));
    report.ok = report.ok && ok;
  }
  return report;
}

}  // namespace borromean
