#include "borromean/reps.hpp"

#include <algorithm>
#include <functional>

#include "borromean/error.hpp"

namespace borromean {

namespace {

int position_in(const std::vector<Element>& sorted, Element x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  if (it == sorted.end() || *it != x) return -1;
  return static_cast<int>(it - sorted.begin());
}

long table_conductor(const CharacterTable& table) {
  long n = 1;
  for (const auto& row : table.rows) {
    for (const auto& v : row) n = lcm_long(n, v.conductor());
  }
  return n;
}

/// Sum over h of a(h) * conjugate(b(h)) with integral terms.
Cyclotomic inner_sum(const std::vector<IntegralTerms>& a, const std::vector<IntegralTerms>& b, long n) {
  CyclotomicAccumulator acc(n);
  for (std::size_t h = 0; h < a.size(); ++h) {
    for (const auto& [ea, ca] : a[h].terms) {
      for (const auto& [eb, cb] : b[h].terms) acc.add_root(ea - eb, ca * cb);
    }
  }
  return acc.to_cyclotomic();
}

}  // namespace

int MonomialInducing::position(Element x) const { return position_in(subgroup, x); }

int CharacterTable::position(Element x) const { return position_in(subgroup, x); }

long CharacterTable::degree(std::size_t row) const {
  const auto r = rows[row][position(kIdentity)].as_rational();
  if (!r || r->get_den() != 1) throw ValidationError("character degree is not an integer");
  return r->get_num().get_si();
}

int ProjectiveCharacter::position(Element x) const { return position_in(domain, x); }

std::vector<std::vector<Element>> subgroup_classes(const FiniteGroup& g, std::span<const Element> subgroup) {
  std::vector<char> seen(g.order(), 0);
  std::vector<std::vector<Element>> classes;
  for (Element h : subgroup) {
    if (seen[h]) continue;
    std::vector<Element> cls;
    for (Element f : subgroup) {
      const Element x = g.conjugate(f, h);
      if (!seen[x]) {
        seen[x] = 1;
        cls.push_back(x);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::optional<TableViolation> check_character_table(const CharacterTable& table, bool ordinary) {
  const FiniteGroup& G = *table.group;
  const std::size_t h = table.subgroup.size();
  if (!G.is_subgroup(table.subgroup)) return TableViolation{"table domain is not a subgroup", {}};
  if (!std::is_sorted(table.subgroup.begin(), table.subgroup.end())) {
    return TableViolation{"table domain is not sorted", {}};
  }
  long degree_squares = 0;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (table.rows[r].size() != h) return TableViolation{"row has the wrong length", {r}};
    const auto d = table.rows[r][table.position(kIdentity)].as_rational();
    if (!d || d->get_den() != 1 || *d <= 0) return TableViolation{"degree is not a positive integer", {r}};
    degree_squares += d->get_num().get_si() * d->get_num().get_si();
  }
  if (degree_squares != static_cast<long>(h)) {
    return TableViolation{"sum of squared degrees is " + std::to_string(degree_squares) + ", expected " +
                              std::to_string(h),
                          {}};
  }
  if (ordinary) {
    const auto classes = subgroup_classes(G, table.subgroup);
    if (classes.size() != table.rows.size()) {
      return TableViolation{"table has " + std::to_string(table.rows.size()) + " rows for " +
                                std::to_string(classes.size()) + " classes",
                            {}};
    }
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      for (const auto& cls : classes) {
        const Cyclotomic& first = table.value(r, cls.front());
        for (Element x : cls) {
          if (!(table.value(r, x) == first)) return TableViolation{"row is not a class function", {r}};
        }
      }
    }
  }
  const long n = table_conductor(table);
  std::vector<std::vector<IntegralTerms>> integral(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    for (const auto& v : table.rows[r]) {
      if (!v.is_integral()) return TableViolation{"character value is not an algebraic integer", {r}};
      integral[r].push_back(integral_terms(v, n));
    }
  }
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    for (std::size_t s = r; s < table.rows.size(); ++s) {
      const Cyclotomic ip = inner_sum(integral[r], integral[s], n);
      const Cyclotomic expected(r == s ? static_cast<long>(h) : 0L);
      if (!(ip == expected)) return TableViolation{"rows are not orthonormal", {r, s}};
    }
  }
  return std::nullopt;
}

CharacterTable abelian_character_table(GroupPtr group, std::span<const Element> subgroup_span) {
  const FiniteGroup& G = *group;
  std::vector<Element> subgroup(subgroup_span.begin(), subgroup_span.end());
  std::sort(subgroup.begin(), subgroup.end());
  if (!G.is_subgroup(subgroup)) throw ValidationError("abelian_character_table needs a subgroup");
  if (!G.is_abelian(subgroup)) throw ValidationError("abelian_character_table needs an abelian subgroup");
  const long order = static_cast<long>(subgroup.size());
  const auto pos = [&](Element x) { return position_in(subgroup, x); };

  struct Step {
    Element generator;
    int multiplicity;
    Element landing;  // generator^multiplicity, already spanned
    // (element, spanned element s, power j) with element = s * generator^j
    std::vector<std::tuple<Element, Element, int>> new_elements;
  };
  std::vector<Step> steps;
  std::vector<char> known(subgroup.size(), 0);
  std::vector<Element> span{kIdentity};
  known[pos(kIdentity)] = 1;
  for (Element gen : subgroup) {
    if (known[pos(gen)]) continue;
    Step step{gen, 1, gen, {}};
    std::vector<Element> powers{kIdentity, gen};
    while (!known[pos(step.landing)]) {
      step.landing = G.mul(step.landing, gen);
      powers.push_back(step.landing);
      ++step.multiplicity;
    }
    std::vector<Element> next = span;
    for (Element s : span) {
      for (int j = 1; j < step.multiplicity; ++j) {
        const Element x = G.mul(s, powers[j]);
        if (known[pos(x)]) continue;
        known[pos(x)] = 1;
        step.new_elements.emplace_back(x, s, j);
        next.push_back(x);
      }
    }
    span = std::move(next);
    steps.push_back(std::move(step));
  }

  std::vector<std::vector<long>> characters;
  std::vector<long> current(subgroup.size(), 0);
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (i == steps.size()) {
      characters.push_back(current);
      return;
    }
    const Step& step = steps[i];
    const long stride = order / step.multiplicity;
    const long target = current[pos(step.landing)];
    // m * c = target (mod order); target is a multiple of m by construction
    const long c0 = target / step.multiplicity;
    std::vector<long> choices;
    for (long t = 0; t < step.multiplicity; ++t) choices.push_back(mod_floor(c0 + t * stride, order));
    std::sort(choices.begin(), choices.end());
    for (long c : choices) {
      for (const auto& [x, s, j] : step.new_elements) current[pos(x)] = mod_floor(current[pos(s)] + j * c, order);
      extend(i + 1);
    }
  };
  extend(0);

  CharacterTable table;
  table.group = std::move(group);
  table.subgroup = subgroup;
  for (const auto& chi : characters) {
    std::vector<Cyclotomic> row;
    row.reserve(chi.size());
    for (long v : chi) row.push_back(Cyclotomic::root_of_unity(order, v));
    table.rows.push_back(std::move(row));
    table.inducing.push_back(MonomialInducing{subgroup, order, chi});
  }
  if (auto bad = check_character_table(table, true)) {
    throw InternalConsistencyError("abelian character table: " + bad->message);
  }
  return table;
}

std::vector<int> pq_orbit_representatives(const PqParameters& params) {
  std::vector<char> seen(params.q, 0);
  std::vector<int> reps;
  for (int s = 1; s < params.q; ++s) {
    if (seen[s]) continue;
    reps.push_back(s);
    long x = s;
    for (int m = 0; m < params.p; ++m) {
      seen[x] = 1;
      x = x * params.n % params.q;
    }
  }
  return reps;
}

CharacterTable pq_character_table(GroupPtr group) {
  const auto& params_opt = group->pq_parameters();
  if (!params_opt) throw ParameterError("pq_character_table needs a group built by pq_group");
  const PqParameters params = *params_opt;
  const int p = params.p, q = params.q;
  const int order = group->order();
  CharacterTable table;
  table.group = group;
  table.subgroup.resize(order);
  for (int x = 0; x < order; ++x) table.subgroup[x] = x;
  for (int r = 0; r < p; ++r) {
    std::vector<Cyclotomic> row(order);
    std::vector<long> exps(order);
    for (int x = 0; x < order; ++x) {
      exps[x] = static_cast<long>(r) * (x % p) % p;
      row[x] = Cyclotomic::root_of_unity(p, exps[x]);
    }
    table.rows.push_back(std::move(row));
    table.inducing.push_back(MonomialInducing{table.subgroup, p, std::move(exps)});
  }
  std::vector<long> npow(p, 1);
  for (int m = 1; m < p; ++m) npow[m] = npow[m - 1] * params.n % q;
  std::vector<Element> a_subgroup;
  for (int l = 0; l < q; ++l) a_subgroup.push_back(l * p);
  for (int s : pq_orbit_representatives(params)) {
    std::vector<Cyclotomic> row(order);
    for (int x = 0; x < order; ++x) {
      if (x % p != 0) continue;
      const long l = x / p;
      Cyclotomic v;
      for (int m = 0; m < p; ++m) v += Cyclotomic::root_of_unity(q, s * npow[m] % q * l);
      row[x] = v;
    }
    table.rows.push_back(std::move(row));
    std::vector<long> exps(q);
    for (int l = 0; l < q; ++l) exps[l] = static_cast<long>(s) * l % q;
    table.inducing.push_back(MonomialInducing{a_subgroup, q, std::move(exps)});
  }
  if (auto bad = check_character_table(table, true)) {
    throw InternalConsistencyError("pq character table: " + bad->message);
  }
  return table;
}

ProjectiveCharacter twisted_character(const CharacterTable& table, std::size_t row, Element base,
                                      const OneCochain& mu) {
  if (table.subgroup != table.group->centralizer(base)) {
    throw ValidationError("character table domain is not the centralizer of " + std::to_string(base));
  }
  if (mu.domain != table.subgroup) throw ValidationError("cochain domain differs from the table domain");
  ProjectiveCharacter chi;
  chi.base = base;
  chi.domain = table.subgroup;
  chi.degree = table.degree(row);
  chi.values.reserve(chi.domain.size());
  for (std::size_t i = 0; i < chi.domain.size(); ++i) {
    chi.values.push_back(table.rows[row][i] * Cyclotomic::root_of_unity(mu.modulus, mu.values[i]));
  }
  if (row < table.inducing.size() && table.inducing[row]) {
    const MonomialInducing& ind = *table.inducing[row];
    MonomialInducing twisted;
    twisted.subgroup = ind.subgroup;
    twisted.modulus = lcm_long(ind.modulus, mu.modulus);
    for (std::size_t i = 0; i < ind.subgroup.size(); ++i) {
      const Element k = ind.subgroup[i];
      twisted.exponents.push_back(mod_floor(ind.exponents[i] * (twisted.modulus / ind.modulus) +
                                                mu.at(k) * (twisted.modulus / mu.modulus),
                                            twisted.modulus));
    }
    chi.inducing = std::move(twisted);
  }
  return chi;
}

ProjectiveCharacter plain_character(const CharacterTable& table, std::size_t row, Element base) {
  if (table.subgroup != table.group->centralizer(base)) {
    throw ValidationError("character table domain is not the centralizer of " + std::to_string(base));
  }
  ProjectiveCharacter chi;
  chi.base = base;
  chi.domain = table.subgroup;
  chi.degree = table.degree(row);
  chi.values = table.rows[row];
  if (row < table.inducing.size()) chi.inducing = table.inducing[row];
  return chi;
}

Cyclotomic conjugated_character_via(const ThreeCocycle& omega, const ProjectiveCharacter& chi, Element f,
                                    Element c) {
  const FiniteGroup& G = omega.g();
  const Element g = chi.base;
  const Element x = G.conjugate(f, g);
  if (!G.commute(x, c)) {
    throw ValidationError("element " + std::to_string(c) + " is not in the centralizer of " + std::to_string(x));
  }
  const Element fi = G.inv(f);
  const Element back = G.conjugate(fi, c);
  const long exponent = omega.alpha(g, c, f) - omega.alpha(g, f, back);
  const Cyclotomic& value = chi(back);
  if (exponent % omega.modulus() == 0) return value;
  return value * Cyclotomic::root_of_unity(omega.modulus(), exponent);
}

Cyclotomic conjugated_character(const ThreeCocycle& omega, const ProjectiveCharacter& chi, Element x,
                                Element c) {
  const FiniteGroup& G = omega.g();
  const auto& classes = G.conjugacy_classes();
  Element f;
  if (classes[G.class_of(chi.base)].representative == chi.base) {
    if (G.class_of(x) != G.class_of(chi.base)) {
      throw ValidationError("element " + std::to_string(x) + " is not conjugate to " + std::to_string(chi.base));
    }
    f = G.transporter_from_representative(x);
  } else {
    auto t = G.transporter(chi.base, x);
    if (!t) {
      throw ValidationError("element " + std::to_string(x) + " is not conjugate to " + std::to_string(chi.base));
    }
    f = *t;
  }
  return conjugated_character_via(omega, chi, f, c);
}

}  // namespace borromean
