#include "borromean/selftest.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>

#include "borromean/center.hpp"
#include "borromean/error.hpp"
#include "borromean/oracle.hpp"
#include "borromean/pq_family.hpp"

namespace borromean {

namespace {

std::string at3(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + ")";
}

class Suite {
 public:
  void add(const std::string& name, const std::function<std::string()>& check) {
    const auto start = std::chrono::steady_clock::now();
    PropertyResult r;
    r.name = name;
    try {
      r.detail = check();
      r.ok = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
  std::vector<PropertyResult> results;
};

void pq_properties(Suite& suite, int u, const SelftestOptions& options) {
  const std::string tag = " [pq(3,7), u=" + std::to_string(u) + "]";
  const PqCategorySpec spec = PqCategorySpec::make(3, 7, u);
  const ThreeCocycle omega = spec.cocycle();
  suite.add("cocycle identity" + tag, [&]() -> std::string {
    if (auto bad = omega.validate()) return bad->describe();
    return {};
  });
  const std::vector<SimpleObject> simples = enumerate_simples(omega);
  const TwistedDouble category(omega, simples, options.fault_omega ? OmegaVariant::kFaulty : OmegaVariant::kCode);
  const BraidOracle oracle(omega, simples);
  const std::size_t n = simples.size();

  suite.add("closed-form simples agree with enumeration" + tag, [&]() -> std::string {
    const auto closed = pq_simples(spec);
    if (closed.size() != n) return "size " + std::to_string(closed.size());
    for (std::size_t i = 0; i < n; ++i) {
      const auto& a = closed[i].object;
      if (a.label != simples[i].label || a.g != simples[i].g || a.dimension != simples[i].dimension) {
        return "simple " + std::to_string(i) + " differs";
      }
      for (std::size_t c = 0; c < a.chi.values.size(); ++c) {
        if (!(a.chi.values[c] == simples[i].chi.values[c])) return "character value differs at simple " + std::to_string(i);
      }
    }
    return {};
  });
  suite.add("quasi-action axioms" + tag, [&]() -> std::string {
    for (std::size_t i = 0; i < n; ++i) {
      if (auto bad = verify_quasi_action(oracle.simple(i), omega)) return "simple " + std::to_string(i) + ": " + bad->describe();
    }
    return {};
  });
  suite.add("T closed form" + tag, [&]() -> std::string {
    const auto closed = pq_simples(spec);
    const auto t = category.t_matrix();
    for (std::size_t i = 0; i < n; ++i) {
      if (!(t[i] == pq_t_closed_form(spec, closed[i]))) return "entry " + std::to_string(i);
    }
    return {};
  });
  const CyclotomicMatrix s = category.s_matrix(options.jobs);
  suite.add("S single sum = double sum = oracle" + tag, [&]() -> std::string {
    const CyclotomicMatrix s2 = category.s_matrix_oracle(options.jobs);
    const auto word = parse_braid_word("s1 s1");
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!(s[i][j] == s2[i][j])) return "double sum differs at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
        if (!(s[i][j] == oracle.trace(word, {i, j, category.unit_index()}))) {
          return "oracle differs at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
        }
      }
    }
    return {};
  });
  BTensorOptions bopt;
  bopt.jobs = options.jobs;
  const BTensor b = category.b_tensor(bopt);
  suite.add("B formula = oracle trace" + tag, [&]() -> std::string {
    const auto word = borromean_word();
    std::size_t failures = 0;
    std::string first;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (b(i, j, k) == oracle.trace(word, {i, j, k})) continue;
          if (failures++ == 0) first = at3(i, j, k);
        }
      }
    }
    if (failures) return std::to_string(failures) + " entries differ, first at " + first;
    return {};
  });
  suite.add("B auto mode = general formula" + tag, [&]() -> std::string {
    BTensorOptions o = bopt;
    o.mode = BMode::kAuto;
    const BTensor a = category.b_tensor(o);
    for (std::size_t idx = 0; idx < a.values.size(); ++idx) {
      if (!(a.values[idx] == b.values[idx])) return "flat index " + std::to_string(idx);
    }
    return {};
  });
  suite.add("B closed form" + tag, [&]() -> std::string {
    const auto closed = pq_simples(spec);
    for (std::size_t i = 0; i < n; ++i) {
      if (closed[i].family != PqFamily::kRotation) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (closed[k].family != PqFamily::kReflection) continue;
        const auto v = pq_b_closed_form(spec, closed[i].l, closed[i].s, closed[k].k, closed[k].r);
        if (!(v == b(i, i, k))) return "entry " + at3(i, i, k);
      }
    }
    return {};
  });
  const std::vector<long> dims = category.dimensions();
  suite.add("B symmetries" + tag, [&]() -> std::string {
    const auto dual = duality_permutation(s, dims);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (!(b(i, j, k) == b(j, k, i))) return "cyclic symmetry at " + at3(i, j, k);
          if (!(b(i, j, k) == b(j, i, dual[k]))) return "swap-dual symmetry at " + at3(i, j, k);
          if (!(b(i, j, k) == b(k, j, i).conjugate())) return "reversal symmetry at " + at3(i, j, k);
        }
      }
    }
    return {};
  });
  suite.add("structural invariants" + tag, [&]() -> std::string {
    long total = 0;
    for (long d : dims) total += d * d;
    if (total != 21L * 21L) return "sum of squared dimensions " + std::to_string(total);
    const std::size_t unit = category.unit_index();
    for (std::size_t i = 0; i < n; ++i) {
      if (!(s[unit][i] == Cyclotomic(dims[i]))) return "unit row of S at " + std::to_string(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (!(s[i][j] == s[j][i])) return "S not symmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
        if (!(b(i, j, unit) == Cyclotomic(dims[i] * dims[j]))) return "B with unit at " + at3(i, j, unit);
      }
    }
    if (auto bad = check_unitarity(s, dims)) {
      return "unitarity at (" + std::to_string(bad->first) + ", " + std::to_string(bad->second) + ")";
    }
    verlinde_fusion(s, dims);
    return {};
  });
}

}  // namespace

std::vector<std::vector<int>> symmetric_group_3_table() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      table[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return table;
}

std::vector<PropertyResult> run_selftest(const SelftestOptions& options) {
  Suite suite;
  for (int u = 0; u < 3; ++u) pq_properties(suite, u, options);
  suite.add("proof support identities [pq(3,7)]", []() -> std::string {
    const auto report = proof_support_checks(3, 7);
    return report.ok ? std::string() : report.lines.back();
  });
  suite.add("unsupported centralizer reported [S3]", []() -> std::string {
    const GroupPtr s3 = std::make_shared<const FiniteGroup>(FiniteGroup::from_multiplication_table(symmetric_group_3_table(), "S3"));
    try {
      enumerate_simples(ThreeCocycle::trivial(s3));
    } catch (const UnsupportedCentralizer&) {
      return {};
    }
    return "no UnsupportedCentralizer raised";
  });
  return suite.results;
}

}  // namespace borromean
