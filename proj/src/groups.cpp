#include "borromean/groups.hpp"

#include <algorithm>
#include <numeric>

namespace borromean {

namespace {

std::string triple_text(int a, int b, int c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

}  // namespace

FiniteGroup FiniteGroup::from_multiplication_table(const std::vector<std::vector<int>>& table,
                                                   std::string name) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw GroupValidationError("multiplication table is empty", {});
  FiniteGroup g;
  g.order_ = n;
  g.name_ = std::move(name);
  g.mul_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n) {
      throw GroupValidationError("row " + std::to_string(a) + " has length " +
                                     std::to_string(table[a].size()) + ", expected " + std::to_string(n),
                                 {a});
    }
    for (int b = 0; b < n; ++b) {
      const int v = table[a][b];
      if (v < 0 || v >= n) {
        throw GroupValidationError("entry (" + std::to_string(a) + ", " + std::to_string(b) +
                                       ") = " + std::to_string(v) + " is out of range",
                                   {a, b});
      }
      g.mul_[static_cast<std::size_t>(a) * n + b] = v;
    }
  }
  for (int a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a) {
      throw GroupValidationError("element 0 is not a two-sided identity at " + std::to_string(a), {a});
    }
  }
  std::vector<char> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      const Element v = g.mul(a, b);
      if (seen[v]) throw GroupValidationError("row " + std::to_string(a) + " is not a permutation", {a});
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      const Element v = g.mul(b, a);
      if (seen[v]) throw GroupValidationError("column " + std::to_string(a) + " is not a permutation", {a});
      seen[v] = 1;
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Element ab = g.mul(a, b);
      for (int c = 0; c < n; ++c) {
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) {
          throw GroupValidationError("multiplication is not associative at " + triple_text(a, b, c),
                                     {a, b, c});
        }
      }
    }
  }
  g.derive_structure();
  return g;
}

void FiniteGroup::derive_structure() {
  const int n = order_;
  inv_.assign(n, kIdentity);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul(a, b) == kIdentity) {
        inv_[a] = b;
        break;
      }
    }
  }
  conj_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) conj_[static_cast<std::size_t>(a) * n + b] = mul(mul(a, b), inv_[a]);
  }
  class_of_.assign(n, -1);
  transporter_.assign(n, -1);
  classes_.clear();
  for (int g = 0; g < n; ++g) {
    if (class_of_[g] != -1) continue;
    ConjugacyClassInfo info;
    info.representative = g;
    const int index = static_cast<int>(classes_.size());
    for (int f = 0; f < n; ++f) {
      const Element x = conjugate(f, g);
      if (class_of_[x] == -1) {
        class_of_[x] = index;
        transporter_[x] = f;
        info.members.push_back(x);
      }
    }
    std::sort(info.members.begin(), info.members.end());
    classes_.push_back(std::move(info));
  }
  centralizers_.assign(n, {});
  for (int g = 0; g < n; ++g) {
    for (int f = 0; f < n; ++f) {
      if (commute(f, g)) centralizers_[g].push_back(f);
    }
  }
}

Element FiniteGroup::power(Element g, long k) const {
  const int ord = element_order(g);
  long e = k % ord;
  if (e < 0) e += ord;
  Element out = kIdentity;
  for (long i = 0; i < e; ++i) out = mul(out, g);
  return out;
}

int FiniteGroup::element_order(Element g) const {
  int k = 1;
  for (Element x = g; x != kIdentity; x = mul(x, g)) ++k;
  return k;
}

std::optional<Element> FiniteGroup::transporter(Element g, Element x) const {
  for (int f = 0; f < order_; ++f) {
    if (conjugate(f, g) == x) return f;
  }
  return std::nullopt;
}

std::vector<Element> FiniteGroup::generated_subgroup(std::span<const Element> generators) const {
  std::vector<char> in(order_, 0);
  std::vector<Element> members{kIdentity};
  in[kIdentity] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element s : generators) {
      const Element x = mul(members[i], s);
      if (!in[x]) {
        in[x] = 1;
        members.push_back(x);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<Element> FiniteGroup::normal_closure(std::span<const Element> elements) const {
  std::vector<Element> generators;
  for (Element x : elements) {
    const auto& members = classes_[class_of_[x]].members;
    generators.insert(generators.end(), members.begin(), members.end());
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  return generated_subgroup(generators);
}

bool FiniteGroup::is_subgroup(std::span<const Element> elements) const {
  std::vector<char> in(order_, 0);
  for (Element x : elements) {
    if (x < 0 || x >= order_) return false;
    in[x] = 1;
  }
  if (!in[kIdentity]) return false;
  for (Element a : elements) {
    for (Element b : elements) {
      if (!in[mul(a, inv(b))]) return false;
    }
  }
  return true;
}

bool FiniteGroup::is_abelian(std::span<const Element> subgroup) const {
  for (Element a : subgroup) {
    for (Element b : subgroup) {
      if (!commute(a, b)) return false;
    }
  }
  return true;
}

bool FiniteGroup::is_normal(std::span<const Element> subgroup) const {
  std::vector<char> in(order_, 0);
  for (Element x : subgroup) in[x] = 1;
  for (int f = 0; f < order_; ++f) {
    for (Element x : subgroup) {
      if (!in[conjugate(f, x)]) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> FiniteGroup::multiplication_table() const {
  std::vector<std::vector<int>> table(order_, std::vector<int>(order_));
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) table[a][b] = mul(a, b);
  }
  return table;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FiniteGroup pq_group(int p, int q) {
  if (!is_prime(p) || !is_prime(q) || p == 2 || q == 2) {
    throw ParameterError("pq_group needs odd primes, got p=" + std::to_string(p) + ", q=" + std::to_string(q));
  }
  if ((q - 1) % p != 0) {
    throw ParameterError("pq_group needs p | q-1, got p=" + std::to_string(p) + ", q=" + std::to_string(q));
  }
  int n = 0;
  for (int cand = 2; cand < q; ++cand) {
    long power = 1;
    for (int i = 0; i < p; ++i) power = power * cand % q;
    if (power == 1) {
      n = cand;
      break;
    }
  }
  if (n == 0) throw ParameterError("no element of order p in (Z/q)^x");
  // n^k mod q for k in [0, p)
  std::vector<long> npow(p, 1);
  for (int k = 1; k < p; ++k) npow[k] = npow[k - 1] * n % q;
  const int order = p * q;
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int l1 = 0; l1 < q; ++l1) {
    for (int k1 = 0; k1 < p; ++k1) {
      for (int l2 = 0; l2 < q; ++l2) {
        for (int k2 = 0; k2 < p; ++k2) {
          // b^k1 a^l2 = a^(n^k1 l2) b^k1
          const int l = static_cast<int>((l1 + npow[k1] * l2) % q);
          const int k = (k1 + k2) % p;
          table[l1 * p + k1][l2 * p + k2] = l * p + k;
        }
      }
    }
  }
  FiniteGroup g = FiniteGroup::from_multiplication_table(
      table, "Z/" + std::to_string(q) + " x| Z/" + std::to_string(p));
  g.set_pq_parameters({p, q, n});
  return g;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw ParameterError("cyclic group order must be positive");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FiniteGroup::from_multiplication_table(table, "Z/" + std::to_string(n));
}

}  // namespace borromean
