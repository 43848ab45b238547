#include "borromean/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "borromean/error.hpp"

namespace borromean {

MonomialInducing inducing_of(const SimpleObject& simple) {
  if (simple.chi.inducing) return *simple.chi.inducing;
  if (simple.chi.degree != 1) {
    throw UnsupportedCentralizer("simple (" + std::to_string(simple.label.class_index) + ", " +
                                 std::to_string(simple.label.char_index) +
                                 ") has degree > 1 and no monomial representation data");
  }
  MonomialInducing out;
  out.subgroup = simple.chi.domain;
  std::vector<std::pair<long, long>> roots;
  for (const auto& v : simple.chi.values) {
    auto r = v.as_root_of_unity();
    if (!r) throw ValidationError("one-dimensional character value " + render(v) + " is not a root of unity");
    roots.push_back(*r);
    out.modulus = lcm_long(out.modulus, r->first);
  }
  for (const auto& [order, e] : roots) out.exponents.push_back(e * (out.modulus / order));
  return out;
}

ExplicitSimple build_explicit(const ThreeCocycle& omega, const SimpleObject& simple, long modulus) {
  const FiniteGroup& G = omega.g();
  const MonomialInducing ind = inducing_of(simple);
  if (modulus % omega.modulus() != 0 || modulus % ind.modulus != 0) {
    throw ValidationError("explicit simple modulus must be a multiple of every scalar modulus");
  }
  const Element g = simple.g;
  for (Element k : ind.subgroup) {
    if (!G.commute(k, g)) throw ValidationError("inducing subgroup is not inside the centralizer");
  }
  const long scale = modulus / omega.modulus();
  const long lscale = modulus / ind.modulus;
  const int n = G.order();
  std::vector<int> coset_of(n, -1);
  std::vector<Element> reps;
  for (Element t = 0; t < n; ++t) {
    if (coset_of[t] != -1) continue;
    const int index = static_cast<int>(reps.size());
    reps.push_back(t);
    for (Element k : ind.subgroup) coset_of[G.mul(t, k)] = index;
  }
  ExplicitSimple out;
  out.dim = static_cast<int>(reps.size());
  out.modulus = modulus;
  for (Element t : reps) out.degrees.push_back(G.conjugate(t, g));
  out.action.resize(static_cast<std::size_t>(n) * out.dim);
  for (Element h = 0; h < n; ++h) {
    for (int i = 0; i < out.dim; ++i) {
      const Element ht = G.mul(h, reps[i]);
      const int j = coset_of[ht];
      const Element k = G.mul(G.inv(reps[j]), ht);
      const long e = (omega.alpha(g, h, reps[i]) - omega.alpha(g, reps[j], k)) * scale + ind.at(k) * lscale;
      out.action[static_cast<std::size_t>(h) * out.dim + i] = {j, mod_floor(e, modulus)};
    }
  }
  return out;
}

std::string QuasiActionViolation::describe() const {
  std::ostringstream os;
  os << "quasi-action axiom fails at f=" << f << ", h=" << h << ", basis vector " << basis;
  return os.str();
}

std::optional<QuasiActionViolation> verify_quasi_action(const ExplicitSimple& s, const ThreeCocycle& omega) {
  const FiniteGroup& G = omega.g();
  const long scale = s.modulus / omega.modulus();
  for (int i = 0; i < s.dim; ++i) {
    const auto& [t, e] = s.act(kIdentity, i);
    if (t != i || e != 0) return QuasiActionViolation{kIdentity, kIdentity, i};
  }
  for (Element f = 0; f < G.order(); ++f) {
    for (int i = 0; i < s.dim; ++i) {
      if (s.degrees[s.act(f, i).first] != G.conjugate(f, s.degrees[i])) return QuasiActionViolation{f, f, i};
    }
  }
  for (Element f = 0; f < G.order(); ++f) {
    for (Element h = 0; h < G.order(); ++h) {
      const Element fh = G.mul(f, h);
      for (int i = 0; i < s.dim; ++i) {
        const auto& [j1, e1] = s.act(h, i);
        const auto& [j2, e2] = s.act(f, j1);
        const auto& [j3, e3] = s.act(fh, i);
        const long lhs = e1 + e2;
        const long rhs = omega.alpha(s.degrees[i], f, h) * scale + e3;
        if (j2 != j3 || mod_floor(lhs - rhs, s.modulus) != 0) return QuasiActionViolation{f, h, i};
      }
    }
  }
  return std::nullopt;
}

MonomialMap MonomialMap::after(const MonomialMap& first) const {
  if (modulus != first.modulus) throw ValidationError("monomial maps use different moduli");
  MonomialMap out;
  out.modulus = modulus;
  out.target.resize(first.target.size());
  out.exponent.resize(first.target.size());
  for (std::size_t i = 0; i < first.target.size(); ++i) {
    const int mid = first.target[i];
    out.target[i] = target[mid];
    out.exponent[i] = mod_floor(first.exponent[i] + exponent[mid], modulus);
  }
  return out;
}

std::vector<BraidGenerator> parse_braid_word(std::string_view text) {
  std::vector<BraidGenerator> word;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "s1") {
      word.push_back(BraidGenerator::kS1);
    } else if (token == "s1'") {
      word.push_back(BraidGenerator::kS1Inv);
    } else if (token == "s2") {
      word.push_back(BraidGenerator::kS2);
    } else if (token == "s2'") {
      word.push_back(BraidGenerator::kS2Inv);
    } else {
      throw ValidationError("unknown braid generator '" + token + "'; expected s1, s1', s2 or s2'");
    }
  }
  return word;
}

std::string render_braid_word(const std::vector<BraidGenerator>& word) {
  std::string out;
  for (BraidGenerator g : word) {
    if (!out.empty()) out += ' ';
    switch (g) {
      case BraidGenerator::kS1: out += "s1"; break;
      case BraidGenerator::kS1Inv: out += "s1'"; break;
      case BraidGenerator::kS2: out += "s2"; break;
      case BraidGenerator::kS2Inv: out += "s2'"; break;
    }
  }
  return out;
}

std::vector<BraidGenerator> borromean_word() { return parse_braid_word("s2' s1 s2' s1 s2' s1"); }

BraidOracle::BraidOracle(const ThreeCocycle& omega, const std::vector<SimpleObject>& simples, InverseForm form)
    : omega_(omega), form_(form) {
  modulus_ = omega_.modulus();
  std::vector<MonomialInducing> inducing;
  for (const auto& s : simples) {
    inducing.push_back(inducing_of(s));
    modulus_ = lcm_long(modulus_, inducing.back().modulus);
  }
  scale_ = modulus_ / omega_.modulus();
  for (const auto& s : simples) explicit_.push_back(build_explicit(omega_, s, modulus_));
}

long BraidOracle::inverse_shift(Element f, Element w_degree) const {
  const FiniteGroup& G = omega_.g();
  const Element fi = G.inv(f);
  if (form_ == InverseForm::kFirst) return -omega_.alpha(w_degree, f, fi) * scale_;
  return -omega_.alpha(G.conjugate(fi, w_degree), fi, f) * scale_;
}

void BraidOracle::apply(BraidGenerator gen, State& s) const {
  const FiniteGroup& G = omega_.g();
  auto degree = [&](int pos) { return explicit_[s.colors[pos]].degrees[s.basis[pos]]; };
  auto assoc = [&]() { return omega_(degree(0), degree(1), degree(2)) * scale_; };
  // braiding on positions (p, p+1): x (x) y -> |x| |> y (x) x
  auto braid = [&](int p) {
    const Element f = degree(p);
    const auto& [target, e] = explicit_[s.colors[p + 1]].act(f, s.basis[p + 1]);
    s.exponent += e;
    const int moved = s.basis[p];
    std::swap(s.colors[p], s.colors[p + 1]);
    s.basis[p] = target;
    s.basis[p + 1] = moved;
  };
  // inverse braiding on positions (p, p+1): w (x) x -> x (x) |x|^-1 * w
  auto unbraid = [&](int p) {
    const Element f = degree(p + 1);
    const Element wd = degree(p);
    const auto& [target, e] = explicit_[s.colors[p]].act(G.inv(f), s.basis[p]);
    s.exponent += e + inverse_shift(f, wd);
    const int moved = s.basis[p + 1];
    std::swap(s.colors[p], s.colors[p + 1]);
    s.basis[p + 1] = target;
    s.basis[p] = moved;
  };
  switch (gen) {
    case BraidGenerator::kS1: braid(0); break;
    case BraidGenerator::kS1Inv: unbraid(0); break;
    case BraidGenerator::kS2:
    case BraidGenerator::kS2Inv:
      s.exponent += assoc();
      if (gen == BraidGenerator::kS2) {
        braid(1);
      } else {
        unbraid(1);
      }
      s.exponent -= assoc();
      break;
  }
  s.exponent = mod_floor(s.exponent, modulus_);
}

MonomialMap BraidOracle::word_map(const std::vector<BraidGenerator>& word, std::array<std::size_t, 3> colors,
                                  std::array<std::size_t, 3>* final_colors) const {
  const int d0 = explicit_[colors[0]].dim, d1 = explicit_[colors[1]].dim, d2 = explicit_[colors[2]].dim;
  MonomialMap map;
  map.modulus = modulus_;
  std::array<std::size_t, 3> end = colors;
  for (int a = 0; a < d0; ++a) {
    for (int b = 0; b < d1; ++b) {
      for (int c = 0; c < d2; ++c) {
        State s{colors, {a, b, c}, 0};
        for (auto it = word.rbegin(); it != word.rend(); ++it) apply(*it, s);
        end = s.colors;
        const int e1 = explicit_[s.colors[1]].dim, e2 = explicit_[s.colors[2]].dim;
        map.target.push_back((s.basis[0] * e1 + s.basis[1]) * e2 + s.basis[2]);
        map.exponent.push_back(s.exponent);
      }
    }
  }
  if (final_colors) *final_colors = end;
  return map;
}

Cyclotomic BraidOracle::trace(const std::vector<BraidGenerator>& word, std::array<std::size_t, 3> colors) const {
  std::array<std::size_t, 3> end{};
  const MonomialMap map = word_map(word, colors, &end);
  if (end != colors) {
    throw ValidationError("braid word '" + render_braid_word(word) +
                          "' permutes strands of different colors; its closure trace is not defined here");
  }
  CyclotomicAccumulator acc(modulus_);
  for (std::size_t v = 0; v < map.target.size(); ++v) {
    if (map.target[v] == static_cast<int>(v)) acc.add_root(map.exponent[v]);
  }
  return acc.to_cyclotomic();
}

}  // namespace borromean
