#pragma once

// Categorical evaluation of braid closures: simples are built as explicit
// G-graded spaces with a quasi-action, and braid generators act on the
// left-nested triple product ((X_i x X_j) x X_k) as monomial maps.
//
// Scalars are exponents of a root of unity of order modulus().

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "borromean/center.hpp"

namespace borromean {

struct ExplicitSimple {
  int dim = 0;
  long modulus = 1;
  std::vector<Element> degrees;  // |v_i|
  /// Target index and scalar exponent of f |> v_i at [f * dim + i].
  std::vector<std::pair<int, long>> action;

  const std::pair<int, long>& act(Element f, int i) const {
    return action[static_cast<std::size_t>(f) * dim + i];
  }
};

/// Induced from the simple's monomial data: basis over the cosets tK of the
/// inducing subgroup K (least-index representatives), with
/// h |> v_i = zeta^(alpha_g(h,t_i) - alpha_g(t_j,k) + lambda(k)) v_j where
/// h t_i = t_j k. `modulus` is a multiple of the cocycle modulus.
ExplicitSimple build_explicit(const ThreeCocycle& omega, const SimpleObject& simple, long modulus);
/// Inducing data of a simple: the supplied data, or K = C_G(g) read off the
/// values of a one-dimensional character.
MonomialInducing inducing_of(const SimpleObject& simple);

struct QuasiActionViolation {
  Element f = kIdentity;
  Element h = kIdentity;
  int basis = 0;
  std::string describe() const;
};
/// Checks grading, trivial identity action and
/// f |> (h |> v) = zeta^alpha_|v|(f, h) (fh) |> v exhaustively.
std::optional<QuasiActionViolation> verify_quasi_action(const ExplicitSimple& simple, const ThreeCocycle& omega);

/// Per-basis-vector target and scalar exponent.
struct MonomialMap {
  long modulus = 1;
  std::vector<int> target;
  std::vector<long> exponent;

  /// This map after `first`.
  MonomialMap after(const MonomialMap& first) const;
  bool operator==(const MonomialMap& o) const = default;
};

enum class BraidGenerator { kS1, kS1Inv, kS2, kS2Inv };
/// Tokens s1, s1', s2, s2' separated by whitespace.
std::vector<BraidGenerator> parse_braid_word(std::string_view text);
std::string render_braid_word(const std::vector<BraidGenerator>& word);

enum class InverseForm {
  kFirst,   // f^-1 * w = zeta^(-alpha_|w|(f, f^-1)) f^-1 |> w
  kSecond,  // f^-1 * w = zeta^(-alpha_(f^-1|>|w|)(f^-1, f)) f^-1 |> w
};

class BraidOracle {
 public:
  BraidOracle(const ThreeCocycle& omega, const std::vector<SimpleObject>& simples,
              InverseForm form = InverseForm::kFirst);

  long modulus() const { return modulus_; }
  const ExplicitSimple& simple(std::size_t i) const { return explicit_[i]; }
  std::size_t size() const { return explicit_.size(); }

  /// Map of the word on ((X_c0 x X_c1) x X_c2), applied right to left.
  /// Also returns the colors of the codomain.
  MonomialMap word_map(const std::vector<BraidGenerator>& word, std::array<std::size_t, 3> colors,
                       std::array<std::size_t, 3>* final_colors = nullptr) const;
  /// Trace of the closure. Throws ValidationError when the word permutes
  /// strands of different colors.
  Cyclotomic trace(const std::vector<BraidGenerator>& word, std::array<std::size_t, 3> colors) const;

 private:
  struct State {
    std::array<std::size_t, 3> colors;
    std::array<int, 3> basis;
    long exponent;
  };
  void apply(BraidGenerator gen, State& s) const;
  long inverse_shift(Element f, Element w_degree) const;

  ThreeCocycle omega_;
  InverseForm form_;
  long modulus_ = 1;
  long scale_ = 1;  // modulus_ / omega modulus
  std::vector<ExplicitSimple> explicit_;
};

/// (s2' s1)^3, whose closure is the Borromean rings.
std::vector<BraidGenerator> borromean_word();

}  // namespace borromean
