#pragma once

#include "polpoisson/geometry.hpp"
#include "polpoisson/lie_algebra.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polpoisson {

/// Bracket subordinate to the canonical theta:
///   {H,K}^p = sum_i (dH^p/dy^i dK^p/dx^{pi} - dH^p/dx^{pi} dK^p/dy^i),
/// i.e. a''_j = sum_i (a'_i da_j/dy^i - a_i da'_j/dy^i) and
///      b''^p = sum_i (a'_i db^p/dy^i - a_i db'^p/dy^i).
/// Independent of any Lie algebra structure.
PolarizedHamiltonian subordinate_bracket(const PolarizedHamiltonian& h, const PolarizedHamiltonian& k);

/// Linear bracket of hom(G, R^{k+1}): a''_l = sum_{i,j} C_ij^l a^i a'^j, b'' = 0.
/// Throws std::invalid_argument if `algebra` fails validation or dim G != n.
PolarizedHamiltonian linear_bracket(const LieAlgebra& algebra, const PolarizedHamiltonian& h,
                                    const PolarizedHamiltonian& k);

/// (dH^p o j_q)(omega^i) = delta^p_q a^i, as a vector over the basis e_i.
std::vector<Polynomial> gradient_restriction(const PolarizedHamiltonian& h, std::size_t p, std::size_t q);

/// Foliate field for the linear bracket: eta = 0,
/// xi^{pi} = sum_{j,l} C_ij^l a^j(y) x^{pl}. Satisfies X_H(K) = {K,H}^L.
FoliateField linear_hamiltonian_field(const LieAlgebra& algebra, const PolarizedHamiltonian& h);

/// Either the subordinate bracket or the linear bracket of a Lie algebra.
class Bracket {
 public:
  static Bracket subordinate() { return Bracket(std::nullopt); }
  /// Throws std::invalid_argument if `algebra` is not a Lie algebra.
  static Bracket linear(LieAlgebra algebra);
  /// Skips validation so broken structure constants can be probed.
  static Bracket linear_unchecked(LieAlgebra algebra) { return Bracket(std::move(algebra)); }

  bool is_linear() const { return algebra_.has_value(); }
  const LieAlgebra* algebra() const { return algebra_ ? &*algebra_ : nullptr; }
  std::string name() const;

  PolarizedHamiltonian operator()(const PolarizedHamiltonian& h, const PolarizedHamiltonian& k) const;
  /// The foliate field X_H with X_H(K) = {K,H}.
  FoliateField field(const PolarizedHamiltonian& h) const;

 private:
  explicit Bracket(std::optional<LieAlgebra> algebra) : algebra_(std::move(algebra)) {}

  std::optional<LieAlgebra> algebra_;
};

/// {{H,K},G} + {{K,G},H} + {{G,H},K}.
PolarizedHamiltonian jacobiator(const Bracket& bracket, const PolarizedHamiltonian& h, const PolarizedHamiltonian& k,
                                const PolarizedHamiltonian& g);

/// Three Hamiltonians with constant a-vectors e_i, e_j, e_k taken from the
/// first Jacobi violation of `algebra`; nullopt for a Lie algebra. Requires
/// dim = m.n().
std::optional<std::array<PolarizedHamiltonian, 3>> jacobi_witness(const LieAlgebra& algebra, const ModelManifold& m);

struct AxiomResult {
  std::string axiom;
  bool passed = true;
  std::string witness;
};

struct AxiomReport {
  std::vector<AxiomResult> results;

  bool all_passed() const;
  std::string to_string() const;
};

/// Exact check of the polarized Poisson axioms on the samples: bilinearity,
/// antisymmetry, Jacobi, vanishing on basic pairs, existence of a foliate
/// X_H with X_H(K) = {K,H}, and closure. Consecutive triples of samples are
/// used; linear brackets are additionally probed on basis triples.
AxiomReport verify_axioms(const Bracket& bracket, const ModelManifold& m,
                          std::span<const PolarizedHamiltonian> samples);

}  // namespace polpoisson
