#pragma once

#include "polpoisson/geometry.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace polpoisson {

/// Seeded generator of random exact objects for property checks. Draws are
/// reduced with `%` rather than std distributions so sequences are identical
/// across standard libraries.
class SampleGenerator {
 public:
  explicit SampleGenerator(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return rng_() % bound; }
  /// Nonzero small rational: numerator in [-5, 5] \ {0}, denominator in [1, 3].
  Rational nonzero_rational();
  Rational rational() { return below(4) == 0 ? Rational(0) : nonzero_rational(); }

  /// Each monomial of total degree <= max_degree appears with probability 1/2.
  Polynomial basic(const ModelManifold& m, unsigned max_degree);
  PolarizedHamiltonian hamiltonian(const ModelManifold& m, unsigned max_degree);
  /// a = 0.
  PolarizedHamiltonian basic_hamiltonian(const ModelManifold& m, unsigned max_degree);
  /// Random invertible n*n rational matrix, row-major.
  std::vector<Rational> invertible_matrix(std::size_t n);

 private:
  std::mt19937_64 rng_;
};

/// All exponent vectors over n variables with total degree <= max_degree.
std::vector<Exponents> monomials_up_to(std::size_t n, unsigned max_degree);

}  // namespace polpoisson
