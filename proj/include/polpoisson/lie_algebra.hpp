#pragma once

#include "polpoisson/rational.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polpoisson {

/// One failed Lie-algebra axiom component. Indices are 0-based; `describe()`
/// prints them 1-based.
struct AxiomViolation {
  enum class Kind { antisymmetry, jacobi };
  Kind kind;
  /// antisymmetry: (i, j, l, unused); jacobi: (i, j, k, l).
  std::array<std::size_t, 4> indices;
  /// The nonzero residual (C_ij^l + C_ji^l, or the Jacobi sum).
  Rational residual;

  std::string describe() const;
};

struct ValidationReport {
  std::vector<AxiomViolation> violations;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

/// [e_i, e_j] = sum_l coeffs[l] e_l, 0-based.
struct BracketEntry {
  std::size_t i;
  std::size_t j;
  std::map<std::size_t, Rational> coeffs;
};

/// d omega^l = coeff * omega^i ^ omega^j with i < j, 0-based.
struct MaurerCartanEntry {
  std::size_t l;
  std::size_t i;
  std::size_t j;
  Rational coeff;

  friend bool operator==(const MaurerCartanEntry&, const MaurerCartanEntry&) = default;
};

struct MaurerCartanData {
  std::size_t dim = 0;
  std::vector<MaurerCartanEntry> d;

  /// Entries sorted by (l, i, j), zeros dropped.
  MaurerCartanData canonical() const;
  friend bool operator==(const MaurerCartanData&, const MaurerCartanData&) = default;
};

/// Finite-dimensional real Lie algebra given by exact structure constants
/// C[i][j][l], the coefficient of e_l in [e_i, e_j].
///
/// Construction does not reject tensors that break antisymmetry or Jacobi:
/// broken algebras are needed as negative controls. `is_valid()` is computed
/// once at construction; callers that need a genuine Lie algebra check it.
class LieAlgebra {
 public:
  /// `constants` is row-major [i][j][l] with dim^3 entries.
  LieAlgebra(std::size_t dim, std::vector<Rational> constants, std::string name = {});

  static LieAlgebra abelian(std::size_t dim);
  /// Sets C[i][j][l] = c and C[j][i][l] = -c for every listed entry.
  static LieAlgebra from_brackets(std::size_t dim, std::span<const BracketEntry> entries,
                                  std::string name = {});

  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const Rational& c(std::size_t i, std::size_t j, std::size_t l) const
  {
    return constants_[(i * dim_ + j) * dim_ + l];
  }

  ValidationReport validate() const;
  bool is_valid() const { return valid_; }

  /// w_l = sum_{i,j} C[i][j][l] u_i v_j.
  std::vector<Rational> bracket(std::span<const Rational> u, std::span<const Rational> v) const;

  /// Nonzero brackets [e_i, e_j] with i < j.
  std::vector<BracketEntry> brackets() const;
  MaurerCartanData to_maurer_cartan() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b)
  {
    return a.dim_ == b.dim_ && a.constants_ == b.constants_;
  }

 private:
  std::size_t dim_;
  std::vector<Rational> constants_;
  std::string name_;
  bool valid_ = false;
};

/// Uses d omega^l(e_i, e_j) = -omega^l([e_i, e_j]), so C[i][j][l] = -d^l_ij.
/// Throws std::invalid_argument for malformed data or when the result fails
/// validation.
LieAlgebra from_maurer_cartan(const MaurerCartanData& data, std::string name = {});

/// Catalog: "abelian(n)", "heisenberg3", "h3_plus_a", "n4".
/// Throws std::invalid_argument for unknown names.
LieAlgebra builtin_algebra(std::string_view name);

/// Names of the fixed-dimension catalog entries plus a representative abelian.
std::vector<std::string> builtin_algebra_names();

}  // namespace polpoisson
