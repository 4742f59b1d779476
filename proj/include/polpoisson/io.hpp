#pragma once

#include "polpoisson/geometry.hpp"
#include "polpoisson/lie_algebra.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polpoisson {

using Json = nlohmann::json;

/// Input problem with one diagnostic per offending field
/// ("hamiltonians.H.a[2]: unknown variable 'y4' at position 0").
class ProblemError : public std::runtime_error {
 public:
  explicit ProblemError(std::vector<std::string> diagnostics);
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

/// {"dim": n, "brackets": [{"i":1,"j":2,"coeffs":{"3":"1"}}]} with 1-based
/// indices and rational strings.
Json lie_algebra_to_json(const LieAlgebra& algebra);
/// {"dim": n, "d": [{"l":1,"i":2,"j":3,"coeff":"1"}]}.
Json maurer_cartan_to_json(const MaurerCartanData& data);

/// Accepts the bracket form, the Maurer-Cartan form, or {"builtin": name}.
/// The result is not required to validate; check `is_valid()`.
/// Throws ProblemError.
LieAlgebra lie_algebra_from_json(const Json& j, const std::string& where = "lie_algebra");

/// {"k":2,"n":3,"a":["y1","0","y2^2"],"b":["1","y1*y2"]}.
Json hamiltonian_to_json(const PolarizedHamiltonian& h);

/// Reads either the (a, b) form or {"components": [...]} with k expressions
/// in x_p_i and yi, which must pass is_polarized_hamiltonian. "k"/"n" are
/// optional but must match `m` when present. Throws ProblemError.
PolarizedHamiltonian hamiltonian_from_json(const Json& j, const ModelManifold& m,
                                           const std::string& where = "hamiltonian");

/// {"xi": [[...k rows of n...]], "eta": [...]} in canonical text.
Json field_to_json(const FoliateField& x);

struct NamedHamiltonian {
  std::string name;
  PolarizedHamiltonian hamiltonian;
};

/// Self-describing problem:
/// {"manifold": {"k":1,"n":3}, "lie_algebra": {...}, "hamiltonians": {"H": {...}, ...}}
struct ProblemFile {
  ModelManifold manifold;
  std::optional<LieAlgebra> algebra;
  std::vector<NamedHamiltonian> hamiltonians;

  /// Throws std::out_of_range for unknown names.
  const PolarizedHamiltonian& hamiltonian(const std::string& name) const;
};

/// Parses the structure, every expression and the dimensions. The algebra
/// is loaded even when it fails validation. Throws ProblemError.
ProblemFile problem_from_json(const Json& j);
ProblemFile load_problem(const std::filesystem::path& path);

}  // namespace polpoisson
