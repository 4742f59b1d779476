#pragma once

#include "polpoisson/geometry.hpp"
#include "polpoisson/parser.hpp"

#include <string>
#include <vector>

namespace polpoisson::test {

inline Polynomial poly(const std::string& text, const VarSetPtr& vars)
{
  return parse_polynomial(text, vars);
}

/// Hamiltonian from expression strings over m's y variables.
inline PolarizedHamiltonian ham(const ModelManifold& m, const std::vector<std::string>& a,
                                const std::vector<std::string>& b)
{
  std::vector<Polynomial> pa, pb;
  for (const auto& s : a)
    pa.push_back(parse_polynomial(s, m.basic_vars()));
  for (const auto& s : b)
    pb.push_back(parse_polynomial(s, m.basic_vars()));
  return PolarizedHamiltonian(m, std::move(pa), std::move(pb));
}

/// Affine expression from text over m's full coordinates.
inline AffineExpr affine(const ModelManifold& m, const std::string& text)
{
  return AffineExpr::from_polynomial(m, parse_polynomial(text, m.coordinate_vars()));
}

}  // namespace polpoisson::test
