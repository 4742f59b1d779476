#include "polpoisson/sampling.hpp"

namespace polpoisson {

namespace {

void enumerate(std::size_t var, unsigned remaining, Exponents& current, std::vector<Exponents>& out)
{
  if (var == current.size()) {
    out.push_back(current);
    return;
  }
  for (unsigned e = 0; e <= remaining; ++e) {
    current[var] = e;
    enumerate(var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}

Rational determinant(std::vector<Rational> m, std::size_t n)
{
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot * n + col] == 0)
      ++pivot;
    if (pivot == n)
      return Rational(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(m[pivot * n + j], m[col * n + j]);
      det = -det;
    }
    det *= m[col * n + col];
    for (std::size_t r = col + 1; r < n; ++r) {
      Rational f = m[r * n + col] / m[col * n + col];
      for (std::size_t j = col; j < n; ++j)
        m[r * n + j] -= f * m[col * n + j];
    }
  }
  return det;
}

}  // namespace

std::vector<Exponents> monomials_up_to(std::size_t n, unsigned max_degree)
{
  std::vector<Exponents> out;
  Exponents current(n, 0);
  enumerate(0, max_degree, current, out);
  return out;
}

Rational SampleGenerator::nonzero_rational()
{
  long num = static_cast<long>(below(10));
  num = num < 5 ? num - 5 : num - 4;  // [-5,-1] u [1,5]
  long den = static_cast<long>(below(3)) + 1;
  return make_rational(num, den);
}

Polynomial SampleGenerator::basic(const ModelManifold& m, unsigned max_degree)
{
  Polynomial p = m.basic_zero();
  for (auto& e : monomials_up_to(m.n(), max_degree))
    if (below(2) == 0)
      p += Polynomial::monomial(m.basic_vars(), e, nonzero_rational());
  return p;
}

PolarizedHamiltonian SampleGenerator::hamiltonian(const ModelManifold& m, unsigned max_degree)
{
  std::vector<Polynomial> a;
  std::vector<Polynomial> b;
  for (std::size_t j = 0; j < m.n(); ++j)
    a.push_back(basic(m, max_degree));
  for (std::size_t p = 0; p < m.k(); ++p)
    b.push_back(basic(m, max_degree));
  return PolarizedHamiltonian(m, std::move(a), std::move(b));
}

PolarizedHamiltonian SampleGenerator::basic_hamiltonian(const ModelManifold& m, unsigned max_degree)
{
  std::vector<Polynomial> b;
  for (std::size_t p = 0; p < m.k(); ++p)
    b.push_back(basic(m, max_degree));
  return PolarizedHamiltonian(m, std::vector<Polynomial>(m.n(), m.basic_zero()), std::move(b));
}

std::vector<Rational> SampleGenerator::invertible_matrix(std::size_t n)
{
  for (;;) {
    std::vector<Rational> a(n * n);
    for (auto& v : a)
      v = rational();
    if (determinant(a, n) != 0)
      return a;
  }
}

}  // namespace polpoisson
