#include "polpoisson/lie_algebra.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace polpoisson {

std::string AxiomViolation::describe() const
{
  std::ostringstream os;
  if (kind == Kind::antisymmetry) {
    os << "antisymmetry violated: C[" << indices[0] + 1 << "][" << indices[1] + 1 << "][" << indices[2] + 1
       << "] + C[" << indices[1] + 1 << "][" << indices[0] + 1 << "][" << indices[2] + 1
       << "] = " << to_string(residual);
  } else {
    os << "Jacobi violated at (i,j,k)=(" << indices[0] + 1 << "," << indices[1] + 1 << "," << indices[2] + 1
       << "), component l=" << indices[3] + 1 << ": residual " << to_string(residual);
  }
  return os.str();
}

std::string ValidationReport::to_string() const
{
  if (ok())
    return "ok";
  std::ostringstream os;
  for (const auto& v : violations)
    os << v.describe() << '\n';
  return os.str();
}

MaurerCartanData MaurerCartanData::canonical() const
{
  MaurerCartanData out{dim, {}};
  for (const auto& e : d)
    if (e.coeff != 0)
      out.d.push_back(e);
  std::sort(out.d.begin(), out.d.end(),
            [](const auto& a, const auto& b) { return std::tie(a.l, a.i, a.j) < std::tie(b.l, b.i, b.j); });
  return out;
}

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<Rational> constants, std::string name)
    : dim_(dim), constants_(std::move(constants)), name_(std::move(name))
{
  if (dim_ == 0)
    throw std::invalid_argument("Lie algebra dimension must be positive");
  if (constants_.size() != dim_ * dim_ * dim_)
    throw std::invalid_argument("structure constant tensor must have dim^3 entries");
  valid_ = validate().ok();
}

LieAlgebra LieAlgebra::abelian(std::size_t dim)
{
  return LieAlgebra(dim, std::vector<Rational>(dim * dim * dim), "abelian(" + std::to_string(dim) + ")");
}

LieAlgebra LieAlgebra::from_brackets(std::size_t dim, std::span<const BracketEntry> entries, std::string name)
{
  std::vector<Rational> c(dim * dim * dim);
  auto at = [&](std::size_t i, std::size_t j, std::size_t l) -> Rational& { return c[(i * dim + j) * dim + l]; };
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim)
      throw std::invalid_argument("bracket index out of range");
    for (const auto& [l, v] : e.coeffs) {
      if (l >= dim)
        throw std::invalid_argument("bracket coefficient index out of range");
      at(e.i, e.j, l) = v;
      at(e.j, e.i, l) = -v;
    }
  }
  return LieAlgebra(dim, std::move(c), std::move(name));
}

ValidationReport LieAlgebra::validate() const
{
  ValidationReport report;
  const std::size_t n = dim_;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        Rational r = c(i, j, l) + c(j, i, l);
        if (r != 0)
          report.violations.push_back({AxiomViolation::Kind::antisymmetry, {i, j, l, 0}, r});
      }
  // With antisymmetry the Jacobiator is totally antisymmetric, so i<j<k
  // covers every independent component.
  const bool antisymmetric = report.ok();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (antisymmetric && !(i < j && j < k))
          continue;
        for (std::size_t l = 0; l < n; ++l) {
          Rational sum(0);
          for (std::size_t m = 0; m < n; ++m)
            sum += c(i, j, m) * c(m, k, l) + c(j, k, m) * c(m, i, l) + c(k, i, m) * c(m, j, l);
          if (sum != 0)
            report.violations.push_back({AxiomViolation::Kind::jacobi, {i, j, k, l}, sum});
        }
      }
  return report;
}

std::vector<Rational> LieAlgebra::bracket(std::span<const Rational> u, std::span<const Rational> v) const
{
  if (u.size() != dim_ || v.size() != dim_)
    throw std::invalid_argument("bracket: coefficient vector length must equal the dimension");
  std::vector<Rational> w(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u[i] == 0)
      continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (v[j] == 0)
        continue;
      for (std::size_t l = 0; l < dim_; ++l)
        if (c(i, j, l) != 0)
          w[l] += c(i, j, l) * u[i] * v[j];
    }
  }
  return w;
}

std::vector<BracketEntry> LieAlgebra::brackets() const
{
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) {
      BracketEntry e{i, j, {}};
      for (std::size_t l = 0; l < dim_; ++l)
        if (c(i, j, l) != 0)
          e.coeffs.emplace(l, c(i, j, l));
      if (!e.coeffs.empty())
        out.push_back(std::move(e));
    }
  return out;
}

MaurerCartanData LieAlgebra::to_maurer_cartan() const
{
  MaurerCartanData data{dim_, {}};
  for (std::size_t l = 0; l < dim_; ++l)
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if (c(i, j, l) != 0)
          data.d.push_back({l, i, j, -c(i, j, l)});
  return data;
}

LieAlgebra from_maurer_cartan(const MaurerCartanData& data, std::string name)
{
  const std::size_t n = data.dim;
  if (n == 0)
    throw std::invalid_argument("Maurer-Cartan data: dimension must be positive");
  std::vector<Rational> c(n * n * n);
  std::vector<bool> seen(n * n * n, false);
  for (const auto& e : data.d) {
    if (e.l >= n || e.i >= n || e.j >= n)
      throw std::invalid_argument("Maurer-Cartan data: index out of range");
    if (e.i >= e.j)
      throw std::invalid_argument("Maurer-Cartan data: entries need i < j");
    auto idx = (e.i * n + e.j) * n + e.l;
    if (seen[idx])
      throw std::invalid_argument("Maurer-Cartan data: duplicate entry for d omega^" + std::to_string(e.l + 1));
    seen[idx] = true;
    c[idx] = -e.coeff;
    c[(e.j * n + e.i) * n + e.l] = e.coeff;
  }
  LieAlgebra algebra(n, std::move(c), std::move(name));
  if (!algebra.is_valid())
    throw std::invalid_argument("Maurer-Cartan data does not define a Lie algebra:\n" +
                                algebra.validate().to_string());
  return algebra;
}

LieAlgebra builtin_algebra(std::string_view name)
{
  if (name == "heisenberg3") {
    BracketEntry e{0, 1, {{2, Rational(1)}}};
    return LieAlgebra::from_brackets(3, std::span(&e, 1), "heisenberg3");
  }
  if (name == "h3_plus_a")
    return from_maurer_cartan({4, {{0, 1, 2, Rational(1)}}}, "h3_plus_a");
  if (name == "n4")
    return from_maurer_cartan({4, {{2, 0, 1, Rational(1)}, {3, 0, 2, Rational(1)}}}, "n4");
  constexpr std::string_view prefix = "abelian(";
  if (name.starts_with(prefix) && name.ends_with(")")) {
    auto digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
    std::size_t dim = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), dim);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && dim > 0)
      return LieAlgebra::abelian(dim);
  }
  throw std::invalid_argument("unknown Lie algebra '" + std::string(name) + "'");
}

std::vector<std::string> builtin_algebra_names()
{
  return {"abelian(2)", "heisenberg3", "h3_plus_a", "n4"};
}

}  // namespace polpoisson
