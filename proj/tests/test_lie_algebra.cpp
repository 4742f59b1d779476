#include "polpoisson/lie_algebra.hpp"
#include "polpoisson/sampling.hpp"

#include <doctest.h>

using namespace polpoisson;

namespace {

using Vec = std::vector<Rational>;

Vec unit(std::size_t n, std::size_t i)
{
  Vec v(n);
  v[i] = 1;
  return v;
}

// Brute-force Jacobi sum over every index tuple, independent of validate().
bool jacobi_holds_brute_force(const LieAlgebra& L)
{
  const auto n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Rational s(0);
          for (std::size_t m = 0; m < n; ++m)
            s += L.c(i, j, m) * L.c(m, k, l) + L.c(j, k, m) * L.c(m, i, l) + L.c(k, i, m) * L.c(m, j, l);
          if (s != 0)
            return false;
        }
  return true;
}

LieAlgebra heisenberg_with_extra(std::size_t i, std::size_t j, std::size_t l)
{
  std::vector<BracketEntry> entries{{0, 1, {{2, Rational(1)}}}, {i, j, {{l, Rational(1)}}}};
  return LieAlgebra::from_brackets(3, entries);
}

}  // namespace

TEST_CASE("validate")
{
  CHECK(LieAlgebra::abelian(3).validate().ok());
  CHECK(builtin_algebra("heisenberg3").validate().ok());

  SUBCASE("C[1][3][2] = 1 added to heisenberg3 still satisfies Jacobi")
  {
    // [e1,e2] = e3, [e1,e3] = e2 is a semidirect product R x R^2, so the
    // brute-force sum vanishes; validate must agree with it.
    auto L = heisenberg_with_extra(0, 2, 1);
    CHECK(jacobi_holds_brute_force(L));
    CHECK(L.validate().ok());
  }
  SUBCASE("genuine Jacobi violation is reported with its index tuple")
  {
    // [e1,e2] = e3, [e1,e3] = e1: J(e1,e2,e3) = [[e3,e1],e2] = -[e1,e2] = -e3.
    auto L = heisenberg_with_extra(0, 2, 0);
    CHECK_FALSE(jacobi_holds_brute_force(L));
    auto report = L.validate();
    REQUIRE(report.violations.size() == 1);
    const auto& v = report.violations.front();
    CHECK(v.kind == AxiomViolation::Kind::jacobi);
    CHECK(v.indices == std::array<std::size_t, 4>{0, 1, 2, 2});
    CHECK(v.residual == -1);
    CHECK(v.describe() == "Jacobi violated at (i,j,k)=(1,2,3), component l=3: residual -1");
    CHECK_FALSE(L.is_valid());
  }
  SUBCASE("antisymmetry violations")
  {
    std::vector<Rational> c(8);
    c[(0 * 2 + 1) * 2 + 0] = 1;  // [e1,e2] = e1 without the partner
    LieAlgebra L(2, c);
    auto report = L.validate();
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations.front().kind == AxiomViolation::Kind::antisymmetry);
  }
}

TEST_CASE("validate agrees with brute force on random antisymmetric tensors")
{
  SampleGenerator gen(11);
  int invalid = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + gen.below(2);
    std::vector<BracketEntry> entries;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (gen.below(3) == 0)
          entries.push_back({i, j, {{gen.below(n), Rational(static_cast<long>(gen.below(3)) - 1)}}});
    auto L = LieAlgebra::from_brackets(n, entries);
    CHECK(L.validate().ok() == jacobi_holds_brute_force(L));
    invalid += !L.is_valid();
  }
  CHECK(invalid > 0);
}

TEST_CASE("bracket_vectors")
{
  auto h = builtin_algebra("heisenberg3");
  CHECK(h.bracket(unit(3, 0), unit(3, 1)) == unit(3, 2));
  Vec u{make_rational(1, 2), Rational(-3), Rational(2)};
  CHECK(h.bracket(u, u) == Vec(3));
  auto n4 = builtin_algebra("n4");
  Vec minus_e3(4);
  minus_e3[2] = -1;
  CHECK(n4.bracket(unit(4, 0), unit(4, 1)) == minus_e3);
  CHECK_THROWS_AS(h.bracket(unit(2, 0), unit(3, 0)), std::invalid_argument);
}

TEST_CASE("bracket_vectors is bilinear and antisymmetric")
{
  SampleGenerator gen(3);
  for (const auto& name : builtin_algebra_names()) {
    auto L = builtin_algebra(name);
    const auto n = L.dim();
    for (int t = 0; t < 20; ++t) {
      Vec u(n), v(n), w(n);
      for (std::size_t i = 0; i < n; ++i) {
        u[i] = gen.rational();
        v[i] = gen.rational();
        w[i] = gen.rational();
      }
      Rational s = gen.nonzero_rational();
      Vec su_w(n);
      for (std::size_t i = 0; i < n; ++i)
        su_w[i] = s * u[i] + w[i];
      auto lhs = L.bracket(su_w, v);
      auto uv = L.bracket(u, v);
      auto wv = L.bracket(w, v);
      auto vu = L.bracket(v, u);
      for (std::size_t l = 0; l < n; ++l) {
        CHECK(lhs[l] == s * uv[l] + wv[l]);
        CHECK(uv[l] == -vu[l]);
      }
    }
  }
}

TEST_CASE("from_maurer_cartan")
{
  SUBCASE("h3 + a: d omega1 = omega2 ^ omega3 gives [e2,e3] = -e1")
  {
    auto L = from_maurer_cartan({4, {{0, 1, 2, Rational(1)}}});
    Vec expected(4);
    expected[0] = -1;
    CHECK(L.bracket(unit(4, 1), unit(4, 2)) == expected);
    CHECK(L.is_valid());
  }
  SUBCASE("zero data is abelian")
  {
    CHECK(from_maurer_cartan({3, {}}) == LieAlgebra::abelian(3));
  }
  SUBCASE("n4")
  {
    auto L = from_maurer_cartan({4, {{2, 0, 1, Rational(1)}, {3, 0, 2, Rational(1)}}});
    CHECK(L.c(0, 1, 2) == -1);
    CHECK(L.c(0, 2, 3) == -1);
    CHECK(L.c(1, 0, 2) == 1);
  }
  SUBCASE("malformed data")
  {
    CHECK_THROWS_AS(from_maurer_cartan({3, {{0, 2, 1, Rational(1)}}}), std::invalid_argument);
    CHECK_THROWS_AS(from_maurer_cartan({3, {{0, 1, 3, Rational(1)}}}), std::invalid_argument);
  }
  SUBCASE("data that breaks d^2 = 0 is rejected")
  {
    // d omega3 = omega1^omega2 and d omega1 = omega1^omega3 give
    // [e1,e2] = -e3, [e1,e3] = -e1, which fails Jacobi.
    MaurerCartanData bad{3, {{2, 0, 1, Rational(1)}, {0, 0, 2, Rational(1)}}};
    CHECK_THROWS_AS(from_maurer_cartan(bad), std::invalid_argument);
  }
}

TEST_CASE("Maurer-Cartan export inverts import")
{
  for (const auto& name : builtin_algebra_names()) {
    auto L = builtin_algebra(name);
    auto mc = L.to_maurer_cartan();
    CHECK(from_maurer_cartan(mc) == L);
  }
  SampleGenerator gen(5);
  int checked = 0;
  for (int trial = 0; trial < 300 && checked < 40; ++trial) {
    MaurerCartanData data{4, {}};
    for (std::size_t l = 0; l < 4; ++l)
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
          if (gen.below(8) == 0)
            data.d.push_back({l, i, j, gen.nonzero_rational()});
    LieAlgebra L(4, std::vector<Rational>(64));
    try {
      L = from_maurer_cartan(data);
    } catch (const std::invalid_argument&) {
      continue;
    }
    CHECK(L.to_maurer_cartan() == data.canonical());
    ++checked;
  }
  CHECK(checked >= 20);
}

TEST_CASE("builtin catalog")
{
  auto a2 = builtin_algebra("abelian(2)");
  CHECK(a2.dim() == 2);
  CHECK(a2.brackets().empty());
  auto h = builtin_algebra("heisenberg3");
  CHECK(h.c(0, 1, 2) == 1);
  auto n4 = builtin_algebra("n4");
  CHECK(n4.dim() == 4);
  CHECK(n4.brackets().size() == 2);
  auto h3a = builtin_algebra("h3_plus_a");
  CHECK(h3a.brackets().size() == 1);
  for (const auto& name : builtin_algebra_names())
    CHECK(builtin_algebra(name).is_valid());
  CHECK(builtin_algebra("abelian(5)").dim() == 5);
  CHECK_THROWS_AS(builtin_algebra("sl2"), std::invalid_argument);
  CHECK_THROWS_AS(builtin_algebra("abelian(0)"), std::invalid_argument);
  CHECK_THROWS_AS(builtin_algebra("abelian(x)"), std::invalid_argument);
}
