#include "polpoisson/poisson.hpp"
#include "polpoisson/sampling.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace polpoisson;
using polpoisson::test::affine;
using polpoisson::test::ham;
using polpoisson::test::poly;

namespace {

// Random degree <= 2 polynomials stand in for symbolic a^i, a'^i.
struct Generic {
  ModelManifold m;
  PolarizedHamiltonian h;
  PolarizedHamiltonian k;
};

Generic generic_pair(std::size_t dim, std::size_t kk, std::uint64_t seed)
{
  ModelManifold m(kk, dim);
  SampleGenerator gen(seed);
  return {m, gen.hamiltonian(m, 2), gen.hamiltonian(m, 2)};
}

}  // namespace

TEST_CASE("subordinate_bracket")
{
  ModelManifold m(1, 1);
  auto x = ham(m, {"1"}, {"0"});
  auto y = ham(m, {"0"}, {"y1"});
  CHECK(subordinate_bracket(x, y) == ham(m, {"0"}, {"-1"}));
  auto h = ham(m, {"y1^2 - 1"}, {"y1"});
  CHECK(subordinate_bracket(h, h).is_zero());
  CHECK(subordinate_bracket(ham(m, {"0"}, {"y1^2"}), y).is_zero());
  CHECK_THROWS_AS(subordinate_bracket(x, ham(ModelManifold(1, 2), {"1", "0"}, {"0"})), std::invalid_argument);
}

TEST_CASE("subordinate bracket matches the component formula")
{
  // {H,K}^p = sum_i (dH^p/dy^i dK^p/dx^{pi} - dH^p/dx^{pi} dK^p/dy^i),
  // evaluated directly on the component polynomials.
  SampleGenerator gen(31);
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t k = 1; k <= 2; ++k) {
      ModelManifold m(k, n);
      for (int t = 0; t < 8; ++t) {
        auto h = gen.hamiltonian(m, 2), g = gen.hamiltonian(m, 2);
        auto hg = subordinate_bracket(h, g);
        for (std::size_t p = 0; p < k; ++p) {
          auto fh = h.component(p).to_polynomial(), fg = g.component(p).to_polynomial();
          Polynomial expected(m.coordinate_vars());
          for (std::size_t i = 0; i < n; ++i)
            expected += fh.partial(m.y_index(i)) * fg.partial(m.x_index(p, i)) -
                        fh.partial(m.x_index(p, i)) * fg.partial(m.y_index(i));
          CHECK(hg.component(p).to_polynomial() == expected);
        }
      }
    }
}

TEST_CASE("linear_bracket catalog examples")
{
  SUBCASE("heisenberg3 with constant a")
  {
    ModelManifold m(2, 3);
    auto h = ham(m, {"1", "0", "0"}, {"y1", "y2*y3"});
    auto k = ham(m, {"0", "1", "0"}, {"3", "y3^2"});
    CHECK(linear_bracket(builtin_algebra("heisenberg3"), h, k) == ham(m, {"0", "0", "1"}, {"0", "0"}));
  }
  SUBCASE("abelian is identically zero")
  {
    auto g = generic_pair(3, 2, 1);
    CHECK(linear_bracket(LieAlgebra::abelian(3), g.h, g.k).is_zero());
  }
  SUBCASE("heisenberg3 symbolic")
  {
    auto g = generic_pair(3, 1, 2);
    const auto& a = g.h.a();
    const auto& b = g.k.a();
    auto z = g.m.basic_zero();
    auto expected = PolarizedHamiltonian(g.m, {z, z, a[0] * b[1] - a[1] * b[0]}, {z});
    CHECK(linear_bracket(builtin_algebra("heisenberg3"), g.h, g.k) == expected);
  }
  SUBCASE("h3 + a symbolic")
  {
    auto g = generic_pair(4, 2, 3);
    const auto& a = g.h.a();
    const auto& b = g.k.a();
    auto z = g.m.basic_zero();
    auto expected = PolarizedHamiltonian(g.m, {a[2] * b[1] - a[1] * b[2], z, z, z}, {z, z});
    CHECK(linear_bracket(builtin_algebra("h3_plus_a"), g.h, g.k) == expected);
  }
  SUBCASE("n4 symbolic")
  {
    auto g = generic_pair(4, 1, 4);
    const auto& a = g.h.a();
    const auto& b = g.k.a();
    auto z = g.m.basic_zero();
    auto expected = PolarizedHamiltonian(g.m, {z, z, a[1] * b[0] - a[0] * b[1], a[2] * b[0] - a[0] * b[2]}, {z});
    CHECK(linear_bracket(builtin_algebra("n4"), g.h, g.k) == expected);
  }
  SUBCASE("errors")
  {
    ModelManifold m(1, 2);
    auto h = ham(m, {"1", "0"}, {"0"});
    CHECK_THROWS_AS(linear_bracket(builtin_algebra("heisenberg3"), h, h), std::invalid_argument);
    std::vector<BracketEntry> e{{0, 1, {{0, Rational(1)}}}, {0, 2, {{0, Rational(1)}}}, {0, 1, {{2, Rational(1)}}}};
    ModelManifold m3(1, 3);
    auto broken = LieAlgebra::from_brackets(3, e);
    REQUIRE_FALSE(broken.is_valid());
    auto h3 = ham(m3, {"1", "0", "0"}, {"0"});
    CHECK_THROWS_AS(linear_bracket(broken, h3, h3), std::invalid_argument);
    CHECK_THROWS_AS(Bracket::linear(broken), std::invalid_argument);
  }
}

TEST_CASE("gradient_restriction")
{
  ModelManifold m(2, 2);
  auto h = ham(m, {"y1", "3"}, {"y2", "0"});
  auto same = gradient_restriction(h, 1, 1);
  CHECK(same == h.a());
  for (const auto& c : gradient_restriction(h, 0, 1))
    CHECK(c.is_zero());
  for (const auto& c : gradient_restriction(ham(m, {"0", "0"}, {"y1", "y2"}), 0, 0))
    CHECK(c.is_zero());
  CHECK_THROWS_AS(gradient_restriction(h, 2, 0), std::out_of_range);
}

TEST_CASE("linear_hamiltonian_field")
{
  ModelManifold m(1, 3);
  auto heis = builtin_algebra("heisenberg3");
  CHECK(linear_hamiltonian_field(LieAlgebra::abelian(3), ham(m, {"y1", "y2", "1"}, {"y3"})).is_zero());
  CHECK(linear_hamiltonian_field(heis, ham(m, {"0", "0", "0"}, {"y1*y2"})).is_zero());

  SUBCASE("heisenberg3, a = (0,1,0)")
  {
    auto h = ham(m, {"0", "1", "0"}, {"0"});
    auto x = linear_hamiltonian_field(heis, h);
    // xi^{1i} = sum_{j,l} C[i][j][l] a^j x^{1l}: only C[1][2][3] contributes.
    CHECK(x.xi(0, 0) == affine(m, "x_1_3"));
    CHECK(x.xi(0, 1).is_zero());
    CHECK(x.xi(0, 2).is_zero());
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(x.eta(j).is_zero());
    // Oracle: X(K) = {K,H}^L for K = x_1_1.
    auto k = ham(m, {"1", "0", "0"}, {"0"});
    CHECK(x.apply(k.component(0)) == linear_bracket(heis, k, h).component(0));
  }
}

TEST_CASE("linear field satisfies X_H(K) = {K,H}^L")
{
  SampleGenerator gen(32);
  for (const auto& name : builtin_algebra_names()) {
    auto L = builtin_algebra(name);
    for (std::size_t k = 1; k <= 2; ++k) {
      ModelManifold m(k, L.dim());
      for (int t = 0; t < 5; ++t) {
        auto h = gen.hamiltonian(m, 2), g = gen.hamiltonian(m, 2);
        auto x = linear_hamiltonian_field(L, h);
        auto gh = linear_bracket(L, g, h);
        for (std::size_t p = 0; p < k; ++p)
          CHECK(x.apply(g.component(p)) == gh.component(p));
      }
    }
  }
}

TEST_CASE("jacobiator")
{
  SampleGenerator gen(33);
  for (std::size_t n = 1; n <= 3; ++n) {
    ModelManifold m(2, n);
    for (int t = 0; t < 5; ++t) {
      auto h = gen.hamiltonian(m, 2), k = gen.hamiltonian(m, 2), g = gen.hamiltonian(m, 2);
      CHECK(jacobiator(Bracket::subordinate(), h, k, g).is_zero());
    }
  }
  ModelManifold m3(1, 3);
  auto heis = Bracket::linear(builtin_algebra("heisenberg3"));
  for (int t = 0; t < 5; ++t) {
    auto h = gen.hamiltonian(m3, 2), k = gen.hamiltonian(m3, 2), g = gen.hamiltonian(m3, 2);
    CHECK(jacobiator(heis, h, k, g).is_zero());
  }

  SUBCASE("broken structure constants yield a witness")
  {
    std::vector<BracketEntry> e{{0, 1, {{2, Rational(1)}}}, {0, 2, {{0, Rational(1)}}}};
    auto broken = LieAlgebra::from_brackets(3, e);
    auto w = jacobi_witness(broken, m3);
    REQUIRE(w.has_value());
    auto j = jacobiator(Bracket::linear_unchecked(broken), (*w)[0], (*w)[1], (*w)[2]);
    CHECK_FALSE(j.is_zero());
    CHECK_FALSE(jacobi_witness(builtin_algebra("heisenberg3"), m3).has_value());
  }
}

TEST_CASE("verify_axioms")
{
  SampleGenerator gen(34);
  ModelManifold m(2, 3);
  std::vector<PolarizedHamiltonian> samples;
  for (int t = 0; t < 9; ++t)
    samples.push_back(gen.hamiltonian(m, 2));
  auto sub = verify_axioms(Bracket::subordinate(), m, samples);
  CHECK(sub.all_passed());
  CHECK(sub.results.size() == 6);
  CHECK(verify_axioms(Bracket::linear(LieAlgebra::abelian(3)), m, samples).all_passed());
  CHECK(verify_axioms(Bracket::linear(builtin_algebra("heisenberg3")), m, samples).all_passed());

  std::vector<BracketEntry> e{{0, 1, {{2, Rational(1)}}}, {0, 2, {{0, Rational(1)}}}};
  auto report = verify_axioms(Bracket::linear_unchecked(LieAlgebra::from_brackets(3, e)), m, samples);
  CHECK_FALSE(report.all_passed());
  bool jacobi_failed = false;
  for (const auto& r : report.results)
    if (r.axiom == "Jacobi identity") {
      jacobi_failed = !r.passed;
      CHECK_FALSE(r.witness.empty());
    }
  CHECK(jacobi_failed);
}

TEST_CASE("bracket properties")
{
  SampleGenerator gen(35);
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t k = 1; k <= 2; ++k) {
      ModelManifold m(k, n);
      auto heis = builtin_algebra("heisenberg3");
      for (int t = 0; t < 8; ++t) {
        auto h = gen.hamiltonian(m, 2), g = gen.hamiltonian(m, 2);
        // kernel: adding constants changes nothing
        std::vector<Polynomial> consts;
        for (std::size_t p = 0; p < k; ++p)
          consts.push_back(m.basic_constant(gen.rational()));
        PolarizedHamiltonian c(m, std::vector<Polynomial>(n, m.basic_zero()), consts);
        CHECK(subordinate_bracket(h + c, g) == subordinate_bracket(h, g));
        // annihilator
        auto bh = gen.basic_hamiltonian(m, 2), bg = gen.basic_hamiltonian(m, 2);
        CHECK(subordinate_bracket(bh, bg).is_zero());
        if (n == 3)
          CHECK(linear_bracket(heis, bh, bg).is_zero());
        // X_H(K) = {K,H}
        auto x = hamiltonian_field(h);
        auto gh = subordinate_bracket(g, h);
        for (std::size_t p = 0; p < k; ++p)
          CHECK(x.apply(g.component(p)) == gh.component(p));
        // [X_H, X_K] = X_{{K,H}}
        CHECK(lie_bracket(hamiltonian_field(h), hamiltonian_field(g)) == hamiltonian_field(gh));
      }
    }
}
