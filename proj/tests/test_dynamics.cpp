#include "polpoisson/dynamics.hpp"
#include "polpoisson/sampling.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace polpoisson;
using polpoisson::test::ham;

namespace {

// Plain RK4 on the y-subsystem dy/dt = a(y), written independently of
// HamiltonianSystem.
std::vector<double> integrate_y(const PolarizedHamiltonian& h, std::vector<double> y, double t_end, std::size_t steps)
{
  const double dt = t_end / static_cast<double>(steps);
  auto f = [&](const std::vector<double>& v) {
    std::vector<double> out;
    for (const auto& aj : h.a())
      out.push_back(aj.evaluate(std::span<const double>(v)));
    return out;
  };
  auto axpy = [](const std::vector<double>& v, double c, const std::vector<double>& d) {
    auto out = v;
    for (std::size_t i = 0; i < v.size(); ++i)
      out[i] += c * d[i];
    return out;
  };
  for (std::size_t s = 0; s < steps; ++s) {
    auto k1 = f(y);
    auto k2 = f(axpy(y, dt / 2, k1));
    auto k3 = f(axpy(y, dt / 2, k2));
    auto k4 = f(axpy(y, dt, k3));
    for (std::size_t i = 0; i < y.size(); ++i)
      y[i] += dt / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  }
  return y;
}

}  // namespace

TEST_CASE("hamilton_rhs")
{
  ModelManifold m(1, 1);
  SUBCASE("H = y")
  {
    auto d = hamilton_rhs(ham(m, {"0"}, {"y1"}), State{{0.3}, {0.7}});
    CHECK(d.x[0] == -1.0);
    CHECK(d.y[0] == 0.0);
  }
  SUBCASE("constant")
  {
    auto d = hamilton_rhs(ham(m, {"0"}, {"5"}), State{{2.0}, {-1.0}});
    CHECK(d.x[0] == 0.0);
    CHECK(d.y[0] == 0.0);
  }
  SUBCASE("H = x*y")
  {
    auto d = hamilton_rhs(ham(m, {"y1"}, {"0"}), State{{2.0}, {3.0}});
    CHECK(d.x[0] == -2.0);
    CHECK(d.y[0] == 3.0);
  }
  SUBCASE("errors")
  {
    auto h = ham(m, {"y1"}, {"0"});
    CHECK_THROWS_AS(hamilton_rhs(h, State{{1.0, 2.0}, {3.0}}), std::invalid_argument);
    CHECK_THROWS_AS(hamilton_rhs(h, State{{1.0}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(hamilton_rhs(h, State{{NAN}, {1.0}}), std::domain_error);
    CHECK_THROWS_AS(hamilton_rhs(h, State{{1.0}, {INFINITY}}), std::domain_error);
  }
}

TEST_CASE("dy/dt depends on y only")
{
  SampleGenerator gen(41);
  ModelManifold m(2, 3);
  for (int t = 0; t < 10; ++t) {
    auto h = gen.hamiltonian(m, 2);
    State s1{{0.1, -0.2, 0.3, 0.4, 0.5, -0.6}, {0.3, -0.1, 0.2}};
    State s2{{5.0, 1.0, -2.0, 0.0, 7.0, 3.0}, s1.y};
    CHECK(hamilton_rhs(h, s1).y == hamilton_rhs(h, s2).y);
  }
}

TEST_CASE("rk4_flow")
{
  ModelManifold m(1, 1);
  SUBCASE("constant right-hand side is integrated exactly")
  {
    auto traj = rk4_flow(ham(m, {"0"}, {"y1"}), State{{0.0}, {0.0}}, 1.0, 0.1);
    CHECK(traj.states.back().x[0] == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(traj.times.back() == 1.0);
    CHECK(conservation_report(traj)[0] == 0.0);
  }
  SUBCASE("zero Hamiltonian keeps the state")
  {
    auto traj = rk4_flow(PolarizedHamiltonian::zero(m), State{{1.5}, {-2.0}}, 1.0, 0.25);
    CHECK(traj.states.size() == 5);
    for (const auto& s : traj.states) {
      CHECK(s.x[0] == 1.5);
      CHECK(s.y[0] == -2.0);
    }
    CHECK(conservation_report(traj)[0] == 0.0);
  }
  SUBCASE("x*y has the exponential solution")
  {
    auto traj = rk4_flow(ham(m, {"y1"}, {"0"}), State{{1.0}, {1.0}}, 1.0, 1e-3);
    CHECK(traj.states.size() == 1001);
    CHECK(std::abs(traj.states.back().x[0] - std::exp(-1.0)) <= 1e-10);
    CHECK(std::abs(traj.states.back().y[0] - std::exp(1.0)) <= 1e-10);
    CHECK(conservation_report(traj)[0] <= 1e-9);
    for (std::size_t i = 1; i < traj.times.size(); ++i)
      CHECK(traj.times[i] > traj.times[i - 1]);
  }
  SUBCASE("shortened final step lands on t_end")
  {
    auto traj = rk4_flow(ham(m, {"0"}, {"y1"}), State{{0.0}, {0.0}}, 1.0, 0.3);
    CHECK(traj.times.size() == 5);
    CHECK(traj.times.back() == 1.0);
    CHECK(traj.states.back().x[0] == doctest::Approx(-1.0));
  }
  SUBCASE("argument errors")
  {
    auto h = ham(m, {"0"}, {"y1"});
    State s{{0.0}, {0.0}};
    CHECK_THROWS_AS(rk4_flow(h, s, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(rk4_flow(h, s, 1.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(rk4_flow(h, s, -1.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(rk4_flow(h, State{{0.0, 1.0}, {0.0}}, 1.0, 0.1), std::invalid_argument);
  }
  SUBCASE("blow-up truncates with the overflow flag")
  {
    auto traj = rk4_flow(ham(m, {"y1^2"}, {"0"}), State{{1.0}, {1e200}}, 1.0, 0.5);
    CHECK(traj.overflow);
    CHECK(traj.states.size() == 1);
  }
}

TEST_CASE("y stays on the integral curve of the projected field")
{
  SampleGenerator gen(42);
  for (std::size_t n = 1; n <= 3; ++n) {
    ModelManifold m(2, n);
    for (int t = 0; t < 5; ++t) {
      auto h = gen.hamiltonian(m, 2);
      State s0{std::vector<double>(2 * n, 0.25), std::vector<double>(n, 0.1)};
      auto traj = rk4_flow(h, s0, 0.5, 1e-3);
      REQUIRE_FALSE(traj.overflow);
      auto y = integrate_y(h, s0.y, 0.5, 500);
      for (std::size_t i = 0; i < n; ++i)
        CHECK(std::abs(traj.states.back().y[i] - y[i]) <= 1e-10);
    }
  }
}

TEST_CASE("conservation drift is small for random Hamiltonians")
{
  SampleGenerator gen(43);
  ModelManifold m(2, 2);
  for (int t = 0; t < 5; ++t) {
    auto h = gen.hamiltonian(m, 2);
    State s0{{0.1, 0.2, -0.1, 0.3}, {0.2, -0.1}};
    auto traj = rk4_flow(h, s0, 0.5, 1e-3);
    REQUIRE_FALSE(traj.overflow);
    for (double d : conservation_report(traj))
      CHECK(d <= 1e-9);
  }
}

TEST_CASE("csv export")
{
  ModelManifold m(2, 1);
  auto traj = rk4_flow(ham(m, {"0"}, {"y1", "2"}), State{{0.0, 0.0}, {1.0}}, 1.0, 0.5);
  std::ostringstream os;
  write_csv(os, traj);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "t,x_1_1,x_2_1,y_1,H_1,H_2");
  std::getline(is, line);
  CHECK(line == "0,0,0,1,1,2");
  int rows = 1;
  while (std::getline(is, line))
    ++rows;
  CHECK(rows == 3);
}
