#include "polpoisson/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace polpoisson {

namespace {

bool finite(const State& s)
{
  auto ok = [](double v) { return std::isfinite(v); };
  return std::all_of(s.x.begin(), s.x.end(), ok) && std::all_of(s.y.begin(), s.y.end(), ok);
}

// s + h*k, componentwise
State axpy(const State& s, double h, const State& k)
{
  State out = s;
  for (std::size_t v = 0; v < out.x.size(); ++v)
    out.x[v] += h * k.x[v];
  for (std::size_t v = 0; v < out.y.size(); ++v)
    out.y[v] += h * k.y[v];
  return out;
}

State rk4_step(const HamiltonianSystem& sys, const State& s, double h)
{
  State k1 = sys.rhs(s);
  State k2 = sys.rhs(axpy(s, 0.5 * h, k1));
  State k3 = sys.rhs(axpy(s, 0.5 * h, k2));
  State k4 = sys.rhs(axpy(s, h, k3));
  State out = s;
  for (std::size_t v = 0; v < out.x.size(); ++v)
    out.x[v] += h / 6.0 * (k1.x[v] + 2.0 * (k2.x[v] + k3.x[v]) + k4.x[v]);
  for (std::size_t v = 0; v < out.y.size(); ++v)
    out.y[v] += h / 6.0 * (k1.y[v] + 2.0 * (k2.y[v] + k3.y[v]) + k4.y[v]);
  return out;
}

std::string format_double(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

HamiltonianSystem::HamiltonianSystem(const PolarizedHamiltonian& h) : h_(h)
{
  const auto& m = h.manifold();
  const auto n = m.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      da_.push_back(h.a(j).partial(i));
  for (std::size_t p = 0; p < m.k(); ++p)
    for (std::size_t i = 0; i < n; ++i)
      db_.push_back(h.b(p).partial(i));
}

void HamiltonianSystem::check(const State& s) const
{
  const auto& m = h_.manifold();
  if (s.x.size() != m.k() * m.n() || s.y.size() != m.n())
    throw std::invalid_argument("state dimensions do not match the manifold");
  if (!finite(s))
    throw std::domain_error("state has non-finite entries");
}

State HamiltonianSystem::rhs(const State& s) const
{
  check(s);
  const auto& m = h_.manifold();
  const auto n = m.n();
  State d{std::vector<double>(s.x.size()), std::vector<double>(n)};
  std::vector<double> da(n * n);
  for (std::size_t v = 0; v < da.size(); ++v)
    da[v] = da_[v].is_zero() ? 0.0 : da_[v].evaluate(std::span<const double>(s.y));
  for (std::size_t p = 0; p < m.k(); ++p)
    for (std::size_t i = 0; i < n; ++i) {
      double v = db_[p * n + i].is_zero() ? 0.0 : db_[p * n + i].evaluate(std::span<const double>(s.y));
      for (std::size_t j = 0; j < n; ++j)
        v += s.x[p * n + j] * da[i * n + j];
      d.x[p * n + i] = -v;
    }
  for (std::size_t i = 0; i < n; ++i)
    d.y[i] = h_.a(i).evaluate(std::span<const double>(s.y));
  return d;
}

std::vector<double> HamiltonianSystem::values(const State& s) const
{
  check(s);
  std::vector<double> out;
  for (std::size_t p = 0; p < h_.manifold().k(); ++p)
    out.push_back(h_.component(p).evaluate(s.x, s.y));
  return out;
}

State hamilton_rhs(const PolarizedHamiltonian& h, const State& s)
{
  return HamiltonianSystem(h).rhs(s);
}

Trajectory rk4_flow(const PolarizedHamiltonian& h, const State& s0, double t_end, double dt)
{
  if (!(dt > 0.0) || !(t_end > 0.0) || dt > t_end || !std::isfinite(t_end))
    throw std::invalid_argument("rk4_flow needs 0 < dt <= t_end");
  HamiltonianSystem sys(h);
  sys.rhs(s0);  // validates dimensions and finiteness

  // When t_end is a whole number of steps (up to rounding) use exactly that
  // many uniform steps; otherwise finish with a shortened step.
  const double ratio = t_end / dt;
  const double whole = std::round(ratio);
  std::size_t full_steps;
  double step = dt;
  double remainder = 0.0;
  if (std::abs(ratio - whole) <= 1e-9 * std::max(1.0, ratio)) {
    full_steps = static_cast<std::size_t>(whole);
    step = t_end / whole;
  } else {
    full_steps = static_cast<std::size_t>(std::floor(ratio));
    remainder = t_end - static_cast<double>(full_steps) * dt;
  }

  Trajectory traj{{0.0}, {s0}, step, false, h};
  State s = s0;
  auto advance = [&](double hstep, double t_next) {
    State next = rk4_step(sys, s, hstep);
    if (!finite(next)) {
      traj.overflow = true;
      return false;
    }
    s = std::move(next);
    traj.times.push_back(t_next);
    traj.states.push_back(s);
    return true;
  };
  try {
    for (std::size_t i = 1; i <= full_steps; ++i) {
      double t_next = i == full_steps && remainder == 0.0 ? t_end : static_cast<double>(i) * step;
      if (!advance(step, t_next))
        return traj;
    }
    if (remainder > 0.0)
      advance(remainder, t_end);
  } catch (const std::domain_error&) {
    // Intermediate stage blew up.
    traj.overflow = true;
  }
  return traj;
}

std::vector<double> conservation_report(const Trajectory& traj)
{
  if (traj.states.empty())
    throw std::invalid_argument("conservation report of an empty trajectory");
  HamiltonianSystem sys(traj.hamiltonian);
  auto h0 = sys.values(traj.states.front());
  std::vector<double> drift(h0.size(), 0.0);
  for (const auto& s : traj.states) {
    auto hv = sys.values(s);
    for (std::size_t p = 0; p < hv.size(); ++p)
      drift[p] = std::max(drift[p], std::abs(hv[p] - h0[p]));
  }
  return drift;
}

void write_csv(std::ostream& os, const Trajectory& traj)
{
  const auto& m = traj.hamiltonian.manifold();
  os << "t";
  for (std::size_t p = 1; p <= m.k(); ++p)
    for (std::size_t i = 1; i <= m.n(); ++i)
      os << ",x_" << p << "_" << i;
  for (std::size_t i = 1; i <= m.n(); ++i)
    os << ",y_" << i;
  for (std::size_t p = 1; p <= m.k(); ++p)
    os << ",H_" << p;
  os << "\n";
  HamiltonianSystem sys(traj.hamiltonian);
  for (std::size_t r = 0; r < traj.states.size(); ++r) {
    const auto& s = traj.states[r];
    os << format_double(traj.times[r]);
    for (double v : s.x)
      os << ',' << format_double(v);
    for (double v : s.y)
      os << ',' << format_double(v);
    for (double v : sys.values(s))
      os << ',' << format_double(v);
    os << "\n";
  }
}

}  // namespace polpoisson
