#pragma once

#include "polpoisson/geometry.hpp"

#include <iosfwd>
#include <vector>

namespace polpoisson {

/// Point of the model manifold: x is k*n row-major (x[p*n+i] = x^{pi}).
struct State {
  std::vector<double> x;
  std::vector<double> y;
};

/// Hamilton's equations for a polarized Hamiltonian with the y-derivatives
/// of a_j and b^p precomputed:
///   dx^{pi}/dt = -(sum_j x^{pj} da_j/dy^i + db^p/dy^i),   dy^i/dt = a_i(y).
class HamiltonianSystem {
 public:
  explicit HamiltonianSystem(const PolarizedHamiltonian& h);

  const PolarizedHamiltonian& hamiltonian() const { return h_; }
  /// Throws std::invalid_argument on a dimension mismatch and
  /// std::domain_error on a non-finite state.
  State rhs(const State& s) const;
  /// Values H^1..H^k at s.
  std::vector<double> values(const State& s) const;

 private:
  void check(const State& s) const;

  PolarizedHamiltonian h_;
  std::vector<Polynomial> da_;  // da_[i*n+j] = d a_j / d y^i
  std::vector<Polynomial> db_;  // db_[p*n+i] = d b^p / d y^i
};

State hamilton_rhs(const PolarizedHamiltonian& h, const State& s);

struct Trajectory {
  std::vector<double> times;
  std::vector<State> states;
  double dt = 0.0;
  /// Set when a step produced a non-finite state; the trajectory stops at
  /// the last finite state.
  bool overflow = false;
  PolarizedHamiltonian hamiltonian;
};

/// Classical fixed-step RK4 from t = 0 to t_end; a final shortened step lands
/// exactly on t_end. Needs 0 < dt <= t_end.
Trajectory rk4_flow(const PolarizedHamiltonian& h, const State& s0, double t_end, double dt);

/// max_t |H^p(t) - H^p(0)| for each component p.
std::vector<double> conservation_report(const Trajectory& traj);

/// CSV with header t,x_1_1,...,x_k_n,y_1,...,y_n,H_1,...,H_k.
void write_csv(std::ostream& os, const Trajectory& traj);

}  // namespace polpoisson
