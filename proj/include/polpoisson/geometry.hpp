#pragma once

#include "polpoisson/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polpoisson {

/// Adapted (Darboux) chart of a polarized k-symplectic manifold of dimension
/// n(k+1): coordinates x^{pi} (1 <= p <= k, 1 <= i <= n) and y^i, with
/// theta = sum_p (sum_i dx^{pi} ^ dy^i) (x) v_p and leaves dy = 0.
///
/// The same chart models hom(G, R^{k+1}) for an n-dimensional Lie algebra G,
/// with x^{pi} the matrix entry x_i^p and y^i the bottom row y_i.
///
/// Indices in the C++ API are 0-based; text output is 1-based
/// (`x_p_i`, `yi`).
class ModelManifold {
 public:
  ModelManifold(std::size_t k, std::size_t n);

  std::size_t k() const { return k_; }
  std::size_t n() const { return n_; }
  std::size_t dimension() const { return n_ * (k_ + 1); }

  /// y1..yn; every basic function lives here.
  const VarSetPtr& basic_vars() const { return basic_vars_; }
  /// x_1_1..x_k_n followed by y1..yn.
  const VarSetPtr& coordinate_vars() const { return coordinate_vars_; }
  std::size_t x_index(std::size_t p, std::size_t i) const { return p * n_ + i; }
  std::size_t y_index(std::size_t i) const { return k_ * n_ + i; }

  Polynomial basic_zero() const { return Polynomial(basic_vars_); }
  Polynomial basic_constant(const Rational& c) const { return Polynomial::constant(basic_vars_, c); }

  friend bool operator==(const ModelManifold& a, const ModelManifold& b) { return a.k_ == b.k_ && a.n_ == b.n_; }

 private:
  std::size_t k_;
  std::size_t n_;
  VarSetPtr basic_vars_;
  VarSetPtr coordinate_vars_;
};

/// c0(y) + sum_{q,j} c_qj(y) x^{qj} with basic coefficients.
class AffineExpr {
 public:
  explicit AffineExpr(const ModelManifold& m);
  AffineExpr(const ModelManifold& m, Polynomial constant, std::vector<Polynomial> linear);

  static AffineExpr basic(const ModelManifold& m, Polynomial f);
  static AffineExpr coordinate_x(const ModelManifold& m, std::size_t p, std::size_t i);
  /// Throws std::invalid_argument if `f` (over coordinate_vars) is not affine
  /// in x with y-only coefficients.
  static AffineExpr from_polynomial(const ModelManifold& m, const Polynomial& f);

  const ModelManifold& manifold() const { return manifold_; }
  const Polynomial& constant() const { return constant_; }
  /// Coefficient of x^{qj}; this is also the partial derivative along x^{qj}.
  const Polynomial& linear(std::size_t q, std::size_t j) const { return linear_.at(q * manifold_.n() + j); }

  bool is_zero() const;
  bool is_basic() const;

  AffineExpr partial_y(std::size_t s) const;

  AffineExpr& operator+=(const AffineExpr& rhs);
  AffineExpr& operator-=(const AffineExpr& rhs);
  AffineExpr& operator*=(const Polynomial& basic);
  friend AffineExpr operator+(AffineExpr a, const AffineExpr& b) { return a += b; }
  friend AffineExpr operator-(AffineExpr a, const AffineExpr& b) { return a -= b; }
  friend AffineExpr operator*(AffineExpr a, const Polynomial& f) { return a *= f; }
  friend AffineExpr operator*(const Polynomial& f, AffineExpr a) { return a *= f; }
  AffineExpr operator-() const;
  friend bool operator==(const AffineExpr&, const AffineExpr&);

  /// `x` is k*n row-major (x[p*n+i]), `y` has n entries.
  double evaluate(std::span<const double> x, std::span<const double> y) const;
  Rational evaluate(std::span<const Rational> x, std::span<const Rational> y) const;

  Polynomial to_polynomial() const;
  std::string to_string() const { return to_polynomial().to_string(); }

 private:
  void check_manifold(const AffineExpr& other) const;

  ModelManifold manifold_;
  Polynomial constant_;
  std::vector<Polynomial> linear_;
};

/// Product that must stay affine: throws std::domain_error when both factors
/// depend on x.
AffineExpr multiply_affine(const AffineExpr& a, const AffineExpr& b);

/// H^p = sum_j a_j(y) x^{pj} + b^p(y); the a_j are shared by all components.
class PolarizedHamiltonian {
 public:
  PolarizedHamiltonian(const ModelManifold& m, std::vector<Polynomial> a, std::vector<Polynomial> b);

  static PolarizedHamiltonian zero(const ModelManifold& m);

  const ModelManifold& manifold() const { return manifold_; }
  const std::vector<Polynomial>& a() const { return a_; }
  const std::vector<Polynomial>& b() const { return b_; }
  const Polynomial& a(std::size_t j) const { return a_.at(j); }
  const Polynomial& b(std::size_t p) const { return b_.at(p); }

  AffineExpr component(std::size_t p) const;
  /// True when every a_j vanishes, i.e. H is R^k-valued basic.
  bool is_basic() const;
  bool is_zero() const;

  PolarizedHamiltonian& operator+=(const PolarizedHamiltonian& rhs);
  PolarizedHamiltonian& operator-=(const PolarizedHamiltonian& rhs);
  PolarizedHamiltonian& operator*=(const Rational& c);
  friend PolarizedHamiltonian operator+(PolarizedHamiltonian l, const PolarizedHamiltonian& r) { return l += r; }
  friend PolarizedHamiltonian operator-(PolarizedHamiltonian l, const PolarizedHamiltonian& r) { return l -= r; }
  friend PolarizedHamiltonian operator*(const Rational& c, PolarizedHamiltonian h) { return h *= c; }
  PolarizedHamiltonian operator-() const;
  friend bool operator==(const PolarizedHamiltonian&, const PolarizedHamiltonian&);

  /// "a = [..]; b = [..]" in canonical polynomial text.
  std::string to_string() const;

 private:
  void check_manifold(const PolarizedHamiltonian& other) const;

  ModelManifold manifold_;
  std::vector<Polynomial> a_;
  std::vector<Polynomial> b_;
};

/// sum xi^{pi} d/dx^{pi} + sum eta^j(y) d/dy^j, with xi affine in x.
class FoliateField {
 public:
  FoliateField(const ModelManifold& m, std::vector<AffineExpr> xi, std::vector<Polynomial> eta);

  static FoliateField zero(const ModelManifold& m);
  static FoliateField coordinate_x(const ModelManifold& m, std::size_t p, std::size_t i);
  static FoliateField coordinate_y(const ModelManifold& m, std::size_t j);

  const ModelManifold& manifold() const { return manifold_; }
  const AffineExpr& xi(std::size_t p, std::size_t i) const { return xi_.at(p * manifold_.n() + i); }
  const Polynomial& eta(std::size_t j) const { return eta_.at(j); }

  bool is_zero() const;

  /// Directional derivative X(f).
  AffineExpr apply(const AffineExpr& f) const;

  FoliateField& operator+=(const FoliateField& rhs);
  FoliateField& operator-=(const FoliateField& rhs);
  friend FoliateField operator+(FoliateField l, const FoliateField& r) { return l += r; }
  friend FoliateField operator-(FoliateField l, const FoliateField& r) { return l -= r; }
  FoliateField operator-() const;
  friend bool operator==(const FoliateField&, const FoliateField&);

  /// One line per nonzero component: "xi[p][i] = ...; eta[j] = ..." joined by "; ".
  std::string to_string() const;

 private:
  ModelManifold manifold_;
  std::vector<AffineExpr> xi_;
  std::vector<Polynomial> eta_;
};

/// beta = sum_p beta^p (x) v_p with
/// beta^p = sum_{q,i} dx(p,q,i) dx^{qi} + sum_i dy(p,i) dy^i.
class VectorValued1Form {
 public:
  struct Component {
    std::vector<AffineExpr> dx;  // k*n, index q*n+i
    std::vector<AffineExpr> dy;  // n
  };

  VectorValued1Form(const ModelManifold& m, std::vector<Component> components);
  static VectorValued1Form zero(const ModelManifold& m);

  const ModelManifold& manifold() const { return manifold_; }
  const AffineExpr& dx(std::size_t p, std::size_t q, std::size_t i) const
  {
    return components_.at(p).dx.at(q * manifold_.n() + i);
  }
  const AffineExpr& dy(std::size_t p, std::size_t i) const { return components_.at(p).dy.at(i); }

  VectorValued1Form operator-() const;
  friend bool operator==(const VectorValued1Form&, const VectorValued1Form&);

  std::string to_string() const;

 private:
  ModelManifold manifold_;
  std::vector<Component> components_;
};

/// dH: dx^{pi}-coefficient a_i in component p, dy^i-coefficient dH^p/dy^i.
VectorValued1Form differential(const PolarizedHamiltonian& h);

/// X_H with eta_j = a_j and xi^{ps} = -(sum_j x^{pj} da_j/dy^s + db^p/dy^s),
/// the unique foliate field with i(X_H) theta = -dH.
FoliateField hamiltonian_field(const PolarizedHamiltonian& h);

/// i(X) theta: component p is sum_i (xi^{pi} dy^i - eta^i dx^{pi}).
VectorValued1Form contract_theta(const FoliateField& x);

struct PolarizationCheck {
  bool polarized = false;
  std::string diagnostic;
  std::optional<PolarizedHamiltonian> decomposition;
};

/// Decides whether k affine components form a polarized Hamiltonian: the x-
/// gradient of F^p must vanish along x^{q.} for q != p and be the same basic
/// vector (a_1..a_n) for every p. On success returns the (a, b) split.
PolarizationCheck is_polarized_hamiltonian(const ModelManifold& m, std::span<const AffineExpr> components);

/// Coordinate Lie bracket [X, Y] = XY - YX.
FoliateField lie_bracket(const FoliateField& x, const FoliateField& y);

/// <beta, X>: component p is sum_{q,i} beta^p_{qi} xi^{qi} + sum_i gamma^p_i eta^i.
std::vector<AffineExpr> pair(const VectorValued1Form& beta, const FoliateField& x);

/// Affine change of adapted coordinates
///   ybar = A y + c,   xbar^{pi} = sum_j x^{pj} dy^j/dybar^i + phi^{pi}(y),
/// with dy^j/dybar^i = (A^{-1})_{ji}. Objects are rewritten in the barred
/// chart; barred coordinates reuse the names x_p_i, yi.
///
/// The chart change maps theta to theta exactly when each row phi^{p.},
/// read as a function of ybar, is a gradient (`preserves_theta()`).
/// `with_potentials` builds such phi from potentials f^p.
class AffineTransition {
 public:
  /// `a` is n*n row-major. Throws std::invalid_argument for a singular `a`
  /// or mismatched sizes.
  AffineTransition(const ModelManifold& m, std::vector<Rational> a, std::vector<Rational> c,
                   std::vector<Polynomial> phi);

  static AffineTransition identity(const ModelManifold& m);
  /// phi^{pi} = d f^p / d ybar^i for basic potentials f^1..f^k given in y.
  static AffineTransition with_potentials(const ModelManifold& m, std::vector<Rational> a,
                                          std::vector<Rational> c, std::span<const Polynomial> potentials);

  const ModelManifold& manifold() const { return manifold_; }
  bool preserves_theta() const;
  AffineTransition inverse() const;

  PolarizedHamiltonian apply(const PolarizedHamiltonian& h) const;
  FoliateField apply(const FoliateField& x) const;
  /// A function affine in x, rewritten in the barred chart.
  AffineExpr apply(const AffineExpr& f) const;

 private:
  const Rational& a(std::size_t i, std::size_t j) const { return a_[i * manifold_.n() + j]; }
  const Rational& a_inv(std::size_t i, std::size_t j) const { return a_inv_[i * manifold_.n() + j]; }
  /// f(y) rewritten as a function of ybar via y = A^{-1}(ybar - c).
  Polynomial pull(const Polynomial& f) const;

  ModelManifold manifold_;
  std::vector<Rational> a_;
  std::vector<Rational> a_inv_;
  std::vector<Rational> c_;
  std::vector<Polynomial> phi_;  // k*n, functions of the old y
  std::vector<Polynomial> y_of_ybar_;
};

}  // namespace polpoisson
