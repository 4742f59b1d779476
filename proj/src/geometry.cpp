#include "polpoisson/geometry.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polpoisson {

namespace {

void require_same(const ModelManifold& a, const ModelManifold& b, const char* what)
{
  if (!(a == b))
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

void require_basic(const ModelManifold& m, const Polynomial& f, const char* what)
{
  if (!(*f.vars() == *m.basic_vars()))
    throw std::invalid_argument(std::string(what) + ": coefficient must be a basic function of y1..yn");
}

/// Gauss-Jordan inverse of an n*n row-major rational matrix.
std::vector<Rational> invert(std::vector<Rational> m, std::size_t n)
{
  std::vector<Rational> inv(n * n);
  for (std::size_t i = 0; i < n; ++i)
    inv[i * n + i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot * n + col] == 0)
      ++pivot;
    if (pivot == n)
      throw std::invalid_argument("transition matrix is singular");
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m[pivot * n + j], m[col * n + j]);
        std::swap(inv[pivot * n + j], inv[col * n + j]);
      }
    Rational scale = 1 / m[col * n + col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col * n + j] *= scale;
      inv[col * n + j] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r * n + col] == 0)
        continue;
      Rational f = m[r * n + col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r * n + j] -= f * m[col * n + j];
        inv[r * n + j] -= f * inv[col * n + j];
      }
    }
  }
  return inv;
}

}  // namespace

// ---------------------------------------------------------------- ModelManifold

ModelManifold::ModelManifold(std::size_t k, std::size_t n) : k_(k), n_(n)
{
  if (k == 0 || n == 0)
    throw std::invalid_argument("model manifold needs k >= 1 and n >= 1");
  basic_vars_ = basic_varset(n);
  std::vector<std::string> names;
  for (std::size_t p = 1; p <= k; ++p)
    for (std::size_t i = 1; i <= n; ++i)
      names.push_back("x_" + std::to_string(p) + "_" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i)
    names.push_back("y" + std::to_string(i));
  coordinate_vars_ = make_varset(std::move(names));
}

// ---------------------------------------------------------------- AffineExpr

AffineExpr::AffineExpr(const ModelManifold& m)
    : manifold_(m), constant_(m.basic_zero()), linear_(m.k() * m.n(), m.basic_zero())
{
}

AffineExpr::AffineExpr(const ModelManifold& m, Polynomial constant, std::vector<Polynomial> linear)
    : manifold_(m), constant_(std::move(constant)), linear_(std::move(linear))
{
  if (linear_.size() != m.k() * m.n())
    throw std::invalid_argument("affine expression needs k*n linear coefficients");
  require_basic(m, constant_, "affine expression");
  for (const auto& c : linear_)
    require_basic(m, c, "affine expression");
}

AffineExpr AffineExpr::basic(const ModelManifold& m, Polynomial f)
{
  return AffineExpr(m, std::move(f), std::vector<Polynomial>(m.k() * m.n(), m.basic_zero()));
}

AffineExpr AffineExpr::coordinate_x(const ModelManifold& m, std::size_t p, std::size_t i)
{
  if (p >= m.k() || i >= m.n())
    throw std::out_of_range("x coordinate index out of range");
  AffineExpr e(m);
  e.linear_[m.x_index(p, i)] = m.basic_constant(1);
  return e;
}

AffineExpr AffineExpr::from_polynomial(const ModelManifold& m, const Polynomial& f)
{
  if (!(*f.vars() == *m.coordinate_vars()))
    throw std::invalid_argument("expression must range over the manifold coordinates");
  const std::size_t kn = m.k() * m.n();
  AffineExpr out(m);
  for (const auto& [e, c] : f.terms()) {
    std::size_t x_degree = 0;
    std::size_t which = 0;
    for (std::size_t v = 0; v < kn; ++v)
      if (e[v] != 0) {
        x_degree += e[v];
        which = v;
      }
    if (x_degree > 1)
      throw std::invalid_argument("expression is not affine in the x coordinates: term of degree " +
                                  std::to_string(x_degree) + " in x");
    Exponents ye(e.begin() + static_cast<std::ptrdiff_t>(kn), e.end());
    auto term = Polynomial::monomial(m.basic_vars(), std::move(ye), c);
    if (x_degree == 0)
      out.constant_ += term;
    else
      out.linear_[which] += term;
  }
  return out;
}

bool AffineExpr::is_zero() const
{
  return constant_.is_zero() && is_basic();
}

bool AffineExpr::is_basic() const
{
  return std::all_of(linear_.begin(), linear_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

AffineExpr AffineExpr::partial_y(std::size_t s) const
{
  AffineExpr out(manifold_);
  out.constant_ = constant_.partial(s);
  for (std::size_t v = 0; v < linear_.size(); ++v)
    out.linear_[v] = linear_[v].partial(s);
  return out;
}

void AffineExpr::check_manifold(const AffineExpr& other) const
{
  require_same(manifold_, other.manifold_, "affine expression");
}

AffineExpr& AffineExpr::operator+=(const AffineExpr& rhs)
{
  check_manifold(rhs);
  constant_ += rhs.constant_;
  for (std::size_t v = 0; v < linear_.size(); ++v)
    linear_[v] += rhs.linear_[v];
  return *this;
}

AffineExpr& AffineExpr::operator-=(const AffineExpr& rhs)
{
  check_manifold(rhs);
  constant_ -= rhs.constant_;
  for (std::size_t v = 0; v < linear_.size(); ++v)
    linear_[v] -= rhs.linear_[v];
  return *this;
}

AffineExpr& AffineExpr::operator*=(const Polynomial& basic)
{
  require_basic(manifold_, basic, "affine scaling");
  constant_ *= basic;
  for (auto& c : linear_)
    c *= basic;
  return *this;
}

AffineExpr AffineExpr::operator-() const
{
  AffineExpr out(*this);
  out.constant_ = -out.constant_;
  for (auto& c : out.linear_)
    c = -c;
  return out;
}

bool operator==(const AffineExpr& a, const AffineExpr& b)
{
  return a.manifold_ == b.manifold_ && a.constant_ == b.constant_ && a.linear_ == b.linear_;
}

double AffineExpr::evaluate(std::span<const double> x, std::span<const double> y) const
{
  if (x.size() != linear_.size() || y.size() != manifold_.n())
    throw std::invalid_argument("affine evaluation: state dimension mismatch");
  double sum = constant_.evaluate(y);
  for (std::size_t v = 0; v < linear_.size(); ++v)
    if (!linear_[v].is_zero())
      sum += linear_[v].evaluate(y) * x[v];
  return sum;
}

Rational AffineExpr::evaluate(std::span<const Rational> x, std::span<const Rational> y) const
{
  if (x.size() != linear_.size() || y.size() != manifold_.n())
    throw std::invalid_argument("affine evaluation: state dimension mismatch");
  Rational sum = constant_.evaluate(y);
  for (std::size_t v = 0; v < linear_.size(); ++v)
    if (!linear_[v].is_zero())
      sum += linear_[v].evaluate(y) * x[v];
  return sum;
}

Polynomial AffineExpr::to_polynomial() const
{
  const auto& target = manifold_.coordinate_vars();
  std::vector<std::size_t> y_map(manifold_.n());
  for (std::size_t i = 0; i < y_map.size(); ++i)
    y_map[i] = manifold_.y_index(i);
  Polynomial out = constant_.embed(target, y_map);
  for (std::size_t v = 0; v < linear_.size(); ++v)
    if (!linear_[v].is_zero())
      out += linear_[v].embed(target, y_map) * Polynomial::variable(target, v);
  return out;
}

AffineExpr multiply_affine(const AffineExpr& a, const AffineExpr& b)
{
  if (!a.is_basic() && !b.is_basic())
    throw std::domain_error("product of two x-dependent expressions is not affine in x");
  if (a.is_basic())
    return b * a.constant();
  return a * b.constant();
}

// ---------------------------------------------------------------- PolarizedHamiltonian

PolarizedHamiltonian::PolarizedHamiltonian(const ModelManifold& m, std::vector<Polynomial> a,
                                           std::vector<Polynomial> b)
    : manifold_(m), a_(std::move(a)), b_(std::move(b))
{
  if (a_.size() != m.n())
    throw std::invalid_argument("polarized Hamiltonian needs n coefficients a_j, got " + std::to_string(a_.size()));
  if (b_.size() != m.k())
    throw std::invalid_argument("polarized Hamiltonian needs k coefficients b^p, got " + std::to_string(b_.size()));
  for (const auto& f : a_)
    require_basic(m, f, "polarized Hamiltonian");
  for (const auto& f : b_)
    require_basic(m, f, "polarized Hamiltonian");
}

PolarizedHamiltonian PolarizedHamiltonian::zero(const ModelManifold& m)
{
  return PolarizedHamiltonian(m, std::vector<Polynomial>(m.n(), m.basic_zero()),
                              std::vector<Polynomial>(m.k(), m.basic_zero()));
}

AffineExpr PolarizedHamiltonian::component(std::size_t p) const
{
  if (p >= manifold_.k())
    throw std::out_of_range("Hamiltonian component index out of range");
  std::vector<Polynomial> linear(manifold_.k() * manifold_.n(), manifold_.basic_zero());
  for (std::size_t j = 0; j < manifold_.n(); ++j)
    linear[manifold_.x_index(p, j)] = a_[j];
  return AffineExpr(manifold_, b_[p], std::move(linear));
}

bool PolarizedHamiltonian::is_basic() const
{
  return std::all_of(a_.begin(), a_.end(), [](const Polynomial& f) { return f.is_zero(); });
}

bool PolarizedHamiltonian::is_zero() const
{
  return is_basic() && std::all_of(b_.begin(), b_.end(), [](const Polynomial& f) { return f.is_zero(); });
}

void PolarizedHamiltonian::check_manifold(const PolarizedHamiltonian& other) const
{
  require_same(manifold_, other.manifold_, "polarized Hamiltonian");
}

PolarizedHamiltonian& PolarizedHamiltonian::operator+=(const PolarizedHamiltonian& rhs)
{
  check_manifold(rhs);
  for (std::size_t j = 0; j < a_.size(); ++j)
    a_[j] += rhs.a_[j];
  for (std::size_t p = 0; p < b_.size(); ++p)
    b_[p] += rhs.b_[p];
  return *this;
}

PolarizedHamiltonian& PolarizedHamiltonian::operator-=(const PolarizedHamiltonian& rhs)
{
  check_manifold(rhs);
  for (std::size_t j = 0; j < a_.size(); ++j)
    a_[j] -= rhs.a_[j];
  for (std::size_t p = 0; p < b_.size(); ++p)
    b_[p] -= rhs.b_[p];
  return *this;
}

PolarizedHamiltonian& PolarizedHamiltonian::operator*=(const Rational& c)
{
  for (auto& f : a_)
    f *= c;
  for (auto& f : b_)
    f *= c;
  return *this;
}

PolarizedHamiltonian PolarizedHamiltonian::operator-() const
{
  PolarizedHamiltonian out(*this);
  out *= Rational(-1);
  return out;
}

bool operator==(const PolarizedHamiltonian& x, const PolarizedHamiltonian& y)
{
  return x.manifold_ == y.manifold_ && x.a_ == y.a_ && x.b_ == y.b_;
}

std::string PolarizedHamiltonian::to_string() const
{
  std::ostringstream os;
  os << "a = [";
  for (std::size_t j = 0; j < a_.size(); ++j)
    os << (j ? ", " : "") << a_[j].to_string();
  os << "]; b = [";
  for (std::size_t p = 0; p < b_.size(); ++p)
    os << (p ? ", " : "") << b_[p].to_string();
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------- FoliateField

FoliateField::FoliateField(const ModelManifold& m, std::vector<AffineExpr> xi, std::vector<Polynomial> eta)
    : manifold_(m), xi_(std::move(xi)), eta_(std::move(eta))
{
  if (xi_.size() != m.k() * m.n() || eta_.size() != m.n())
    throw std::invalid_argument("foliate field needs k*n x-components and n y-components");
  for (const auto& e : xi_)
    require_same(m, e.manifold(), "foliate field");
  for (const auto& f : eta_)
    require_basic(m, f, "foliate field y-component");
}

FoliateField FoliateField::zero(const ModelManifold& m)
{
  return FoliateField(m, std::vector<AffineExpr>(m.k() * m.n(), AffineExpr(m)),
                      std::vector<Polynomial>(m.n(), m.basic_zero()));
}

FoliateField FoliateField::coordinate_x(const ModelManifold& m, std::size_t p, std::size_t i)
{
  auto f = zero(m);
  f.xi_.at(m.x_index(p, i)) = AffineExpr::basic(m, m.basic_constant(1));
  return f;
}

FoliateField FoliateField::coordinate_y(const ModelManifold& m, std::size_t j)
{
  auto f = zero(m);
  f.eta_.at(j) = m.basic_constant(1);
  return f;
}

bool FoliateField::is_zero() const
{
  return std::all_of(xi_.begin(), xi_.end(), [](const AffineExpr& e) { return e.is_zero(); }) &&
         std::all_of(eta_.begin(), eta_.end(), [](const Polynomial& f) { return f.is_zero(); });
}

AffineExpr FoliateField::apply(const AffineExpr& f) const
{
  require_same(manifold_, f.manifold(), "vector field action");
  AffineExpr out(manifold_);
  for (std::size_t q = 0; q < manifold_.k(); ++q)
    for (std::size_t j = 0; j < manifold_.n(); ++j) {
      const auto& coeff = f.linear(q, j);
      if (!coeff.is_zero())
        out += xi(q, j) * coeff;
    }
  for (std::size_t s = 0; s < manifold_.n(); ++s)
    if (!eta_[s].is_zero())
      out += f.partial_y(s) * eta_[s];
  return out;
}

FoliateField& FoliateField::operator+=(const FoliateField& rhs)
{
  require_same(manifold_, rhs.manifold_, "foliate field");
  for (std::size_t v = 0; v < xi_.size(); ++v)
    xi_[v] += rhs.xi_[v];
  for (std::size_t j = 0; j < eta_.size(); ++j)
    eta_[j] += rhs.eta_[j];
  return *this;
}

FoliateField& FoliateField::operator-=(const FoliateField& rhs)
{
  require_same(manifold_, rhs.manifold_, "foliate field");
  for (std::size_t v = 0; v < xi_.size(); ++v)
    xi_[v] -= rhs.xi_[v];
  for (std::size_t j = 0; j < eta_.size(); ++j)
    eta_[j] -= rhs.eta_[j];
  return *this;
}

FoliateField FoliateField::operator-() const
{
  FoliateField out(*this);
  for (auto& e : out.xi_)
    e = -e;
  for (auto& f : out.eta_)
    f = -f;
  return out;
}

bool operator==(const FoliateField& a, const FoliateField& b)
{
  return a.manifold_ == b.manifold_ && a.xi_ == b.xi_ && a.eta_ == b.eta_;
}

std::string FoliateField::to_string() const
{
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first)
      os << "; ";
    first = false;
  };
  for (std::size_t p = 0; p < manifold_.k(); ++p)
    for (std::size_t i = 0; i < manifold_.n(); ++i)
      if (!xi(p, i).is_zero()) {
        sep();
        os << "xi[" << p + 1 << "][" << i + 1 << "] = " << xi(p, i).to_string();
      }
  for (std::size_t j = 0; j < manifold_.n(); ++j)
    if (!eta_[j].is_zero()) {
      sep();
      os << "eta[" << j + 1 << "] = " << eta_[j].to_string();
    }
  if (first)
    os << "0";
  return os.str();
}

// ---------------------------------------------------------------- VectorValued1Form

VectorValued1Form::VectorValued1Form(const ModelManifold& m, std::vector<Component> components)
    : manifold_(m), components_(std::move(components))
{
  if (components_.size() != m.k())
    throw std::invalid_argument("vector-valued 1-form needs k components");
  for (const auto& c : components_)
    if (c.dx.size() != m.k() * m.n() || c.dy.size() != m.n())
      throw std::invalid_argument("vector-valued 1-form component has wrong shape");
}

VectorValued1Form VectorValued1Form::zero(const ModelManifold& m)
{
  Component c{std::vector<AffineExpr>(m.k() * m.n(), AffineExpr(m)), std::vector<AffineExpr>(m.n(), AffineExpr(m))};
  return VectorValued1Form(m, std::vector<Component>(m.k(), c));
}

VectorValued1Form VectorValued1Form::operator-() const
{
  VectorValued1Form out(*this);
  for (auto& c : out.components_) {
    for (auto& e : c.dx)
      e = -e;
    for (auto& e : c.dy)
      e = -e;
  }
  return out;
}

bool operator==(const VectorValued1Form& a, const VectorValued1Form& b)
{
  if (!(a.manifold_ == b.manifold_))
    return false;
  for (std::size_t p = 0; p < a.components_.size(); ++p)
    if (a.components_[p].dx != b.components_[p].dx || a.components_[p].dy != b.components_[p].dy)
      return false;
  return true;
}

std::string VectorValued1Form::to_string() const
{
  std::ostringstream os;
  const auto n = manifold_.n();
  for (std::size_t p = 0; p < manifold_.k(); ++p) {
    os << (p ? "; " : "") << "[" << p + 1 << "] ";
    bool any = false;
    for (std::size_t q = 0; q < manifold_.k(); ++q)
      for (std::size_t i = 0; i < n; ++i)
        if (!dx(p, q, i).is_zero()) {
          os << (any ? " + " : "") << "(" << dx(p, q, i).to_string() << ")*dx_" << q + 1 << "_" << i + 1;
          any = true;
        }
    for (std::size_t i = 0; i < n; ++i)
      if (!dy(p, i).is_zero()) {
        os << (any ? " + " : "") << "(" << dy(p, i).to_string() << ")*dy" << i + 1;
        any = true;
      }
    if (!any)
      os << "0";
  }
  return os.str();
}

// ---------------------------------------------------------------- operations

VectorValued1Form differential(const PolarizedHamiltonian& h)
{
  const auto& m = h.manifold();
  std::vector<VectorValued1Form::Component> comps;
  for (std::size_t p = 0; p < m.k(); ++p) {
    VectorValued1Form::Component c{std::vector<AffineExpr>(m.k() * m.n(), AffineExpr(m)), {}};
    for (std::size_t i = 0; i < m.n(); ++i)
      c.dx[m.x_index(p, i)] = AffineExpr::basic(m, h.a(i));
    auto hp = h.component(p);
    for (std::size_t i = 0; i < m.n(); ++i)
      c.dy.push_back(hp.partial_y(i));
    comps.push_back(std::move(c));
  }
  return VectorValued1Form(m, std::move(comps));
}

FoliateField hamiltonian_field(const PolarizedHamiltonian& h)
{
  const auto& m = h.manifold();
  std::vector<AffineExpr> xi;
  xi.reserve(m.k() * m.n());
  for (std::size_t p = 0; p < m.k(); ++p) {
    auto hp = h.component(p);
    for (std::size_t s = 0; s < m.n(); ++s)
      xi.push_back(-hp.partial_y(s));
  }
  return FoliateField(m, std::move(xi), h.a());
}

VectorValued1Form contract_theta(const FoliateField& x)
{
  const auto& m = x.manifold();
  std::vector<VectorValued1Form::Component> comps;
  for (std::size_t p = 0; p < m.k(); ++p) {
    VectorValued1Form::Component c{std::vector<AffineExpr>(m.k() * m.n(), AffineExpr(m)), {}};
    for (std::size_t i = 0; i < m.n(); ++i) {
      c.dx[m.x_index(p, i)] = AffineExpr::basic(m, -x.eta(i));
      c.dy.push_back(x.xi(p, i));
    }
    comps.push_back(std::move(c));
  }
  return VectorValued1Form(m, std::move(comps));
}

PolarizationCheck is_polarized_hamiltonian(const ModelManifold& m, std::span<const AffineExpr> components)
{
  PolarizationCheck result;
  if (components.size() != m.k()) {
    result.diagnostic = "expected " + std::to_string(m.k()) + " components, got " + std::to_string(components.size());
    return result;
  }
  for (const auto& f : components)
    if (!(f.manifold() == m)) {
      result.diagnostic = "component lives on a different manifold";
      return result;
    }
  for (std::size_t p = 0; p < m.k(); ++p)
    for (std::size_t q = 0; q < m.k(); ++q) {
      if (q == p)
        continue;
      for (std::size_t i = 0; i < m.n(); ++i)
        if (!components[p].linear(q, i).is_zero()) {
          result.diagnostic = "component " + std::to_string(p + 1) + " depends on x_" + std::to_string(q + 1) + "_" +
                              std::to_string(i + 1) + " (cross-component x dependence)";
          return result;
        }
    }
  std::vector<Polynomial> a;
  for (std::size_t i = 0; i < m.n(); ++i) {
    a.push_back(components[0].linear(0, i));
    for (std::size_t p = 1; p < m.k(); ++p)
      if (!(components[p].linear(p, i) == a.back())) {
        result.diagnostic = "dH^" + std::to_string(p + 1) + "/dx_" + std::to_string(p + 1) + "_" +
                            std::to_string(i + 1) + " = " + components[p].linear(p, i).to_string() + " differs from dH^1/dx_1_" +
                            std::to_string(i + 1) + " = " + a.back().to_string();
        return result;
      }
  }
  std::vector<Polynomial> b;
  for (const auto& f : components)
    b.push_back(f.constant());
  result.polarized = true;
  result.decomposition.emplace(m, std::move(a), std::move(b));
  return result;
}

FoliateField lie_bracket(const FoliateField& x, const FoliateField& y)
{
  const auto& m = x.manifold();
  require_same(m, y.manifold(), "Lie bracket");
  std::vector<Polynomial> eta;
  for (std::size_t j = 0; j < m.n(); ++j) {
    Polynomial v = m.basic_zero();
    for (std::size_t s = 0; s < m.n(); ++s)
      v += x.eta(s) * y.eta(j).partial(s) - y.eta(s) * x.eta(j).partial(s);
    eta.push_back(std::move(v));
  }
  std::vector<AffineExpr> xi;
  for (std::size_t p = 0; p < m.k(); ++p)
    for (std::size_t s = 0; s < m.n(); ++s)
      xi.push_back(x.apply(y.xi(p, s)) - y.apply(x.xi(p, s)));
  return FoliateField(m, std::move(xi), std::move(eta));
}

std::vector<AffineExpr> pair(const VectorValued1Form& beta, const FoliateField& x)
{
  const auto& m = beta.manifold();
  require_same(m, x.manifold(), "pairing");
  std::vector<AffineExpr> out;
  for (std::size_t p = 0; p < m.k(); ++p) {
    AffineExpr acc(m);
    for (std::size_t q = 0; q < m.k(); ++q)
      for (std::size_t i = 0; i < m.n(); ++i)
        if (!beta.dx(p, q, i).is_zero() && !x.xi(q, i).is_zero())
          acc += multiply_affine(beta.dx(p, q, i), x.xi(q, i));
    for (std::size_t i = 0; i < m.n(); ++i)
      if (!x.eta(i).is_zero())
        acc += beta.dy(p, i) * x.eta(i);
    out.push_back(std::move(acc));
  }
  return out;
}

// ---------------------------------------------------------------- AffineTransition

AffineTransition::AffineTransition(const ModelManifold& m, std::vector<Rational> a, std::vector<Rational> c,
                                   std::vector<Polynomial> phi)
    : manifold_(m), a_(std::move(a)), c_(std::move(c)), phi_(std::move(phi))
{
  const auto n = m.n();
  if (a_.size() != n * n || c_.size() != n || phi_.size() != m.k() * n)
    throw std::invalid_argument("transition needs an n*n matrix, an n-vector and k*n functions phi");
  for (const auto& f : phi_)
    require_basic(m, f, "transition phi");
  a_inv_ = invert(a_, n);
  // y = A^{-1}(ybar - c)
  const auto& vars = m.basic_vars();
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial yj(vars);
    Rational shift(0);
    for (std::size_t i = 0; i < n; ++i) {
      yj += Polynomial::variable(vars, i) * a_inv(j, i);
      shift += a_inv(j, i) * c_[i];
    }
    yj -= Polynomial::constant(vars, shift);
    y_of_ybar_.push_back(std::move(yj));
  }
}

AffineTransition AffineTransition::identity(const ModelManifold& m)
{
  const auto n = m.n();
  std::vector<Rational> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    a[i * n + i] = 1;
  return AffineTransition(m, std::move(a), std::vector<Rational>(n),
                          std::vector<Polynomial>(m.k() * n, m.basic_zero()));
}

AffineTransition AffineTransition::with_potentials(const ModelManifold& m, std::vector<Rational> a,
                                                   std::vector<Rational> c, std::span<const Polynomial> potentials)
{
  const auto n = m.n();
  if (potentials.size() != m.k())
    throw std::invalid_argument("need one potential per component");
  if (a.size() != n * n)
    throw std::invalid_argument("transition needs an n*n matrix");
  auto inv = invert(a, n);
  std::vector<Polynomial> phi;
  for (std::size_t p = 0; p < m.k(); ++p) {
    require_basic(m, potentials[p], "transition potential");
    // d f / d ybar^i = sum_j (df/dy^j) (A^{-1})_{ji}
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial v = m.basic_zero();
      for (std::size_t j = 0; j < n; ++j)
        v += potentials[p].partial(j) * inv[j * n + i];
      phi.push_back(std::move(v));
    }
  }
  return AffineTransition(m, std::move(a), std::move(c), std::move(phi));
}

Polynomial AffineTransition::pull(const Polynomial& f) const
{
  return f.substitute(y_of_ybar_);
}

bool AffineTransition::preserves_theta() const
{
  const auto n = manifold_.n();
  for (std::size_t p = 0; p < manifold_.k(); ++p)
    for (std::size_t i = 0; i < n; ++i) {
      auto phi_i = pull(phi_[p * n + i]);
      for (std::size_t s = i + 1; s < n; ++s)
        if (!(phi_i.partial(s) == pull(phi_[p * n + s]).partial(i)))
          return false;
    }
  return true;
}

AffineTransition AffineTransition::inverse() const
{
  const auto n = manifold_.n();
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      c[i] -= a_inv(i, j) * c_[j];
  std::vector<Polynomial> phi;
  for (std::size_t p = 0; p < manifold_.k(); ++p)
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial v = manifold_.basic_zero();
      for (std::size_t j = 0; j < n; ++j)
        v -= phi_[p * n + j] * a(j, i);
      phi.push_back(pull(v));
    }
  return AffineTransition(manifold_, a_inv_, std::move(c), std::move(phi));
}

AffineExpr AffineTransition::apply(const AffineExpr& f) const
{
  require_same(manifold_, f.manifold(), "transition");
  const auto& m = manifold_;
  const auto n = m.n();
  // x^{qj} = sum_i A_{ij} (xbar^{qi} - phi^{qi})
  std::vector<Polynomial> linear(m.k() * n, m.basic_zero());
  for (std::size_t q = 0; q < m.k(); ++q)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& cj = f.linear(q, j);
      if (cj.is_zero())
        continue;
      auto pulled = pull(cj);
      for (std::size_t i = 0; i < n; ++i)
        if (a(i, j) != 0)
          linear[m.x_index(q, i)] += pulled * a(i, j);
    }
  Polynomial constant = pull(f.constant());
  for (std::size_t q = 0; q < m.k(); ++q)
    for (std::size_t i = 0; i < n; ++i)
      if (!linear[m.x_index(q, i)].is_zero())
        constant -= linear[m.x_index(q, i)] * pull(phi_[q * n + i]);
  return AffineExpr(m, std::move(constant), std::move(linear));
}

PolarizedHamiltonian AffineTransition::apply(const PolarizedHamiltonian& h) const
{
  require_same(manifold_, h.manifold(), "transition");
  std::vector<AffineExpr> comps;
  for (std::size_t p = 0; p < manifold_.k(); ++p)
    comps.push_back(apply(h.component(p)));
  auto check = is_polarized_hamiltonian(manifold_, comps);
  // The chart change keeps a shared across components; failure is a bug.
  if (!check.polarized)
    throw std::logic_error("transition broke polarization: " + check.diagnostic);
  return *check.decomposition;
}

FoliateField AffineTransition::apply(const FoliateField& x) const
{
  require_same(manifold_, x.manifold(), "transition");
  const auto& m = manifold_;
  const auto n = m.n();
  // Push forward: Xbar(ybar^i) = sum_k A_ik eta^k,
  // Xbar(xbar^{pi}) = sum_j (A^{-1})_{ji} xi^{pj} + sum_s dphi^{pi}/dy^s eta^s.
  std::vector<Polynomial> eta;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial v = m.basic_zero();
    for (std::size_t k = 0; k < n; ++k)
      v += x.eta(k) * a(i, k);
    eta.push_back(pull(v));
  }
  std::vector<AffineExpr> xi;
  for (std::size_t p = 0; p < m.k(); ++p)
    for (std::size_t i = 0; i < n; ++i) {
      AffineExpr v(m);
      for (std::size_t j = 0; j < n; ++j)
        if (a_inv(j, i) != 0)
          v += x.xi(p, j) * m.basic_constant(a_inv(j, i));
      Polynomial drift = m.basic_zero();
      for (std::size_t s = 0; s < n; ++s)
        drift += phi_[p * n + i].partial(s) * x.eta(s);
      v += AffineExpr::basic(m, std::move(drift));
      xi.push_back(apply(v));
    }
  return FoliateField(m, std::move(xi), std::move(eta));
}

}  // namespace polpoisson
