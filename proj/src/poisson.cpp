#include "polpoisson/poisson.hpp"

#include <sstream>
#include <stdexcept>

namespace polpoisson {

namespace {

void require_dims(const PolarizedHamiltonian& h, const PolarizedHamiltonian& k)
{
  if (!(h.manifold() == k.manifold()))
    throw std::invalid_argument("bracket: Hamiltonians live on different manifolds");
}

void require_algebra_dim(const LieAlgebra& algebra, const ModelManifold& m)
{
  if (algebra.dim() != m.n())
    throw std::invalid_argument("Lie algebra dimension " + std::to_string(algebra.dim()) +
                                " does not match n = " + std::to_string(m.n()));
}

PolarizedHamiltonian linear_bracket_unchecked(const LieAlgebra& algebra, const PolarizedHamiltonian& h,
                                              const PolarizedHamiltonian& k)
{
  require_dims(h, k);
  const auto& m = h.manifold();
  require_algebra_dim(algebra, m);
  const auto n = m.n();
  std::vector<Polynomial> a(n, m.basic_zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (h.a(i).is_zero())
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (k.a(j).is_zero())
        continue;
      Polynomial prod = h.a(i) * k.a(j);
      for (std::size_t l = 0; l < n; ++l)
        if (algebra.c(i, j, l) != 0)
          a[l] += prod * algebra.c(i, j, l);
    }
  }
  return PolarizedHamiltonian(m, std::move(a), std::vector<Polynomial>(m.k(), m.basic_zero()));
}

FoliateField linear_field_unchecked(const LieAlgebra& algebra, const PolarizedHamiltonian& h)
{
  const auto& m = h.manifold();
  require_algebra_dim(algebra, m);
  const auto n = m.n();
  std::vector<AffineExpr> xi;
  for (std::size_t p = 0; p < m.k(); ++p)
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Polynomial> linear(m.k() * n, m.basic_zero());
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l)
          if (algebra.c(i, j, l) != 0)
            linear[m.x_index(p, l)] += h.a(j) * algebra.c(i, j, l);
      xi.emplace_back(m, m.basic_zero(), std::move(linear));
    }
  return FoliateField(m, std::move(xi), std::vector<Polynomial>(n, m.basic_zero()));
}

PolarizedHamiltonian basic_part(const PolarizedHamiltonian& h)
{
  const auto& m = h.manifold();
  return PolarizedHamiltonian(m, std::vector<Polynomial>(m.n(), m.basic_zero()), h.b());
}

}  // namespace

PolarizedHamiltonian subordinate_bracket(const PolarizedHamiltonian& h, const PolarizedHamiltonian& k)
{
  require_dims(h, k);
  const auto& m = h.manifold();
  const auto n = m.n();
  std::vector<Polynomial> a(n, m.basic_zero());
  std::vector<Polynomial> b(m.k(), m.basic_zero());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ai = h.a(i);
    const auto& ki = k.a(i);
    if (ai.is_zero() && ki.is_zero())
      continue;
    for (std::size_t j = 0; j < n; ++j)
      a[j] += ki * h.a(j).partial(i) - ai * k.a(j).partial(i);
    for (std::size_t p = 0; p < m.k(); ++p)
      b[p] += ki * h.b(p).partial(i) - ai * k.b(p).partial(i);
  }
  return PolarizedHamiltonian(m, std::move(a), std::move(b));
}

PolarizedHamiltonian linear_bracket(const LieAlgebra& algebra, const PolarizedHamiltonian& h,
                                    const PolarizedHamiltonian& k)
{
  if (!algebra.is_valid())
    throw std::invalid_argument("linear bracket needs a valid Lie algebra:\n" + algebra.validate().to_string());
  return linear_bracket_unchecked(algebra, h, k);
}

std::vector<Polynomial> gradient_restriction(const PolarizedHamiltonian& h, std::size_t p, std::size_t q)
{
  const auto& m = h.manifold();
  if (p >= m.k() || q >= m.k())
    throw std::out_of_range("gradient restriction: component index out of range");
  if (p != q)
    return std::vector<Polynomial>(m.n(), m.basic_zero());
  return h.a();
}

FoliateField linear_hamiltonian_field(const LieAlgebra& algebra, const PolarizedHamiltonian& h)
{
  if (!algebra.is_valid())
    throw std::invalid_argument("linear Hamiltonian field needs a valid Lie algebra");
  return linear_field_unchecked(algebra, h);
}

Bracket Bracket::linear(LieAlgebra algebra)
{
  if (!algebra.is_valid())
    throw std::invalid_argument("linear bracket needs a valid Lie algebra:\n" + algebra.validate().to_string());
  return Bracket(std::move(algebra));
}

std::string Bracket::name() const
{
  if (!algebra_)
    return "subordinate";
  return "linear(" + (algebra_->name().empty() ? std::string("custom") : algebra_->name()) + ")";
}

PolarizedHamiltonian Bracket::operator()(const PolarizedHamiltonian& h, const PolarizedHamiltonian& k) const
{
  if (algebra_)
    return linear_bracket_unchecked(*algebra_, h, k);
  return subordinate_bracket(h, k);
}

FoliateField Bracket::field(const PolarizedHamiltonian& h) const
{
  if (algebra_)
    return linear_field_unchecked(*algebra_, h);
  return hamiltonian_field(h);
}

PolarizedHamiltonian jacobiator(const Bracket& bracket, const PolarizedHamiltonian& h, const PolarizedHamiltonian& k,
                                const PolarizedHamiltonian& g)
{
  return bracket(bracket(h, k), g) + bracket(bracket(k, g), h) + bracket(bracket(g, h), k);
}

std::optional<std::array<PolarizedHamiltonian, 3>> jacobi_witness(const LieAlgebra& algebra, const ModelManifold& m)
{
  require_algebra_dim(algebra, m);
  auto report = algebra.validate();
  const AxiomViolation* hit = nullptr;
  for (const auto& v : report.violations)
    if (v.kind == AxiomViolation::Kind::jacobi) {
      hit = &v;
      break;
    }
  if (!hit)
    return std::nullopt;
  auto unit = [&](std::size_t idx) {
    std::vector<Polynomial> a(m.n(), m.basic_zero());
    a[idx] = m.basic_constant(1);
    return PolarizedHamiltonian(m, std::move(a), std::vector<Polynomial>(m.k(), m.basic_zero()));
  };
  return std::array<PolarizedHamiltonian, 3>{unit(hit->indices[0]), unit(hit->indices[1]), unit(hit->indices[2])};
}

bool AxiomReport::all_passed() const
{
  for (const auto& r : results)
    if (!r.passed)
      return false;
  return true;
}

std::string AxiomReport::to_string() const
{
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.passed ? "PASS " : "FAIL ") << r.axiom;
    if (!r.passed)
      os << ": " << r.witness;
    os << '\n';
  }
  return os.str();
}

AxiomReport verify_axioms(const Bracket& bracket, const ModelManifold& m,
                          std::span<const PolarizedHamiltonian> samples)
{
  if (samples.empty())
    throw std::invalid_argument("verify_axioms needs at least one sample");
  for (const auto& s : samples)
    if (!(s.manifold() == m))
      throw std::invalid_argument("verify_axioms: sample lives on a different manifold");

  AxiomResult bilinear{"bilinearity", true, {}};
  AxiomResult antisym{"antisymmetry", true, {}};
  AxiomResult jacobi{"Jacobi identity", true, {}};
  AxiomResult basic{"vanishing on basic pairs", true, {}};
  AxiomResult foliate{"foliate Hamiltonian field X_H(K) = {K,H}", true, {}};
  AxiomResult closure{"closure in polarized Hamiltonians", true, {}};

  auto fail = [](AxiomResult& r, const std::string& witness) {
    if (r.passed) {
      r.passed = false;
      r.witness = witness;
    }
  };
  auto describe = [](std::initializer_list<const PolarizedHamiltonian*> hs) {
    std::ostringstream os;
    const char* names[] = {"H", "K", "G"};
    std::size_t i = 0;
    for (const auto* h : hs) {
      os << (i ? ", " : "") << names[i] << " = {" << h->to_string() << "}";
      ++i;
    }
    return os.str();
  };

  const Rational alpha(2);
  const Rational beta = make_rational(-1, 3);

  std::vector<std::array<PolarizedHamiltonian, 3>> triples;
  const auto count = samples.size();
  for (std::size_t i = 0; i < count; ++i)
    triples.push_back({samples[i], samples[(i + 1) % count], samples[(i + 2) % count]});
  if (bracket.is_linear() && bracket.algebra()->dim() == m.n()) {
    auto unit = [&](std::size_t idx) {
      std::vector<Polynomial> a(m.n(), m.basic_zero());
      a[idx] = m.basic_constant(1);
      return PolarizedHamiltonian(m, std::move(a), std::vector<Polynomial>(m.k(), m.basic_zero()));
    };
    for (std::size_t i = 0; i < m.n(); ++i)
      for (std::size_t j = i + 1; j < m.n(); ++j)
        for (std::size_t k = j + 1; k < m.n(); ++k)
          triples.push_back({unit(i), unit(j), unit(k)});
  }

  for (const auto& [h, k, g] : triples) {
    auto hk = bracket(h, k);

    // Polarized by construction; re-derive through the component check.
    std::vector<AffineExpr> comps;
    for (std::size_t p = 0; p < m.k(); ++p)
      comps.push_back(hk.component(p));
    auto pc = is_polarized_hamiltonian(m, comps);
    if (!pc.polarized || !(*pc.decomposition == hk))
      fail(closure, describe({&h, &k}) + ": " + pc.diagnostic);

    if (!(bracket(alpha * h + beta * g, k) == alpha * hk + beta * bracket(g, k)) ||
        !(bracket(h, alpha * k + beta * g) == alpha * hk + beta * bracket(h, g)))
      fail(bilinear, describe({&h, &k, &g}));

    if (!(hk == -bracket(k, h)) || !bracket(h, h).is_zero())
      fail(antisym, describe({&h, &k}) + ", {H,K} = {" + hk.to_string() + "}");

    auto jac = jacobiator(bracket, h, k, g);
    if (!jac.is_zero())
      fail(jacobi, describe({&h, &k, &g}) + ", jacobiator = {" + jac.to_string() + "}");

    auto hb = basic_part(h);
    auto kb = basic_part(k);
    if (!bracket(hb, kb).is_zero())
      fail(basic, describe({&hb, &kb}));

    auto field = bracket.field(h);
    auto kh = bracket(k, h);
    for (std::size_t p = 0; p < m.k(); ++p)
      if (!(field.apply(k.component(p)) == kh.component(p))) {
        fail(foliate, describe({&h, &k}) + ", component " + std::to_string(p + 1) + ": X_H(K) = " +
                          field.apply(k.component(p)).to_string() + " but {K,H} = " + kh.component(p).to_string());
        break;
      }
  }

  return AxiomReport{{bilinear, antisym, jacobi, basic, foliate, closure}};
}

}  // namespace polpoisson
