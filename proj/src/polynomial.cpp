#include "polpoisson/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace polpoisson {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names))
{
  std::unordered_set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second)
      throw std::invalid_argument("duplicate variable name '" + n + "'");
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const
{
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

VarSetPtr make_varset(std::vector<std::string> names)
{
  return std::make_shared<const VarSet>(std::move(names));
}

VarSetPtr basic_varset(std::size_t n)
{
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i)
    names.push_back("y" + std::to_string(i));
  return make_varset(std::move(names));
}

bool GradedLexOrder::operator()(const Exponents& a, const Exponents& b) const
{
  auto da = std::accumulate(a.begin(), a.end(), 0u);
  auto db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db)
    return da > db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), std::greater<>{});
}

Polynomial::Polynomial(VarSetPtr vars) : vars_(std::move(vars))
{
  if (!vars_)
    throw std::invalid_argument("polynomial needs a variable set");
}

Polynomial Polynomial::constant(VarSetPtr vars, const Rational& c)
{
  Polynomial p(std::move(vars));
  p.add_term(Exponents(p.arity(), 0), c);
  return p;
}

Polynomial Polynomial::variable(VarSetPtr vars, std::size_t index)
{
  Polynomial p(std::move(vars));
  if (index >= p.arity())
    throw std::out_of_range("variable index out of range");
  Exponents e(p.arity(), 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

Polynomial Polynomial::monomial(VarSetPtr vars, Exponents exps, const Rational& c)
{
  Polynomial p(std::move(vars));
  if (exps.size() != p.arity())
    throw std::invalid_argument("exponent vector arity mismatch");
  p.add_term(exps, c);
  return p;
}

bool Polynomial::is_constant() const
{
  return terms_.empty() || (terms_.size() == 1 && degree() == 0);
}

Rational Polynomial::constant_term() const
{
  return coefficient(Exponents(arity(), 0));
}

Rational Polynomial::coefficient(const Exponents& exps) const
{
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const
{
  if (terms_.empty())
    return -1;
  // The first term in graded-lex order has maximal total degree.
  const auto& e = terms_.begin()->first;
  return static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
}

bool Polynomial::depends_on(std::size_t index) const
{
  return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first.at(index) != 0; });
}

void Polynomial::check_compatible(const Polynomial& other) const
{
  if (vars_ != other.vars_ && !(*vars_ == *other.vars_))
    throw std::invalid_argument("variable-set mismatch between polynomials");
}

void Polynomial::add_term(const Exponents& exps, const Rational& c)
{
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_)
    add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_)
    add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs)
{
  lhs.check_compatible(rhs);
  Polynomial out(lhs.vars_);
  Exponents e(lhs.arity());
  for (const auto& [ea, ca] : lhs.terms_)
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs)
{
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_)
    coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const
{
  Polynomial out(*this);
  for (auto& [e, c] : out.terms_)
    c = -c;
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
  return (a.vars_ == b.vars_ || *a.vars_ == *b.vars_) && a.terms_ == b.terms_;
}

Polynomial Polynomial::partial(std::size_t index) const
{
  if (index >= arity())
    throw std::out_of_range("partial derivative index out of range");
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0)
      continue;
    Exponents d = e;
    d[index] -= 1;
    out.add_term(d, c * e[index]);
  }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const
{
  if (point.size() != arity())
    throw std::invalid_argument("evaluation point arity mismatch");
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k)
        term *= point[i];
    sum += term;
  }
  return sum;
}

double Polynomial::evaluate(std::span<const double> point) const
{
  if (point.size() != arity())
    throw std::invalid_argument("evaluation point arity mismatch");
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c.get_d();
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0)
        term *= e[i] == 1 ? point[i] : std::pow(point[i], static_cast<int>(e[i]));
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const
{
  if (images.size() != arity())
    throw std::invalid_argument("substitution arity mismatch");
  if (images.empty())
    throw std::invalid_argument("substitution into a nullary polynomial needs a target variable set");
  for (const auto& img : images)
    images.front().check_compatible(img);

  const auto& target = images.front().vars();
  // Cache powers per variable; degrees here are small.
  std::vector<std::vector<Polynomial>> powers(arity());
  auto power_of = [&](std::size_t var, unsigned k) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty())
      cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= k)
      cache.push_back(cache.back() * images[var]);
    return cache[k];
  };

  Polynomial out(target);
  for (const auto& [e, c] : terms_) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0)
        term *= power_of(i, e[i]);
    out += term;
  }
  return out;
}

Polynomial Polynomial::embed(VarSetPtr target, std::span<const std::size_t> index_map) const
{
  if (index_map.size() != arity())
    throw std::invalid_argument("embedding map arity mismatch");
  Polynomial out(std::move(target));
  for (auto idx : index_map)
    if (idx >= out.arity())
      throw std::out_of_range("embedding target index out of range");
  for (const auto& [e, c] : terms_) {
    Exponents d(out.arity(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      d[index_map[i]] += e[i];
    out.add_term(d, c);
  }
  return out;
}

std::string Polynomial::to_string() const
{
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;

    bool constant_term = std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
    bool need_star = false;
    if (mag != 1 || constant_term) {
      os << polpoisson::to_string(mag);
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0)
        continue;
      if (need_star)
        os << '*';
      os << vars_->name(i);
      if (e[i] > 1)
        os << '^' << e[i];
      need_star = true;
    }
  }
  return os.str();
}

Polynomial pow(const Polynomial& base, unsigned exponent)
{
  Polynomial result = Polynomial::constant(base.vars(), 1);
  Polynomial b = base;
  while (exponent != 0) {
    if (exponent & 1u)
      result *= b;
    exponent >>= 1;
    if (exponent != 0)
      b *= b;
  }
  return result;
}

}  // namespace polpoisson
