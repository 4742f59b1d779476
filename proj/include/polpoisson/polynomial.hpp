#pragma once

#include "polpoisson/rational.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polpoisson {

/// Ordered set of variable names a polynomial ranges over.
class VarSet {
 public:
  explicit VarSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const VarSet&, const VarSet&) = default;

 private:
  std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

VarSetPtr make_varset(std::vector<std::string> names);

/// y1..yn, the coordinates transverse to the leaves.
VarSetPtr basic_varset(std::size_t n);

using Exponents = std::vector<unsigned>;

/// Graded lexicographic order: higher total degree first, ties broken by
/// comparing exponents of the first variable, then the second, and so on
/// (larger exponent first).
struct GradedLexOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in canonical form: no zero coefficients and a fixed
/// graded-lex term order, so structural equality is equality of functions.
/// Binary operations require both operands to range over equal variable
/// sets and throw std::invalid_argument otherwise.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexOrder>;

  /// The zero polynomial over `vars`.
  explicit Polynomial(VarSetPtr vars);

  static Polynomial constant(VarSetPtr vars, const Rational& c);
  static Polynomial variable(VarSetPtr vars, std::size_t index);
  static Polynomial monomial(VarSetPtr vars, Exponents exps, const Rational& c);

  const VarSetPtr& vars() const { return vars_; }
  std::size_t arity() const { return vars_->size(); }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Exponents& exps) const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool depends_on(std::size_t index) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Formal partial derivative with respect to variable `index` (0-based).
  Polynomial partial(std::size_t index) const;

  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;

  /// Composition: replaces variable i by images[i]. All images must share a
  /// variable set, which becomes the variable set of the result.
  Polynomial substitute(std::span<const Polynomial> images) const;

  /// Re-expresses the polynomial over `target`, sending variable i to
  /// target variable index_map[i].
  Polynomial embed(VarSetPtr target, std::span<const std::size_t> index_map) const;

  /// Canonical text: explicit `*` and `^`, graded-lex term order.
  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& other) const;
  void add_term(const Exponents& exps, const Rational& c);

  VarSetPtr vars_;
  TermMap terms_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

}  // namespace polpoisson
