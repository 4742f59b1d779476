#include "polpoisson/io.hpp"

#include "polpoisson/parser.hpp"

#include <fstream>
#include <sstream>

namespace polpoisson {

namespace {

std::string join(const std::vector<std::string>& lines)
{
  std::ostringstream os;
  for (std::size_t i = 0; i < lines.size(); ++i)
    os << (i ? "\n" : "") << lines[i];
  return os.str();
}

[[noreturn]] void fail(const std::string& where, const std::string& what)
{
  throw ProblemError({where + ": " + what});
}

std::string as_text(const Json& v, const std::string& where)
{
  if (v.is_string())
    return v.get<std::string>();
  if (v.is_number_integer())
    return std::to_string(v.get<long long>());
  fail(where, "expected an expression string");
}

Rational as_rational(const Json& v, const std::string& where)
{
  try {
    return parse_rational(as_text(v, where));
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

std::size_t as_index(const Json& v, std::size_t dim, const std::string& where)
{
  if (!v.is_number_integer())
    fail(where, "expected an integer index");
  auto i = v.get<long long>();
  if (i < 1 || static_cast<std::size_t>(i) > dim)
    fail(where, "index " + std::to_string(i) + " outside 1.." + std::to_string(dim));
  return static_cast<std::size_t>(i - 1);
}

std::size_t as_positive(const Json& j, const char* key, const std::string& where)
{
  if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<long long>() < 1)
    fail(where, std::string("'") + key + "' must be a positive integer");
  return static_cast<std::size_t>(j.at(key).get<long long>());
}

Polynomial parse_field(const Json& v, const VarSetPtr& vars, const std::string& where,
                       std::vector<std::string>& errors)
{
  try {
    return parse_polynomial(as_text(v, where), vars);
  } catch (const ParseError& e) {
    errors.push_back(where + ": " + e.what());
  } catch (const ProblemError& e) {
    errors.insert(errors.end(), e.diagnostics().begin(), e.diagnostics().end());
  }
  return Polynomial(vars);
}

}  // namespace

ProblemError::ProblemError(std::vector<std::string> diagnostics)
    : std::runtime_error(join(diagnostics)), diagnostics_(std::move(diagnostics))
{
}

Json lie_algebra_to_json(const LieAlgebra& algebra)
{
  Json brackets = Json::array();
  for (const auto& e : algebra.brackets()) {
    Json coeffs = Json::object();
    for (const auto& [l, c] : e.coeffs)
      coeffs[std::to_string(l + 1)] = to_string(c);
    brackets.push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"coeffs", coeffs}});
  }
  return {{"dim", algebra.dim()}, {"brackets", brackets}};
}

Json maurer_cartan_to_json(const MaurerCartanData& data)
{
  Json d = Json::array();
  for (const auto& e : data.d)
    d.push_back({{"l", e.l + 1}, {"i", e.i + 1}, {"j", e.j + 1}, {"coeff", to_string(e.coeff)}});
  return {{"dim", data.dim}, {"d", d}};
}

LieAlgebra lie_algebra_from_json(const Json& j, const std::string& where)
{
  if (!j.is_object())
    fail(where, "expected an object");
  if (j.contains("builtin")) {
    if (!j.at("builtin").is_string())
      fail(where + ".builtin", "expected a name");
    try {
      return builtin_algebra(j.at("builtin").get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(where + ".builtin", e.what());
    }
  }
  const auto dim = as_positive(j, "dim", where);
  std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "";
  if (j.contains("brackets")) {
    const auto& arr = j.at("brackets");
    if (!arr.is_array())
      fail(where + ".brackets", "expected an array");
    std::vector<BracketEntry> entries;
    for (std::size_t n = 0; n < arr.size(); ++n) {
      const auto at = where + ".brackets[" + std::to_string(n) + "]";
      const auto& e = arr[n];
      if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("coeffs") ||
          !e.at("coeffs").is_object())
        fail(at, "expected {\"i\", \"j\", \"coeffs\"}");
      BracketEntry entry{as_index(e.at("i"), dim, at + ".i"), as_index(e.at("j"), dim, at + ".j"), {}};
      for (const auto& [key, value] : e.at("coeffs").items()) {
        std::size_t l = 0;
        try {
          l = static_cast<std::size_t>(std::stoul(key));
        } catch (const std::exception&) {
          fail(at + ".coeffs", "key '" + key + "' is not an index");
        }
        if (l < 1 || l > dim)
          fail(at + ".coeffs", "index " + key + " outside 1.." + std::to_string(dim));
        entry.coeffs[l - 1] = as_rational(value, at + ".coeffs." + key);
      }
      entries.push_back(std::move(entry));
    }
    return LieAlgebra::from_brackets(dim, entries, name);
  }
  if (j.contains("d")) {
    const auto& arr = j.at("d");
    if (!arr.is_array())
      fail(where + ".d", "expected an array");
    MaurerCartanData data{dim, {}};
    for (std::size_t n = 0; n < arr.size(); ++n) {
      const auto at = where + ".d[" + std::to_string(n) + "]";
      const auto& e = arr[n];
      if (!e.is_object() || !e.contains("l") || !e.contains("i") || !e.contains("j") || !e.contains("coeff"))
        fail(at, "expected {\"l\", \"i\", \"j\", \"coeff\"}");
      data.d.push_back({as_index(e.at("l"), dim, at + ".l"), as_index(e.at("i"), dim, at + ".i"),
                        as_index(e.at("j"), dim, at + ".j"), as_rational(e.at("coeff"), at + ".coeff")});
    }
    // Build without the validity requirement so broken data can be reported.
    std::vector<Rational> c(dim * dim * dim);
    for (const auto& e : data.d) {
      if (e.i >= e.j)
        fail(where + ".d", "entries need i < j");
      c[(e.i * dim + e.j) * dim + e.l] -= e.coeff;
      c[(e.j * dim + e.i) * dim + e.l] += e.coeff;
    }
    return LieAlgebra(dim, std::move(c), name);
  }
  fail(where, "expected \"brackets\", \"d\" or \"builtin\"");
}

Json hamiltonian_to_json(const PolarizedHamiltonian& h)
{
  Json a = Json::array();
  Json b = Json::array();
  for (const auto& f : h.a())
    a.push_back(f.to_string());
  for (const auto& f : h.b())
    b.push_back(f.to_string());
  return {{"k", h.manifold().k()}, {"n", h.manifold().n()}, {"a", a}, {"b", b}};
}

PolarizedHamiltonian hamiltonian_from_json(const Json& j, const ModelManifold& m, const std::string& where)
{
  if (!j.is_object())
    fail(where, "expected an object");
  std::vector<std::string> errors;
  if (j.contains("k") && (!j.at("k").is_number_integer() || j.at("k").get<long long>() != static_cast<long long>(m.k())))
    errors.push_back(where + ".k: does not match manifold k = " + std::to_string(m.k()));
  if (j.contains("n") && (!j.at("n").is_number_integer() || j.at("n").get<long long>() != static_cast<long long>(m.n())))
    errors.push_back(where + ".n: does not match manifold n = " + std::to_string(m.n()));

  auto read_list = [&](const char* key, std::size_t expected, const VarSetPtr& vars) {
    std::vector<Polynomial> out;
    const auto at = where + "." + key;
    if (!j.contains(key) || !j.at(key).is_array()) {
      errors.push_back(at + ": expected an array");
      return out;
    }
    const auto& arr = j.at(key);
    if (arr.size() != expected) {
      errors.push_back(at + ": expected " + std::to_string(expected) + " entries, got " + std::to_string(arr.size()));
      return out;
    }
    for (std::size_t i = 0; i < arr.size(); ++i)
      out.push_back(parse_field(arr[i], vars, at + "[" + std::to_string(i + 1) + "]", errors));
    return out;
  };

  if (j.contains("components")) {
    auto polys = read_list("components", m.k(), m.coordinate_vars());
    if (!errors.empty())
      throw ProblemError(errors);
    std::vector<AffineExpr> comps;
    for (std::size_t p = 0; p < polys.size(); ++p) {
      try {
        comps.push_back(AffineExpr::from_polynomial(m, polys[p]));
      } catch (const std::invalid_argument& e) {
        errors.push_back(where + ".components[" + std::to_string(p + 1) + "]: " + e.what());
      }
    }
    if (!errors.empty())
      throw ProblemError(errors);
    auto check = is_polarized_hamiltonian(m, comps);
    if (!check.polarized)
      fail(where + ".components", "not a polarized Hamiltonian: " + check.diagnostic);
    return *check.decomposition;
  }

  auto a = read_list("a", m.n(), m.basic_vars());
  auto b = read_list("b", m.k(), m.basic_vars());
  if (!errors.empty())
    throw ProblemError(errors);
  return PolarizedHamiltonian(m, std::move(a), std::move(b));
}

Json field_to_json(const FoliateField& x)
{
  const auto& m = x.manifold();
  Json xi = Json::array();
  for (std::size_t p = 0; p < m.k(); ++p) {
    Json row = Json::array();
    for (std::size_t i = 0; i < m.n(); ++i)
      row.push_back(x.xi(p, i).to_string());
    xi.push_back(row);
  }
  Json eta = Json::array();
  for (std::size_t j = 0; j < m.n(); ++j)
    eta.push_back(x.eta(j).to_string());
  return {{"xi", xi}, {"eta", eta}};
}

const PolarizedHamiltonian& ProblemFile::hamiltonian(const std::string& name) const
{
  for (const auto& h : hamiltonians)
    if (h.name == name)
      return h.hamiltonian;
  throw std::out_of_range("unknown Hamiltonian '" + name + "'");
}

ProblemFile problem_from_json(const Json& j)
{
  if (!j.is_object())
    fail("<root>", "expected an object");
  if (!j.contains("manifold") || !j.at("manifold").is_object())
    fail("manifold", "missing {\"k\", \"n\"}");
  const auto k = as_positive(j.at("manifold"), "k", "manifold");
  const auto n = as_positive(j.at("manifold"), "n", "manifold");
  ProblemFile problem{ModelManifold(k, n), std::nullopt, {}};

  std::vector<std::string> errors;
  if (j.contains("lie_algebra")) {
    try {
      problem.algebra = lie_algebra_from_json(j.at("lie_algebra"));
      if (problem.algebra->dim() != n)
        errors.push_back("lie_algebra: dimension " + std::to_string(problem.algebra->dim()) +
                         " does not match manifold n = " + std::to_string(n));
    } catch (const ProblemError& e) {
      errors.insert(errors.end(), e.diagnostics().begin(), e.diagnostics().end());
    }
  }
  if (j.contains("hamiltonians")) {
    const auto& hs = j.at("hamiltonians");
    if (!hs.is_object()) {
      errors.push_back("hamiltonians: expected an object of named Hamiltonians");
    } else {
      for (const auto& [name, value] : hs.items()) {
        try {
          problem.hamiltonians.push_back({name, hamiltonian_from_json(value, problem.manifold, "hamiltonians." + name)});
        } catch (const ProblemError& e) {
          errors.insert(errors.end(), e.diagnostics().begin(), e.diagnostics().end());
        }
      }
    }
  }
  if (!errors.empty())
    throw ProblemError(errors);
  return problem;
}

ProblemFile load_problem(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    throw ProblemError({path.string() + ": cannot open file"});
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ProblemError({path.string() + ": " + e.what()});
  }
  return problem_from_json(j);
}

}  // namespace polpoisson
