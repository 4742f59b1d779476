#include "polpoisson/parser.hpp"

#include <cctype>

namespace polpoisson {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position)
{
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarSetPtr& vars) : text_(text), vars_(vars) {}

  Polynomial parse()
  {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip_ws()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c)
  {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr()
  {
    Polynomial acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term()
  {
    Polynomial acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Polynomial d = unary();
        if (!d.is_constant())
          throw ParseError("division by a non-constant expression", at);
        Rational c = d.constant_term();
        if (c == 0)
          throw ParseError("division by zero", at);
        acc *= Rational(1 / c);
      } else {
        return acc;
      }
    }
  }

  Polynomial unary()
  {
    if (accept('-'))
      return -unary();
    if (accept('+'))
      return unary();
    return power();
  }

  Polynomial power()
  {
    Polynomial base = primary();
    if (!accept('^'))
      return base;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '-')
      throw ParseError("negative exponent", pos_);
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("exponent must be a nonnegative integer literal", pos_);
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    auto digits = text_.substr(start, pos_ - start);
    if (digits.size() > 4)
      throw ParseError("exponent too large", start);
    return pow(base, static_cast<unsigned>(std::stoul(std::string(digits))));
  }

  Polynomial primary()
  {
    skip_ws();
    if (pos_ >= text_.size())
      throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')'))
        throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      mpz_class value(std::string(text_.substr(start, pos_ - start)), 10);
      return Polynomial::constant(vars_, Rational(value));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      auto name = text_.substr(start, pos_ - start);
      auto idx = vars_->index_of(name);
      if (!idx)
        throw ParseError("unknown variable '" + std::string(name) + "'", start);
      return Polynomial::variable(vars_, *idx);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  const VarSetPtr& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const VarSetPtr& vars)
{
  return Parser(text, vars).parse();
}

}  // namespace polpoisson
