#include <cctype>
#include <ostream>

#include "hypcert/polynomial.hpp"

namespace hypcert {

namespace {

class Parser {
 public:
  Parser(std::string_view text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

  MultiPoly parse() {
    MultiPoly p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    if (!ring_->gaussian() && !p.is_real()) fail("imaginary coefficient in a non-gaussian ring");
    return p.embed(ring_);
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + message);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expression() {
    MultiPoly acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    while (true) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        MultiPoly divisor = unary();
        if (!divisor.is_constant() || divisor.is_zero()) fail("division only by nonzero constants");
        acc = acc.scaled(GaussianRational(1) / divisor.constant_term());
      } else {
        return acc;
      }
    }
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a nonnegative integer literal");
      const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 4096) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  MultiPoly primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      MultiPoly inner = expression();
      if (!accept(')')) fail("missing ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MultiPoly(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "i") {
        if (!ring_->gaussian()) fail("imaginary unit in a non-gaussian ring");
        return MultiPoly(GaussianRational::imaginary_unit());
      }
      const auto index = ring_->index_of(name);
      if (!index) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return MultiPoly::variable(ring_, *index);
    }
    fail("malformed token '" + std::string(1, ch) + "'");
  }

  std::string_view text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Ring& ring, const Exponents& exps) {
  std::string out;
  for (std::size_t k = 0; k < exps.size(); ++k) {
    if (exps[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.variables()[k];
    if (exps[k] > 1) out += "^" + std::to_string(exps[k]);
  }
  return out;
}

std::string term_text(const std::string& monomial, const GaussianRational& c) {
  if (monomial.empty()) return c.is_real() || c.real() == 0 ? to_string(c) : "(" + to_string(c) + ")";
  if (c.is_real()) {
    if (c.real() == 1) return monomial;
    if (c.real() == -1) return "-" + monomial;
    return to_string(c.real()) + "*" + monomial;
  }
  if (c.real() == 0) {
    if (c.imag() == 1) return "i*" + monomial;
    if (c.imag() == -1) return "-i*" + monomial;
    return to_string(c.imag()) + "*i*" + monomial;
  }
  return "(" + to_string(c) + ")*" + monomial;
}

}  // namespace

MultiPoly parse_poly(std::string_view text, const RingPtr& ring) {
  if (!ring) throw DomainError("parse_poly needs a ring");
  return Parser(text, ring).parse();
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) {
    const std::string monomial = p.ring() ? monomial_text(*p.ring(), t.exponents) : std::string();
    const std::string text = term_text(monomial, t.coefficient);
    if (out.empty()) {
      out = text;
    } else if (text.front() == '-') {
      out += " - " + text.substr(1);
    } else {
      out += " + " + text;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << to_string(p); }

}  // namespace hypcert
