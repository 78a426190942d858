#include "hypcert/univariate.hpp"

#include <ostream>

namespace hypcert {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::from_roots(const std::vector<Rational>& roots) {
  UniPoly p({Rational(1)});
  for (const auto& r : roots) p = p * UniPoly({-r, Rational(1)});
  return p;
}

const Rational& UniPoly::leading_coefficient() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational UniPoly::operator()(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

int UniPoly::sign_at(const Rational& t) const {
  const Rational v = (*this)(t);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

UniPoly UniPoly::derivative() const {
  std::vector<Rational> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * static_cast<long>(k));
  return UniPoly(std::move(out));
}

UniPoly UniPoly::shifted(const Rational& shift) const {
  // Horner in the polynomial ring: p(t + s).
  UniPoly acc;
  const UniPoly linear({shift, Rational(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * linear + UniPoly({*it});
  return acc;
}

UniPoly UniPoly::reflected() const {
  std::vector<Rational> out = coeffs_;
  for (std::size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::scaled(const Rational& c) const {
  std::vector<Rational> out = coeffs_;
  for (auto& x : out) x *= c;
  return UniPoly(std::move(out));
}

UniPoly UniPoly::primitive() const {
  if (coeffs_.empty()) return *this;
  Integer den_lcm(1);
  for (const auto& c : coeffs_) den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
  Integer num_gcd(0);
  for (const auto& c : coeffs_) num_gcd = boost::multiprecision::gcd(num_gcd, Integer(numerator(c) * (den_lcm / denominator(c))));
  return scaled(Rational(den_lcm, num_gcd));
}

UniPoly UniPoly::monic() const {
  if (coeffs_.empty()) return *this;
  return scaled(Rational(1) / coeffs_.back());
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw DomainError("univariate division by zero");
  std::vector<Rational> rest = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {UniPoly(), *this};
  std::vector<Rational> quotient(static_cast<std::size_t>(degree() - dd + 1), Rational(0));
  const Rational& lead = divisor.leading_coefficient();
  for (int k = degree(); k >= dd; --k) {
    const Rational q = rest[static_cast<std::size_t>(k)] / lead;
    quotient[static_cast<std::size_t>(k - dd)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      rest[static_cast<std::size_t>(k - dd + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return {UniPoly(std::move(quotient)), UniPoly(std::move(rest))};
}

UniPoly UniPoly::exact_div(const UniPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw DomainError("univariate division is not exact");
  return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a.primitive();
  UniPoly y = b.primitive();
  while (!y.is_zero()) {
    UniPoly r = x.divmod(y).second.primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::string to_string(const UniPoly& p, const std::string& variable) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coefficients()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? variable : variable + "^" + std::to_string(k));
    std::string text;
    if (mono.empty()) {
      text = to_string(c);
    } else if (c == 1) {
      text = mono;
    } else if (c == -1) {
      text = "-" + mono;
    } else {
      text = to_string(c) + "*" + mono;
    }
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

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << to_string(p); }

}  // namespace hypcert
