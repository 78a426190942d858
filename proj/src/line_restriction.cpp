#include <sstream>

#include "hypcert/polynomial.hpp"

namespace hypcert {

Point parse_point(std::string_view text) {
  Point out;
  std::string item;
  std::stringstream stream{std::string(text)};
  while (std::getline(stream, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw ParseError("empty point");
  return out;
}

std::string to_string(const Point& point) {
  std::string out;
  for (std::size_t k = 0; k < point.size(); ++k) {
    if (k > 0) out += ",";
    out += to_string(point[k]);
  }
  return out;
}

std::vector<GaussianRational> to_gaussian(const Point& point) {
  return {point.begin(), point.end()};
}

namespace {

void require_plain_grading(const MultiPoly& h, const char* what) {
  if (h.ring() && !h.ring()->all_weights_one()) {
    throw DomainError(std::string(what) + " needs a ring with all weights 1");
  }
}

}  // namespace

UniPoly restrict_to_line(const MultiPoly& h, const Point& e, const Point& v) {
  require_plain_grading(h, "restrict_to_line");
  if (!h.is_real()) throw DomainError("restrict_to_line needs real coefficients");
  if (!h.is_zero() && !h.homogeneous_degree()) throw DomainError("restrict_to_line needs a homogeneous polynomial");
  const std::size_t n = h.ring() ? h.ring()->arity() : e.size();
  if (e.size() != n || v.size() != n) throw DomainError("restrict_to_line: point arity mismatch");

  // Powers of the linear forms e_k t - v_k, cached per variable.
  std::vector<std::vector<UniPoly>> powers(n);
  UniPoly result;
  for (const auto& term : h.terms()) {
    UniPoly value = UniPoly::constant(term.coefficient.real());
    for (std::size_t k = 0; k < term.exponents.size(); ++k) {
      const unsigned exponent = term.exponents[k];
      if (exponent == 0) continue;
      auto& cache = powers[k];
      if (cache.empty()) cache.push_back(UniPoly::constant(Rational(1)));
      while (cache.size() <= exponent) cache.push_back(cache.back() * UniPoly({-v[k], e[k]}));
      value = value * cache[exponent];
    }
    result += value;
  }
  return result;
}

MultiPoly directional_derivative(const MultiPoly& h, const Point& e) {
  require_plain_grading(h, "directional_derivative");
  if (h.is_zero() || !h.ring()) return MultiPoly(h.ring());
  if (e.size() != h.ring()->arity()) throw DomainError("directional_derivative: point arity mismatch");
  MultiPoly acc(h.ring());
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] != 0) acc += h.derivative(k).scaled(GaussianRational(e[k]));
  }
  return acc;
}

}  // namespace hypcert
