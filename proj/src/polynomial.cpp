#include "hypcert/polynomial.hpp"

#include <algorithm>
#include <ostream>

namespace hypcert {

Ring::Ring(std::vector<std::string> variables, std::vector<unsigned> weights, bool gaussian)
    : variables_(std::move(variables)), weights_(std::move(weights)), gaussian_(gaussian) {
  if (weights_.empty()) weights_.assign(variables_.size(), 1);
  if (weights_.size() != variables_.size()) throw DomainError("ring: one weight per variable required");
  for (unsigned w : weights_) {
    if (w == 0) throw DomainError("ring: weights must be positive");
  }
  for (std::size_t a = 0; a < variables_.size(); ++a) {
    const auto& name = variables_[a];
    if (name.empty() || name == "i") throw DomainError("ring: invalid variable name '" + name + "'");
    for (std::size_t b = a + 1; b < variables_.size(); ++b) {
      if (variables_[b] == name) throw DomainError("ring: duplicate variable '" + name + "'");
    }
  }
}

bool Ring::all_weights_one() const {
  return std::all_of(weights_.begin(), weights_.end(), [](unsigned w) { return w == 1; });
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t k = 0; k < variables_.size(); ++k) {
    if (variables_[k] == name) return k;
  }
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> variables, std::vector<unsigned> weights, bool gaussian) {
  return std::make_shared<const Ring>(std::move(variables), std::move(weights), gaussian);
}

RingPtr standard_ring(std::size_t n, bool gaussian, std::string_view prefix) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back(std::string(prefix) + std::to_string(k));
  return make_ring(std::move(names), {}, gaussian);
}

RingPtr with_gaussian(const RingPtr& ring, bool gaussian) {
  if (ring->gaussian() == gaussian) return ring;
  return make_ring(ring->variables(), ring->weights(), gaussian);
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->variables() == b->variables() && a->weights() == b->weights();
}

bool term_greater(const Term& a, const Term& b) {
  if (a.weighted_degree != b.weighted_degree) return a.weighted_degree > b.weighted_degree;
  return std::lexicographical_compare(b.exponents.begin(), b.exponents.end(), a.exponents.begin(),
                                      a.exponents.end());
}

namespace {

bool same_monomial(const Term& a, const Term& b) {
  return a.weighted_degree == b.weighted_degree && a.exponents == b.exponents;
}

std::uint32_t weighted_degree_of(const Ring& ring, const Exponents& exps) {
  std::uint32_t d = 0;
  for (std::size_t k = 0; k < exps.size(); ++k) d += ring.weights()[k] * exps[k];
  return d;
}

/// Merges two sorted term lists, adding (or subtracting) coefficients.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && term_greater(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || term_greater(b[j], a[i])) {
      out.push_back(b[j++]);
      if (subtract) out.back().coefficient = -out.back().coefficient;
    } else {
      GaussianRational c = subtract ? a[i].coefficient - b[j].coefficient : a[i].coefficient + b[j].coefficient;
      if (!c.is_zero()) out.push_back(Term{a[i].weighted_degree, a[i].exponents, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

std::vector<Term> shifted(const std::vector<Term>& terms, const Term& by) {
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    Term r{t.weighted_degree + by.weighted_degree, t.exponents, t.coefficient * by.coefficient};
    for (std::size_t k = 0; k < r.exponents.size(); ++k) r.exponents[k] += by.exponents[k];
    out.push_back(std::move(r));
  }
  return out;
}

/// Product of term lists by divide-and-conquer merging of shifted copies.
std::vector<Term> multiply_range(const std::vector<Term>& small, std::size_t lo, std::size_t hi,
                                 const std::vector<Term>& large) {
  if (hi - lo == 1) return shifted(large, small[lo]);
  const std::size_t mid = lo + (hi - lo) / 2;
  return merge_terms(multiply_range(small, lo, mid, large), multiply_range(small, mid, hi, large), false);
}

}  // namespace

MultiPoly::MultiPoly(int c) : MultiPoly(GaussianRational(c)) {}

MultiPoly::MultiPoly(const Rational& c) : MultiPoly(GaussianRational(c)) {}

MultiPoly::MultiPoly(const GaussianRational& c) {
  if (!c.is_zero()) terms_.push_back(Term{0, {}, c});
}

MultiPoly::MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

MultiPoly MultiPoly::constant(RingPtr ring, const GaussianRational& c) {
  MultiPoly p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back(Term{0, Exponents(p.ring_->arity(), 0), c});
  return p;
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->arity()) throw DomainError("variable index out of range");
  Exponents exps(ring->arity(), 0);
  exps[index] = 1;
  return monomial(std::move(ring), std::move(exps), GaussianRational(1));
}

MultiPoly MultiPoly::variable(RingPtr ring, std::string_view name) {
  const auto index = ring->index_of(name);
  if (!index) throw DomainError("unknown variable '" + std::string(name) + "'");
  return variable(std::move(ring), *index);
}

MultiPoly MultiPoly::monomial(RingPtr ring, Exponents exponents, const GaussianRational& c) {
  if (exponents.size() != ring->arity()) throw DomainError("exponent vector arity mismatch");
  MultiPoly p(std::move(ring));
  if (!c.is_zero()) {
    const auto d = weighted_degree_of(*p.ring_, exponents);
    p.terms_.push_back(Term{d, std::move(exponents), c});
  }
  return p;
}

MultiPoly MultiPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
  MultiPoly p(std::move(ring));
  for (auto& t : terms) {
    if (t.exponents.size() != p.ring_->arity()) throw DomainError("exponent vector arity mismatch");
    t.weighted_degree = weighted_degree_of(*p.ring_, t.exponents);
  }
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void MultiPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && same_monomial(out.back(), t)) {
      out.back().coefficient += t.coefficient;
    } else {
      if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
  terms_ = std::move(out);
}

void MultiPoly::promote_to(const RingPtr& ring) {
  ring_ = ring;
  for (auto& t : terms_) t.exponents.assign(ring->arity(), 0);
}

void MultiPoly::unify_with(const MultiPoly& o) {
  if (!o.ring_ || same_ring(ring_, o.ring_)) return;
  if (!ring_) {
    promote_to(o.ring_);
    return;
  }
  throw DomainError("polynomials from different rings");
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().weighted_degree == 0);
}

bool MultiPoly::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coefficient.is_real(); });
}

const Term& MultiPoly::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.front();
}

GaussianRational MultiPoly::coefficient(const Exponents& exponents) const {
  for (const auto& t : terms_) {
    if (t.exponents == exponents) return t.coefficient;
  }
  return GaussianRational(0);
}

GaussianRational MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().weighted_degree == 0) return terms_.back().coefficient;
  return GaussianRational(0);
}

bool MultiPoly::is_weighted_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.weighted_degree == terms_.front().weighted_degree; });
}

std::optional<unsigned> MultiPoly::homogeneous_degree() const {
  if (terms_.empty() || !is_weighted_homogeneous()) return std::nullopt;
  return terms_.front().weighted_degree;
}

std::optional<unsigned> MultiPoly::weighted_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().weighted_degree;
}

std::optional<unsigned> MultiPoly::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  unsigned best = 0;
  for (const auto& t : terms_) {
    unsigned d = 0;
    for (auto e : t.exponents) d += e;
    best = std::max(best, d);
  }
  return best;
}

unsigned MultiPoly::degree_in(std::size_t variable) const {
  unsigned best = 0;
  for (const auto& t : terms_) {
    if (variable < t.exponents.size()) best = std::max<unsigned>(best, t.exponents[variable]);
  }
  return best;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  MultiPoly rhs = o;
  unify_with(rhs);
  rhs.unify_with(*this);
  terms_ = merge_terms(terms_, rhs.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  MultiPoly rhs = o;
  unify_with(rhs);
  rhs.unify_with(*this);
  terms_ = merge_terms(terms_, rhs.terms_, true);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly lhs = a;
  MultiPoly rhs = b;
  lhs.unify_with(rhs);
  rhs.unify_with(lhs);
  MultiPoly out(lhs.ring_);
  if (lhs.terms_.empty() || rhs.terms_.empty()) return out;
  const bool lhs_small = lhs.terms_.size() <= rhs.terms_.size();
  const auto& small = lhs_small ? lhs.terms_ : rhs.terms_;
  const auto& large = lhs_small ? rhs.terms_ : lhs.terms_;
  out.terms_ = multiply_range(small, 0, small.size(), large);
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.ring_ && b.ring_ && !same_ring(a.ring_, b.ring_)) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    const auto& s = a.terms_[k];
    const auto& t = b.terms_[k];
    if (!(s.coefficient == t.coefficient) || s.weighted_degree != t.weighted_degree) return false;
    // A ring-free constant has empty exponents; compare only when both carry them.
    if (!s.exponents.empty() && !t.exponents.empty() && s.exponents != t.exponents) return false;
  }
  return true;
}

MultiPoly MultiPoly::scaled(const GaussianRational& c) const {
  if (c.is_zero()) return MultiPoly(ring_);
  MultiPoly out = *this;
  for (auto& t : out.terms_) t.coefficient *= c;
  return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = ring_ ? constant(ring_, GaussianRational(1)) : MultiPoly(1);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

GaussianRational MultiPoly::evaluate(std::span<const GaussianRational> point) const {
  if (ring_ && point.size() != ring_->arity()) throw DomainError("evaluation point arity mismatch");
  GaussianRational acc(0);
  for (const auto& t : terms_) {
    GaussianRational value = t.coefficient;
    for (std::size_t k = 0; k < t.exponents.size() && !value.is_zero(); ++k) {
      for (unsigned e = 0; e < t.exponents[k]; ++e) value *= point[k];
    }
    acc += value;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  if (ring_ && images.size() != ring_->arity()) throw DomainError("substitution arity mismatch");
  RingPtr target;
  for (const auto& img : images) {
    if (!img.ring_) continue;
    if (target && !same_ring(target, img.ring_)) throw DomainError("substitution images from different rings");
    target = img.ring_;
  }
  std::vector<std::vector<MultiPoly>> powers(images.size());
  MultiPoly acc = target ? MultiPoly(target) : MultiPoly();
  for (const auto& t : terms_) {
    MultiPoly value = target ? constant(target, t.coefficient) : MultiPoly(t.coefficient);
    for (std::size_t k = 0; k < t.exponents.size(); ++k) {
      const unsigned e = t.exponents[k];
      if (e == 0) continue;
      auto& cache = powers[k];
      if (cache.empty()) cache.push_back(target ? constant(target, GaussianRational(1)) : MultiPoly(1));
      while (cache.size() <= e) cache.push_back(cache.back() * images[k]);
      value = value * cache[e];
    }
    acc += value;
  }
  return acc;
}

MultiPoly MultiPoly::embed(const RingPtr& target) const {
  if (ring_ && same_ring(ring_, target)) {
    MultiPoly out = *this;
    out.ring_ = target;
    return out;
  }
  std::vector<std::size_t> map;
  if (ring_) {
    for (const auto& name : ring_->variables()) {
      const auto idx = target->index_of(name);
      map.push_back(idx ? *idx : target->arity());
    }
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents exps(target->arity(), 0);
    for (std::size_t k = 0; k < t.exponents.size(); ++k) {
      if (t.exponents[k] == 0) continue;
      if (map[k] == target->arity()) {
        throw DomainError("variable '" + ring_->variables()[k] + "' missing from target ring");
      }
      exps[map[k]] = t.exponents[k];
    }
    terms.push_back(Term{0, std::move(exps), t.coefficient});
  }
  return from_terms(target, std::move(terms));
}

MultiPoly MultiPoly::derivative(std::size_t variable) const {
  if (!ring_) return MultiPoly();
  if (variable >= ring_->arity()) throw DomainError("variable index out of range");
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    const unsigned e = t.exponents[variable];
    if (e == 0) continue;
    Term d{0, t.exponents, t.coefficient * GaussianRational(static_cast<int>(e))};
    d.exponents[variable] = static_cast<std::uint16_t>(e - 1);
    terms.push_back(std::move(d));
  }
  return from_terms(ring_, std::move(terms));
}

MultiPoly MultiPoly::conjugate() const {
  MultiPoly out = *this;
  for (auto& t : out.terms_) t.coefficient = conj(t.coefficient);
  return out;
}

MultiPoly MultiPoly::real_part() const {
  MultiPoly out(ring_);
  for (const auto& t : terms_) {
    if (t.coefficient.real() != 0) out.terms_.push_back(Term{t.weighted_degree, t.exponents, t.coefficient.real()});
  }
  return out;
}

MultiPoly MultiPoly::imag_part() const {
  MultiPoly out(ring_);
  for (const auto& t : terms_) {
    if (t.coefficient.imag() != 0) out.terms_.push_back(Term{t.weighted_degree, t.exponents, t.coefficient.imag()});
  }
  return out;
}

std::pair<MultiPoly, MultiPoly> MultiPoly::divide(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  MultiPoly rest = *this;
  MultiPoly d = divisor;
  rest.unify_with(d);
  d.unify_with(rest);
  const Term& lead = d.leading_term();
  std::vector<Term> quotient;
  std::vector<Term> remainder;
  while (!rest.terms_.empty()) {
    const Term& top = rest.terms_.front();
    bool divisible = true;
    for (std::size_t k = 0; k < lead.exponents.size(); ++k) {
      if (top.exponents[k] < lead.exponents[k]) {
        divisible = false;
        break;
      }
    }
    if (!divisible) {
      remainder.push_back(top);
      rest.terms_.erase(rest.terms_.begin());
      continue;
    }
    Term q{top.weighted_degree - lead.weighted_degree, top.exponents, top.coefficient / lead.coefficient};
    for (std::size_t k = 0; k < q.exponents.size(); ++k) q.exponents[k] -= lead.exponents[k];
    // Subtract q * divisor; its leading term cancels top exactly.
    std::vector<Term> product = shifted(d.terms_, q);
    product.erase(product.begin());
    std::vector<Term> tail(rest.terms_.begin() + 1, rest.terms_.end());
    rest.terms_ = merge_terms(tail, product, true);
    quotient.push_back(std::move(q));
  }
  MultiPoly qpoly(rest.ring_);
  qpoly.terms_ = std::move(quotient);
  MultiPoly rpoly(rest.ring_);
  rpoly.terms_ = std::move(remainder);
  return {std::move(qpoly), std::move(rpoly)};
}

MultiPoly MultiPoly::exact_div(const MultiPoly& divisor) const {
  auto [q, r] = divide(divisor);
  if (!r.is_zero()) throw DomainError("polynomial division is not exact");
  return q;
}

std::optional<SquareRoot> real_square_root(const MultiPoly& p) {
  if (!p.is_real()) throw DomainError("square root test needs real coefficients");
  if (p.is_zero()) return SquareRoot{Rational(1), p};
  const Rational lc = p.leading_term().coefficient.real();
  if (lc < 0) return std::nullopt;
  const MultiPoly monic = p.scaled(GaussianRational(Rational(1) / lc));
  const RingPtr& ring = monic.ring();
  const Term& top = monic.leading_term();
  Exponents half(top.exponents.size(), 0);
  for (std::size_t k = 0; k < half.size(); ++k) {
    if (top.exponents[k] % 2 != 0) return std::nullopt;
    half[k] = static_cast<std::uint16_t>(top.exponents[k] / 2);
  }
  const std::uint32_t min_degree = monic.terms().back().weighted_degree;
  std::vector<Term> root_terms{Term{top.weighted_degree / 2, half, GaussianRational(1)}};
  const auto build = [&]() {
    return ring ? MultiPoly::from_terms(ring, root_terms) : MultiPoly(GaussianRational(1));
  };
  MultiPoly root = build();
  MultiPoly rest = monic - root * root;
  const Term lead = root.leading_term();
  while (!rest.is_zero()) {
    const Term& r = rest.leading_term();
    Term next{0, r.exponents, r.coefficient / GaussianRational(2)};
    for (std::size_t k = 0; k < next.exponents.size(); ++k) {
      if (next.exponents[k] < lead.exponents[k]) return std::nullopt;
      next.exponents[k] -= lead.exponents[k];
    }
    next.weighted_degree = r.weighted_degree - lead.weighted_degree;
    if (2 * next.weighted_degree < min_degree) return std::nullopt;
    // Terms of the root appear in strictly decreasing order.
    if (!term_greater(root_terms.back(), next)) return std::nullopt;
    root_terms.push_back(std::move(next));
    root = build();
    rest = monic - root * root;
  }
  return SquareRoot{lc, root};
}

}  // namespace hypcert
