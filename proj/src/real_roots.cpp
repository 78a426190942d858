#include "hypcert/real_roots.hpp"

#include <algorithm>
#include <ostream>

#include "hypcert/dense.hpp"

namespace hypcert {

std::size_t IsolatingIntervals::root_count() const {
  std::size_t n = 0;
  for (const auto& iv : intervals) n += iv.multiplicity;
  return n;
}

std::string to_string(const RootInterval& interval) {
  return "[" + to_string(interval.lo) + ", " + to_string(interval.hi) + "] x " +
         std::to_string(interval.multiplicity);
}

std::ostream& operator<<(std::ostream& os, const IsolatingIntervals& roots) {
  for (std::size_t k = 0; k < roots.intervals.size(); ++k) {
    if (k > 0) os << "; ";
    os << to_string(roots.intervals[k]);
  }
  return os;
}

SturmChain::SturmChain(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
  chain_.push_back(p.primitive());
  UniPoly next = p.derivative().primitive();
  while (!next.is_zero()) {
    chain_.push_back(next);
    const UniPoly& a = chain_[chain_.size() - 2];
    const UniPoly& b = chain_.back();
    next = (-a.divmod(b).second).primitive();
  }
}

namespace {

std::size_t variations(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

}  // namespace

std::size_t SturmChain::variations_at(const Rational& t) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(p.sign_at(t));
  return variations(signs);
}

std::size_t SturmChain::variations_at_infinity(bool positive) const {
  std::vector<int> signs;
  for (const auto& p : chain_) {
    int s = sign_of(p.leading_coefficient());
    if (!positive && p.degree() % 2 != 0) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

std::size_t SturmChain::count(const Rational& a, const Rational& b) const {
  if (!(a < b)) return 0;
  return variations_at(a) - variations_at(b);
}

std::size_t SturmChain::count_all() const {
  return variations_at_infinity(false) - variations_at_infinity(true);
}

UniPoly squarefree_part(const UniPoly& f) {
  if (f.is_zero()) throw DomainError("squarefree part of the zero polynomial");
  return f.exact_div(gcd(f, f.derivative())).monic();
}

std::vector<SquarefreeFactor> squarefree_factorization(const UniPoly& f) {
  if (f.is_zero()) throw DomainError("squarefree factorization of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (f.degree() == 0) return out;
  const UniPoly df = f.derivative();
  const UniPoly a0 = gcd(f, df);
  UniPoly b = f.exact_div(a0);
  UniPoly c = df.exact_div(a0);
  UniPoly d = c - b.derivative();
  for (unsigned k = 1; b.degree() > 0; ++k) {
    const UniPoly a = gcd(b, d);
    if (a.degree() > 0) out.push_back({a.monic(), k});
    b = b.exact_div(a);
    c = d.exact_div(a);
    d = c - b.derivative();
  }
  return out;
}

Rational cauchy_bound(const UniPoly& f) {
  if (f.is_zero()) throw DomainError("root bound of the zero polynomial");
  Rational best(0);
  const Rational lead = abs(f.leading_coefficient());
  for (int k = 0; k < f.degree(); ++k) best = std::max(best, Rational(abs(f.coefficients()[static_cast<std::size_t>(k)]) / lead));
  return best + 1;
}

bool is_real_rooted(const UniPoly& f) {
  if (f.is_zero()) throw DomainError("real-rootedness of the zero polynomial");
  const UniPoly g = squarefree_part(f);
  return SturmChain(g).count_all() == static_cast<std::size_t>(g.degree());
}

void bisect(RootInterval& interval, const UniPoly& p) {
  if (interval.exact()) return;
  const Rational mid = (interval.lo + interval.hi) / 2;
  const int s_mid = p.sign_at(mid);
  if (s_mid == 0) {
    interval.lo = mid;
    interval.hi = mid;
  } else if (p.sign_at(interval.lo) * s_mid < 0) {
    interval.hi = mid;
  } else {
    interval.lo = mid;
  }
}

void refine_to_width(RootInterval& interval, const UniPoly& p, const Rational& width) {
  while (!interval.exact() && interval.hi - interval.lo > width) bisect(interval, p);
}

namespace {

/// Isolates the roots of squarefree g in (lo, hi); lo and hi are not roots and
/// `count` is the number of roots between them.
void isolate_range(const SturmChain& chain, const UniPoly& g, const Rational& lo, const Rational& hi,
                   std::size_t count, unsigned multiplicity, std::vector<RootInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({lo, hi, multiplicity});
    return;
  }
  const Rational mid = (lo + hi) / 2;
  if (g.sign_at(mid) != 0) {
    const std::size_t left = chain.count(lo, mid);
    isolate_range(chain, g, lo, mid, left, multiplicity, out);
    isolate_range(chain, g, mid, hi, count - left, multiplicity, out);
    return;
  }
  // mid is a root: cut out a root-free punctured neighbourhood around it.
  Rational w = (hi - lo) / 4;
  while (g.sign_at(mid - w) == 0 || g.sign_at(mid + w) == 0 || chain.count(mid - w, mid + w) != 1) w /= 2;
  const std::size_t left = chain.count(lo, mid - w);
  isolate_range(chain, g, lo, mid - w, left, multiplicity, out);
  out.push_back({mid, mid, multiplicity});
  isolate_range(chain, g, mid + w, hi, count - left - 1, multiplicity, out);
}

void isolate_squarefree(const UniPoly& g, unsigned multiplicity, std::vector<RootInterval>& out) {
  if (g.degree() <= 0) return;
  const SturmChain chain(g);
  const Rational bound = cauchy_bound(g);
  isolate_range(chain, g, -bound, bound, chain.count(-bound, bound), multiplicity, out);
}

struct TaggedInterval {
  RootInterval interval;
  const UniPoly* poly;
  int tag;
};

bool overlapping(const RootInterval& a, const RootInterval& b) {
  if (a.exact() && b.exact()) return a.lo == b.lo;
  if (a.exact()) return b.lo < a.lo && a.lo < b.hi;
  if (b.exact()) return a.lo < b.lo && b.lo < a.hi;
  return a.lo < b.hi && b.lo < a.hi;
}

/// Refines until the intervals are pairwise disjoint; the underlying roots must
/// be pairwise distinct. Leaves the list sorted.
void separate(std::vector<TaggedInterval>& items) {
  const auto by_position = [](const TaggedInterval& a, const TaggedInterval& b) {
    return a.interval.lo < b.interval.lo || (a.interval.lo == b.interval.lo && a.interval.hi < b.interval.hi);
  };
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(items.begin(), items.end(), by_position);
    for (std::size_t k = 0; k < items.size(); ++k) {
      for (std::size_t j = k + 1; j < items.size() && items[j].interval.lo < items[k].interval.hi; ++j) {
        if (!overlapping(items[k].interval, items[j].interval)) continue;
        if (items[k].interval.exact() && items[j].interval.exact()) {
          throw InternalError("two isolated roots coincide");
        }
        bisect(items[k].interval, *items[k].poly);
        bisect(items[j].interval, *items[j].poly);
        changed = true;
      }
    }
  }
}

}  // namespace

IsolatingIntervals isolate_roots(const UniPoly& f) {
  if (f.is_zero()) throw DomainError("root isolation of the zero polynomial");
  const auto factors = squarefree_factorization(f);
  std::vector<TaggedInterval> items;
  for (const auto& factor : factors) {
    std::vector<RootInterval> roots;
    isolate_squarefree(factor.factor, factor.multiplicity, roots);
    for (auto& r : roots) items.push_back({r, &factor.factor, 0});
  }
  separate(items);
  IsolatingIntervals out;
  for (auto& item : items) out.intervals.push_back(item.interval);
  return out;
}

bool interlaces_univariate(const UniPoly& f, const UniPoly& g, InterlaceOptions options) {
  if (f.is_zero() || g.is_zero()) throw DomainError("interlacing test of the zero polynomial");
  if (g.degree() != f.degree() - 1) {
    throw DomainError("interlacing needs deg g = deg f - 1 (got " + std::to_string(f.degree()) + " and " +
                      std::to_string(g.degree()) + ")");
  }
  if (!is_real_rooted(f)) throw NotRealRooted("f");
  if (!is_real_rooted(g)) throw NotRealRooted("g");

  const UniPoly common = gcd(f, g);
  if (options.strict && common.degree() > 0) return false;
  const UniPoly f1 = f.exact_div(common);
  const UniPoly g1 = g.exact_div(common);

  const auto f_factors = squarefree_factorization(f1);
  const auto g_factors = squarefree_factorization(g1);
  std::vector<TaggedInterval> items;
  for (int tag = 0; tag < 2; ++tag) {
    for (const auto& factor : tag == 0 ? f_factors : g_factors) {
      std::vector<RootInterval> roots;
      isolate_squarefree(factor.factor, factor.multiplicity, roots);
      for (auto& r : roots) items.push_back({r, &factor.factor, tag});
    }
  }
  separate(items);

  // After removing the common factor the merged sequence must read f g f ... g f.
  int expected = 0;
  std::size_t length = 0;
  for (const auto& item : items) {
    for (unsigned m = 0; m < item.interval.multiplicity; ++m) {
      if (item.tag != expected) return false;
      expected = 1 - expected;
      ++length;
    }
  }
  return length == static_cast<std::size_t>(f1.degree() + g1.degree());
}

namespace {

/// Newton power sums s_0 .. s_{count-1} of the roots of f.
std::vector<Rational> power_sums(const UniPoly& f, std::size_t count) {
  const UniPoly m = f.monic();
  const int d = m.degree();
  const auto c = [&](int k) { return m.coefficient(static_cast<std::size_t>(k)); };
  std::vector<Rational> s(count, Rational(0));
  if (count == 0) return s;
  s[0] = d;
  for (std::size_t k = 1; k < count; ++k) {
    Rational acc(0);
    const int kk = static_cast<int>(k);
    for (int j = 1; j <= std::min(kk - 1, d); ++j) acc += c(d - j) * s[k - static_cast<std::size_t>(j)];
    if (kk <= d) acc += c(d - kk) * kk;
    s[k] = -acc;
  }
  return s;
}

}  // namespace

bool real_rooted_by_hermite(const UniPoly& f) {
  if (f.is_zero()) throw DomainError("real-rootedness of the zero polynomial");
  const int d = f.degree();
  if (d <= 1) return true;
  const auto s = power_sums(f, static_cast<std::size_t>(2 * d - 1));
  DenseMatrix<GaussianRational> hankel(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) hankel(i, j) = GaussianRational(s[static_cast<std::size_t>(i + j)]);
  }
  return inertia(hankel).negative == 0;
}

bool interlaces_by_bezoutian(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("interlacing test of the zero polynomial");
  if (g.degree() != f.degree() - 1) throw DomainError("interlacing needs deg g = deg f - 1");
  if (!real_rooted_by_hermite(f) || !real_rooted_by_hermite(g)) return false;
  const int n = f.degree();
  // (f(s) g(t) - f(t) g(s)) / (s - t) = sum B_ij s^i t^j.
  DenseMatrix<GaussianRational> bez = DenseMatrix<GaussianRational>::Zero(n, n);
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b < a; ++b) {
      const Rational w = f.coefficient(static_cast<std::size_t>(a)) * g.coefficient(static_cast<std::size_t>(b)) -
                         f.coefficient(static_cast<std::size_t>(b)) * g.coefficient(static_cast<std::size_t>(a));
      if (w == 0) continue;
      for (int k = 0; k < a - b; ++k) bez(b + k, a - 1 - k) += GaussianRational(w);
    }
  }
  const Inertia in = inertia(bez);
  return in.positive == 0 || in.negative == 0;
}

}  // namespace hypcert
