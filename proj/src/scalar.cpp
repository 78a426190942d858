#include "hypcert/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <optional>
#include <ostream>

namespace hypcert {

Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  }
  return out;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isdigit(static_cast<unsigned char>(ch)) != 0;
  });
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("malformed integer literal '" + std::string(s) + "'");
  Integer value{std::string(s)};
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string s = strip_spaces(text);
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s));
  const Integer num = parse_integer(std::string_view(s).substr(0, slash));
  const std::string_view den_text = std::string_view(s).substr(slash + 1);
  if (!all_digits(den_text)) throw ParseError("malformed rational literal '" + s + "'");
  const Integer den = parse_integer(den_text);
  if (den == 0) throw ParseError("zero denominator in '" + s + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (im_ == 0 && o.im_ == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  if (o.im_ == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const Rational n = o.norm();
  *this *= conj(o);
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string to_string(const GaussianRational& z) {
  if (z.is_real()) return to_string(z.real());
  std::string im;
  if (z.imag() == 1) {
    im = "i";
  } else if (z.imag() == -1) {
    im = "-i";
  } else {
    im = to_string(z.imag()) + "*i";
  }
  if (z.real() == 0) return im;
  if (im.front() == '-') return to_string(z.real()) + im;
  return to_string(z.real()) + "+" + im;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << to_string(z); }

namespace {

Rational parse_imaginary_part(std::string_view s) {
  // s ends with 'i'; accepted shapes: "i", "-i", "+i", "q*i".
  s.remove_suffix(1);
  if (s.empty() || s == "+") return Rational(1);
  if (s == "-") return Rational(-1);
  if (s.back() != '*') throw ParseError("malformed imaginary part");
  s.remove_suffix(1);
  return parse_rational(s);
}

}  // namespace

GaussianRational parse_gaussian(std::string_view text) {
  std::string s = strip_spaces(text);
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw ParseError("empty scalar");
  if (s.back() != 'i') return GaussianRational(parse_rational(s));
  // Split at the last sign that is not leading and does not follow '*'.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '*' && s[k - 1] != '/') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {Rational(0), parse_imaginary_part(s)};
  return {parse_rational(std::string_view(s).substr(0, split)),
          parse_imaginary_part(std::string_view(s).substr(split))};
}

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

Integer isqrt(const Integer& n) { return boost::multiprecision::sqrt(n); }

template <typename Int>
bool is_square(const Int& n, Int& root) {
  root = isqrt(n);
  return root * root == n;
}

/// Legendre: n is a sum of three squares iff n is not 4^a (8b + 7).
template <typename Int>
bool is_three_square_representable(Int n) {
  if (n == 0) return true;
  while (n % 4 == 0) n /= 4;
  return n % 8 != 7;
}

template <typename Int>
std::optional<std::array<Int, 2>> two_squares(const Int& n) {
  Int reduced = n;
  while (reduced != 0 && reduced % 4 == 0) reduced /= 4;
  if (reduced % 4 == 3) return std::nullopt;
  for (Int a = isqrt(n); 2 * a * a >= n; --a) {
    Int b;
    if (is_square(Int(n - a * a), b)) return std::array<Int, 2>{a, b};
    if (a == 0) break;
  }
  return std::nullopt;
}

template <typename Int>
std::optional<std::array<Int, 3>> three_squares(const Int& n) {
  if (!is_three_square_representable(n)) return std::nullopt;
  for (Int a = isqrt(n); 3 * a * a >= n; --a) {
    if (auto rest = two_squares(Int(n - a * a))) {
      std::array<Int, 3> out{a, (*rest)[0], (*rest)[1]};
      std::sort(out.begin(), out.end(), std::greater<>());
      return out;
    }
    if (a == 0) break;
  }
  throw InternalError("three-square search failed for a representable integer");
}

template <typename Int>
std::array<Int, 4> four_squares(const Int& n) {
  Int root;
  if (is_square(n, root)) return {root, 0, 0, 0};
  if (auto two = two_squares(n)) return {(*two)[0], (*two)[1], 0, 0};
  if (auto three = three_squares(n)) return {(*three)[0], (*three)[1], (*three)[2], 0};
  for (Int a = isqrt(n);; --a) {
    if (auto rest = three_squares(Int(n - a * a))) {
      std::array<Int, 4> out{a, (*rest)[0], (*rest)[1], (*rest)[2]};
      std::sort(out.begin(), out.end(), std::greater<>());
      return out;
    }
    if (a == 0) break;
  }
  throw InternalError("four-square search failed");
}

}  // namespace

std::array<Integer, 4> four_square_decompose_integer(const Integer& n) {
  if (n < 0) throw DomainError("four-square decomposition needs a nonnegative integer");
  constexpr std::uint64_t kFastLimit = std::uint64_t{1} << 60;
  if (n < kFastLimit) {
    const auto small = four_squares<std::uint64_t>(n.convert_to<std::uint64_t>());
    return {Integer(small[0]), Integer(small[1]), Integer(small[2]), Integer(small[3])};
  }
  return four_squares<Integer>(n);
}

std::array<Rational, 4> four_square_decompose(const Rational& c) {
  if (c <= 0) throw DomainError("four-square decomposition needs a positive rational, got " + to_string(c));
  const Integer u = numerator(c);
  const Integer v = denominator(c);
  const auto ints = four_square_decompose_integer(u * v);
  std::array<Rational, 4> out;
  for (std::size_t k = 0; k < 4; ++k) out[k] = Rational(ints[k], v);
  return out;
}

}  // namespace hypcert
