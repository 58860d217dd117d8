#include "poincare/radical_scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace poincare {

namespace {

std::uint64_t to_u64(const BigInt& n) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "LP64 target expected");
  if (sgn(n) < 0 || !n.fits_ulong_p()) {
    throw std::overflow_error("radicand does not fit in 64 bits: " + n.get_str());
  }
  return static_cast<std::uint64_t>(n.get_ui());
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// Product of two squarefree radicands: d1·d2 = g²·core with g = gcd(d1, d2).
std::pair<std::uint64_t, std::uint64_t> multiply_radicands(std::uint64_t d1, std::uint64_t d2) {
  const std::uint64_t g = gcd_u64(d1, d2);
  const unsigned __int128 core = static_cast<unsigned __int128>(d1 / g) * (d2 / g);
  if (core > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("radicand product overflows 64 bits");
  }
  return {g, static_cast<std::uint64_t>(core)};
}

std::string rational_str(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

}  // namespace

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::pair<BigInt, BigInt> normalize_radical(const BigInt& n) {
  if (sgn(n) < 0) throw std::domain_error("normalize_radical of a negative integer");
  if (n == 0) return {BigInt(0), BigInt(1)};
  BigInt rest = n;
  BigInt outside = 1;
  BigInt core = 1;
  for (BigInt p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    unsigned multiplicity = 0;
    while (rest % p == 0) {
      rest /= p;
      ++multiplicity;
    }
    for (unsigned k = 0; k < multiplicity / 2; ++k) outside *= p;
    if (multiplicity % 2 == 1) core *= p;
  }
  core *= rest;
  return {outside, core};
}

RadicalScalar::RadicalScalar(long value) : RadicalScalar(Rational(value)) {}

RadicalScalar::RadicalScalar(const Rational& value) { push_term(1, value, Rational(0)); }

RadicalScalar RadicalScalar::complex(const Rational& re, const Rational& im) {
  RadicalScalar out;
  out.push_term(1, re, im);
  return out;
}

RadicalScalar RadicalScalar::imaginary_unit() { return complex(0, 1); }

RadicalScalar RadicalScalar::radical(const BigInt& radicand, const Rational& coefficient) {
  const auto [outside, core] = normalize_radical(radicand);
  RadicalScalar out;
  out.push_term(to_u64(core), coefficient * outside, Rational(0));
  return out;
}

RadicalScalar RadicalScalar::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.radicand < b.radicand; });
  RadicalScalar out;
  for (auto& t : terms) {
    if (t.radicand == 0) throw std::invalid_argument("radicand must be positive");
    const auto [outside, core] = normalize_radical(BigInt(static_cast<unsigned long>(t.radicand)));
    if (outside != 1) {
      throw std::invalid_argument("radicand " + std::to_string(t.radicand) + " is not squarefree");
    }
    out.push_term(t.radicand, std::move(t.re), std::move(t.im));
  }
  return out;
}

// Appends to a list already sorted by radicand, merging equal keys.
// mpq_class(num, den) does not reduce, so every coefficient is canonicalized
// here; GMP arithmetic on canonical operands stays canonical.
void RadicalScalar::push_term(std::uint64_t radicand, Rational re, Rational im) {
  re.canonicalize();
  im.canonicalize();
  if (!terms_.empty() && terms_.back().radicand == radicand) {
    auto& back = terms_.back();
    back.re += re;
    back.im += im;
    if (sgn(back.re) == 0 && sgn(back.im) == 0) terms_.pop_back();
    return;
  }
  if (sgn(re) == 0 && sgn(im) == 0) return;
  terms_.push_back({radicand, std::move(re), std::move(im)});
}

bool RadicalScalar::is_monomial() const { return terms_.size() == 1; }

RadicalScalar RadicalScalar::conj() const {
  RadicalScalar out = *this;
  for (auto& t : out.terms_) t.im = -t.im;
  return out;
}

RadicalScalar RadicalScalar::times_i() const {
  RadicalScalar out = *this;
  for (auto& t : out.terms_) {
    Rational re = -t.im;
    t.im = t.re;
    t.re = std::move(re);
  }
  return out;
}

std::complex<double> RadicalScalar::to_complex() const {
  std::complex<double> sum = 0.0;
  for (const auto& t : terms_) {
    const double root = std::sqrt(static_cast<double>(t.radicand));
    sum += std::complex<double>(t.re.get_d(), t.im.get_d()) * root;
  }
  return sum;
}

RadicalScalar RadicalScalar::divided_by(const RadicalScalar& divisor) const {
  if (!divisor.is_monomial()) {
    throw std::domain_error("division only by a single radical term, got " + divisor.to_string());
  }
  // 1 / ((p + iq)√d) = (p - iq)√d / ((p² + q²) d)
  const Term& t = divisor.terms_.front();
  const Rational norm = (t.re * t.re + t.im * t.im) * Rational(BigInt(static_cast<unsigned long>(t.radicand)));
  RadicalScalar inverse;
  inverse.push_term(t.radicand, t.re / norm, -t.im / norm);
  return *this * inverse;
}

RadicalScalar& RadicalScalar::operator+=(const RadicalScalar& rhs) {
  if (rhs.terms_.empty()) return *this;
  if (terms_.empty()) return *this = rhs;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->radicand < b->radicand)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->radicand < a->radicand) {
      merged.push_back(*b++);
    } else {
      Term t{a->radicand, a->re + b->re, a->im + b->im};
      if (sgn(t.re) != 0 || sgn(t.im) != 0) merged.push_back(std::move(t));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

RadicalScalar& RadicalScalar::operator-=(const RadicalScalar& rhs) { return *this += -rhs; }

RadicalScalar RadicalScalar::operator-() const {
  RadicalScalar out = *this;
  for (auto& t : out.terms_) {
    t.re = -t.re;
    t.im = -t.im;
  }
  return out;
}

RadicalScalar operator*(const RadicalScalar& lhs, const RadicalScalar& rhs) {
  if (lhs.terms_.empty() || rhs.terms_.empty()) return {};
  std::vector<RadicalScalar::Term> products;
  products.reserve(lhs.terms_.size() * rhs.terms_.size());
  for (const auto& x : lhs.terms_) {
    for (const auto& y : rhs.terms_) {
      const auto [outside, core] = multiply_radicands(x.radicand, y.radicand);
      Rational re = x.re * y.re - x.im * y.im;
      Rational im = x.re * y.im + x.im * y.re;
      if (outside != 1) {
        const Rational factor(static_cast<unsigned long>(outside));
        re *= factor;
        im *= factor;
      }
      products.push_back({core, std::move(re), std::move(im)});
    }
  }
  std::stable_sort(products.begin(), products.end(),
                   [](const auto& a, const auto& b) { return a.radicand < b.radicand; });
  RadicalScalar out;
  for (auto& t : products) out.push_term(t.radicand, std::move(t.re), std::move(t.im));
  return out;
}

RadicalScalar& RadicalScalar::operator*=(const RadicalScalar& rhs) { return *this = *this * rhs; }

RadicalScalar& RadicalScalar::operator/=(const Rational& rhs) {
  if (sgn(rhs) == 0) throw std::domain_error("division by zero");
  for (auto& t : terms_) {
    t.re /= rhs;
    t.im /= rhs;
  }
  return *this;
}

std::string RadicalScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool real = sgn(t.im) == 0;
    const bool imag = sgn(t.re) == 0;
    const std::string root = t.radicand == 1 ? "" : "√" + std::to_string(t.radicand);
    std::string body;
    bool negative = false;
    if (real || imag) {
      Rational c = real ? t.re : t.im;
      negative = sgn(c) < 0;
      if (negative) c = -c;
      const std::string unit = imag ? "i" : "";
      if (c == 1 && !(unit.empty() && root.empty())) {
        body = unit + root;
      } else if (c.get_den() == 1) {
        body = c.get_num().get_str() + unit + root;
      } else {
        body = (unit.empty() && root.empty()) ? c.get_str() : "(" + c.get_str() + ")" + unit + root;
      }
    } else {
      const std::string im_part = sgn(t.im) < 0 ? " - " + rational_str(-t.im) : " + " + rational_str(t.im);
      body = "(" + rational_str(t.re) + im_part + "i)" + root;
    }
    if (first) {
      out << (negative ? "-" : "") << body;
    } else {
      out << (negative ? " - " : " + ") << body;
    }
    first = false;
  }
  return out.str();
}

RadicalScalar sqrt_of_rational(const Rational& x) {
  if (sgn(x) < 0) throw std::domain_error("square root of a negative rational " + x.get_str());
  if (sgn(x) == 0) return {};
  Rational reduced = x;
  reduced.canonicalize();
  const BigInt& p = reduced.get_num();
  const BigInt& q = reduced.get_den();
  return RadicalScalar::radical(p * q, Rational(1, 1) / Rational(q));
}

namespace {

class LiteralParser {
 public:
  explicit LiteralParser(const std::string& text) : text_(text) {}

  RadicalScalar parse() {
    const RadicalScalar value = sum();
    skip_space();
    if (!at_end()) fail("unexpected character");
    return value;
  }

 private:
  static inline const std::string kRoot = "\u221A";

  RadicalScalar sum() {
    RadicalScalar total;
    skip_space();
    if (at_end()) fail("empty literal");
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = get() == '-';
    total += signed_term(negative);
    while (true) {
      skip_space();
      if (at_end() || (peek() != '+' && peek() != '-')) break;
      total += signed_term(get() == '-');
    }
    return total;
  }

  RadicalScalar sum_until_close() {
    const RadicalScalar inner = sum();
    skip_space();
    if (at_end() || get() != ')') fail("expected ')'");
    return inner;
  }

  // Factors join with '*' or by juxtaposition, as in "(1/2)√2" or "3i".
  RadicalScalar signed_term(bool negative) {
    RadicalScalar term = factor();
    while (true) {
      skip_space();
      if (at_end()) break;
      if (peek() == '*') {
        get();
      } else if (!starts_factor()) {
        break;
      }
      term *= factor();
    }
    return negative ? -term : term;
  }

  bool starts_factor() const {
    const char c = peek();
    return c == '(' || c == 'i' || c == 's' || std::isdigit(static_cast<unsigned char>(c)) ||
           text_.compare(pos_, kRoot.size(), kRoot) == 0;
  }

  RadicalScalar factor() {
    skip_space();
    if (at_end()) fail("missing factor");
    if (peek() == '(') {
      get();
      const RadicalScalar inner = sum_until_close();
      return inner;
    }
    if (peek() == 'i') {
      get();
      return RadicalScalar::imaginary_unit();
    }
    if (text_.compare(pos_, kRoot.size(), kRoot) == 0) {
      pos_ += kRoot.size();
      return RadicalScalar::radical(integer());
    }
    if (text_.compare(pos_, 5, "sqrt(") == 0) {
      pos_ += 5;
      const BigInt n = integer();
      skip_space();
      if (at_end() || get() != ')') fail("expected ')'");
      return RadicalScalar::radical(n);
    }
    BigInt num = integer();
    skip_space();
    if (!at_end() && peek() == '/') {
      get();
      const BigInt den = integer();
      if (den == 0) fail("zero denominator");
      return make_rational(num, den);
    }
    return Rational(num);
  }

  BigInt integer() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    return BigInt(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("bad radical literal '" + text_ + "' at " + std::to_string(pos_) +
                                ": " + why);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

RadicalScalar parse_radical(const std::string& text) { return LiteralParser(text).parse(); }

}  // namespace poincare
