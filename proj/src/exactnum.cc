#include "gasing/exactnum.h"

#include <array>

#include "gasing/errors.h"

namespace gasing {
namespace {

// Smallest prime factor of n > 1.
Integer smallest_prime_factor(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  Integer p = 3;
  while (p * p <= n) {
    if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) return p;
    p += 2;
  }
  return n;
}

Integer isqrt(const Integer& n) {
  Integer root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

}  // namespace

std::string to_string(const Rational& q) { return q.get_str(); }

SquarefreeSplit squarefree_split(const Integer& n) {
  if (n <= 0) throw DomainError("squarefree_split requires a positive integer");
  SquarefreeSplit out{1, 1};
  Integer rest = n;
  auto take = [&](const Integer& p) {
    unsigned exponent = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++exponent;
    }
    for (unsigned i = 0; i < exponent / 2; ++i) out.square *= p;
    if (exponent % 2 == 1) out.core *= p;
  };
  take(2);
  for (Integer p = 3; p * p <= rest; p += 2) take(p);
  if (rest > 1) out.core *= rest;
  return out;
}

ExactReal::ExactReal(long value) : ExactReal(Rational(value)) {}

ExactReal::ExactReal(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q != 0) terms_.emplace(Integer(1), q);
}

ExactReal ExactReal::radical(const Rational& coefficient,
                             const Integer& radicand) {
  if (radicand < 0) throw DomainError("negative radicand");
  ExactReal out;
  if (radicand == 0 || coefficient == 0) return out;
  const SquarefreeSplit split = squarefree_split(radicand);
  out.add_term(split.core, coefficient * Rational(split.square));
  return out;
}

void ExactReal::add_term(const Integer& radicand, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(radicand, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

bool ExactReal::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

std::optional<Rational> ExactReal::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (is_rational()) return terms_.begin()->second;
  return std::nullopt;
}

ExactReal ExactReal::operator-() const {
  ExactReal out = *this;
  for (auto& [radicand, coefficient] : out.terms_) coefficient = -coefficient;
  return out;
}

ExactReal& ExactReal::operator+=(const ExactReal& other) {
  for (const auto& [radicand, coefficient] : other.terms_)
    add_term(radicand, coefficient);
  return *this;
}

ExactReal& ExactReal::operator-=(const ExactReal& other) {
  for (const auto& [radicand, coefficient] : other.terms_)
    add_term(radicand, -coefficient);
  return *this;
}

ExactReal& ExactReal::operator*=(const ExactReal& other) {
  ExactReal product;
  for (const auto& [m1, q1] : terms_) {
    for (const auto& [m2, q2] : other.terms_) {
      // sqrt(m1)*sqrt(m2) = g*sqrt((m1/g)*(m2/g)) with g = gcd(m1, m2); the
      // cofactors are coprime and squarefree, so their product is too.
      const Integer g = gcd(m1, m2);
      const Integer core = (m1 / g) * (m2 / g);
      product.add_term(core, q1 * q2 * Rational(g));
    }
  }
  terms_ = std::move(product.terms_);
  return *this;
}

ExactReal& ExactReal::operator/=(const ExactReal& other) {
  return *this *= other.inverse();
}

ExactReal ExactReal::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  ExactReal numerator(1);
  ExactReal denominator = *this;
  while (!denominator.is_rational()) {
    Integer radicand = 1;
    for (const auto& [m, q] : denominator.terms_) {
      if (m != 1) {
        radicand = m;
        break;
      }
    }
    const Integer p = smallest_prime_factor(radicand);
    // Write denominator = u + v*sqrt(p); multiplying by u - v*sqrt(p) leaves
    // u^2 - p*v^2, in which p no longer divides any radicand.
    ExactReal conjugate = denominator;
    for (auto& [m, q] : conjugate.terms_) {
      if (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) q = -q;
    }
    numerator *= conjugate;
    denominator *= conjugate;
    if (denominator.is_zero())
      throw ArithmeticError("conjugation produced zero; input was zero");
  }
  const Rational scale = 1 / *denominator.as_rational();
  return numerator * ExactReal(scale);
}

std::string ExactReal::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [radicand, coefficient] : terms_) {
    const bool negative = coefficient < 0;
    const Rational magnitude = abs(coefficient);
    std::string body;
    if (radicand == 1) {
      body = to_string(magnitude);
    } else {
      const Integer& num = magnitude.get_num();
      const Integer& den = magnitude.get_den();
      if (num != 1) body = num.get_str() + "*";
      body += "sqrt(" + radicand.get_str() + ")";
      if (den != 1) body += "/" + den.get_str();
    }
    if (first) {
      out = (negative ? "-" : "") + body;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

int ExactReal::sign() const {
  const auto order = compare(*this, ExactReal());
  if (order == std::strong_ordering::less) return -1;
  if (order == std::strong_ordering::greater) return 1;
  return 0;
}

ExactReal sqrt_of(const Rational& n) {
  if (n < 0) throw DomainError("sqrt_of: negative argument " + to_string(n));
  if (n == 0) return ExactReal();
  // sqrt(p/q) = sqrt(p*q)/q
  const Integer& p = n.get_num();
  const Integer& q = n.get_den();
  return ExactReal::radical(1 / Rational(q), p * q);
}

ExactReal arith(const ExactReal& a, const ExactReal& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add:
      return a + b;
    case ArithOp::Sub:
      return a - b;
    case ArithOp::Mul:
      return a * b;
    case ArithOp::Div:
      return a / b;
  }
  throw ArithmeticError("unknown operation");
}

RationalInterval enclose(const ExactReal& a, unsigned bits) {
  Integer scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits);
  RationalInterval out{0, 0};
  for (const auto& [radicand, coefficient] : a.terms()) {
    if (radicand == 1) {
      out.lo += coefficient;
      out.hi += coefficient;
      continue;
    }
    const Integer root = isqrt(radicand * scale * scale);
    Rational lo(root, scale);
    Rational hi(root + 1, scale);
    lo.canonicalize();
    hi.canonicalize();
    if (coefficient > 0) {
      out.lo += coefficient * lo;
      out.hi += coefficient * hi;
    } else {
      out.lo += coefficient * hi;
      out.hi += coefficient * lo;
    }
  }
  return out;
}

std::strong_ordering compare(const ExactReal& a, const ExactReal& b) {
  const ExactReal difference = a - b;
  if (difference.is_zero()) return std::strong_ordering::equal;
  if (auto q = difference.as_rational()) {
    return *q > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  for (unsigned bits = 32; bits <= 256; bits *= 2) {
    const RationalInterval interval = enclose(difference, bits);
    if (interval.lo > 0) return std::strong_ordering::greater;
    if (interval.hi < 0) return std::strong_ordering::less;
  }
  throw ArithmeticError("compare: sign undetermined at 256 bits for " +
                        difference.str());
}

double to_float(const ExactReal& a) {
  if (auto q = a.as_rational()) return q->get_d();
  const RationalInterval interval = enclose(a, 128);
  const Rational mid = (interval.lo + interval.hi) / 2;
  return mid.get_d();
}

std::optional<ExactReal> try_sqrt(const ExactReal& a) {
  if (a.is_zero()) return ExactReal();
  if (a.sign() < 0) throw DomainError("square root of negative value " + a.str());
  if (auto q = a.as_rational()) return sqrt_of(*q);

  // p + q*sqrt(m): sqrt = sqrt((p+d)/2) + sign(q)*sqrt((p-d)/2), d^2 = p^2 - q^2 m
  Rational p = 0, q = 0;
  Integer m = 0;
  for (const auto& [radicand, coefficient] : a.terms()) {
    if (radicand == 1) {
      p = coefficient;
    } else if (m == 0) {
      m = radicand;
      q = coefficient;
    } else {
      return std::nullopt;
    }
  }
  const Rational d_squared = p * p - q * q * Rational(m);
  if (d_squared < 0) return std::nullopt;
  const ExactReal d = sqrt_of(d_squared);
  const auto d_rational = d.as_rational();
  if (!d_rational) return std::nullopt;
  const Rational x = (p + *d_rational) / 2;
  const Rational y = (p - *d_rational) / 2;
  if (x < 0 || y < 0) return std::nullopt;
  ExactReal candidate = sqrt_of(x);
  candidate += q > 0 ? sqrt_of(y) : -sqrt_of(y);
  if (candidate.sign() < 0 || candidate * candidate != a) return std::nullopt;
  return candidate;
}

}  // namespace gasing
