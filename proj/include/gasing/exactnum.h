#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <string>

namespace gasing {

using Integer = mpz_class;
using Rational = mpq_class;

enum class ArithOp { Add, Sub, Mul, Div };

/// Element of Q(sqrt(2), sqrt(3), sqrt(5), ...): a finite sum of rational
/// multiples of square roots of squarefree positive integers.
///
/// The representation is canonical. Every key is squarefree, no stored
/// coefficient is zero, and radicand 1 holds the rational part, so two values
/// are equal exactly when their term maps are equal.
class ExactReal {
 public:
  using Terms = std::map<Integer, Rational>;

  ExactReal() = default;
  ExactReal(long value);  // NOLINT(google-explicit-constructor)
  ExactReal(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// coefficient * sqrt(radicand); radicand need not be squarefree.
  static ExactReal radical(const Rational& coefficient, const Integer& radicand);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  std::optional<Rational> as_rational() const;
  // Number of stored terms; 0 for zero.
  std::size_t size() const { return terms_.size(); }

  ExactReal operator-() const;
  ExactReal& operator+=(const ExactReal& other);
  ExactReal& operator-=(const ExactReal& other);
  ExactReal& operator*=(const ExactReal& other);
  ExactReal& operator/=(const ExactReal& other);

  friend ExactReal operator+(ExactReal a, const ExactReal& b) { return a += b; }
  friend ExactReal operator-(ExactReal a, const ExactReal& b) { return a -= b; }
  friend ExactReal operator*(ExactReal a, const ExactReal& b) { return a *= b; }
  friend ExactReal operator/(ExactReal a, const ExactReal& b) { return a /= b; }
  friend bool operator==(const ExactReal& a, const ExactReal& b) {
    return a.terms_ == b.terms_;
  }

  /// Multiplicative inverse by repeated conjugation, one prime at a time.
  ExactReal inverse() const;

  /// Text form "a + b*sqrt(m)", terms ordered by radicand.
  std::string str() const;

  /// Exactly representable sign: -1, 0 or +1.
  int sign() const;

 private:
  void add_term(const Integer& radicand, const Rational& coefficient);

  Terms terms_;
};

/// sqrt(n) in canonical form. Throws DomainError for n < 0.
ExactReal sqrt_of(const Rational& n);

ExactReal arith(const ExactReal& a, const ExactReal& b, ArithOp op);

/// Exact ordering. Structural zero test first, then interval evaluation of
/// a - b with precision doubling from 32 up to 256 bits.
std::strong_ordering compare(const ExactReal& a, const ExactReal& b);

inline std::strong_ordering operator<=>(const ExactReal& a,
                                        const ExactReal& b) {
  return compare(a, b);
}

double to_float(const ExactReal& a);

/// Square root inside the tower when one exists: rational arguments, and
/// p + q*sqrt(m) whose root denests. Returns nullopt when a nested radical
/// would be required. Throws DomainError for negative arguments.
std::optional<ExactReal> try_sqrt(const ExactReal& a);

/// Closed interval [lo, hi] containing a, with sqrt bounds taken at 2^-bits.
struct RationalInterval {
  Rational lo;
  Rational hi;
};
RationalInterval enclose(const ExactReal& a, unsigned bits);

// Squarefree decomposition n = square^2 * core for n > 0 (trial division).
struct SquarefreeSplit {
  Integer square;
  Integer core;
};
SquarefreeSplit squarefree_split(const Integer& n);

std::string to_string(const Rational& q);

}  // namespace gasing
