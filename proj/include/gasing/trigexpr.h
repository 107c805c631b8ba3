#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gasing/exactnum.h"

namespace gasing {

struct AngleSymbol {
  std::string name;
  friend auto operator<=>(const AngleSymbol&, const AngleSymbol&) = default;
};

// Length indeterminates carry side lengths such as a, b, c of an oblique
// triangle; they take part in the ring but not in the Pythagorean relations.
enum class VarKind { Cos, Sin, Length };

struct Variable {
  std::string name;
  VarKind kind;

  static Variable cos(const std::string& angle) { return {angle, VarKind::Cos}; }
  static Variable sin(const std::string& angle) { return {angle, VarKind::Sin}; }
  static Variable length(const std::string& name) {
    return {name, VarKind::Length};
  }
  bool is_trig() const { return kind != VarKind::Length; }
  std::string str() const;
  friend bool operator==(const Variable&, const Variable&) = default;
};

// Strict order where the "larger" variable comes first: names ascending, and
// for one name cos > sin > length.
struct VariableRank {
  bool operator()(const Variable& a, const Variable& b) const;
};

class TrigMonomial {
 public:
  using Exponents = std::map<Variable, unsigned, VariableRank>;

  TrigMonomial() = default;
  explicit TrigMonomial(const Variable& v, unsigned exponent = 1);

  const Exponents& exponents() const { return exponents_; }
  unsigned degree(const Variable& v) const;
  bool is_one() const { return exponents_.empty(); }

  TrigMonomial operator*(const TrigMonomial& other) const;
  bool divides(const TrigMonomial& other) const;
  // Requires divides(other).
  TrigMonomial quotient_of(const TrigMonomial& other) const;
  static TrigMonomial gcd(const TrigMonomial& a, const TrigMonomial& b);

  std::string str() const;
  friend bool operator==(const TrigMonomial&, const TrigMonomial&) = default;

 private:
  Exponents exponents_;
};

// Lexicographic order; operator() is "a > b" so maps iterate leading term first.
struct MonomialGreater {
  bool operator()(const TrigMonomial& a, const TrigMonomial& b) const;
};

class TrigPoly {
 public:
  using Terms = std::map<TrigMonomial, ExactReal, MonomialGreater>;

  TrigPoly() = default;
  TrigPoly(const ExactReal& constant);  // NOLINT(google-explicit-constructor)
  TrigPoly(long constant) : TrigPoly(ExactReal(constant)) {}  // NOLINT
  explicit TrigPoly(const Variable& v);
  TrigPoly(const TrigMonomial& m, const ExactReal& coefficient);

  static TrigPoly sin(const std::string& angle) {
    return TrigPoly(Variable::sin(angle));
  }
  static TrigPoly cos(const std::string& angle) {
    return TrigPoly(Variable::cos(angle));
  }
  static TrigPoly length(const std::string& name) {
    return TrigPoly(Variable::length(name));
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<ExactReal> constant_value() const;
  // Requires !is_zero().
  const std::pair<const TrigMonomial, ExactReal>& leading() const {
    return *terms_.begin();
  }
  std::size_t size() const { return terms_.size(); }
  std::set<std::string> angles() const;
  std::set<std::string> lengths() const;

  TrigPoly operator-() const;
  TrigPoly& operator+=(const TrigPoly& other);
  TrigPoly& operator-=(const TrigPoly& other);
  TrigPoly& operator*=(const TrigPoly& other);
  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
  friend TrigPoly operator*(TrigPoly a, const TrigPoly& b) { return a *= b; }
  friend bool operator==(const TrigPoly& a, const TrigPoly& b) {
    return a.terms_ == b.terms_;
  }

  TrigPoly pow(unsigned exponent) const;
  TrigPoly scaled(const ExactReal& factor) const;
  TrigPoly substitute(const std::map<std::string, TrigPoly>& by_var_str) const;
  TrigPoly substitute(const Variable& v, const TrigPoly& replacement) const;

  std::string str() const;

 private:
  void add_term(const TrigMonomial& m, const ExactReal& coefficient);
  Terms terms_;
};

struct PolyDivision {
  TrigPoly quotient;
  TrigPoly remainder;
};

// Division by a single polynomial under the lex order. Since {divisor} is a
// Groebner basis of the principal ideal it generates, the remainder is zero
// exactly when divisor divides dividend.
PolyDivision divide(const TrigPoly& dividend, const TrigPoly& divisor);

/// Quotient num/den of free-ring polynomials. Equality is cross
/// multiplication; the pair is not required to be reduced.
class TrigRational {
 public:
  TrigRational() : num_(), den_(1) {}
  TrigRational(const TrigPoly& num);  // NOLINT(google-explicit-constructor)
  TrigRational(const ExactReal& c) : TrigRational(TrigPoly(c)) {}  // NOLINT
  TrigRational(long c) : TrigRational(TrigPoly(c)) {}  // NOLINT
  // Throws ArithmeticError when den is the zero polynomial.
  TrigRational(const TrigPoly& num, const TrigPoly& den);

  const TrigPoly& num() const { return num_; }
  const TrigPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == TrigPoly(1); }
  std::set<std::string> angles() const;

  // Folds constant denominators, cancels exact quotients and common monomial
  // factors, and makes the denominator monic.
  TrigRational normalized() const;

  TrigRational operator-() const;
  friend TrigRational operator+(const TrigRational& a, const TrigRational& b);
  friend TrigRational operator-(const TrigRational& a, const TrigRational& b);
  friend TrigRational operator*(const TrigRational& a, const TrigRational& b);
  // Throws ArithmeticError when b is structurally zero.
  friend TrigRational operator/(const TrigRational& a, const TrigRational& b);

  TrigRational pow(unsigned exponent) const;
  TrigRational substitute(const Variable& v, const TrigPoly& replacement) const;

  std::string str() const;

 private:
  TrigPoly num_;
  TrigPoly den_;
};

bool expr_equals(const TrigRational& a, const TrigRational& b);

struct SideCondition {
  enum class Kind { NonZero, Positive, LessThan };
  Kind kind;
  TrigRational subject;
  std::optional<TrigRational> bound;

  static SideCondition nonzero(const TrigRational& e) {
    return {Kind::NonZero, e, std::nullopt};
  }
  static SideCondition positive(const TrigRational& e) {
    return {Kind::Positive, e, std::nullopt};
  }
  static SideCondition less_than(const TrigRational& e, const TrigRational& b) {
    return {Kind::LessThan, e, b};
  }
  std::string str() const;
};

// Ordered, duplicate-free collection of side conditions.
class ConditionSet {
 public:
  void add(const SideCondition& c);
  void merge(const ConditionSet& other);
  const std::vector<SideCondition>& items() const { return items_; }
  std::vector<SideCondition>::const_iterator begin() const {
    return items_.begin();
  }
  std::vector<SideCondition>::const_iterator end() const {
    return items_.end();
  }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  bool contains(const std::string& rendered) const;

 private:
  std::vector<SideCondition> items_;
};

// Records nonzero(e) for each non-constant factor of e's numerator and
// denominator; used whenever a derivation divides by or scales with e.
void require_nonzero(const TrigRational& e, ConditionSet& conditions);

/// Arithmetic on quotients; division appends nonzero side conditions.
TrigRational poly_arith(const TrigRational& a, const TrigRational& b,
                        ArithOp op, ConditionSet* conditions = nullptr);

// --- Pythagorean relations -------------------------------------------------

/// cos(angle)^2 + sin(angle)^2 - 1
TrigPoly pythagorean_generator(const std::string& angle);

struct Reduction {
  TrigPoly remainder;
  std::map<std::string, TrigPoly> cofactors;
};

/// Rewrites every cos_i^2 as 1 - sin_i^2, recording the multiples of each
/// generator removed. Throws CircularityError inside a FreeModeScope.
Reduction ideal_reduce(const TrigPoly& p);

/// remainder + sum cofactor_i * generator_i
TrigPoly recompose(const TrigPoly& remainder,
                   const std::map<std::string, TrigPoly>& cofactors);

std::optional<std::map<std::string, TrigPoly>> membership_certificate(
    const TrigPoly& p);

// While any FreeModeScope is alive on the current thread, ideal_reduce is
// forbidden; an attempt trips a process-wide flag and throws.
class FreeModeScope {
 public:
  FreeModeScope();
  ~FreeModeScope();
  FreeModeScope(const FreeModeScope&) = delete;
  FreeModeScope& operator=(const FreeModeScope&) = delete;
};
bool in_free_mode();
bool circularity_tripped();
void reset_circularity_flag();
std::size_t ideal_reduce_invocations();

// --- Series ----------------------------------------------------------------

struct GeometricSeries {
  TrigRational closed;
  ConditionSet conditions;
};

/// first * (1 + ratio + ratio^2 + ...) = first / (1 - ratio), recording the
/// convergence assumption ratio < 1.
GeometricSeries sum_geometric(const TrigRational& first,
                              const TrigRational& ratio);

// --- Evaluation ------------------------------------------------------------

struct Assignment {
  std::map<std::string, double> angles;   // radians
  std::map<std::string, double> lengths;

  double value(const Variable& v) const;
};

double eval_numeric(const TrigPoly& p, const Assignment& at);
/// Throws EvaluationError when |denominator| <= 1e-12.
double eval_numeric(const TrigRational& e, const Assignment& at);

/// Substitutes exact values for every variable; throws DomainError when a
/// variable has no value and ArithmeticError when the denominator vanishes.
ExactReal eval_exact(const TrigRational& e,
                     const std::map<std::string, ExactReal>& value_by_var_str);

/// Numeric check of a side condition with a safety margin.
bool holds(const SideCondition& c, const Assignment& at, double margin = 0.0);

}  // namespace gasing
