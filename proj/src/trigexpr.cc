#include "gasing/trigexpr.h"

#include <atomic>
#include <cmath>

#include "gasing/errors.h"

namespace gasing {

// --- Variables and monomials ----------------------------------------------

std::string Variable::str() const {
  switch (kind) {
    case VarKind::Cos:
      return "cos(" + name + ")";
    case VarKind::Sin:
      return "sin(" + name + ")";
    case VarKind::Length:
      return name;
  }
  return name;
}

bool VariableRank::operator()(const Variable& a, const Variable& b) const {
  if (a.name != b.name) return a.name < b.name;
  return static_cast<int>(a.kind) < static_cast<int>(b.kind);
}

TrigMonomial::TrigMonomial(const Variable& v, unsigned exponent) {
  if (exponent > 0) exponents_.emplace(v, exponent);
}

unsigned TrigMonomial::degree(const Variable& v) const {
  auto it = exponents_.find(v);
  return it == exponents_.end() ? 0 : it->second;
}

TrigMonomial TrigMonomial::operator*(const TrigMonomial& other) const {
  TrigMonomial out = *this;
  for (const auto& [v, e] : other.exponents_) out.exponents_[v] += e;
  return out;
}

bool TrigMonomial::divides(const TrigMonomial& other) const {
  for (const auto& [v, e] : exponents_) {
    if (other.degree(v) < e) return false;
  }
  return true;
}

TrigMonomial TrigMonomial::quotient_of(const TrigMonomial& other) const {
  TrigMonomial out = other;
  for (const auto& [v, e] : exponents_) {
    auto it = out.exponents_.find(v);
    it->second -= e;
    if (it->second == 0) out.exponents_.erase(it);
  }
  return out;
}

TrigMonomial TrigMonomial::gcd(const TrigMonomial& a, const TrigMonomial& b) {
  TrigMonomial out;
  for (const auto& [v, e] : a.exponents_) {
    const unsigned common = std::min(e, b.degree(v));
    if (common > 0) out.exponents_.emplace(v, common);
  }
  return out;
}

std::string TrigMonomial::str() const {
  if (exponents_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : exponents_) {
    if (!out.empty()) out += "*";
    out += v.str();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

bool MonomialGreater::operator()(const TrigMonomial& a,
                                 const TrigMonomial& b) const {
  const VariableRank rank;
  auto ia = a.exponents().begin(), ea = a.exponents().end();
  auto ib = b.exponents().begin(), eb = b.exponents().end();
  while (ia != ea && ib != eb) {
    if (ia->first == ib->first) {
      if (ia->second != ib->second) return ia->second > ib->second;
      ++ia;
      ++ib;
    } else {
      // The side holding the higher-ranked variable wins.
      return rank(ia->first, ib->first);
    }
  }
  return ia != ea && ib == eb;
}

// --- Polynomials ----------------------------------------------------------

TrigPoly::TrigPoly(const ExactReal& constant) {
  if (!constant.is_zero()) terms_.emplace(TrigMonomial(), constant);
}

TrigPoly::TrigPoly(const Variable& v) { terms_.emplace(TrigMonomial(v), 1); }

TrigPoly::TrigPoly(const TrigMonomial& m, const ExactReal& coefficient) {
  if (!coefficient.is_zero()) terms_.emplace(m, coefficient);
}

void TrigPoly::add_term(const TrigMonomial& m, const ExactReal& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool TrigPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::optional<ExactReal> TrigPoly::constant_value() const {
  if (terms_.empty()) return ExactReal();
  if (is_constant()) return terms_.begin()->second;
  return std::nullopt;
}

std::set<std::string> TrigPoly::angles() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m.exponents()) {
      if (v.is_trig()) out.insert(v.name);
    }
  }
  return out;
}

std::set<std::string> TrigPoly::lengths() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m.exponents()) {
      if (!v.is_trig()) out.insert(v.name);
    }
  }
  return out;
}

TrigPoly TrigPoly::operator-() const {
  TrigPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

TrigPoly& TrigPoly::operator*=(const TrigPoly& other) {
  TrigPoly product;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : other.terms_) product.add_term(m1 * m2, c1 * c2);
  }
  terms_ = std::move(product.terms_);
  return *this;
}

TrigPoly TrigPoly::pow(unsigned exponent) const {
  TrigPoly result(1);
  TrigPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

TrigPoly TrigPoly::scaled(const ExactReal& factor) const {
  if (factor.is_zero()) return TrigPoly();
  TrigPoly out = *this;
  for (auto& [m, c] : out.terms_) c *= factor;
  return out;
}

TrigPoly TrigPoly::substitute(
    const std::map<std::string, TrigPoly>& by_var_str) const {
  TrigPoly out;
  for (const auto& [m, c] : terms_) {
    TrigPoly term(c);
    for (const auto& [v, e] : m.exponents()) {
      auto it = by_var_str.find(v.str());
      if (it == by_var_str.end()) {
        term *= TrigPoly(TrigMonomial(v, e), 1);
      } else {
        term *= it->second.pow(e);
      }
    }
    out += term;
  }
  return out;
}

TrigPoly TrigPoly::substitute(const Variable& v,
                              const TrigPoly& replacement) const {
  return substitute(std::map<std::string, TrigPoly>{{v.str(), replacement}});
}

std::string TrigPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  auto append_signed = [&](const std::string& body, bool negative) {
    if (first) {
      out = (negative ? "-" : "") + body;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  };
  for (const auto& [m, c] : terms_) {
    if (m.is_one()) {
      const std::string s = c.str();
      if (s[0] == '-') {
        append_signed(s.substr(1), true);
      } else {
        append_signed(s, false);
      }
      continue;
    }
    if (c.size() == 1) {
      const bool negative = c.sign() < 0;
      const ExactReal magnitude = negative ? -c : c;
      if (magnitude == ExactReal(1)) {
        append_signed(m.str(), negative);
      } else {
        append_signed(magnitude.str() + "*" + m.str(), negative);
      }
    } else {
      append_signed("(" + c.str() + ")*" + m.str(), false);
    }
  }
  return out;
}

PolyDivision divide(const TrigPoly& dividend, const TrigPoly& divisor) {
  if (divisor.is_zero()) throw ArithmeticError("polynomial division by zero");
  PolyDivision out;
  TrigPoly rest = dividend;
  const auto& [lead_m, lead_c] = divisor.leading();
  const ExactReal lead_inverse = lead_c.inverse();
  while (!rest.is_zero()) {
    const auto [m, c] = rest.leading();
    if (lead_m.divides(m)) {
      const TrigPoly t(lead_m.quotient_of(m), c * lead_inverse);
      out.quotient += t;
      rest -= t * divisor;
    } else {
      const TrigPoly t(m, c);
      out.remainder += t;
      rest -= t;
    }
  }
  return out;
}

// --- Quotients --------------------------------------------------------------

TrigRational::TrigRational(const TrigPoly& num) : num_(num), den_(1) {}

TrigRational::TrigRational(const TrigPoly& num, const TrigPoly& den)
    : num_(num), den_(den) {
  if (den_.is_zero()) throw ArithmeticError("zero denominator");
}

std::set<std::string> TrigRational::angles() const {
  auto out = num_.angles();
  auto more = den_.angles();
  out.insert(more.begin(), more.end());
  return out;
}

TrigRational TrigRational::normalized() const {
  if (num_.is_zero()) return TrigRational();
  if (auto c = den_.constant_value()) {
    return TrigRational(num_.scaled(c->inverse()));
  }
  PolyDivision exact = divide(num_, den_);
  if (exact.remainder.is_zero()) return TrigRational(exact.quotient);

  TrigMonomial common = num_.terms().begin()->first;
  for (const auto& [m, c] : num_.terms()) common = TrigMonomial::gcd(common, m);
  for (const auto& [m, c] : den_.terms()) common = TrigMonomial::gcd(common, m);
  TrigPoly num, den;
  if (common.is_one()) {
    num = num_;
    den = den_;
  } else {
    for (const auto& [m, c] : num_.terms())
      num += TrigPoly(common.quotient_of(m), c);
    for (const auto& [m, c] : den_.terms())
      den += TrigPoly(common.quotient_of(m), c);
  }
  if (auto c = den.constant_value()) return TrigRational(num.scaled(c->inverse()));
  const ExactReal lead_inverse = den.leading().second.inverse();
  return TrigRational(num.scaled(lead_inverse), den.scaled(lead_inverse));
}

TrigRational TrigRational::operator-() const {
  TrigRational out = *this;
  out.num_ = -out.num_;
  return out;
}

TrigRational operator+(const TrigRational& a, const TrigRational& b) {
  if (a.den_ == b.den_) return TrigRational(a.num_ + b.num_, a.den_).normalized();
  return TrigRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_)
      .normalized();
}

TrigRational operator-(const TrigRational& a, const TrigRational& b) {
  return a + (-b);
}

TrigRational operator*(const TrigRational& a, const TrigRational& b) {
  return TrigRational(a.num_ * b.num_, a.den_ * b.den_).normalized();
}

TrigRational operator/(const TrigRational& a, const TrigRational& b) {
  if (b.num_.is_zero()) throw ArithmeticError("division by zero expression");
  return TrigRational(a.num_ * b.den_, a.den_ * b.num_).normalized();
}

TrigRational TrigRational::pow(unsigned exponent) const {
  return TrigRational(num_.pow(exponent), den_.pow(exponent)).normalized();
}

TrigRational TrigRational::substitute(const Variable& v,
                                      const TrigPoly& replacement) const {
  return TrigRational(num_.substitute(v, replacement),
                      den_.substitute(v, replacement))
      .normalized();
}

namespace {

bool is_single_factor(const TrigPoly& p) {
  if (p.size() != 1) return false;
  const auto& [m, c] = p.leading();
  if (m.is_one()) {
    auto q = c.as_rational();
    return q && *q > 0 && q->get_den() == 1;
  }
  return c == ExactReal(1) && m.exponents().size() == 1;
}

}  // namespace

std::string TrigRational::str() const {
  if (is_polynomial()) return num_.str();
  // A constant such as 1 + sqrt(2) prints as a sum even as a single term.
  const bool single = num_.size() == 1 && (!num_.leading().first.is_one() ||
                                           num_.leading().second.size() == 1);
  std::string out = single ? num_.str() : "(" + num_.str() + ")";
  out += "/";
  out += is_single_factor(den_) ? den_.str() : "(" + den_.str() + ")";
  return out;
}

bool expr_equals(const TrigRational& a, const TrigRational& b) {
  return a.num() * b.den() == b.num() * a.den();
}

// --- Side conditions --------------------------------------------------------

std::string SideCondition::str() const {
  switch (kind) {
    case Kind::NonZero:
      return subject.str() + " != 0";
    case Kind::Positive:
      return subject.str() + " > 0";
    case Kind::LessThan:
      return subject.str() + " < " + bound->str();
  }
  return subject.str();
}

bool ConditionSet::contains(const std::string& rendered) const {
  for (const auto& c : items_) {
    if (c.str() == rendered) return true;
  }
  return false;
}

void ConditionSet::add(const SideCondition& c) {
  if (!contains(c.str())) items_.push_back(c);
}

void ConditionSet::merge(const ConditionSet& other) {
  for (const auto& c : other.items_) add(c);
}

void require_nonzero(const TrigRational& e, ConditionSet& conditions) {
  auto record = [&](const TrigPoly& p) {
    if (p.is_constant()) return;
    if (p.size() == 1) {
      for (const auto& [v, exponent] : p.leading().first.exponents())
        conditions.add(SideCondition::nonzero(TrigPoly(v)));
    } else {
      conditions.add(SideCondition::nonzero(p));
    }
  };
  record(e.num());
  record(e.den());
}

TrigRational poly_arith(const TrigRational& a, const TrigRational& b,
                        ArithOp op, ConditionSet* conditions) {
  switch (op) {
    case ArithOp::Add:
      return a + b;
    case ArithOp::Sub:
      return a - b;
    case ArithOp::Mul:
      return a * b;
    case ArithOp::Div:
      if (conditions != nullptr && !b.is_zero()) require_nonzero(b, *conditions);
      return a / b;
  }
  throw ArithmeticError("unknown operation");
}

// --- Pythagorean relations --------------------------------------------------

namespace {

thread_local int free_mode_depth = 0;
std::atomic<bool> tripped{false};
std::atomic<std::size_t> reduce_calls{0};

}  // namespace

FreeModeScope::FreeModeScope() { ++free_mode_depth; }
FreeModeScope::~FreeModeScope() { --free_mode_depth; }
bool in_free_mode() { return free_mode_depth > 0; }
bool circularity_tripped() { return tripped.load(); }
void reset_circularity_flag() { tripped.store(false); }
std::size_t ideal_reduce_invocations() { return reduce_calls.load(); }

TrigPoly pythagorean_generator(const std::string& angle) {
  return TrigPoly::cos(angle).pow(2) + TrigPoly::sin(angle).pow(2) - TrigPoly(1);
}

Reduction ideal_reduce(const TrigPoly& p) {
  if (in_free_mode()) {
    tripped.store(true);
    throw CircularityError(
        "ideal_reduce invoked while deriving in the free ring");
  }
  reduce_calls.fetch_add(1);
  Reduction out{p, {}};
  for (;;) {
    const TrigMonomial* target = nullptr;
    const Variable* cosine = nullptr;
    ExactReal coefficient;
    for (const auto& [m, c] : out.remainder.terms()) {
      for (const auto& [v, e] : m.exponents()) {
        if (v.kind == VarKind::Cos && e >= 2) {
          target = &m;
          cosine = &v;
          coefficient = c;
          break;
        }
      }
      if (target != nullptr) break;
    }
    if (target == nullptr) break;
    const std::string angle = cosine->name;
    const TrigMonomial rest =
        TrigMonomial(*cosine, 2).quotient_of(*target);
    const TrigPoly multiple(rest, coefficient);
    out.cofactors[angle] += multiple;
    out.remainder -= multiple * pythagorean_generator(angle);
  }
  for (auto it = out.cofactors.begin(); it != out.cofactors.end();) {
    it = it->second.is_zero() ? out.cofactors.erase(it) : std::next(it);
  }
  return out;
}

TrigPoly recompose(const TrigPoly& remainder,
                   const std::map<std::string, TrigPoly>& cofactors) {
  TrigPoly out = remainder;
  for (const auto& [angle, cofactor] : cofactors)
    out += cofactor * pythagorean_generator(angle);
  return out;
}

std::optional<std::map<std::string, TrigPoly>> membership_certificate(
    const TrigPoly& p) {
  Reduction r = ideal_reduce(p);
  if (!r.remainder.is_zero()) return std::nullopt;
  return r.cofactors;
}

// --- Series -----------------------------------------------------------------

GeometricSeries sum_geometric(const TrigRational& first,
                              const TrigRational& ratio) {
  if (expr_equals(ratio, TrigRational(1)))
    throw DomainError("geometric series with ratio 1 diverges");
  GeometricSeries out;
  const TrigRational one_minus = TrigRational(1) - ratio;
  out.closed = poly_arith(first, one_minus, ArithOp::Div, &out.conditions);
  if (!ratio.num().is_constant() || !ratio.den().is_constant())
    out.conditions.add(SideCondition::less_than(ratio, 1));
  return out;
}

// --- Evaluation -------------------------------------------------------------

double Assignment::value(const Variable& v) const {
  if (v.kind == VarKind::Length) {
    auto it = lengths.find(v.name);
    if (it == lengths.end())
      throw EvaluationError("no value for length '" + v.name + "'");
    return it->second;
  }
  auto it = angles.find(v.name);
  if (it == angles.end())
    throw EvaluationError("no value for angle '" + v.name + "'");
  return v.kind == VarKind::Cos ? std::cos(it->second) : std::sin(it->second);
}

double eval_numeric(const TrigPoly& p, const Assignment& at) {
  double sum = 0.0;
  for (const auto& [m, c] : p.terms()) {
    double term = to_float(c);
    for (const auto& [v, e] : m.exponents())
      term *= std::pow(at.value(v), static_cast<int>(e));
    sum += term;
  }
  return sum;
}

double eval_numeric(const TrigRational& e, const Assignment& at) {
  const double den = eval_numeric(e.den(), at);
  if (std::abs(den) <= 1e-12) {
    throw EvaluationError("denominator vanishes; requires " +
                          SideCondition::nonzero(e.den()).str());
  }
  return eval_numeric(e.num(), at) / den;
}

ExactReal eval_exact(const TrigRational& e,
                     const std::map<std::string, ExactReal>& value_by_var_str) {
  auto eval_poly = [&](const TrigPoly& p) {
    ExactReal sum;
    for (const auto& [m, c] : p.terms()) {
      ExactReal term = c;
      for (const auto& [v, exponent] : m.exponents()) {
        auto it = value_by_var_str.find(v.str());
        if (it == value_by_var_str.end())
          throw DomainError("no exact value for " + v.str());
        for (unsigned i = 0; i < exponent; ++i) term *= it->second;
      }
      sum += term;
    }
    return sum;
  };
  const ExactReal den = eval_poly(e.den());
  if (den.is_zero())
    throw ArithmeticError("denominator " + e.den().str() + " vanishes");
  return eval_poly(e.num()) / den;
}

bool holds(const SideCondition& c, const Assignment& at, double margin) {
  double value = 0.0;
  try {
    value = eval_numeric(c.subject, at);
  } catch (const EvaluationError&) {
    return false;
  }
  switch (c.kind) {
    case SideCondition::Kind::NonZero:
      return std::abs(value) > margin;
    case SideCondition::Kind::Positive:
      return value > margin;
    case SideCondition::Kind::LessThan: {
      double bound = 0.0;
      try {
        bound = eval_numeric(*c.bound, at);
      } catch (const EvaluationError&) {
        return false;
      }
      return value < bound - margin;
    }
  }
  return false;
}

}  // namespace gasing
