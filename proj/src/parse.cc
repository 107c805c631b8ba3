#include "gasing/parse.h"

#include <cctype>
#include <charconv>
#include <optional>

#include "gasing/derive.h"
#include "gasing/errors.h"

namespace gasing {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  TrigRational parse_all() {
    skip();
    if (at_end()) fail("empty expression");
    TrigRational e = sum();
    skip();
    if (!at_end()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return e;
  }

 private:
  // sum := product (('+' | '-') product)*
  TrigRational sum() {
    TrigRational e = product();
    for (;;) {
      skip();
      if (eat('+')) {
        e = e + product();
      } else if (eat('-')) {
        e = e - product();
      } else {
        return e;
      }
    }
  }

  // product := unary (('*' | '/') unary)*
  TrigRational product() {
    TrigRational e = unary();
    for (;;) {
      skip();
      if (eat('*')) {
        e = e * unary();
      } else if (peek() == '/') {
        const std::size_t at = pos_++;
        TrigRational d = unary();
        if (d.is_zero()) fail_at(at, "division by zero");
        e = e / d;
      } else {
        return e;
      }
    }
  }

  // unary := '-' unary | power
  TrigRational unary() {
    skip();
    if (eat('-')) return -unary();
    return power();
  }

  // power := primary ('^' integer)*
  TrigRational power() {
    TrigRational e = primary();
    for (;;) {
      skip();
      if (!eat('^')) return e;
      skip();
      const std::size_t at = pos_;
      const Integer n = integer();
      if (n <= 0 || n > 1000) fail_at(at, "exponent must be a positive integer");
      e = e.pow(static_cast<unsigned>(n.get_ui()));
    }
  }

  TrigRational primary() {
    skip();
    if (at_end()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      TrigRational e = sum();
      skip();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return TrigRational(ExactReal(Rational(integer())));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                           s_[pos_] == '_'))
        name += s_[pos_++];
      skip();
      if (peek() != '(') return TrigPoly::length(name);
      ++pos_;
      if (name == "sqrt") {
        skip();
        const Integer n = integer();
        skip();
        expect(')');
        return TrigRational(sqrt_of(Rational(n)));
      }
      const std::string angle = angle_name();
      if (auto degrees = degree_literal(angle)) return special(name, *degrees, start);
      if (name == "sin") return TrigPoly::sin(angle);
      if (name == "cos") return TrigPoly::cos(angle);
      const TrigRational sn = TrigPoly::sin(angle);
      const TrigRational cs = TrigPoly::cos(angle);
      if (name == "tan") return sn / cs;
      if (name == "cot") return cs / sn;
      if (name == "sec") return TrigRational(1) / cs;
      if (name == "csc") return TrigRational(1) / sn;
      fail_at(start, "unknown function '" + name + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  // "30deg", "-45deg": a literal angle rather than a name.
  static std::optional<int> degree_literal(const std::string& angle) {
    if (!angle.ends_with("deg")) return std::nullopt;
    const std::string digits = angle.substr(0, angle.size() - 3);
    int value = 0;
    const char* first = digits.data();
    const char* last = first + digits.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
    return value;
  }

  TrigRational special(const std::string& name, int degrees, std::size_t start) const {
    const SpecialRatios r = exact_ratios(degrees);
    auto ratio = [&](const ExactReal& num, const ExactReal& den) {
      if (den.is_zero())
        throw DomainError(name + " is undefined at " + std::to_string(degrees) + "deg");
      return TrigRational(num / den);
    };
    if (name == "sin") return TrigRational(r.sin);
    if (name == "cos") return TrigRational(r.cos);
    if (name == "tan") return ratio(r.sin, r.cos);
    if (name == "cot") return ratio(r.cos, r.sin);
    if (name == "sec") return ratio(ExactReal(1), r.cos);
    if (name == "csc") return ratio(ExactReal(1), r.sin);
    fail_at(start, "unknown function '" + name + "'");
  }

  std::string angle_name() {
    const std::size_t start = pos_;
    std::string name;
    while (!at_end() && s_[pos_] != ')') {
      if (s_[pos_] == '(' || std::isspace(static_cast<unsigned char>(s_[pos_])))
        fail("invalid character in angle name");
      name += s_[pos_++];
    }
    if (name.empty()) fail_at(start, "empty angle name");
    expect(')');
    return name;
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(s_.substr(start, pos_ - start));
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& message) const {
    throw ParseError(at, message);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

TrigRational parse(const std::string& input) {
  return Parser(input).parse_all().normalized();
}

ExactReal parse_exact(const std::string& input) {
  const TrigRational e = parse(input);
  auto n = e.num().constant_value();
  auto d = e.den().constant_value();
  if (!n || !d) throw ParseError(0, "expected a number, got '" + input + "'");
  return *n / *d;
}

int parse_degrees(const std::string& input) {
  std::string digits = input;
  if (digits.size() > 3 && digits.ends_with("deg")) digits.resize(digits.size() - 3);
  int value = 0;
  const char* first = digits.data();
  const char* last = first + digits.size();
  if (!digits.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw ParseError(static_cast<std::size_t>(ptr - digits.data()),
                     "expected degrees such as 30deg, got '" + input + "'");
  return value;
}

}  // namespace gasing
