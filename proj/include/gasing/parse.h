#pragma once

#include <string>

#include "gasing/exactnum.h"
#include "gasing/trigexpr.h"

namespace gasing {

/// Reads the text form printed by TrigRational::str. tan, sec, csc and cot
/// expand to quotients of sin and cos; bare identifiers are lengths. Angle
/// names run to the closing parenthesis, so sin(a+b) names the angle "a+b".
/// A literal such as sin(30deg) evaluates exactly when its reference angle is
/// special.
/// Throws ParseError carrying the byte offset.
TrigRational parse(const std::string& input);

/// An expression without variables, e.g. "12/(sqrt(3) - 1)".
ExactReal parse_exact(const std::string& input);

/// "30deg" or "30" to an integer number of degrees.
int parse_degrees(const std::string& input);

}  // namespace gasing
