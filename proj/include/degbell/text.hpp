#pragma once

#include <string>
#include <string_view>

#include "degbell/polynomial.hpp"

namespace degbell {

// Three renderings are supported:
//   list   "[5,-6,2]" / "[[],[1,-1],[1]]"  lowest degree first, exact round trip
//   ascii  "5-6*lambda+2*lambda^2"          lowest degree first, exact round trip
//   pretty "2λ²−6λ+5"                       highest degree first, display only

std::string to_list(const LambdaPoly& p);
std::string to_list(const XPoly& p);
LambdaPoly parse_lambda_list(std::string_view text);
XPoly parse_xpoly_list(std::string_view text);

std::string to_ascii(const LambdaPoly& p);
/// Accepts sums of terms "c", "c*lambda", "c*lambda^i", "lambda^i" in any
/// order, with optional spaces. Throws ParseError.
LambdaPoly parse_lambda_ascii(std::string_view text);

std::string to_pretty(const LambdaPoly& p);
std::string to_pretty(const XPoly& p);

/// Unicode superscript digits for an exponent.
std::string superscript(long value);

}  // namespace degbell
