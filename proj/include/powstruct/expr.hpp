#pragma once

// Text front end for polynomials and truncated series.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := integer | variable ['^' integer] | '(' expr ')'
//
// Variables match [A-Za-z][A-Za-z0-9_]*. The name 't' is reserved for the
// series variable and is rejected in polynomial input.

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "powstruct/polynomial.hpp"
#include "powstruct/series.hpp"

namespace powstruct {

inline constexpr std::string_view kSeriesVariable = "t";

// Variables are collected from the text and sorted.
Polynomial parse_polynomial(std::string_view text);
// Every variable must belong to `ring`.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

// Terms of degree above `order` are dropped with a warning on `diagnostics`
// (when given).
Series parse_series(std::string_view text, const Ring& ring, std::size_t order, std::ostream* diagnostics = nullptr);

// "Z", "Z[u,v]", ...; 't' may not be a ring variable.
Ring parse_ring(std::string_view text);

// Comma separated polynomials, e.g. "1, -1, u*v".
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const Ring& ring);

// Parseable expression such as "1 - 3*t + (1 + u*v)*t^2"; "0" for zero.
std::string format_series(const Series& a);

// Coefficients in normal form, c_0 first.
std::vector<std::string> format_coefficients(const Series& a);

}  // namespace powstruct
