#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace xcomm {

using Rational = mpq_class;

// Accepts "p", "p/q", "-p/q" and plain decimals such as "2.75" or "-0.5".
// Throws Error{ParseError} on anything else.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form, or "p" for integers.
std::string to_string(const Rational& value);

}  // namespace xcomm
