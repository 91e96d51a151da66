#pragma once

// Deterministic text form of exact values.
//
//   poly   := "0" | ["-"] term ((" + " | " - ") term)*
//   term   := factor ("*" factor)*
//   factor := INT | "(" INT "/" INT ")" | "s" | SYMBOL ["^" INT]
//
// "s" denotes sqrt(2 p0). Commutative symbols are q, p, Ap, Am; operator
// symbols are Q, P, Ap, Am. Each monomial prints its rational part, then its
// s part, as separate terms. Terms follow the canonical order of the
// polynomial type.

#include <string>
#include <string_view>

#include "opbianchi/cpoly.hpp"
#include "opbianchi/ext_scalar.hpp"
#include "opbianchi/ncpoly.hpp"

namespace opbianchi {

std::string format_rational_factor(const Rational& r);
std::string format_scalar(const ExtScalar& x);
std::string format(const CPoly& f);
std::string format(const NCPoly& f);

/// Inverse of format(). radicand binds "s"; pass 0 when no s appears.
NCPoly parse_ncpoly(std::string_view text, const Rational& radicand);
CPoly parse_cpoly(std::string_view text, const Rational& radicand);
ExtScalar parse_scalar(std::string_view text, const Rational& radicand);

}  // namespace opbianchi
