#pragma once

#include "pseudoval/residue_zar.hpp"

namespace pseudoval {

// Text literals. Printers live on the types (str()); these parsers accept exactly
// the printed grammar plus the documented shorthands, and report failures with a
// 0-based offset into the input.

Rat parseRat(const std::string& text);      // "a/b" or "a"
ExtRat parseExtRat(const std::string& text);  // rational | "inf" | "-inf"

// PAdic: a plain rational. DyadicT: terms `c*t^(q)` / bare `c` joined by " + ",
// optionally as a fraction "(terms)/(terms)".
FieldElem parseElement(const FieldConfig& cfg, const std::string& text);

// Factored: "(scale) * (X - (root))^e * ..." — parens as printed by str(); the
// exponent defaults to 1; "X" alone is the identity function. Raw: coefficient
// rows "[e0, e1, ...] / [d0, ...]" of element literals, low degree first, or
// the printed form "[(e0) + (e1)*X + (ei)*X^i] / [...]"; decorated
// coefficients must be parenthesized, repeated degrees accumulate.
RatFunc parseRatFunc(const FieldConfig& cfg, const std::string& text);

// Coefficient list "[c0, c1, ...]" (low degree first) or the printed expression
// form "t^2 + 4*t + 1".
KPoly parseKPoly(BaseK k, const std::string& text);

// "num / den" with each side a coefficient list or a (possibly parenthesized)
// polynomial expression; a single polynomial denotes den = 1.
KRatFunc parseKRatFunc(BaseK k, const std::string& text);

// "whole" | "inf-place" | "fin-place(f)" with f in either polynomial form.
ZarPoint parseZarPoint(BaseK k, const std::string& text);

} // namespace pseudoval
