#pragma once

#include <string>

#include "mhlab/weylop.hpp"

namespace mhlab {

// Whitespace-insensitive expression grammar shared by the CLI and tests:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ('-'|'+')* atom ('^' ('-')? integer)?
//   atom   := integer | ident | '(' expr ')'
// Identifiers are resolved against the variable set; in operator context
// "d<i>" denotes the i-th partial derivative. Products of operators multiply
// in the Weyl algebra, so e.g. "d1*x1" parses to "x1*d1 + 1".

RatFun parse_ratfun(const std::string& text, const VarSetPtr& vars);
MPoly parse_mpoly(const std::string& text, const VarSetPtr& vars);

// Parses into a rational-mode operator on m variables; use to_poly() for
// denominator-free input.
WeylOp parse_weylop(const std::string& text, int m);

}  // namespace mhlab
