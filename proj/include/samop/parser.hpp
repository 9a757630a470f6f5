#pragma once

#include <map>
#include <string>

#include "samop/expr.hpp"

namespace samop {

// Operator-expression DSL:
//
//   program := (NAME '=' expr ';')* expr
//   expr    := term ('(+)' term)*
//   term    := primary ('^' INT)*
//   primary := 'shift' args? | 'bshift' args? | 'bilateral' args?
//            | 'jordan' '(' INT ')' | 'diag' '{' sc ':' extnat (',' ...)* '}'
//            | 'trimat' '[' row (';' row)* ']'
//            | 'inf' '(' expr ')' | 'adj' '(' expr ')'
//            | 'tri' '(' expr ',' witness ',' expr ')'
//            | '(' expr ')' | NAME
//   args    := '(' scalar (',' scalar)? ')'        -- (c, μ), defaults (1, 0)
//   scalar  := Gaussian rational 'a/b+c/di'
//   witness := '{' (INT '->' INT (':' scalar)?),* '}' | 'pair-rays'
//
// Witness indices are 1-based positions in the diagonal enumeration of B's
// kernel slots and A's cokernel slots.
struct DslProgram {
  std::map<std::string, ExprPtr> bindings;
  ExprPtr expr;
};

DslProgram parse_program(const std::string& text);
ExprPtr parse_expression(const std::string& text);
GaussianRational parse_scalar(const std::string& text);

}  // namespace samop
