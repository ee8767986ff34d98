#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wittkit/element.hpp"

namespace wittkit {

// AST for the element expression DSL.
//   expr := ['-'] term (('+'|'-') term)*
//   term := (scalar '*')? atom
//   atom := 'L' '(' group ',' nat ')' | 'C' | '[' expr ',' expr ']'
//         | '(' expr ')'
//   group := integer linear combination of generators (plain integer
//            shorthand when rank = 1)
//   scalar := rational / generator polynomial fraction, with +,-,*,/,^
struct ExprAst;
using ExprPtr = std::shared_ptr<ExprAst>;

struct ExprAtom {
    enum class Kind { Basis, Central, Bracket, Paren };
    Kind kind = Kind::Basis;
    GroupElement degree;  // Basis
    int level = 0;        // Basis
    ExprPtr left, right;  // Bracket (left, right) / Paren (left)

    bool operator==(const ExprAtom& o) const;
};

struct ExprTerm {
    bool negated = false;
    std::optional<Scalar> coeff;
    ExprAtom atom;

    bool operator==(const ExprTerm& o) const;
};

struct ExprAst {
    std::vector<ExprTerm> terms;

    bool operator==(const ExprAst& o) const { return terms == o.terms; }
};

ExprPtr parse(const GammaConfig& config, const std::string& src);
std::string print(const GammaConfig& config, const ExprAst& ast);

Element eval(const GammaConfig& config, const ExprAst& ast, const BracketRule& rule);

// Standalone scalar expression (used by the JSON readers).
Scalar parse_scalar(const GammaConfig& config, const std::string& src);

}  // namespace wittkit
