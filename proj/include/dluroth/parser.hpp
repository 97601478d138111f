#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dluroth/system.hpp"

namespace dluroth {

// Input grammar (unary minus before a leading term is accepted on top of the
// published grammar so that rendered polynomials always re-parse):
//   input    := gen (';' gen)*
//   gen      := '(' expr ')' ['/' '(' expr ')']
//   expr     := ['-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ['^' uint]
//   base     := rational | uvar | '(' expr ')'
//   uvar     := 'u' ("'")* | 'u^(' uint ')'
//   rational := ['-'] uint ['/' uint]
std::vector<std::pair<SparsePoly, SparsePoly>> parse_generators(const std::string& text);

// parse_generators + validation/reduction of the pairs.
GeneratorInput parse_input(const std::string& text);

// "(P1)/(Q1); (P2); ..." in canonical rendering; re-parses to an equal input.
std::string render_input(const GeneratorInput& gens);

}  // namespace dluroth
