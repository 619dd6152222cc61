#pragma once

#include "jetcalc/scenario.hpp"
#include "jetcalc/tensor.hpp"

#include <stdexcept>
#include <string>

namespace jetcalc {

struct ParseError : std::runtime_error {
	int line, column;
	ParseError(const std::string &msg, int line, int column)
	    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
	      line(line), column(column)
	{
	}
};

/// Expression grammar over a declared ring and module:
///   expr   := ['-'] tens (('+'|'-') tens)*
///   tens   := term ('@' term)*
///   term   := factor ('*' factor)*
///   factor := primary ['^' INT]
///   prim   := RATIONAL | NAME | '(' expr ')'
/// Rationals are INT or INT/INT; '*' scales, '@' concatenates generator
/// factors. The result length counts generator letters: 0 is a ring
/// element, 1 a module element, n >= 2 a tensor. A bare 0 unifies with any
/// length.
TensorElement parse_expression(const std::string &text, const RingPresentation &ring,
                               const ModulePresentation &mod);

Polynomial as_polynomial(const TensorElement &t);
ModuleElement as_module_element(const TensorElement &t, size_t ngens);

/// Sectioned scenario format:
///   [ring]       vars: name:weight, ...   /  ideal: poly, ...
///   [module]     gens: name:weight, ...   /  rels: element, ...
///   [derivation] degree: d  /  D(var) = element
///   [connection] degree: d  /  G(gen) = tensor    (optional section)
///   [options]    order: N  /  degree: d  /  seed: s   (optional)
/// '#' starts a comment. Duplicate or missing mandatory sections are
/// errors; homogeneity is left to validate_presentation.
Scenario parse_scenario(const std::string &text);

} // namespace jetcalc
