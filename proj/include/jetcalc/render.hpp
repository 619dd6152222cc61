#pragma once

#include "jetcalc/scenario.hpp"
#include "jetcalc/tensor.hpp"

#include <string>

namespace jetcalc {

/// Canonical text forms: monomials by weight then exponent order, words in
/// dictionary order, rationals as p or p/q. Output re-parses to an equal
/// value.
std::string render_expression(const Polynomial &p, const RingPresentation &ring);
std::string render_expression(const ModuleElement &m, const RingPresentation &ring,
                              const ModulePresentation &mod);
std::string render_expression(const TensorElement &t, const RingPresentation &ring,
                              const ModulePresentation &mod);

/// Canonical scenario text; parse(render(s)) == s and rendering is a fixed
/// point on its own output.
std::string render_scenario(const Scenario &s);

} // namespace jetcalc
