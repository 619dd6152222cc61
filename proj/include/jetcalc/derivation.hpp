#pragma once

#include "jetcalc/zero.hpp"

namespace jetcalc {

/// Derivation from the ring into the module, determined by one value per
/// ring variable. Homogeneous of the stated degree: each value has weight
/// weight(var) + degree (zero values are allowed everywhere).
struct Derivation {
	int degree = 0;
	std::vector<ModuleElement> values; // one per ring variable

	const ModuleElement &value(size_t var) const { return values[var]; }
};

/// Leibniz evaluation on an arbitrary polynomial: additive, zero on
/// constants, and on a monomial the sum over variables of the formal
/// partial times the stored value.
ModuleElement apply_derivation(const Derivation &d, const Polynomial &a, const GradedContext &ctx);

/// Checks that the Leibniz evaluation descends to the quotient ring: each
/// ideal generator must map to zero in the module. Also reports values of
/// the wrong weight.
ValidationReport validate_derivation(const Derivation &d, const GradedContext &ctx);

} // namespace jetcalc
